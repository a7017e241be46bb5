#include "crystalmorse/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

namespace {

constexpr Letter kUndefinedLetter = 0x7f;

std::optional<Letter> raw_letter_f(const CartanType& t, Letter l, Color i) {
  const int n = t.rank();
  if (t.family() == Family::A) {
    if (l == i) return l + 1;
    return std::nullopt;
  }
  const bool d_fork = t.family() == Family::D && i == n - 1;
  if (i < n || d_fork) {
    if (l == i) return i + 1;
    if (l == -(i + 1)) return -i;
    return std::nullopt;
  }
  switch (t.family()) {
    case Family::B:
      if (l == n) return 0;
      if (l == 0) return -n;
      return std::nullopt;
    case Family::C:
      if (l == n) return -n;
      return std::nullopt;
    case Family::D:
      if (l == n - 1) return -n;
      if (l == n) return -(n - 1);
      return std::nullopt;
    case Family::A:
      break;
  }
  return std::nullopt;
}

std::string word_key(const Word& w) {
  std::string key(w.size(), '\0');
  for (std::size_t k = 0; k < w.size(); ++k) key[k] = static_cast<char>(w[k]);
  return key;
}

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse letter '" + item + "'");
    }
    if (used != item.size()) throw InvalidArgument("cannot parse letter '" + item + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LetterCrystal

LetterCrystal::LetterCrystal(const CartanType& t)
    : cartan_(t), n_(t.rank()), offset_(t.rank() + 1) {
  const int n = n_;
  if (t.family() == Family::A) {
    for (int k = 1; k <= n + 1; ++k) alphabet_.push_back(k);
  } else {
    for (int k = 1; k <= n; ++k) alphabet_.push_back(k);
    if (t.family() == Family::B) alphabet_.push_back(0);
    for (int k = n; k >= 1; --k) alphabet_.push_back(-k);
  }
  const std::size_t slots = static_cast<std::size_t>(2 * n + 3);
  valid_.assign(slots, 0);
  f_table_.assign(slots * n, kUndefinedLetter);
  e_table_.assign(slots * n, kUndefinedLetter);
  phi_.assign(slots * n, 0);
  eps_.assign(slots * n, 0);
  for (Letter l : alphabet_) valid_[slot(l)] = 1;
  for (Letter l : alphabet_) {
    for (Color i = 1; i <= n; ++i) {
      if (auto m = raw_letter_f(t, l, i)) {
        f_table_[slot(l) * n + (i - 1)] = *m;
        e_table_[slot(*m) * n + (i - 1)] = l;
      }
    }
  }
  for (Letter l : alphabet_) {
    for (Color i = 1; i <= n; ++i) {
      int steps = 0;
      for (auto m = f(l, i); m; m = f(*m, i)) ++steps;
      phi_[slot(l) * n + (i - 1)] = steps;
      steps = 0;
      for (auto m = e(l, i); m; m = e(*m, i)) ++steps;
      eps_[slot(l) * n + (i - 1)] = steps;
    }
  }
}

bool LetterCrystal::contains(Letter l) const {
  return l + offset_ >= 0 && static_cast<std::size_t>(l + offset_) < valid_.size() &&
         valid_[slot(l)];
}

std::optional<Letter> LetterCrystal::f(Letter l, Color i) const {
  const Letter m = f_table_[slot(l) * n_ + (i - 1)];
  if (m == kUndefinedLetter) return std::nullopt;
  return m;
}

std::optional<Letter> LetterCrystal::e(Letter l, Color i) const {
  const Letter m = e_table_[slot(l) * n_ + (i - 1)];
  if (m == kUndefinedLetter) return std::nullopt;
  return m;
}

Weight LetterCrystal::weight(Letter l) const {
  Weight w(cartan_.ambient_dim(), 0);
  if (l > 0) w[l - 1] = 1;
  if (l < 0) w[-l - 1] = -1;
  return w;
}

// ---------------------------------------------------------------------------
// WordCrystal

namespace {

struct Reduced {
  std::vector<int> plus;   // positions of unmatched +, left to right
  std::vector<int> minus;  // positions of unmatched -, left to right
};

// Each letter contributes +^phi then -^epsilon; a + cancels the nearest
// unmatched - to its left.
Reduced reduce_signature(const LetterCrystal& lc, const Word& w, Color i) {
  Reduced r;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const int p = lc.phi(w[pos], i);
    for (int k = 0; k < p; ++k) {
      if (!r.minus.empty())
        r.minus.pop_back();
      else
        r.plus.push_back(static_cast<int>(pos));
    }
    const int m = lc.epsilon(w[pos], i);
    for (int k = 0; k < m; ++k) r.minus.push_back(static_cast<int>(pos));
  }
  return r;
}

void check_color(const CartanType& t, Color i) {
  if (i < 1 || i > t.rank())
    throw InvalidArgument("color " + std::to_string(i) + " out of range for " + t.name());
}

void check_word(const LetterCrystal& lc, const Word& w) {
  for (Letter l : w)
    if (!lc.contains(l))
      throw InvalidArgument("letter " + std::to_string(l) + " not in alphabet of " +
                            lc.cartan().name());
}

}  // namespace

int WordCrystal::f_position(const Word& w, Color i) const {
  check_color(cartan(), i);
  check_word(letters_, w);
  const Reduced r = reduce_signature(letters_, w, i);
  return r.plus.empty() ? -1 : r.plus.back();
}

int WordCrystal::e_position(const Word& w, Color i) const {
  check_color(cartan(), i);
  check_word(letters_, w);
  const Reduced r = reduce_signature(letters_, w, i);
  return r.minus.empty() ? -1 : r.minus.front();
}

std::optional<Word> WordCrystal::apply_f(const Word& w, Color i) const {
  const int pos = f_position(w, i);
  if (pos < 0) return std::nullopt;
  Word out = w;
  out[pos] = *letters_.f(w[pos], i);
  return out;
}

std::optional<Word> WordCrystal::apply_e(const Word& w, Color i) const {
  const int pos = e_position(w, i);
  if (pos < 0) return std::nullopt;
  Word out = w;
  out[pos] = *letters_.e(w[pos], i);
  return out;
}

Weight WordCrystal::weight(const Word& w) const {
  check_word(letters_, w);
  Weight total(cartan().ambient_dim(), 0);
  for (Letter l : w) {
    if (l > 0) total[l - 1] += 1;
    if (l < 0) total[-l - 1] -= 1;
  }
  return total;
}

StringStatistics WordCrystal::signature_stats(const Word& w) const {
  check_word(letters_, w);
  const int n = cartan().rank();
  StringStatistics s{std::vector<int>(n), std::vector<int>(n)};
  for (Color i = 1; i <= n; ++i) {
    const Reduced r = reduce_signature(letters_, w, i);
    s.phi[i - 1] = static_cast<int>(r.plus.size());
    s.epsilon[i - 1] = static_cast<int>(r.minus.size());
  }
  return s;
}

std::optional<Word> apply_f(const Word& w, Color i, const CartanType& t) {
  return WordCrystal(t).apply_f(w, i);
}

std::optional<Word> apply_e(const Word& w, Color i, const CartanType& t) {
  return WordCrystal(t).apply_e(w, i);
}

Weight weight_of(const Word& w, const CartanType& t) { return WordCrystal(t).weight(w); }

// ---------------------------------------------------------------------------
// Words and tableaux

Word highest_weight_word(const CartanType& t, const Weight& lambda) {
  const Weight lam = normalize_dominant(lambda, t);
  std::vector<std::vector<Letter>> rows;
  for (std::size_t r = 0; r < lam.size(); ++r) {
    if (lam[r] == 0) break;
    rows.emplace_back(lam[r], static_cast<Letter>(r + 1));
  }
  return word_from_tableau(rows);
}

Word word_from_tableau(const std::vector<std::vector<Letter>>& rows) {
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].size() > rows[r - 1].size())
      throw InvalidArgument("tableau rows must weakly decrease in length");
  Word w;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < width; ++c) {
    std::size_t height = 0;
    while (height < rows.size() && rows[height].size() > c) ++height;
    for (std::size_t r = height; r-- > 0;) w.push_back(rows[r][c]);
  }
  return w;
}

std::vector<std::vector<Letter>> tableau_from_word(const Word& w, const Weight& lambda) {
  std::vector<std::size_t> lengths;
  std::size_t total = 0;
  for (int part : lambda) {
    if (part <= 0) break;
    lengths.push_back(static_cast<std::size_t>(part));
    total += part;
  }
  if (total != w.size()) throw InvalidArgument("word length does not match shape");
  std::vector<std::vector<Letter>> rows(lengths.size());
  std::size_t pos = 0;
  const std::size_t width = lengths.empty() ? 0 : lengths.front();
  for (std::size_t c = 0; c < width; ++c) {
    std::size_t height = 0;
    while (height < lengths.size() && lengths[height] > c) ++height;
    for (std::size_t r = height; r-- > 0;) rows[r].push_back(w[pos++]);
  }
  return rows;
}

std::string letter_to_string(Letter l) { return std::to_string(l); }

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ',';
    s += letter_to_string(w[k]);
  }
  return s;
}

Word parse_word(const std::string& s) { return split_ints(s, ','); }

std::vector<std::vector<Letter>> parse_tableau(const std::string& s) {
  std::vector<std::vector<Letter>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, '/')) rows.push_back(split_ints(row, ','));
  return rows;
}

// ---------------------------------------------------------------------------
// CrystalGraph

CrystalGraph::CrystalGraph(const CartanType& t, Weight lambda)
    : cartan_(t), lambda_(std::move(lambda)), n_(t.rank()) {}

Word CrystalGraph::word(VertexId x) const {
  Word w(word_length_);
  const std::size_t base = static_cast<std::size_t>(x) * word_length_;
  for (std::size_t k = 0; k < word_length_; ++k) w[k] = letters_[base + k];
  return w;
}

Weight CrystalGraph::weight(VertexId x) const {
  const std::size_t m = static_cast<std::size_t>(cartan_.ambient_dim());
  return Weight(weights_.begin() + x * m, weights_.begin() + (x + 1) * m);
}

VertexId CrystalGraph::apply_path(VertexId x, std::span<const Color> labels) const {
  for (Color c : labels) {
    if (x == kNoVertex) return kNoVertex;
    x = f(x, c);
  }
  return x;
}

std::optional<VertexId> CrystalGraph::find(const Word& w) const {
  auto it = index_.find(word_key(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StringStatistics CrystalGraph::string_stats(VertexId x) const {
  StringStatistics s{std::vector<int>(n_), std::vector<int>(n_)};
  for (Color i = 1; i <= n_; ++i) {
    int k = 0;
    for (VertexId y = f(x, i); y != kNoVertex; y = f(y, i)) ++k;
    s.phi[i - 1] = k;
    k = 0;
    for (VertexId y = e(x, i); y != kNoVertex; y = e(y, i)) ++k;
    s.epsilon[i - 1] = k;
  }
  return s;
}

std::vector<Edge> CrystalGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId x = 0; x < size_; ++x)
    for (Color i = 1; i <= n_; ++i)
      if (VertexId y = f(x, i); y != kNoVertex) out.push_back({x, y, i});
  return out;
}

void CrystalGraph::finalize() {
  edge_count_ = 0;
  for (VertexId y : f_)
    if (y != kNoVertex) ++edge_count_;
  source_ = kNoVertex;
  for (VertexId x = 0; x < size_ && source_ == kNoVertex; ++x) {
    bool top = true;
    for (Color i = 1; i <= n_; ++i) top = top && e(x, i) == kNoVertex;
    if (top) source_ = x;
  }
  depth_.assign(size_ * n_, 0);
  level_.assign(size_, 0);
  for (VertexId x = 0; x < size_; ++x) {
    const Weight diff = subtract(lambda_, weight(x));
    RootMultiset c;
    try {
      c = decompose_signed(diff, cartan_);
    } catch (const NotInRootLattice&) {
      throw InvalidArgument("vertex " + std::to_string(x) +
                            " has weight outside lambda + root lattice");
    }
    int total = 0;
    for (int k = 0; k < n_; ++k) {
      depth_[x * n_ + k] = c[k];
      total += c[k];
    }
    level_[x] = total;
  }
}

CrystalGraph CrystalGraph::without_edge(VertexId x, Color i) const {
  CrystalGraph g = *this;
  const VertexId y = f(x, i);
  if (y == kNoVertex) throw OperatorUndefinedAt(x, i);
  g.f_[static_cast<std::size_t>(x) * n_ + (i - 1)] = kNoVertex;
  g.e_[static_cast<std::size_t>(y) * n_ + (i - 1)] = kNoVertex;
  g.finalize();
  return g;
}

CrystalGraph CrystalGraph::from_parts(const CartanType& t, const Weight& lambda,
                                      const std::vector<Word>& words,
                                      const std::vector<Edge>& edges) {
  CrystalGraph g(t, normalize_dominant(lambda, t));
  const WordCrystal wc(t);
  g.size_ = words.size();
  g.word_length_ = words.empty() ? 0 : words.front().size();
  const std::size_t m = static_cast<std::size_t>(t.ambient_dim());
  g.letters_.reserve(g.size_ * g.word_length_);
  g.weights_.reserve(g.size_ * m);
  for (std::size_t x = 0; x < words.size(); ++x) {
    const Word& w = words[x];
    if (w.size() != g.word_length_) throw InvalidArgument("words have different lengths");
    for (Letter l : w) g.letters_.push_back(static_cast<std::int8_t>(l));
    const Weight wt = wc.weight(w);
    g.weights_.insert(g.weights_.end(), wt.begin(), wt.end());
    if (!g.index_.emplace(word_key(w), static_cast<VertexId>(x)).second)
      throw InvalidArgument("duplicate word " + word_to_string(w));
  }
  g.f_.assign(g.size_ * g.n_, kNoVertex);
  g.e_.assign(g.size_ * g.n_, kNoVertex);
  for (const Edge& ed : edges) {
    if (ed.from >= g.size_ || ed.to >= g.size_) throw InvalidArgument("edge endpoint out of range");
    if (ed.color < 1 || ed.color > g.n_) throw InvalidArgument("edge color out of range");
    VertexId& out = g.f_[static_cast<std::size_t>(ed.from) * g.n_ + (ed.color - 1)];
    VertexId& in = g.e_[static_cast<std::size_t>(ed.to) * g.n_ + (ed.color - 1)];
    if (out != kNoVertex || in != kNoVertex)
      throw InvalidArgument("two edges of color " + std::to_string(ed.color) +
                            " at one vertex");
    out = ed.to;
    in = ed.from;
  }
  g.finalize();
  return g;
}

CrystalGraph generate(const CartanType& t, const Weight& lambda, std::size_t cap) {
  CrystalGraph g(t, normalize_dominant(lambda, t));
  const WordCrystal wc(t);
  const int n = t.rank();
  const Word top = highest_weight_word(t, g.lambda_);
  g.word_length_ = top.size();
  const std::size_t m = static_cast<std::size_t>(t.ambient_dim());

  std::vector<Word> words;
  auto add = [&](const Word& w) -> VertexId {
    auto [it, inserted] = g.index_.emplace(word_key(w), static_cast<VertexId>(words.size()));
    if (inserted) {
      if (words.size() >= cap)
        throw SizeCapExceeded("crystal exceeds vertex cap of " + std::to_string(cap),
                              words.size());
      words.push_back(w);
    }
    return it->second;
  };
  add(top);
  std::vector<VertexId> f_map;
  for (std::size_t head = 0; head < words.size(); ++head) {
    f_map.resize((head + 1) * n, kNoVertex);
    for (Color i = 1; i <= n; ++i) {
      const int pos = wc.f_position(words[head], i);
      if (pos < 0) continue;
      Word next = words[head];
      next[pos] = *wc.letters().f(next[pos], i);
      f_map[head * n + (i - 1)] = add(next);
    }
  }
  g.size_ = words.size();
  g.f_ = std::move(f_map);
  g.e_.assign(g.size_ * n, kNoVertex);
  for (VertexId x = 0; x < g.size_; ++x)
    for (Color i = 1; i <= n; ++i)
      if (VertexId y = g.f(x, i); y != kNoVertex) g.e_[static_cast<std::size_t>(y) * n + (i - 1)] = x;
  g.letters_.reserve(g.size_ * g.word_length_);
  g.weights_.reserve(g.size_ * m);
  for (const Word& w : words) {
    for (Letter l : w) g.letters_.push_back(static_cast<std::int8_t>(l));
    const Weight wt = wc.weight(w);
    g.weights_.insert(g.weights_.end(), wt.begin(), wt.end());
  }
  g.finalize();
  return g;
}

CrystalGraph standard_crystal(const CartanType& t) {
  Weight omega(t.ambient_dim(), 0);
  omega[0] = 1;
  return generate(t, omega);
}

}  // namespace crystalmorse
