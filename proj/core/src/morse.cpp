#include "crystalmorse/morse.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

std::string to_string(TemplateId id) {
  switch (id) {
    case TemplateId::Deg2: return "Deg2";
    case TemplateId::Deg4: return "Deg4";
    case TemplateId::Deg5i: return "Deg5i";
    case TemplateId::Deg5iii: return "Deg5iii";
    case TemplateId::Deg7ii: return "Deg7ii";
    case TemplateId::Deg7iv: return "Deg7iv";
  }
  return "?";
}

std::string to_string(Certification c) {
  switch (c) {
    case Certification::No: return "false";
    case Certification::Yes: return "true";
    case Certification::Sampled: return "sampled";
  }
  return "?";
}

std::string operator_word(const std::vector<Color>& labels) {
  std::string out;
  for (std::size_t k = labels.size(); k > 0;) {
    const Color c = labels[k - 1];
    std::size_t run = 0;
    while (k > 0 && labels[k - 1] == c) {
      --k;
      ++run;
    }
    if (!out.empty()) out += ' ';
    out += "f_" + std::to_string(c);
    if (run > 1) out += "^" + std::to_string(run);
  }
  return out;
}

namespace {

struct Template {
  TemplateId id;
  std::vector<Color> red;  // the piece lying on the candidate chain
  std::vector<std::vector<Color>> companions;
};

std::vector<Template> templates_for(const CartanType& t) {
  std::vector<Template> out;
  const int n = t.rank();
  for (Color i = 1; i <= n; ++i) {
    for (Color j = i + 1; j <= n; ++j) {
      const auto kinds = allowed_kinds(t, i, j);
      auto has = [&](RelationTag k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
      out.push_back({TemplateId::Deg2, {j, i}, {{i, j}}});
      if (has(RelationTag::Deg4Stembridge)) out.push_back({TemplateId::Deg4, {j, i, i, j}, {{i, j, j, i}}});
    }
  }
  if (t.doubly_laced()) {
    const Color hi = n, lo = n - 1;
    out.push_back({TemplateId::Deg5i, {hi, lo, lo, lo, hi}, {{lo, hi, lo, hi, lo}, {lo, hi, hi, lo, lo}}});
    out.push_back({TemplateId::Deg5iii, {hi, lo, lo, hi, hi}, {{lo, hi, hi, hi, lo}, {hi, lo, hi, lo, hi}}});
    out.push_back({TemplateId::Deg7ii,
                   {hi, lo, lo, lo, hi, hi, lo},
                   {{lo, hi, hi, lo, lo, lo, hi}, {lo, hi, lo, hi, lo, lo, hi}, {hi, lo, lo, hi, lo, hi, lo}}});
    out.push_back({TemplateId::Deg7iv,
                   {hi, lo, lo, hi, hi, hi, lo},
                   {{hi, lo, hi, lo, hi, hi, lo}, {lo, hi, hi, hi, lo, lo, hi}, {lo, hi, hi, lo, hi, lo, hi}}});
  }
  return out;
}

std::optional<LocalId> step(const Interval& iv, LocalId x, Color c) {
  for (const Cover& cov : iv.up(x))
    if (cov.color == c) return cov.target;
  return std::nullopt;
}

std::vector<SkippedInterval> minimal_only(std::vector<SkippedInterval> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<SkippedInterval> out;
  for (const auto& a : v) {
    bool minimal = true;
    for (const auto& b : v)
      if (!(a == b) && b.lo >= a.lo && b.hi <= a.hi) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// MorseAnalyzer

MorseAnalyzer::MorseAnalyzer(const Interval& iv) : iv_(&iv), reach_(iv) {}

SaturatedChain MorseAnalyzer::to_chain(const std::vector<LocalId>& chain,
                                       const std::vector<Color>& labels) const {
  SaturatedChain c;
  c.labels = labels;
  for (LocalId k : chain) c.vertices.push_back(iv_->member(k));
  return c;
}

IntervalSystem MorseAnalyzer::msi_system(const std::vector<LocalId>& chain,
                                         const std::vector<Color>& labels) const {
  IntervalSystem sys;
  const int r = static_cast<int>(labels.size());
  sys.rank = r;
  std::vector<SkippedInterval> candidates;
  // A lex-earlier segment from chain[a] diverging immediately leaves by a
  // smaller label to some z; it can rejoin at chain[b] iff z <= chain[b].
  for (int a = 0; a + 1 < r; ++a) {
    int best = r + 1;
    for (const Cover& cov : iv_->up(chain[a])) {
      if (cov.color >= labels[a]) break;
      for (int b = a + 2; b < best; ++b) {
        if (reach_.leq(cov.target, chain[b])) {
          best = b;
          break;
        }
      }
    }
    if (best <= r) candidates.push_back({a + 1, best - 1});
  }
  sys.msis = minimal_only(std::move(candidates));
  return sys;
}

IntervalSystem MorseAnalyzer::msi_system(const SaturatedChain& c) const {
  std::vector<LocalId> chain;
  for (VertexId x : c.vertices) {
    auto k = iv_->local(x);
    if (!k) throw InvalidArgument("chain leaves the interval");
    chain.push_back(*k);
  }
  return msi_system(chain, c.labels);
}

std::optional<TemplateId> MorseAnalyzer::match_template(const SkippedInterval& msi,
                                                        const std::vector<LocalId>& chain,
                                                        const std::vector<Color>& labels) const {
  static thread_local std::map<std::pair<int, int>, std::vector<Template>> cache;
  const CartanType& t = iv_->graph().cartan();
  auto key = std::pair{static_cast<int>(t.family()), t.rank()};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, templates_for(t)).first;

  const int a = msi.lo - 1, b = msi.hi + 1;
  const std::vector<Color> seg(labels.begin() + a, labels.begin() + b);
  const CrystalGraph& g = iv_->graph();
  const VertexId x = iv_->member(chain[a]);
  const VertexId y = iv_->member(chain[b]);
  for (const Template& tp : it->second) {
    if (tp.red != seg) continue;
    bool ok = true;
    for (const auto& comp : tp.companions) ok = ok && g.apply_path(x, comp) == y;
    if (ok) return tp.id;
  }
  return std::nullopt;
}

std::optional<TemplateId> MorseAnalyzer::match_template(const SkippedInterval& msi,
                                                        const SaturatedChain& c) const {
  std::vector<LocalId> chain;
  for (VertexId x : c.vertices) chain.push_back(iv_->local(x).value());
  return match_template(msi, chain, c.labels);
}

Certification MorseAnalyzer::certify(const MorseOptions& opts) const {
  auto chain_ok = [&](const std::vector<LocalId>& chain, const std::vector<Color>& labels) {
    const IntervalSystem sys = msi_system(chain, labels);
    for (const auto& m : sys.msis)
      if (!match_template(m, chain, labels)) return false;
    return true;
  };
  const std::uint64_t total = count_chains(*iv_);
  if (total <= opts.chain_cap) {
    ChainStream s(*iv_);
    while (s.next())
      if (!chain_ok(s.local_vertices(), s.labels())) return Certification::No;
    return Certification::Yes;
  }
  // Uniform sampling of maximal chains through path counts.
  const std::size_t m = iv_->size();
  std::vector<long double> ways(m, 0);
  ways[m - 1] = 1;
  for (std::size_t k = m - 1; k-- > 0;)
    for (const Cover& c : iv_->up(static_cast<LocalId>(k))) ways[k] += ways[c.target];
  std::mt19937_64 rng(opts.seed);
  std::vector<LocalId> chain;
  std::vector<Color> labels;
  for (std::uint64_t s = 0; s < opts.sample_size; ++s) {
    chain.assign(1, 0);
    labels.clear();
    while (chain.back() != m - 1) {
      const auto ups = iv_->up(chain.back());
      std::uniform_real_distribution<long double> dist(0, ways[chain.back()]);
      long double pick = dist(rng);
      std::size_t choice = ups.size() - 1;
      for (std::size_t k = 0; k < ups.size(); ++k) {
        if (pick < ways[ups[k].target]) {
          choice = k;
          break;
        }
        pick -= ways[ups[k].target];
      }
      labels.push_back(ups[choice].color);
      chain.push_back(ups[choice].target);
    }
    if (!chain_ok(chain, labels)) return Certification::No;
  }
  return Certification::Sampled;
}

std::optional<SaturatedChain> MorseAnalyzer::greedy_chain() const {
  const Interval& iv = *iv_;
  const CrystalGraph& g = iv.graph();
  const CartanType& t = g.cartan();
  const int n = t.rank();
  const int r = iv.rank();
  if (r == 0) return std::nullopt;
  const RootMultiset total = iv.label_multiset();

  std::vector<LocalId> path{0};
  std::vector<Color> labels;
  Color pending = 0;
  for (Color k = n; k >= 1 && !pending; --k)
    if (total[k - 1] > 0) pending = k;

  int pos = 0;
  while (true) {
    if (pos == r - 1) {
      if (static_cast<int>(labels.size()) > pos) {
        if (labels[pos] != pending) return std::nullopt;
      } else {
        auto next = step(iv, path[pos], pending);
        if (!next) return std::nullopt;
        labels.push_back(pending);
        path.push_back(*next);
      }
      break;
    }
    // Colors still to be applied from path[pos], minus one pending.
    RootMultiset rest = total;
    for (int k = 0; k < pos; ++k) --rest[labels[k] - 1];
    RootMultiset others = rest;
    if (--others[pending - 1] < 0) return std::nullopt;

    Color partner = 0;
    if (t.family() == Family::D && pending == n && others[n - 1] > 0) {
      // Another f_n is still needed: the partner of f_n is f_{n-2}.
      if (others[n - 3] == 0) return std::nullopt;
      partner = n - 2;
    } else {
      for (Color k = pending - 1; k >= 1 && !partner; --k)
        if (others[k - 1] > 0) partner = k;
    }
    if (!partner) return std::nullopt;
    const LocalId x = path[pos];
    if (!step(iv, x, pending) || !step(iv, x, partner)) return std::nullopt;

    const RelationKind kind = classify_pair(g, iv.member(x), pending, partner);
    const auto allowed = allowed_kinds(t, pending, partner);
    if (kind.tag == RelationTag::NotImplied ||
        std::find(allowed.begin(), allowed.end(), kind.tag) == allowed.end())
      throw NotCertified("relation between f_" + std::to_string(pending) + " and f_" +
                         std::to_string(partner) + " at vertex " + std::to_string(iv.member(x)) +
                         " is not a Stembridge or Sternberg relation");
    const Color p = pending, q = partner;
    // The color used fewer times in a degree 5 or 7 relation.
    const Color sparse = kind.orientation == q ? p : q;
    std::vector<Color> red;
    switch (kind.tag) {
      case RelationTag::Deg2Stembridge: red = {p, q}; break;
      case RelationTag::Deg4Stembridge: red = {p, q, q, p}; break;
      case RelationTag::Deg5Sternberg:
        red = sparse == p ? std::vector<Color>{p, q, q, q, p} : std::vector<Color>{p, q, q, p, p};
        break;
      case RelationTag::Deg7Sternberg:
        red = sparse == p ? std::vector<Color>{p, q, q, q, p, p, q}
                          : std::vector<Color>{p, q, q, p, p, p, q};
        break;
      case RelationTag::NotImplied: break;
    }
    const int len = static_cast<int>(red.size());
    for (int k = 0; k < len; ++k) {
      const int idx = pos + k;
      if (idx < static_cast<int>(labels.size())) {
        if (labels[idx] != red[k]) return std::nullopt;
        continue;
      }
      auto next = step(iv, path[idx], red[k]);
      if (!next) return std::nullopt;
      labels.push_back(red[k]);
      path.push_back(*next);
    }
    const int p_in_red = static_cast<int>(std::count(red.begin(), red.end(), p));
    if (kind.tag == RelationTag::Deg7Sternberg && rest[p - 1] - p_in_red > 0) {
      // The next skipped interval must start one rank early, with f_n.
      pos += len - 2;
      pending = red[len - 2];
    } else {
      pos += len - 1;
      pending = red[len - 1];
    }
    if (pos >= r) return std::nullopt;
  }

  IntervalSystem sys = msi_system(path, labels);
  for (const auto& m : sys.msis)
    if (!match_template(m, path, labels))
      throw NotCertified("skipped interval [" + std::to_string(m.lo) + "," + std::to_string(m.hi) +
                         "] matches no Stembridge or Sternberg template");
  sys = truncate(std::move(sys));
  if (!is_fully_covered(sys)) return std::nullopt;
  return to_chain(path, labels);
}

std::vector<SaturatedChain> MorseAnalyzer::fully_covered_chains_exhaustive(std::uint64_t cap) const {
  const std::uint64_t total = count_chains(*iv_);
  if (total > cap)
    throw OracleCapExceeded("interval has " + std::to_string(total) + " chains, cap is " +
                            std::to_string(cap));
  std::vector<SaturatedChain> out;
  ChainStream s(*iv_);
  while (s.next()) {
    const IntervalSystem sys = truncate(msi_system(s.local_vertices(), s.labels()));
    if (is_fully_covered(sys)) out.push_back(s.chain());
  }
  return out;
}

std::int64_t MorseAnalyzer::lexicographic_morse_euler(std::uint64_t cap) const {
  if (iv_->rank() == 0) return 1;
  const std::uint64_t total = count_chains(*iv_);
  if (total > cap)
    throw OracleCapExceeded("interval has " + std::to_string(total) + " chains, cap is " +
                            std::to_string(cap));
  std::int64_t sum = 0;
  ChainStream s(*iv_);
  while (s.next()) {
    const IntervalSystem sys = truncate(msi_system(s.local_vertices(), s.labels()));
    if (is_fully_covered(sys)) sum += (sys.j_intervals.size() % 2 == 1) ? 1 : -1;
  }
  return sum;
}

MorseResult MorseAnalyzer::morse_mobius(const MorseOptions& opts) const {
  MorseResult res;
  res.u = iv_->bottom();
  res.v = iv_->top();
  res.rank = iv_->rank();
  if (res.rank == 0) {
    res.predicted_mobius = 1;
    res.certified = Certification::Yes;
    return res;
  }
  res.certified = certify(opts);
  auto fill = [&](const SaturatedChain& c) {
    const IntervalSystem sys = truncate(msi_system(c));
    res.j_intervals = sys.j_intervals;
    res.j_count = static_cast<int>(sys.j_intervals.size());
    res.fully_covered_chain = c;
  };
  if (res.certified != Certification::No) {
    try {
      auto chain = greedy_chain();
      res.used_greedy = true;
      if (chain) {
        fill(*chain);
        res.fully_covered_count = 1;
        res.predicted_mobius = (res.j_count % 2 == 1) ? 1 : -1;
      }
      return res;
    } catch (const NotCertified&) {
      res.certified = Certification::No;
    }
  }
  const auto chains = fully_covered_chains_exhaustive(opts.exhaustive_cap);
  res.fully_covered_count = chains.size();
  std::int64_t sum = 0;
  for (const auto& c : chains) {
    const IntervalSystem sys = truncate(msi_system(c));
    sum += (sys.j_intervals.size() % 2 == 1) ? 1 : -1;
  }
  if (!chains.empty()) fill(chains.front());
  res.predicted_mobius = sum;
  return res;
}

// ---------------------------------------------------------------------------
// Free functions

IntervalSystem msi_system(const SaturatedChain& c, const Interval& iv) {
  return MorseAnalyzer(iv).msi_system(c);
}

IntervalSystem truncate(IntervalSystem sys) {
  std::vector<SkippedInterval> pool = minimal_only(sys.msis);
  sys.j_intervals.clear();
  while (!pool.empty()) {
    const auto first = std::min_element(pool.begin(), pool.end());
    const SkippedInterval moved = *first;
    pool.erase(first);
    sys.j_intervals.push_back(moved);
    std::vector<SkippedInterval> clipped;
    for (SkippedInterval s : pool) {
      s.lo = std::max(s.lo, moved.hi + 1);
      if (s.lo <= s.hi) clipped.push_back(s);
    }
    pool = minimal_only(std::move(clipped));
  }
  return sys;
}

bool is_fully_covered(const IntervalSystem& sys) {
  int next = 1;
  for (const auto& j : sys.j_intervals) {
    if (j.lo != next) return false;
    next = j.hi + 1;
  }
  return next >= sys.rank;
}

std::optional<TemplateId> match_template(const Interval& iv, const SkippedInterval& msi,
                                         const SaturatedChain& c) {
  return MorseAnalyzer(iv).match_template(msi, c);
}

std::optional<SaturatedChain> greedy_chain(const Interval& iv) {
  return MorseAnalyzer(iv).greedy_chain();
}

std::vector<SaturatedChain> fully_covered_chains_exhaustive(const Interval& iv, std::uint64_t cap) {
  return MorseAnalyzer(iv).fully_covered_chains_exhaustive(cap);
}

MorseResult morse_mobius(const Interval& iv, const MorseOptions& opts) {
  return MorseAnalyzer(iv).morse_mobius(opts);
}

std::vector<SkippedInterval> msi_bruteforce(const Interval& iv, const SaturatedChain& c,
                                            std::uint64_t cap) {
  if (count_chains(iv) > cap)
    throw OracleCapExceeded("too many chains for the brute-force skipped interval oracle");
  const int r = iv.rank();
  std::set<std::set<int>> diffs;
  ChainStream s(iv);
  bool found = false;
  while (s.next()) {
    if (s.labels() == c.labels) {
      found = true;
      break;
    }
    const auto other = s.chain();
    std::set<int> d;
    for (int q = 1; q < r; ++q)
      if (other.vertices[q] != c.vertices[q]) d.insert(q);
    diffs.insert(d);
  }
  if (!found) throw InvalidArgument("chain is not a maximal chain of the interval");
  // A rank interval is skipped when it contains the difference set of some
  // earlier chain, so only the hulls of the difference sets matter.
  std::set<std::pair<int, int>> hulls;
  for (const auto& d : diffs) hulls.insert({*d.begin(), *d.rbegin()});
  std::vector<SkippedInterval> out;
  for (auto [lo, hi] : hulls) {
    bool minimal = true;
    for (auto [lo2, hi2] : hulls)
      if (std::pair{lo2, hi2} != std::pair{lo, hi} && lo2 >= lo && hi2 <= hi) minimal = false;
    if (minimal) out.push_back({lo, hi});
  }
  return out;
}

}  // namespace crystalmorse
