#include "crystalmorse/poset.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(const CrystalGraph& g, VertexId u, VertexId v) : graph_(&g) {
  if (u >= g.size() || v >= g.size()) throw InvalidArgument("vertex id out of range");
  const int n = g.rank();
  const auto dv = g.depth(v);
  auto may_reach_v = [&](VertexId x) {
    const auto dx = g.depth(x);
    for (int k = 0; k < n; ++k)
      if (dx[k] > dv[k]) return false;
    return true;
  };
  if (!may_reach_v(u)) throw NotComparable("vertex " + std::to_string(v) +
                                           " is not above " + std::to_string(u));

  // Forward from u, pruned by depth vectors, then backward from v.
  std::unordered_set<VertexId> forward{u};
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (Color i = 1; i <= n; ++i) {
      const VertexId y = g.f(x, i);
      if (y != kNoVertex && may_reach_v(y) && forward.insert(y).second) stack.push_back(y);
    }
  }
  if (!forward.count(v))
    throw NotComparable("vertex " + std::to_string(v) + " is not above " + std::to_string(u));
  std::unordered_set<VertexId> both{v};
  stack.assign(1, v);
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (Color i = 1; i <= n; ++i) {
      const VertexId y = g.e(x, i);
      if (y != kNoVertex && forward.count(y) && both.insert(y).second) stack.push_back(y);
    }
  }
  members_.assign(both.begin(), both.end());
  std::sort(members_.begin(), members_.end(), [&](VertexId a, VertexId b) {
    if (g.level(a) != g.level(b)) return g.level(a) < g.level(b);
    return a < b;
  });
  const int base = g.level(u);
  rank_ = g.level(v) - base;
  levels_.reserve(members_.size());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    index_.emplace(members_[k], static_cast<LocalId>(k));
    levels_.push_back(g.level(members_[k]) - base);
  }

  const std::size_t m = members_.size();
  up_offsets_.assign(m + 1, 0);
  down_offsets_.assign(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) {
    up_offsets_[k] = up_targets_.size();
    for (Color i = 1; i <= n; ++i) {
      const VertexId y = g.f(members_[k], i);
      if (y == kNoVertex) continue;
      auto it = index_.find(y);
      if (it != index_.end()) up_targets_.push_back({i, it->second});
    }
    down_offsets_[k] = down_targets_.size();
    for (Color i = 1; i <= n; ++i) {
      const VertexId y = g.e(members_[k], i);
      if (y == kNoVertex) continue;
      auto it = index_.find(y);
      if (it != index_.end()) down_targets_.push_back({i, it->second});
    }
  }
  up_offsets_[m] = up_targets_.size();
  down_offsets_[m] = down_targets_.size();
}

std::optional<LocalId> Interval::local(VertexId x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootMultiset Interval::label_multiset() const {
  const auto& g = *graph_;
  return decompose(subtract(g.weight(bottom()), g.weight(top())), g.cartan());
}

std::vector<Edge> Interval::edges() const {
  std::vector<Edge> out;
  for (LocalId k = 0; k < members_.size(); ++k)
    for (const Cover& c : up(k)) out.push_back({members_[k], members_[c.target], c.color});
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.color < b.color;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Chains

ChainStream::ChainStream(const Interval& iv) : iv_(&iv) {}

void ChainStream::descend() {
  LocalId x = path_.back();
  while (!iv_->up(x).empty()) {
    choice_.push_back(0);
    const Cover& c = iv_->up(x)[0];
    labels_.push_back(c.color);
    path_.push_back(c.target);
    x = c.target;
  }
}

bool ChainStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    path_.assign(1, 0);
    descend();
    return true;
  }
  // Every member has an up cover unless it is the top, so backtracking to
  // the deepest vertex with an untried edge always completes a chain.
  while (!choice_.empty()) {
    const std::size_t d = choice_.size() - 1;
    const LocalId x = path_[d];
    const std::size_t c = choice_[d] + 1;
    path_.resize(d + 1);
    labels_.resize(d);
    choice_.resize(d);
    if (c < iv_->up(x).size()) {
      choice_.push_back(c);
      const Cover& cov = iv_->up(x)[c];
      labels_.push_back(cov.color);
      path_.push_back(cov.target);
      descend();
      return true;
    }
  }
  done_ = true;
  return false;
}

SaturatedChain ChainStream::chain() const {
  SaturatedChain c;
  c.labels = labels_;
  c.vertices.reserve(path_.size());
  for (LocalId k : path_) c.vertices.push_back(iv_->member(k));
  return c;
}

std::vector<SaturatedChain> saturated_chains(const Interval& iv) {
  std::vector<SaturatedChain> out;
  ChainStream s(iv);
  while (s.next()) out.push_back(s.chain());
  return out;
}

std::uint64_t count_chains(const Interval& iv) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::size_t m = iv.size();
  std::vector<std::uint64_t> ways(m, 0);
  ways[m - 1] = 1;
  for (std::size_t k = m - 1; k-- > 0;) {
    std::uint64_t total = 0;
    for (const Cover& c : iv.up(static_cast<LocalId>(k))) {
      const std::uint64_t w = ways[c.target];
      total = (kMax - total < w) ? kMax : total + w;
    }
    ways[k] = total;
  }
  return ways[0];
}

// ---------------------------------------------------------------------------
// Mobius function

Reachability::Reachability(const Interval& iv) {
  const std::size_t m = iv.size();
  below_.assign(m, boost::dynamic_bitset<>(m));
  for (LocalId k = 0; k < m; ++k) {
    below_[k].set(k);
    for (const Cover& c : iv.down(k)) below_[k] |= below_[c.target];
  }
}

std::vector<std::int64_t> mobius_from_bottom(
    const std::vector<std::vector<LocalId>>& down_covers) {
  const std::size_t m = down_covers.size();
  std::vector<std::int64_t> mu(m, 0);
  std::vector<boost::dynamic_bitset<>> below(m, boost::dynamic_bitset<>(m));
  for (std::size_t t = 0; t < m; ++t) {
    for (LocalId s : down_covers[t]) below[t] |= below[s];
    if (t == 0) {
      mu[0] = 1;
    } else {
      std::int64_t sum = 0;
      for (auto s = below[t].find_first(); s != boost::dynamic_bitset<>::npos;
           s = below[t].find_next(s))
        sum += mu[s];
      mu[t] = -sum;
    }
    below[t].set(t);
  }
  return mu;
}

std::int64_t mobius_brute(const Interval& iv) {
  std::vector<std::vector<LocalId>> down(iv.size());
  for (LocalId k = 0; k < iv.size(); ++k)
    for (const Cover& c : iv.down(k)) down[k].push_back(c.target);
  return mobius_from_bottom(down).back();
}

std::int64_t euler_characteristic_oracle(const Interval& iv, std::size_t cap) {
  if (iv.size() > cap)
    throw OracleCapExceeded("interval has " + std::to_string(iv.size()) +
                            " members, oracle cap is " + std::to_string(cap));
  if (iv.rank() < 1) throw InvalidArgument("euler oracle needs an interval of rank >= 1");
  const CrystalGraph& g = iv.graph();
  const VertexId u = iv.bottom();
  const VertexId v = iv.top();
  // Open interval elements and the strict order among them, found by a
  // fresh search in the graph (independent of the interval's cover lists).
  std::vector<VertexId> open;
  for (VertexId x : iv.members())
    if (x != u && x != v) open.push_back(x);
  std::sort(open.begin(), open.end(),
            [&](VertexId a, VertexId b) { return g.level(a) > g.level(b) || (g.level(a) == g.level(b) && a < b); });
  std::unordered_map<VertexId, std::size_t> pos;
  for (std::size_t k = 0; k < open.size(); ++k) pos[open[k]] = k;
  const std::size_t m = open.size();
  std::vector<std::vector<std::size_t>> above(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::unordered_set<VertexId> seen;
    std::vector<VertexId> stack{open[k]};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (Color i = 1; i <= g.rank(); ++i) {
        const VertexId y = g.f(x, i);
        if (y == kNoVertex || !seen.insert(y).second) continue;
        if (auto it = pos.find(y); it != pos.end()) above[k].push_back(it->second);
        stack.push_back(y);
      }
    }
  }
  // chains[k][l]: chains with l+1 elements whose minimum is open[k].
  // open is sorted top-down, so everything above k has a smaller index.
  const std::size_t max_len = static_cast<std::size_t>(std::max(iv.rank() - 1, 0));
  std::vector<std::vector<__int128>> chains(m, std::vector<__int128>(max_len, 0));
  std::vector<__int128> by_length(max_len, 0);
  for (std::size_t k = 0; k < m; ++k) {
    chains[k][0] = 1;
    for (std::size_t a : above[k])
      for (std::size_t l = 1; l < max_len; ++l) chains[k][l] += chains[a][l - 1];
    for (std::size_t l = 0; l < max_len; ++l) by_length[l] += chains[k][l];
  }
  // Faces with l+1 vertices have dimension l.
  __int128 chi = -1;
  for (std::size_t l = 0; l < max_len; ++l) chi += (l % 2 == 0) ? by_length[l] : -by_length[l];
  if (chi > std::numeric_limits<std::int64_t>::max() || chi < std::numeric_limits<std::int64_t>::min())
    throw OracleCapExceeded("Euler characteristic overflows 64 bits");
  return static_cast<std::int64_t>(chi);
}

// ---------------------------------------------------------------------------
// Bounds and lattice check

namespace {

std::vector<char> closure(const CrystalGraph& g, VertexId x, bool upward) {
  std::vector<char> mark(g.size(), 0);
  std::vector<VertexId> stack{x};
  mark[x] = 1;
  while (!stack.empty()) {
    const VertexId a = stack.back();
    stack.pop_back();
    for (Color i = 1; i <= g.rank(); ++i) {
      const VertexId b = upward ? g.f(a, i) : g.e(a, i);
      if (b != kNoVertex && !mark[b]) {
        mark[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return mark;
}

std::vector<VertexId> extremal_bounds(const CrystalGraph& g, VertexId x, VertexId y, bool upper) {
  const auto cx = closure(g, x, upper);
  const auto cy = closure(g, y, upper);
  std::vector<VertexId> out;
  for (VertexId z = 0; z < g.size(); ++z) {
    if (!cx[z] || !cy[z]) continue;
    bool extremal = true;
    for (Color i = 1; i <= g.rank() && extremal; ++i) {
      const VertexId w = upper ? g.e(z, i) : g.f(z, i);
      if (w != kNoVertex && cx[w] && cy[w]) extremal = false;
    }
    if (extremal) out.push_back(z);
  }
  return out;
}

}  // namespace

std::vector<VertexId> minimal_upper_bounds(const CrystalGraph& g, VertexId x, VertexId y) {
  return extremal_bounds(g, x, y, true);
}

std::vector<VertexId> maximal_lower_bounds(const CrystalGraph& g, VertexId x, VertexId y) {
  return extremal_bounds(g, x, y, false);
}

std::optional<LatticeWitness> lattice_check(const CrystalGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap)
    throw OracleCapExceeded("lattice check limited to " + std::to_string(cap) + " vertices");
  // Topological order by level gives up-sets and down-sets in one pass each.
  std::vector<VertexId> order(n);
  for (VertexId x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.level(a) < g.level(b); });
  std::vector<boost::dynamic_bitset<>> up(n, boost::dynamic_bitset<>(n));
  std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    up[*it].set(*it);
    for (Color i = 1; i <= g.rank(); ++i)
      if (VertexId y = g.f(*it, i); y != kNoVertex) up[*it] |= up[y];
  }
  for (VertexId x : order) {
    down[x].set(x);
    for (Color i = 1; i <= g.rank(); ++i)
      if (VertexId y = g.e(x, i); y != kNoVertex) down[x] |= down[y];
  }
  auto extremal = [&](const boost::dynamic_bitset<>& common, bool upper) {
    std::vector<VertexId> out;
    for (auto z = common.find_first(); z != boost::dynamic_bitset<>::npos; z = common.find_next(z)) {
      bool ok = true;
      for (Color i = 1; i <= g.rank() && ok; ++i) {
        const VertexId w = upper ? g.e(static_cast<VertexId>(z), i) : g.f(static_cast<VertexId>(z), i);
        if (w != kNoVertex && common.test(w)) ok = false;
      }
      if (ok) out.push_back(static_cast<VertexId>(z));
    }
    return out;
  };
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      if (up[x].test(y) || up[y].test(x)) continue;  // comparable pairs are fine
      auto ub = extremal(up[x] & up[y], true);
      if (ub.size() != 1) return LatticeWitness{x, y, true, std::move(ub)};
      auto lb = extremal(down[x] & down[y], false);
      if (lb.size() != 1) return LatticeWitness{x, y, false, std::move(lb)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Colored isomorphism

bool colored_isomorphic(std::size_t n1, const std::vector<Edge>& e1, std::size_t n2,
                        const std::vector<Edge>& e2) {
  if (n1 != n2 || e1.size() != e2.size()) return false;
  if (n1 == 0) return true;
  auto adjacency = [](std::size_t n, const std::vector<Edge>& es) {
    std::vector<std::vector<std::pair<Color, VertexId>>> out(n);
    std::vector<int> indeg(n, 0);
    for (const Edge& e : es) {
      out[e.from].push_back({e.color, e.to});
      ++indeg[e.to];
    }
    for (auto& v : out) std::sort(v.begin(), v.end());
    return std::pair{out, indeg};
  };
  auto [a1, in1] = adjacency(n1, e1);
  auto [a2, in2] = adjacency(n2, e2);
  auto source = [](const std::vector<int>& indeg) -> std::optional<VertexId> {
    std::optional<VertexId> s;
    for (VertexId k = 0; k < indeg.size(); ++k) {
      if (indeg[k] != 0) continue;
      if (s) return std::nullopt;
      s = k;
    }
    return s;
  };
  const auto s1 = source(in1);
  const auto s2 = source(in2);
  if (!s1 || !s2) return false;
  // Out-colors are distinct at each vertex, so matching the sources forces
  // the whole map; check it is a bijection preserving colored edges.
  std::vector<VertexId> map(n1, kNoVertex), inverse(n2, kNoVertex);
  std::vector<VertexId> queue{*s1};
  map[*s1] = *s2;
  inverse[*s2] = *s1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    const auto& o1 = a1[x];
    const auto& o2 = a2[map[x]];
    if (o1.size() != o2.size()) return false;
    for (std::size_t k = 0; k < o1.size(); ++k) {
      if (o1[k].first != o2[k].first) return false;
      const VertexId y1 = o1[k].second, y2 = o2[k].second;
      if (map[y1] == kNoVertex && inverse[y2] == kNoVertex) {
        map[y1] = y2;
        inverse[y2] = y1;
        queue.push_back(y1);
      } else if (map[y1] != y2) {
        return false;
      }
    }
  }
  return queue.size() == n1;
}

}  // namespace crystalmorse
