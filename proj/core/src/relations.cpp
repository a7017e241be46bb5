#include "crystalmorse/relations.hpp"

#include <algorithm>
#include <deque>
#include <thread>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

std::string to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::Deg2Stembridge: return "Deg2Stembridge";
    case RelationTag::Deg4Stembridge: return "Deg4Stembridge";
    case RelationTag::Deg5Sternberg: return "Deg5Sternberg";
    case RelationTag::Deg7Sternberg: return "Deg7Sternberg";
    case RelationTag::NotImplied: return "NotImplied";
  }
  return "?";
}

std::vector<std::vector<Color>> relation_paths(RelationTag tag, Color a, Color b) {
  switch (tag) {
    case RelationTag::Deg2Stembridge:
      return {{a, b}, {b, a}};
    case RelationTag::Deg4Stembridge:
      return {{a, b, b, a}, {b, a, a, b}};
    case RelationTag::Deg5Sternberg:
      return {{a, b, b, b, a}, {b, a, b, a, b}, {b, a, a, b, b}};
    case RelationTag::Deg7Sternberg:
      return {{b, a, a, b, b, b, a},
              {b, a, b, a, b, b, a},
              {a, b, b, b, a, a, b},
              {a, b, b, a, b, a, b}};
    case RelationTag::NotImplied:
      break;
  }
  return {};
}

std::optional<VertexId> relation_top(const CrystalGraph& g, VertexId x, RelationTag tag,
                                     Color a, Color b) {
  std::optional<VertexId> top;
  for (const auto& path : relation_paths(tag, a, b)) {
    const VertexId y = g.apply_path(x, path);
    if (y == kNoVertex) return std::nullopt;
    if (top && *top != y) return std::nullopt;
    top = y;
  }
  return top;
}

namespace {

bool sternberg_pair(const CartanType& t, Color i, Color j) {
  const int n = t.rank();
  return t.doubly_laced() && std::min(i, j) == n - 1 && std::max(i, j) == n;
}

std::vector<VertexId> path_vertices(const CrystalGraph& g, VertexId x,
                                    const std::vector<std::vector<Color>>& paths) {
  std::vector<VertexId> out{x};
  for (const auto& p : paths) {
    VertexId y = x;
    for (Color c : p) {
      y = g.f(y, c);
      if (y == kNoVertex) break;
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
  }
  return out;
}

struct Classified {
  RelationKind kind;
  std::vector<std::vector<Color>> paths;
};

Classified classify_impl(const CrystalGraph& g, VertexId x, Color i, Color j) {
  if (i == j) throw InvalidArgument("classify_pair needs two distinct colors");
  if (g.f(x, i) == kNoVertex) throw OperatorUndefinedAt(x, i);
  if (g.f(x, j) == kNoVertex) throw OperatorUndefinedAt(x, j);
  for (RelationTag tag : {RelationTag::Deg2Stembridge, RelationTag::Deg4Stembridge})
    if (relation_top(g, x, tag, i, j)) return {{tag, 0}, relation_paths(tag, i, j)};
  if (sternberg_pair(g.cartan(), i, j)) {
    for (RelationTag tag : {RelationTag::Deg5Sternberg, RelationTag::Deg7Sternberg}) {
      if (relation_top(g, x, tag, i, j)) return {{tag, j}, relation_paths(tag, i, j)};
      if (relation_top(g, x, tag, j, i)) return {{tag, i}, relation_paths(tag, j, i)};
    }
  }
  return {{RelationTag::NotImplied, 0}, {{i}, {j}}};
}

}  // namespace

RelationKind classify_pair(const CrystalGraph& g, VertexId x, Color i, Color j) {
  return classify_impl(g, x, i, j).kind;
}

std::vector<RelationTag> allowed_kinds(const CartanType& t, Color i, Color j) {
  const int n = t.rank();
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw InvalidArgument("allowed_kinds needs two distinct colors in range");
  const int lo = std::min(i, j), hi = std::max(i, j);
  const bool adjacent = hi - lo == 1;
  const bool top_pair = lo == n - 1 && hi == n;
  using enum RelationTag;
  switch (t.family()) {
    case Family::A:
      if (adjacent) return {Deg2Stembridge, Deg4Stembridge};
      return {Deg2Stembridge};
    case Family::D:
      if ((adjacent && !top_pair) || (lo == n - 2 && hi == n))
        return {Deg2Stembridge, Deg4Stembridge};
      return {Deg2Stembridge};
    case Family::B:
    case Family::C:
      if (top_pair) return {Deg2Stembridge, Deg4Stembridge, Deg5Sternberg, Deg7Sternberg};
      if (adjacent) return {Deg2Stembridge, Deg4Stembridge};
      return {Deg2Stembridge};
  }
  return {};
}

std::vector<RelationRecord> classify_all(const CrystalGraph& g, unsigned workers) {
  const int n = g.rank();
  const std::size_t size = g.size();
  workers = std::max(1u, workers);
  std::vector<std::vector<RelationRecord>> parts(workers);
  auto run = [&](unsigned w) {
    const std::size_t lo = size * w / workers, hi = size * (w + 1) / workers;
    for (std::size_t x = lo; x < hi; ++x) {
      const auto vx = static_cast<VertexId>(x);
      for (Color i = 1; i <= n; ++i) {
        if (g.f(vx, i) == kNoVertex) continue;
        for (Color j = i + 1; j <= n; ++j) {
          if (g.f(vx, j) == kNoVertex) continue;
          Classified c = classify_impl(g, vx, i, j);
          parts[w].push_back({vx, i, j, c.kind, path_vertices(g, vx, c.paths)});
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  std::vector<RelationRecord> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()),
                                   std::make_move_iterator(p.end()));
  std::stable_partition(out.begin(), out.end(), [](const RelationRecord& r) {
    return r.kind.tag == RelationTag::NotImplied;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

int rise(const CrystalGraph& g, VertexId x, Color j) {
  int k = 0;
  for (VertexId y = g.f(x, j); y != kNoVertex; y = g.f(y, j)) ++k;
  return k;
}

int depth(const CrystalGraph& g, VertexId x, Color j) {
  int k = 0;
  for (VertexId y = g.e(x, j); y != kNoVertex; y = g.e(y, j)) ++k;
  return -k;
}

DifferenceStats difference_stats(const CrystalGraph& g, VertexId x, Color i, Color j) {
  DifferenceStats s{0, 0, 0, 0};
  if (VertexId y = g.e(x, i); y != kNoVertex) {
    s.delta_i_delta_j = depth(g, y, j) - depth(g, x, j);
    s.delta_i_eps_j = rise(g, y, j) - rise(g, x, j);
  }
  if (VertexId y = g.f(x, i); y != kNoVertex) {
    s.nabla_i_eps_j = rise(g, x, j) - rise(g, y, j);
    s.nabla_i_delta_j = depth(g, x, j) - depth(g, y, j);
  }
  return s;
}

namespace {

VertexId down_path(const CrystalGraph& g, VertexId x, std::initializer_list<Color> labels) {
  for (Color c : labels) {
    if (x == kNoVertex) return x;
    x = g.e(x, c);
  }
  return x;
}

VertexId up_path(const CrystalGraph& g, VertexId x, std::initializer_list<Color> labels) {
  for (Color c : labels) {
    if (x == kNoVertex) return x;
    x = g.f(x, c);
  }
  return x;
}

}  // namespace

AxiomReport verify_stembridge_axioms(const CrystalGraph& g) {
  AxiomReport report;
  const int n = g.rank();
  const std::size_t size = g.size();
  const CartanType& t = g.cartan();
  const Matrix a = cartan_matrix(t);
  const auto roots = simple_roots(t);
  auto flag = [&](std::string axiom, VertexId x, Color i, Color j, std::string detail) {
    report.violations.push_back({std::move(axiom), x, i, j, std::move(detail)});
  };

  // S1: no directed cycles (so every monochromatic path is finite).
  {
    std::vector<int> indeg(size, 0);
    for (VertexId x = 0; x < size; ++x)
      for (Color i = 1; i <= n; ++i)
        if (VertexId y = g.f(x, i); y != kNoVertex) ++indeg[y];
    std::deque<VertexId> queue;
    for (VertexId x = 0; x < size; ++x)
      if (indeg[x] == 0) queue.push_back(x);
    std::size_t seen = 0;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      ++seen;
      for (Color i = 1; i <= n; ++i)
        if (VertexId y = g.f(x, i); y != kNoVertex && --indeg[y] == 0) queue.push_back(y);
    }
    if (seen != size) flag("S1", 0, 0, 0, "graph has a directed cycle");
  }
  if (!report.clean()) return report;

  // String data in axiom conventions.
  std::vector<int> rise_of(size * n), depth_of(size * n);
  for (VertexId x = 0; x < size; ++x)
    for (Color j = 1; j <= n; ++j) {
      rise_of[x * n + (j - 1)] = rise(g, x, j);
      depth_of[x * n + (j - 1)] = depth(g, x, j);
    }
  auto R = [&](VertexId x, Color j) { return rise_of[static_cast<std::size_t>(x) * n + (j - 1)]; };
  auto D = [&](VertexId x, Color j) { return depth_of[static_cast<std::size_t>(x) * n + (j - 1)]; };
  auto dd = [&](VertexId x, Color i, Color j) { return D(g.e(x, i), j) - D(x, j); };  // Delta_i delta_j
  auto de = [&](VertexId x, Color i, Color j) { return R(g.e(x, i), j) - R(x, j); };  // Delta_i eps_j
  auto ne = [&](VertexId x, Color i, Color j) { return R(x, j) - R(g.f(x, i), j); };  // nabla_i eps_j

  for (VertexId x = 0; x < size; ++x) {
    const Weight wx = g.weight(x);
    for (Color i = 1; i <= n; ++i) {
      // S2 and A1: f and e are mutually inverse; weights drop by alpha_i.
      if (VertexId y = g.f(x, i); y != kNoVertex) {
        if (g.e(y, i) != x) flag("S2", x, i, i, "e_i(f_i(x)) != x");
        if (subtract(wx, g.weight(y)) != roots[i - 1]) flag("A1", x, i, i, "wt(x) - wt(f_i x) != alpha_i");
      }
      if (VertexId y = g.e(x, i); y != kNoVertex && g.f(y, i) != x)
        flag("S2", x, i, i, "f_i(e_i(x)) != x");
      // A2: rise + depth = <wt, alpha_i^vee>.
      if (R(x, i) + D(x, i) != pair_with_coroot(wx, i, t))
        flag("A2", x, i, i,
             "phi - epsilon = " + std::to_string(R(x, i) + D(x, i)) + ", pairing " +
                 std::to_string(pair_with_coroot(wx, i, t)));
    }
    for (Color i = 1; i <= n; ++i) {
      const bool has_e_i = g.e(x, i) != kNoVertex;
      const bool has_f_i = g.f(x, i) != kNoVertex;
      for (Color j = 1; j <= n; ++j) {
        if (has_e_i) {
          if (dd(x, i, j) + de(x, i, j) != a[i - 1][j - 1])
            flag("S3", x, i, j,
                 "Delta_i delta_j + Delta_i eps_j = " + std::to_string(dd(x, i, j) + de(x, i, j)) +
                     ", a_ij = " + std::to_string(a[i - 1][j - 1]));
          if (i != j && (dd(x, i, j) > 0 || de(x, i, j) > 0))
            flag("S4", x, i, j, "positive difference");
        }
        if (i == j) continue;
        const bool has_e_j = g.e(x, j) != kNoVertex;
        const bool has_f_j = g.f(x, j) != kNoVertex;
        if (has_e_i && has_e_j) {
          if (dd(x, i, j) == 0) {
            const VertexId y1 = down_path(g, x, {j, i});
            const VertexId y2 = down_path(g, x, {i, j});
            if (y1 == kNoVertex || y1 != y2)
              flag("S5", x, i, j, "e_i e_j(x) != e_j e_i(x)");
            else if (ne(y1, j, i) != 0)
              flag("S5", x, i, j, "nabla_j eps_i(y) != 0");
          }
          if (i < j && dd(x, i, j) == -1 && dd(x, j, i) == -1) {
            const VertexId y1 = down_path(g, x, {i, j, j, i});
            const VertexId y2 = down_path(g, x, {j, i, i, j});
            if (y1 == kNoVertex || y1 != y2)
              flag("S6", x, i, j, "e_i e_j^2 e_i(x) != e_j e_i^2 e_j(x)");
            else if (ne(y1, i, j) != -1 || ne(y1, j, i) != -1)
              flag("S6", x, i, j, "nabla differences at y are not -1");
          }
        }
        if (has_f_i && has_f_j) {
          if (ne(x, i, j) == 0) {
            const VertexId y1 = up_path(g, x, {j, i});
            const VertexId y2 = up_path(g, x, {i, j});
            if (y1 == kNoVertex || y1 != y2)
              flag("S5'", x, i, j, "f_i f_j(x) != f_j f_i(x)");
            else if (dd(y1, j, i) != 0)
              flag("S5'", x, i, j, "Delta_j delta_i(y) != 0");
          }
          if (i < j && ne(x, i, j) == -1 && ne(x, j, i) == -1) {
            const VertexId y1 = up_path(g, x, {i, j, j, i});
            const VertexId y2 = up_path(g, x, {j, i, i, j});
            if (y1 == kNoVertex || y1 != y2)
              flag("S6'", x, i, j, "f_i f_j^2 f_i(x) != f_j f_i^2 f_j(x)");
            else if (dd(y1, i, j) != dd(y1, j, i))
              flag("S6'", x, i, j, "Delta_i delta_j(y) != Delta_j delta_i(y)");
          }
        }
      }
    }
  }
  return report;
}

}  // namespace crystalmorse
