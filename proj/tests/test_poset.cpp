#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "crystalmorse/errors.hpp"
#include "crystalmorse/poset.hpp"
#include "figures.hpp"
#include "oracles.hpp"

using namespace crystalmorse;

namespace {

VertexId id_of(const CrystalGraph& g, const figures::Figure& fig, const std::string& name) {
  const auto x = g.find(figures::word_of(fig, name));
  REQUIRE(x.has_value());
  return *x;
}

std::vector<std::vector<Color>> all_labels(const Interval& iv) {
  std::vector<std::vector<Color>> out;
  ChainStream cs(iv);
  while (cs.next()) out.push_back(cs.labels());
  return out;
}

// Same crystal with vertex ids permuted.
CrystalGraph relabeled(const CrystalGraph& g, const std::vector<VertexId>& perm) {
  std::vector<Word> words(g.size());
  for (VertexId x = 0; x < g.size(); ++x) words[perm[x]] = g.word(x);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.from], perm[e.to], e.color});
  std::shuffle(edges.begin(), edges.end(), std::mt19937(3));
  return CrystalGraph::from_parts(g.cartan(), g.lambda(), words, edges);
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("first figure interval in A4") {
    const auto fig = figures::figure1();
    const auto g = generate({Family::A, 4}, {3, 1});
    const Interval iv(g, id_of(g, fig, "a"), id_of(g, fig, "p"));
    CHECK(g.word(iv.bottom()) == Word{3, 2, 2, 4});
    CHECK(g.word(iv.top()) == Word{4, 3, 4, 5});
    CHECK(iv.size() == 16);
    CHECK(iv.rank() == 5);
    CHECK(iv.edge_count() == 24);
    CHECK(colored_isomorphic(iv.size(), figures::local_edges(iv), fig.nodes.size(),
                             figures::figure_edges(fig)));
    CHECK(mobius_brute(iv) == -1);
    CHECK(euler_characteristic_oracle(iv) == -1);
    CHECK(count_chains(iv) == 10);
    const auto labels = all_labels(iv);
    REQUIRE(labels.size() == 10);
    CHECK(std::is_sorted(labels.begin(), labels.end()));
    CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
    CHECK(labels.back() == std::vector<Color>{4, 3, 2, 2, 3});
    CHECK(iv.label_multiset() == RootMultiset{0, 2, 2, 1});
  }

  TEST_CASE("second figure interval in D3") {
    const auto fig = figures::figure10();
    const auto g = generate({Family::D, 3}, {2, 1, 1});
    const Interval iv(g, id_of(g, fig, "a"), id_of(g, fig, "q"));
    CHECK(g.word(iv.bottom()) == Word{3, -3, 1, 2});
    CHECK(g.word(iv.top()) == Word{-1, -3, 2, -2});
    CHECK(iv.size() == 16);
    CHECK(iv.edge_count() == 24);
    CHECK(colored_isomorphic(iv.size(), figures::local_edges(iv), fig.nodes.size(),
                             figures::figure_edges(fig)));
    CHECK(mobius_brute(iv) == -1);
    CHECK(count_chains(iv) == 10);
    CHECK(all_labels(iv).back() == std::vector<Color>{3, 2, 1, 1, 3});
  }

  TEST_CASE("third figure interval in C3") {
    const auto fig = figures::figure11();
    const auto g = generate({Family::C, 3}, {4, 3, 1});
    const VertexId u = id_of(g, fig, "a");
    CHECK(u == 235);
    CHECK(g.word(u) == Word{-3, 3, 1, 3, 1, -3, 2, 3});
    const std::vector<Color> path{1, 2, 2, 3, 3, 2};  // f2 f3^2 f2^2 f1
    const VertexId v = g.apply_path(u, path);
    CHECK(v == 1015);
    CHECK(g.word(v) == Word{-2, 3, 1, -3, 2, -2, 3, -3});
    const Interval iv(g, u, v);
    CHECK(iv.size() == 15);
    CHECK(iv.edge_count() == 18);
    CHECK(count_chains(iv) == 5);
    CHECK(colored_isomorphic(iv.size(), figures::local_edges(iv), fig.nodes.size(),
                             figures::figure_edges(fig)));
    CHECK(mobius_brute(iv) == 1);
    CHECK(euler_characteristic_oracle(iv) == 1);
  }

  TEST_CASE("degenerate and invalid intervals") {
    const auto g = generate({Family::A, 2}, {1, 0});
    const Interval point(g, 1, 1);
    CHECK(point.size() == 1);
    CHECK(point.rank() == 0);
    CHECK(mobius_brute(point) == 1);
    CHECK(count_chains(point) == 1);
    CHECK(all_labels(point) == std::vector<std::vector<Color>>{{}});
    const Interval edge(g, 0, 1);
    CHECK(mobius_brute(edge) == -1);
    CHECK(euler_characteristic_oracle(edge) == -1);
    CHECK_THROWS_AS(Interval(g, 2, 0), NotComparable);
    CHECK(interval(g, 0, 2).rank() == 2);
  }

  TEST_CASE("degree two and degree four intervals") {
    // A3, lambda = omega_1 + omega_3: f1 and f3 commute at the top.
    const auto g = generate({Family::A, 3}, {2, 1, 1});
    const VertexId x = g.highest_weight();
    REQUIRE(g.f(x, 1) != kNoVertex);
    REQUIRE(g.f(x, 3) != kNoVertex);
    const Interval square(g, x, g.f(g.f(x, 1), 3));
    CHECK(square.size() == 4);
    CHECK(mobius_brute(square) == 1);

    // Adjoint crystal of A2: f1 f2^2 f1 = f2 f1^2 f2 at the highest weight.
    const auto ad = generate({Family::A, 2}, {2, 1});
    const VertexId top = ad.highest_weight();
    const std::vector<Color> p{1, 2, 2, 1}, q{2, 1, 1, 2};
    REQUIRE(ad.apply_path(top, p) == ad.apply_path(top, q));
    const Interval quad(ad, top, ad.apply_path(top, p));
    CHECK(quad.size() == 8);
    CHECK(count_chains(quad) == 2);
    CHECK(mobius_brute(quad) == 1);
  }

  TEST_CASE("mobius recursion agrees with the chain counting oracle") {
    for (const auto& c : oracles::test_matrix()) {
      CAPTURE(c.name());
      const auto g = generate(c.cartan, c.lambda);
      const std::size_t step = std::max<std::size_t>(1, g.size() / 12);
      for (VertexId u = 0; u < g.size(); u += static_cast<VertexId>(step)) {
        for (VertexId v = 0; v < g.size(); ++v) {
          if (g.level(v) <= g.level(u) || g.level(v) > g.level(u) + 5) continue;
          std::optional<Interval> iv;
          try {
            iv.emplace(g, u, v);
          } catch (const NotComparable&) {
            continue;
          }
          CHECK(mobius_brute(*iv) == euler_characteristic_oracle(*iv));
        }
      }
    }
  }

  TEST_CASE("mobius values do not depend on vertex ids") {
    const auto g = generate({Family::C, 2}, {3, 1});
    std::vector<VertexId> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937(11));
    const auto h = relabeled(g, perm);
    for (VertexId u = 0; u < g.size(); ++u)
      for (VertexId v = 0; v < g.size(); ++v) {
        if (g.level(v) < g.level(u)) continue;
        std::optional<Interval> a;
        try {
          a.emplace(g, u, v);
        } catch (const NotComparable&) {
          CHECK_THROWS_AS(Interval(h, perm[u], perm[v]), NotComparable);
          continue;
        }
        const Interval b(h, perm[u], perm[v]);
        CHECK(mobius_brute(*a) == mobius_brute(b));
        CHECK(count_chains(*a) == count_chains(b));
        CHECK(all_labels(*a) == all_labels(b));
      }
  }

  TEST_CASE("saturated chains and reachability") {
    const auto g = generate({Family::A, 4}, {3, 1});
    const auto fig = figures::figure1();
    const Interval iv(g, id_of(g, fig, "a"), id_of(g, fig, "p"));
    const auto chains = saturated_chains(iv);
    REQUIRE(chains.size() == 10);
    for (const auto& c : chains) {
      REQUIRE(c.vertices.size() == 6);
      for (std::size_t k = 0; k < c.labels.size(); ++k)
        CHECK(g.f(c.vertices[k], c.labels[k]) == c.vertices[k + 1]);
    }
    const Reachability reach(iv);
    for (LocalId a = 0; a < iv.size(); ++a) {
      CHECK(reach.leq(0, a));
      CHECK(reach.leq(a, static_cast<LocalId>(iv.size() - 1)));
      for (const Cover& c : iv.up(a)) CHECK(reach.leq(a, c.target));
    }
    CHECK(!reach.leq(static_cast<LocalId>(iv.size() - 1), 0));
  }

  TEST_CASE("euler oracle cap") {
    const auto g = generate({Family::A, 2}, {2, 1});
    const Interval iv(g, 0, 7);
    CHECK_THROWS_AS(euler_characteristic_oracle(iv, 3), OracleCapExceeded);
  }

  TEST_CASE("bounds of pairs") {
    const auto g = generate({Family::A, 2}, {1, 1});
    // Highest weight of B(omega_2) is a chain 0 -> 1 -> 2.
    CHECK(minimal_upper_bounds(g, 1, 1) == std::vector<VertexId>{1});
    CHECK(minimal_upper_bounds(g, 0, 2) == std::vector<VertexId>{2});
    CHECK(maximal_lower_bounds(g, 0, 2) == std::vector<VertexId>{0});

    const auto sq = generate({Family::A, 3}, {2, 1, 1});
    const VertexId x = sq.highest_weight();
    const VertexId a = sq.f(x, 1), b = sq.f(x, 3);
    CHECK(minimal_upper_bounds(sq, a, b) == std::vector<VertexId>{sq.f(a, 3)});
    CHECK(maximal_lower_bounds(sq, a, b) == std::vector<VertexId>{x});
  }

  TEST_CASE("lattice check") {
    for (int a = 1; a <= 3; ++a)
      for (int b = 0; b <= a; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(!lattice_check(generate({Family::A, 2}, {a, b})).has_value());
      }
    CHECK(!lattice_check(generate({Family::A, 1}, {4})).has_value());

    const auto c2 = generate({Family::C, 2}, {3, 0});
    const auto w = lattice_check(c2);
    REQUIRE(w.has_value());
    CHECK(w->upper);
    CHECK(w->bounds.size() >= 2);
    CHECK(minimal_upper_bounds(c2, w->x, w->y) == w->bounds);
    CHECK(lattice_check(generate({Family::B, 2}, {2, 2})).has_value());
    CHECK(!lattice_check(generate({Family::C, 2}, {2, 1})).has_value());
    CHECK_THROWS_AS(lattice_check(c2, 5), OracleCapExceeded);
  }

  TEST_CASE("colored isomorphism") {
    const auto fig = figures::figure1();
    const auto edges = figures::figure_edges(fig);
    const std::size_t n = fig.nodes.size();
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), std::mt19937(5));
    std::vector<Edge> moved;
    for (const Edge& e : edges) moved.push_back({perm[e.from], perm[e.to], e.color});
    CHECK(colored_isomorphic(n, edges, n, moved));

    auto recolored = moved;
    recolored[3].color = recolored[3].color == 1 ? 2 : 1;
    CHECK(!colored_isomorphic(n, edges, n, recolored));
    CHECK(!colored_isomorphic(n, edges, n + 1, moved));
    auto fewer = moved;
    fewer.pop_back();
    CHECK(!colored_isomorphic(n, edges, n, fewer));
  }
}
