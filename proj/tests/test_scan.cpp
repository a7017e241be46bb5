#include <doctest.h>

#include <algorithm>

#include "crystalmorse/errors.hpp"
#include "crystalmorse/scan.hpp"
#include "crystalmorse/serialize.hpp"
#include "figures.hpp"

using namespace crystalmorse;

namespace {

// Comparable pairs u < v with rank at most max_rank, by a search from each u.
std::uint64_t count_pairs(const CrystalGraph& g, int max_rank) {
  std::uint64_t total = 0;
  for (VertexId u = 0; u < g.size(); ++u) {
    std::vector<char> seen(g.size(), 0);
    std::vector<VertexId> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (Color i = 1; i <= g.rank(); ++i) {
        const VertexId y = g.f(x, i);
        if (y == kNoVertex || seen[y] || g.level(y) - g.level(u) > max_rank) continue;
        seen[y] = 1;
        ++total;
        stack.push_back(y);
      }
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("scan") {
  TEST_CASE("modes and anomaly predicate") {
    for (ScanMode m : {ScanMode::BruteOnly, ScanMode::CrossCheck, ScanMode::AnomaliesOnly})
      CHECK(parse_scan_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_scan_mode("fast"), InvalidArgument);
    CHECK(!is_anomalous(-1));
    CHECK(!is_anomalous(0));
    CHECK(!is_anomalous(1));
    CHECK(is_anomalous(2));
    CHECK(is_anomalous(-2));
  }

  TEST_CASE("A2 has no anomalies and no disagreements") {
    const auto g = generate({Family::A, 2}, {2, 1});
    for (ScanMode m : {ScanMode::BruteOnly, ScanMode::CrossCheck, ScanMode::AnomaliesOnly}) {
      ScanConfig cfg;
      cfg.mode = m;
      const auto report = scan(g, cfg);
      CHECK(report.records.empty());
      CHECK(!report.truncated);
      CHECK(report.stats.intervals == count_pairs(g, 6));
    }
    ScanConfig cfg;
    cfg.mode = ScanMode::CrossCheck;
    const auto report = scan(g, cfg);
    CHECK(report.stats.certified == report.stats.intervals);
    CHECK(report.stats.max_fully_covered_on_certified == 1);
  }

  TEST_CASE("rank cap one sees only edges") {
    const auto g = generate({Family::C, 2}, {3, 1});
    ScanConfig cfg;
    cfg.max_interval_rank = 1;
    cfg.mode = ScanMode::CrossCheck;
    const auto report = scan(g, cfg);
    CHECK(report.records.empty());
    CHECK(report.stats.intervals == g.edge_count());
    cfg.max_interval_rank = 0;
    CHECK_THROWS_AS(scan(g, cfg), InvalidArgument);
  }

  TEST_CASE("interval counts match an independent search") {
    const auto g = generate({Family::B, 2}, {2, 1});
    for (int cap : {2, 4, 7}) {
      ScanConfig cfg;
      cfg.max_interval_rank = cap;
      cfg.mode = ScanMode::BruteOnly;
      CHECK(scan(g, cfg).stats.intervals == count_pairs(g, cap));
    }
  }

  TEST_CASE("output does not depend on the worker count") {
    const auto g = generate({Family::C, 2}, {3, 1});
    ScanConfig cfg;
    cfg.mode = ScanMode::CrossCheck;
    cfg.max_interval_rank = 8;
    const std::string one = scan_report_to_json(scan(g, cfg));
    cfg.workers = 4;
    CHECK(scan_report_to_json(scan(g, cfg)) == one);
    CHECK(scan_report_to_json(scan(g, cfg)) == one);
  }

  TEST_CASE("interval budget truncates the report") {
    const auto g = generate({Family::C, 2}, {3, 1});
    ScanConfig cfg;
    cfg.interval_budget = 10;
    const auto report = scan(g, cfg);
    CHECK(report.truncated);
    CHECK(report.stats.intervals <= 10);
  }

  TEST_CASE("witness of a non-anomalous interval") {
    const auto g = generate({Family::A, 4}, {3, 1});
    const auto fig = figures::figure1();
    const VertexId u = *g.find(figures::word_of(fig, "a"));
    const VertexId v = *g.find(figures::word_of(fig, "p"));
    CHECK_THROWS_AS(witness(g, u, v), NotAnomalous);
    const auto c = *g.find(figures::word_of(fig, "c"));
    CHECK_THROWS_AS(witness(g, c, *g.find(figures::word_of(fig, "l"))), NotAnomalous);
  }

  TEST_CASE("witness of a rank 13 anomaly in C3") {
    const auto g = generate({Family::C, 3}, {4, 3, 1});
    const Interval iv(g, 37, 1479);
    CHECK(iv.rank() == 13);
    CHECK(iv.size() == 95);
    CHECK(iv.edge_count() == 164);
    CHECK(count_chains(iv) == 880);
    CHECK(mobius_brute(iv) == 2);
    const auto w = witness(g, 37, 1479);
    CHECK(is_anomalous(w.minimal.mobius));
    // No anomalous subinterval of smaller rank exists.
    const Reachability reach(iv);
    for (LocalId a = 0; a < iv.size(); ++a)
      for (LocalId b = a; b < iv.size(); ++b) {
        if (!reach.leq(a, b) || iv.level(b) - iv.level(a) >= w.minimal.rank) continue;
        CHECK(!is_anomalous(mobius_brute(Interval(g, iv.member(a), iv.member(b)))));
      }
    const auto fig = figures::figure11();
    bool found = false;
    for (const auto& s : w.unexplained) {
      std::vector<Edge> local;
      for (const Edge& e : s.edges) {
        const auto from = std::find(s.members.begin(), s.members.end(), e.from) - s.members.begin();
        const auto to = std::find(s.members.begin(), s.members.end(), e.to) - s.members.begin();
        local.push_back({static_cast<VertexId>(from), static_cast<VertexId>(to), e.color});
      }
      found = found || colored_isomorphic(s.members.size(), local, fig.nodes.size(),
                                          figures::figure_edges(fig));
    }
    CHECK(found);
  }

  TEST_CASE("snapshots list chains in lex order") {
    const auto g = generate({Family::A, 4}, {3, 1});
    const auto fig = figures::figure1();
    const Interval iv(g, *g.find(figures::word_of(fig, "a")), *g.find(figures::word_of(fig, "p")));
    const auto s = snapshot(iv, true);
    CHECK(s.mobius == -1);
    CHECK(s.members.size() == 16);
    CHECK(s.edges.size() == 24);
    REQUIRE(s.chain_labels.size() == 10);
    CHECK(std::is_sorted(s.chain_labels.begin(), s.chain_labels.end()));
    CHECK(snapshot(iv, true, 5).chain_labels.empty());
  }
}
