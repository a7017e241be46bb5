#include "crystalmorse/scan.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

ScanMode parse_scan_mode(const std::string& s) {
  if (s == "brute_only") return ScanMode::BruteOnly;
  if (s == "cross_check") return ScanMode::CrossCheck;
  if (s == "anomalies_only") return ScanMode::AnomaliesOnly;
  throw InvalidArgument("unknown scan mode '" + s + "'");
}

std::string to_string(ScanMode m) {
  switch (m) {
    case ScanMode::BruteOnly: return "brute_only";
    case ScanMode::CrossCheck: return "cross_check";
    case ScanMode::AnomaliesOnly: return "anomalies_only";
  }
  return "?";
}

bool is_anomalous(std::int64_t mu) { return mu < -1 || mu > 1; }

IntervalSnapshot snapshot(const Interval& iv, bool with_chains, std::uint64_t chain_cap) {
  IntervalSnapshot s;
  s.u = iv.bottom();
  s.v = iv.top();
  s.rank = iv.rank();
  s.mobius = mobius_brute(iv);
  s.members = iv.members();
  std::sort(s.members.begin(), s.members.end());
  s.edges = iv.edges();
  if (with_chains && count_chains(iv) <= chain_cap) {
    ChainStream cs(iv);
    while (cs.next()) s.chain_labels.push_back(cs.labels());
  }
  return s;
}

namespace {

// Forward region of u up to a rank bound, sorted by level then id, with
// down covers restricted to the region.
struct Region {
  std::vector<VertexId> vertices;
  std::vector<std::vector<LocalId>> down;
};

Region forward_region(const CrystalGraph& g, VertexId u, int max_rank,
                     std::vector<LocalId>& stamp_index, std::vector<std::uint32_t>& stamp,
                     std::uint32_t mark) {
  Region r;
  const int top = g.level(u) + max_rank;
  r.vertices.push_back(u);
  stamp[u] = mark;
  for (std::size_t head = 0; head < r.vertices.size(); ++head) {
    const VertexId x = r.vertices[head];
    if (g.level(x) >= top) continue;
    for (Color i = 1; i <= g.rank(); ++i) {
      const VertexId y = g.f(x, i);
      if (y != kNoVertex && stamp[y] != mark) {
        stamp[y] = mark;
        r.vertices.push_back(y);
      }
    }
  }
  std::sort(r.vertices.begin() + 1, r.vertices.end(), [&](VertexId a, VertexId b) {
    return g.level(a) != g.level(b) ? g.level(a) < g.level(b) : a < b;
  });
  for (std::size_t k = 0; k < r.vertices.size(); ++k) stamp_index[r.vertices[k]] = static_cast<LocalId>(k);
  r.down.resize(r.vertices.size());
  for (std::size_t k = 1; k < r.vertices.size(); ++k)
    for (Color i = 1; i <= g.rank(); ++i) {
      const VertexId y = g.e(r.vertices[k], i);
      if (y != kNoVertex && stamp[y] == mark) r.down[k].push_back(stamp_index[y]);
    }
  return r;
}

struct UResult {
  std::vector<AnomalyRecord> records;
  ScanStats stats;
  bool truncated = false;
};

void examine(const CrystalGraph& g, VertexId u, VertexId t, std::int64_t mu, const ScanConfig& cfg,
             UResult& out) {
  const int rank = g.level(t) - g.level(u);
  ++out.stats.intervals;
  const bool anomalous = is_anomalous(mu);
  if (cfg.mode == ScanMode::BruteOnly) {
    if (anomalous) out.records.push_back({u, t, rank, mu, std::nullopt, std::nullopt, false, std::nullopt});
    return;
  }
  if (cfg.mode == ScanMode::AnomaliesOnly && !anomalous) return;

  const Interval iv(g, u, t);
  AnomalyRecord rec{u, t, rank, mu, std::nullopt, std::nullopt, false, std::nullopt};
  try {
    const MorseAnalyzer an(iv);
    const MorseResult res = an.morse_mobius(cfg.morse);
    rec.predicted_mobius = res.predicted_mobius;
    rec.certified = res.certified;
    switch (res.certified) {
      case Certification::Yes: ++out.stats.certified; break;
      case Certification::Sampled: ++out.stats.sampled; break;
      case Certification::No: ++out.stats.uncertified; break;
    }
    if (cfg.mode == ScanMode::CrossCheck && res.certified != Certification::No) {
      const auto all = an.fully_covered_chains_exhaustive(cfg.morse.exhaustive_cap);
      out.stats.max_fully_covered_on_certified =
          std::max<std::uint64_t>(out.stats.max_fully_covered_on_certified, all.size());
      const bool greedy_matches =
          all.size() == (res.fully_covered_chain ? 1u : 0u) &&
          (all.empty() || all.front().labels == res.fully_covered_chain->labels);
      if (res.predicted_mobius != mu || !greedy_matches) rec.disagreement = true;
    }
  } catch (const OracleCapExceeded&) {
    out.truncated = true;
  }
  if (anomalous && iv.size() <= cfg.witness_member_cap) {
    try {
      rec.witness = witness(g, u, t, cfg.morse.chain_cap).minimal;
    } catch (const OracleCapExceeded&) {
      out.truncated = true;
    }
  }
  if (anomalous || rec.disagreement) out.records.push_back(std::move(rec));
}

}  // namespace

ScanReport scan(const CrystalGraph& g, const ScanConfig& config) {
  if (config.max_interval_rank < 1) throw InvalidArgument("max_interval_rank must be >= 1");
  ScanReport report{g.cartan(), g.lambda(), config, false, {}, {}};
  const std::size_t n = g.size();
  std::vector<UResult> results(n);
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    std::vector<LocalId> index(n, 0);
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t mark = 0;
    for (std::size_t u = next++; u < n; u = next++) {
      try {
        const Region region = forward_region(g, static_cast<VertexId>(u), config.max_interval_rank,
                                             index, stamp, ++mark);
        const auto mu = mobius_from_bottom(region.down);
        for (std::size_t k = 1; k < region.vertices.size(); ++k)
          examine(g, static_cast<VertexId>(u), region.vertices[k], mu[k], config, results[u]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  const unsigned workers = std::max(1u, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t u = 0; u < n; ++u) {
    UResult& r = results[u];
    if (config.interval_budget &&
        report.stats.intervals + r.stats.intervals > config.interval_budget) {
      report.truncated = true;
      break;
    }
    std::sort(r.records.begin(), r.records.end(),
              [](const AnomalyRecord& a, const AnomalyRecord& b) { return a.v < b.v; });
    report.stats.intervals += r.stats.intervals;
    report.stats.certified += r.stats.certified;
    report.stats.sampled += r.stats.sampled;
    report.stats.uncertified += r.stats.uncertified;
    report.stats.max_fully_covered_on_certified =
        std::max(report.stats.max_fully_covered_on_certified, r.stats.max_fully_covered_on_certified);
    report.truncated = report.truncated || r.truncated;
    for (auto& rec : r.records) report.records.push_back(std::move(rec));
  }
  return report;
}

WitnessReport witness(const CrystalGraph& g, VertexId u, VertexId v, std::uint64_t chain_cap) {
  const Interval iv(g, u, v);
  if (!is_anomalous(mobius_brute(iv)))
    throw NotAnomalous("mu(" + std::to_string(u) + "," + std::to_string(v) +
                       ") lies in {-1, 0, 1}");
  // Mobius values of every subinterval, one bottom at a time.
  struct Candidate {
    int rank;
    std::size_t members;
    VertexId x, y;
    auto key() const { return std::tuple{rank, members, x, y}; }
  };
  std::vector<std::pair<VertexId, VertexId>> anomalous;
  int best_rank = iv.rank() + 1;
  const Reachability reach(iv);
  for (LocalId a = 0; a < iv.size(); ++a) {
    std::vector<LocalId> region;
    std::vector<LocalId> pos(iv.size(), kNoVertex);
    for (LocalId b = a; b < iv.size(); ++b)
      if (reach.leq(a, b)) {
        pos[b] = static_cast<LocalId>(region.size());
        region.push_back(b);
      }
    std::vector<std::vector<LocalId>> down(region.size());
    for (std::size_t k = 1; k < region.size(); ++k)
      for (const Cover& c : iv.down(region[k]))
        if (pos[c.target] != kNoVertex) down[k].push_back(pos[c.target]);
    const auto mu = mobius_from_bottom(down);
    for (std::size_t k = 1; k < region.size(); ++k) {
      if (!is_anomalous(mu[k])) continue;
      const int rank = iv.level(region[k]) - iv.level(a);
      if (rank > best_rank) continue;
      if (rank < best_rank) {
        best_rank = rank;
        anomalous.clear();
      }
      anomalous.push_back({iv.member(a), iv.member(region[k])});
    }
  }
  std::optional<Candidate> best;
  for (auto [x, y] : anomalous) {
    const Interval sub(g, x, y);
    const Candidate c{sub.rank(), sub.size(), x, y};
    if (!best || c.key() < best->key()) best = c;
  }
  WitnessReport report;
  const Interval minimal(g, best->x, best->y);
  report.minimal = snapshot(minimal, true, chain_cap);

  // Spans of skipped intervals that no known relation explains.
  const MorseAnalyzer an(minimal);
  std::set<std::pair<VertexId, VertexId>> spans;
  if (count_chains(minimal) <= chain_cap) {
    ChainStream cs(minimal);
    while (cs.next()) {
      const auto& path = cs.local_vertices();
      const IntervalSystem sys = an.msi_system(path, cs.labels());
      for (const auto& m : sys.msis)
        if (!an.match_template(m, path, cs.labels()))
          spans.insert({minimal.member(path[m.lo - 1]), minimal.member(path[m.hi + 1])});
    }
  }
  for (auto [x, y] : spans) report.unexplained.push_back(snapshot(Interval(g, x, y), true, chain_cap));
  std::stable_sort(report.unexplained.begin(), report.unexplained.end(),
                   [](const IntervalSnapshot& a, const IntervalSnapshot& b) {
                     return std::tuple{a.rank, a.members.size(), a.u, a.v} <
                            std::tuple{b.rank, b.members.size(), b.u, b.v};
                   });
  return report;
}

}  // namespace crystalmorse
