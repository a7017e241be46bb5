#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystalmorse/morse.hpp"

namespace crystalmorse {

enum class ScanMode { BruteOnly, CrossCheck, AnomaliesOnly };

ScanMode parse_scan_mode(const std::string& s);
std::string to_string(ScanMode m);

struct ScanConfig {
  int max_interval_rank = 6;
  ScanMode mode = ScanMode::AnomaliesOnly;
  MorseOptions morse;
  /// Largest interval (members) for which an anomaly witness is extracted.
  std::size_t witness_member_cap = 5'000;
  /// Stop after this many intervals have been examined (0: no limit); the
  /// report is then marked truncated.
  std::uint64_t interval_budget = 0;
  unsigned workers = 1;
};

/// Subinterval data with colored edges, in graph vertex ids.
struct IntervalSnapshot {
  VertexId u = 0;
  VertexId v = 0;
  int rank = 0;
  std::int64_t mobius = 0;
  std::vector<VertexId> members;
  std::vector<Edge> edges;
  std::vector<std::vector<Color>> chain_labels;  // all maximal chains, lex order
};

struct AnomalyRecord {
  VertexId u = 0;
  VertexId v = 0;
  int rank = 0;
  std::int64_t mobius_brute = 0;
  std::optional<std::int64_t> predicted_mobius;
  std::optional<Certification> certified;
  /// Brute and Morse values disagree on a certified interval.
  bool disagreement = false;
  std::optional<IntervalSnapshot> witness;
};

struct ScanStats {
  std::uint64_t intervals = 0;
  std::uint64_t certified = 0;
  std::uint64_t sampled = 0;
  std::uint64_t uncertified = 0;
  std::uint64_t max_fully_covered_on_certified = 0;
};

struct ScanReport {
  static constexpr int kSchemaVersion = 1;
  CartanType cartan;
  Weight lambda;
  ScanConfig config;
  bool truncated = false;
  ScanStats stats;
  std::vector<AnomalyRecord> records;  // sorted by (u, v)
};

bool is_anomalous(std::int64_t mu);

/// Enumerates all u < v with rank(u, v) <= max_interval_rank and records
/// intervals whose Mobius value lies outside {-1, 0, 1} (plus brute/Morse
/// disagreements in cross_check mode). Output is independent of workers.
ScanReport scan(const CrystalGraph& g, const ScanConfig& config);

struct WitnessReport {
  /// Minimal anomalous subinterval: smallest rank, then fewest members,
  /// then smallest (u, v).
  IntervalSnapshot minimal;
  /// Skipped intervals of chains of the minimal witness that match no
  /// Stembridge or Sternberg template, as subintervals (deduplicated).
  std::vector<IntervalSnapshot> unexplained;
};

/// Throws NotAnomalous if mu(u, v) lies in {-1, 0, 1}.
WitnessReport witness(const CrystalGraph& g, VertexId u, VertexId v,
                      std::uint64_t chain_cap = 200'000);

IntervalSnapshot snapshot(const Interval& iv, bool with_chains, std::uint64_t chain_cap = 200'000);

}  // namespace crystalmorse
