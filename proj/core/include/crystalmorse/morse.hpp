#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystalmorse/poset.hpp"
#include "crystalmorse/relations.hpp"

namespace crystalmorse {

/// Consecutive interior ranks lo..hi of a chain (1 <= lo <= hi <= rank-1).
struct SkippedInterval {
  int lo;
  int hi;
  int height() const { return hi - lo + 1; }
  friend auto operator<=>(const SkippedInterval&, const SkippedInterval&) = default;
};

struct IntervalSystem {
  int rank = 0;
  std::vector<SkippedInterval> msis;         // inclusion-minimal, sorted
  std::vector<SkippedInterval> j_intervals;  // filled by truncate
};

enum class TemplateId { Deg2, Deg4, Deg5i, Deg5iii, Deg7ii, Deg7iv };
std::string to_string(TemplateId id);

enum class Certification { No, Yes, Sampled };
std::string to_string(Certification c);

struct MorseOptions {
  /// Chains examined exhaustively for certification; above it a seeded
  /// sample of sample_size chains is examined instead.
  std::uint64_t chain_cap = 200'000;
  std::uint64_t sample_size = 2'000;
  std::uint64_t seed = 0x5eed;
  /// Cap for the exhaustive fully covered chain search.
  std::uint64_t exhaustive_cap = 200'000;
};

struct MorseResult {
  VertexId u = 0;
  VertexId v = 0;
  int rank = 0;
  std::optional<SaturatedChain> fully_covered_chain;
  std::vector<SkippedInterval> j_intervals;
  int j_count = 0;
  /// (-1)^(j_count-1) for the fully covered chain, 0 without one. When the
  /// interval is not certified and several chains are fully covered, the
  /// signed sum over all of them.
  std::int64_t predicted_mobius = 0;
  std::size_t fully_covered_count = 0;
  Certification certified = Certification::No;
  bool used_greedy = false;
};

/// Per-interval Morse machinery with cached reachability.
class MorseAnalyzer {
 public:
  explicit MorseAnalyzer(const Interval& iv);

  const Interval& interval() const { return *iv_; }
  const Reachability& reachability() const { return reach_; }

  /// Minimal skipped intervals of a maximal chain given by local indices.
  IntervalSystem msi_system(const std::vector<LocalId>& chain,
                            const std::vector<Color>& labels) const;
  IntervalSystem msi_system(const SaturatedChain& c) const;

  std::optional<TemplateId> match_template(const SkippedInterval& msi,
                                           const std::vector<LocalId>& chain,
                                           const std::vector<Color>& labels) const;
  std::optional<TemplateId> match_template(const SkippedInterval& msi,
                                           const SaturatedChain& c) const;

  /// Every MSI of every maximal chain matches a template.
  Certification certify(const MorseOptions& opts = {}) const;

  /// Greedy construction of the candidate fully covered chain.
  std::optional<SaturatedChain> greedy_chain() const;

  std::vector<SaturatedChain> fully_covered_chains_exhaustive(std::uint64_t cap) const;

  /// Sum of (-1)^(|J|-1) over all fully covered chains: the reduced Euler
  /// characteristic read off the critical cells of the lexicographic Morse
  /// function.
  std::int64_t lexicographic_morse_euler(std::uint64_t cap) const;

  MorseResult morse_mobius(const MorseOptions& opts = {}) const;

 private:
  SaturatedChain to_chain(const std::vector<LocalId>& chain,
                          const std::vector<Color>& labels) const;

  const Interval* iv_;
  Reachability reach_;
};

IntervalSystem msi_system(const SaturatedChain& c, const Interval& iv);
IntervalSystem truncate(IntervalSystem sys);
bool is_fully_covered(const IntervalSystem& sys);
std::optional<TemplateId> match_template(const Interval& iv, const SkippedInterval& msi,
                                         const SaturatedChain& c);
std::optional<SaturatedChain> greedy_chain(const Interval& iv);
std::vector<SaturatedChain> fully_covered_chains_exhaustive(const Interval& iv,
                                                            std::uint64_t cap = 200'000);
MorseResult morse_mobius(const Interval& iv, const MorseOptions& opts = {});

/// Reference MSI computation straight from the definition: for each
/// lex-earlier maximal chain, the smallest rank interval containing every
/// interior rank where it differs; the inclusion-minimal such intervals.
/// Throws OracleCapExceeded above cap chains.
std::vector<SkippedInterval> msi_bruteforce(const Interval& iv, const SaturatedChain& c,
                                            std::uint64_t cap = 5'000);

/// Operator word for a chain: labels in application order written as the
/// composition f_{l_k} ... f_{l_1}.
std::string operator_word(const std::vector<Color>& labels);

}  // namespace crystalmorse
