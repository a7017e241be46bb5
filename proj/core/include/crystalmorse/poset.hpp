#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "crystalmorse/crystal.hpp"

namespace crystalmorse {

using LocalId = std::uint32_t;

/// Cover relation inside an interval, stored with local member indices.
struct Cover {
  Color color;
  LocalId target;
};

/// Closed interval [u, v] of a crystal graph. Members are sorted by level
/// and then by vertex id, so the bottom has local index 0 and the top has the
/// last index. The graph must outlive the interval.
class Interval {
 public:
  /// Throws NotComparable if v is not reachable from u.
  Interval(const CrystalGraph& g, VertexId u, VertexId v);

  const CrystalGraph& graph() const { return *graph_; }
  VertexId bottom() const { return members_.front(); }
  VertexId top() const { return members_.back(); }
  int rank() const { return rank_; }
  std::size_t size() const { return members_.size(); }
  std::size_t edge_count() const { return up_targets_.size(); }

  const std::vector<VertexId>& members() const { return members_; }
  VertexId member(LocalId k) const { return members_[k]; }
  std::optional<LocalId> local(VertexId x) const;
  bool contains(VertexId x) const { return index_.count(x) != 0; }
  /// Rank of a member above the bottom.
  int level(LocalId k) const { return levels_[k]; }

  /// Up covers sorted by color; down covers sorted by color.
  std::span<const Cover> up(LocalId k) const {
    return {up_targets_.data() + up_offsets_[k], up_offsets_[k + 1] - up_offsets_[k]};
  }
  std::span<const Cover> down(LocalId k) const {
    return {down_targets_.data() + down_offsets_[k], down_offsets_[k + 1] - down_offsets_[k]};
  }

  /// decompose(wt(u) - wt(v)).
  RootMultiset label_multiset() const;
  std::vector<Edge> edges() const;

 private:
  const CrystalGraph* graph_;
  int rank_ = 0;
  std::vector<VertexId> members_;
  std::vector<int> levels_;
  std::unordered_map<VertexId, LocalId> index_;
  std::vector<std::size_t> up_offsets_, down_offsets_;
  std::vector<Cover> up_targets_, down_targets_;
};

inline Interval interval(const CrystalGraph& g, VertexId u, VertexId v) {
  return Interval(g, u, v);
}

/// Maximal chain u = x_0 < x_1 < ... < x_k = v with its edge labels.
struct SaturatedChain {
  std::vector<VertexId> vertices;
  std::vector<Color> labels;
};

/// Streams the maximal chains of an interval in ascending lexicographic
/// order of label sequences, by depth-first search taking smallest labels
/// first. Nothing is materialized beyond the current path.
class ChainStream {
 public:
  explicit ChainStream(const Interval& iv);

  /// Advances to the next chain; false when exhausted.
  bool next();
  /// Current chain as local indices (rank + 1 entries) and labels.
  const std::vector<LocalId>& local_vertices() const { return path_; }
  const std::vector<Color>& labels() const { return labels_; }
  SaturatedChain chain() const;

 private:
  void descend();

  const Interval* iv_;
  std::vector<LocalId> path_;
  std::vector<std::size_t> choice_;
  std::vector<Color> labels_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<SaturatedChain> saturated_chains(const Interval& iv);

/// Number of maximal chains, saturating at UINT64_MAX.
std::uint64_t count_chains(const Interval& iv);

/// Down-sets of every member inside the interval (bit k set iff member k is
/// below or equal).
class Reachability {
 public:
  explicit Reachability(const Interval& iv);
  bool leq(LocalId a, LocalId b) const { return below_[b].test(a); }
  const boost::dynamic_bitset<>& below(LocalId b) const { return below_[b]; }

 private:
  std::vector<boost::dynamic_bitset<>> below_;
};

/// mu(bottom, t) for every member t, from the down-cover lists of a region
/// whose entries are topologically sorted with the bottom at index 0.
std::vector<std::int64_t> mobius_from_bottom(const std::vector<std::vector<LocalId>>& down_covers);

/// Exact Mobius value mu(u, v) by the defining recursion.
std::int64_t mobius_brute(const Interval& iv);

/// Reduced Euler characteristic of the order complex of the open interval,
/// by alternating chain counts. Throws OracleCapExceeded above cap members.
std::int64_t euler_characteristic_oracle(const Interval& iv, std::size_t cap = 4000);

std::vector<VertexId> minimal_upper_bounds(const CrystalGraph& g, VertexId x, VertexId y);
std::vector<VertexId> maximal_lower_bounds(const CrystalGraph& g, VertexId x, VertexId y);

struct LatticeWitness {
  VertexId x;
  VertexId y;
  bool upper;  // true: several minimal upper bounds; false: lower bounds
  std::vector<VertexId> bounds;
};

/// Empty result iff every pair has a unique join and meet. Pairs are visited
/// in id order and the first failure is returned. Throws OracleCapExceeded
/// for graphs above cap vertices.
std::optional<LatticeWitness> lattice_check(const CrystalGraph& g, std::size_t cap = 30000);

/// Edge-colored isomorphism of two rooted, colored DAGs given by edge lists
/// over vertices 0..n-1 with unique sources. Exploits that out-colors at a
/// vertex are distinct.
bool colored_isomorphic(std::size_t n1, const std::vector<Edge>& e1, std::size_t n2,
                        const std::vector<Edge>& e2);

}  // namespace crystalmorse
