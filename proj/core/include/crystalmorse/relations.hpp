#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalmorse/crystal.hpp"

namespace crystalmorse {

enum class RelationTag { Deg2Stembridge, Deg4Stembridge, Deg5Sternberg, Deg7Sternberg, NotImplied };

std::string to_string(RelationTag tag);

struct RelationKind {
  RelationTag tag = RelationTag::NotImplied;
  /// For degree 5 and 7: the color occurring more often in each operator
  /// word (three times of five, four times of seven). 0 otherwise.
  Color orientation = 0;
  friend bool operator==(const RelationKind&, const RelationKind&) = default;
};

/// Label paths (application order) whose endpoints coincide for a relation.
/// For Deg5/Deg7, a is the color used fewer times and b the other one.
/// Deg2/Deg4 use (a, b) symmetrically.
std::vector<std::vector<Color>> relation_paths(RelationTag tag, Color a, Color b);

/// Common endpoint of all relation paths from x, if every path is defined
/// and they agree.
std::optional<VertexId> relation_top(const CrystalGraph& g, VertexId x, RelationTag tag,
                                     Color a, Color b);

/// Tests the identities of degree 2, 4, 5, 7 in that order; degree 5 and 7
/// are only tried for {i, j} = {n-1, n} in types B and C. Throws
/// OperatorUndefinedAt if f_i(x) or f_j(x) is undefined.
RelationKind classify_pair(const CrystalGraph& g, VertexId x, Color i, Color j);

/// Relation kinds that can occur between colors i and j of the given type.
std::vector<RelationTag> allowed_kinds(const CartanType& t, Color i, Color j);

struct RelationRecord {
  VertexId x;
  Color i;
  Color j;
  RelationKind kind;
  std::vector<VertexId> witness;  // vertices on the relation paths, in path order
};

/// classify_pair for every x and i < j with f_i(x), f_j(x) defined.
/// NotImplied records first, then sorted by (x, i, j).
std::vector<RelationRecord> classify_all(const CrystalGraph& g, unsigned workers = 1);

struct DifferenceStats {
  int delta_i_delta_j;  // defined when e_i(x) is
  int delta_i_eps_j;
  int nabla_i_eps_j;    // defined when f_i(x) is
  int nabla_i_delta_j;
};

/// String data in the sign convention of the axioms: rise counts f-steps,
/// depth is minus the number of e-steps.
int rise(const CrystalGraph& g, VertexId x, Color j);
int depth(const CrystalGraph& g, VertexId x, Color j);
DifferenceStats difference_stats(const CrystalGraph& g, VertexId x, Color i, Color j);

struct AxiomViolation {
  std::string axiom;  // "S1" ... "S6'", "A1", "A2"
  VertexId x;
  Color i;
  Color j;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  /// S6' is checked as an equality between the two differences at the
  /// meeting vertex, without a prescribed value.
  bool s6_prime_equality_only = true;
  bool clean() const { return violations.empty(); }
};

AxiomReport verify_stembridge_axioms(const CrystalGraph& g);

}  // namespace crystalmorse
