#pragma once

#include <string>
#include <vector>

namespace crystalmorse {

enum class Family { A, B, C, D };

using Color = int;  // crystal operator index, 1-based
using Weight = std::vector<int>;         // coordinates in the ambient lattice
using RootMultiset = std::vector<int>;   // c_1..c_n, multiplicity of alpha_i
using Matrix = std::vector<std::vector<int>>;

class CartanType {
 public:
  /// Throws InvalidArgument unless n >= 1 (A), n >= 2 (B, C), n >= 3 (D).
  CartanType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// Dimension of the ambient lattice: n+1 for type A, n otherwise.
  int ambient_dim() const { return family_ == Family::A ? rank_ + 1 : rank_; }
  bool doubly_laced() const {
    return family_ == Family::B || family_ == Family::C;
  }
  std::string name() const;  // e.g. "C3"

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  Family family_;
  int rank_;
};

Family parse_family(const std::string& s);
char family_char(Family f);

/// a_ij = <alpha_i, alpha_j^vee>, row i, column j (0-based storage).
Matrix cartan_matrix(const CartanType& t);

std::vector<Weight> simple_roots(const CartanType& t);

/// 2(w, alpha_i) / (alpha_i, alpha_i) for color i in 1..n.
int pair_with_coroot(const Weight& w, Color i, const CartanType& t);

/// Unique c with diff = sum c_i alpha_i. Throws NotInRootLattice or
/// NegativeMultiplicity.
RootMultiset decompose(const Weight& diff, const CartanType& t);

/// Same solve without the sign check; throws NotInRootLattice only.
RootMultiset decompose_signed(const Weight& diff, const CartanType& t);

/// Normalizes a dominant weight given as a partition: checks weakly
/// decreasing nonnegative entries and pads with zeros to the ambient
/// dimension. Throws NonDominantWeight.
Weight normalize_dominant(const Weight& lambda, const CartanType& t);

Weight add(const Weight& a, const Weight& b);
Weight subtract(const Weight& a, const Weight& b);

}  // namespace crystalmorse
