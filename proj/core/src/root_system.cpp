#include "crystalmorse/root_system.hpp"

#include <numeric>

#include "crystalmorse/errors.hpp"

namespace crystalmorse {

namespace {

int dot(const Weight& a, const Weight& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

void check_dim(const Weight& w, const CartanType& t) {
  if (static_cast<int>(w.size()) != t.ambient_dim())
    throw InvalidArgument("weight has " + std::to_string(w.size()) +
                          " coordinates, expected " +
                          std::to_string(t.ambient_dim()) + " for " + t.name());
}

}  // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  int min_rank = 1;
  if (family == Family::B || family == Family::C) min_rank = 2;
  if (family == Family::D) min_rank = 3;
  if (rank < min_rank)
    throw InvalidArgument("rank " + std::to_string(rank) + " too small for type " +
                          std::string(1, family_char(family)));
}

std::string CartanType::name() const {
  return std::string(1, family_char(family_)) + std::to_string(rank_);
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw InvalidArgument("unknown Cartan family '" + s + "'");
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

std::vector<Weight> simple_roots(const CartanType& t) {
  const int n = t.rank();
  const int m = t.ambient_dim();
  std::vector<Weight> roots(n, Weight(m, 0));
  for (int i = 0; i < n; ++i) {
    if (i + 1 < m) {
      roots[i][i] = 1;
      roots[i][i + 1] = -1;
    }
  }
  Weight& last = roots[n - 1];
  switch (t.family()) {
    case Family::A:
      break;
    case Family::B:
      last.assign(m, 0);
      last[n - 1] = 1;
      break;
    case Family::C:
      last.assign(m, 0);
      last[n - 1] = 2;
      break;
    case Family::D:
      last.assign(m, 0);
      last[n - 2] = 1;
      last[n - 1] = 1;
      break;
  }
  return roots;
}

int pair_with_coroot(const Weight& w, Color i, const CartanType& t) {
  if (i < 1 || i > t.rank())
    throw InvalidArgument("color " + std::to_string(i) + " out of range");
  check_dim(w, t);
  const Weight alpha = simple_roots(t)[i - 1];
  const int num = 2 * dot(w, alpha);
  const int den = dot(alpha, alpha);
  if (num % den != 0)
    throw NotInRootLattice("weight does not pair integrally with coroot");
  return num / den;
}

Matrix cartan_matrix(const CartanType& t) {
  const auto roots = simple_roots(t);
  const int n = t.rank();
  Matrix a(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = pair_with_coroot(roots[i], j + 1, t);
  return a;
}

RootMultiset decompose_signed(const Weight& diff, const CartanType& t) {
  check_dim(diff, t);
  const int n = t.rank();
  RootMultiset c(n, 0);
  // Partial sums solve every coordinate except the last one or two.
  int partial = 0;
  for (int k = 0; k < n; ++k) {
    partial += diff[k];
    c[k] = partial;
  }
  auto halve = [](int x) {
    if (x % 2 != 0) throw NotInRootLattice("odd coefficient in root solve");
    return x / 2;
  };
  if (t.family() == Family::C) {
    c[n - 1] = halve(c[n - 1]);
  } else if (t.family() == Family::D) {
    const int s = diff[n - 2] + (n >= 3 ? c[n - 3] : 0);
    c[n - 1] = halve(s + diff[n - 1]);
    c[n - 2] = halve(s - diff[n - 1]);
  }
  const auto roots = simple_roots(t);
  Weight rebuilt(diff.size(), 0);
  for (int k = 0; k < n; ++k)
    for (std::size_t m = 0; m < rebuilt.size(); ++m) rebuilt[m] += c[k] * roots[k][m];
  if (rebuilt != diff) throw NotInRootLattice("weight difference is not in the root lattice");
  return c;
}

RootMultiset decompose(const Weight& diff, const CartanType& t) {
  RootMultiset c = decompose_signed(diff, t);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] < 0)
      throw NegativeMultiplicity("alpha_" + std::to_string(k + 1) + " has multiplicity " +
                                 std::to_string(c[k]));
  return c;
}

Weight normalize_dominant(const Weight& lambda, const CartanType& t) {
  Weight w = lambda;
  const int m = t.ambient_dim();
  // Trailing zeros of a partition may be omitted.
  if (static_cast<int>(w.size()) < m) w.resize(m, 0);
  if (static_cast<int>(w.size()) != m)
    throw NonDominantWeight("weight has " + std::to_string(lambda.size()) +
                            " entries, expected at most " + std::to_string(m));
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] < 0) throw NonDominantWeight("negative entry in dominant weight");
    if (k > 0 && w[k] > w[k - 1]) throw NonDominantWeight("weight is not weakly decreasing");
  }
  return w;
}

Weight add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Weight subtract(const Weight& a, const Weight& b) {
  Weight r(a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

}  // namespace crystalmorse
