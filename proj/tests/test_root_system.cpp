#include <doctest.h>

#include <random>

#include "crystalmorse/errors.hpp"
#include "crystalmorse/root_system.hpp"

using namespace crystalmorse;

namespace {

// Cartan matrices written down from the Dynkin diagrams, independently of
// the root coordinates used by the library.
Matrix dynkin_cartan(Family f, int n) {
  Matrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  // Row i holds <alpha_i, alpha_j^vee>.
  if (f == Family::B) a[n - 2][n - 1] = -2;
  if (f == Family::C) a[n - 1][n - 2] = -2;
  if (f == Family::D) {
    a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
    a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
  }
  return a;
}

}  // namespace

TEST_SUITE("root_system") {
  TEST_CASE("rank bounds per family") {
    CHECK_NOTHROW(CartanType(Family::A, 1));
    CHECK_THROWS_AS(CartanType(Family::A, 0), InvalidArgument);
    CHECK_THROWS_AS(CartanType(Family::B, 1), InvalidArgument);
    CHECK_THROWS_AS(CartanType(Family::C, 1), InvalidArgument);
    CHECK_THROWS_AS(CartanType(Family::D, 2), InvalidArgument);
    CHECK(CartanType(Family::D, 3).name() == "D3");
    CHECK(CartanType(Family::A, 4).ambient_dim() == 5);
    CHECK(CartanType(Family::C, 3).ambient_dim() == 3);
    CHECK(parse_family("c") == Family::C);
    CHECK_THROWS_AS(parse_family("E"), InvalidArgument);
  }

  TEST_CASE("small Cartan matrices") {
    CHECK(cartan_matrix({Family::A, 2}) == Matrix{{2, -1}, {-1, 2}});
    CHECK(cartan_matrix({Family::B, 2}) == Matrix{{2, -2}, {-1, 2}});
    CHECK(cartan_matrix({Family::C, 2}) == Matrix{{2, -1}, {-2, 2}});
    CHECK(cartan_matrix({Family::D, 3}) == Matrix{{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}});
  }

  TEST_CASE("Cartan matrices agree with the Dynkin diagrams") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      for (int n = 3; n <= 7; ++n) {
        CAPTURE(family_char(f));
        CAPTURE(n);
        CHECK(cartan_matrix({f, n}) == dynkin_cartan(f, n));
      }
    }
  }

  TEST_CASE("Cartan entries are pairings of simple roots with coroots") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      const CartanType t(f, 4);
      const auto roots = simple_roots(t);
      const auto a = cartan_matrix(t);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(a[i][j] == pair_with_coroot(roots[i], j + 1, t));
    }
  }

  TEST_CASE("simple roots in ambient coordinates") {
    CHECK(simple_roots({Family::A, 2}) == std::vector<Weight>{{1, -1, 0}, {0, 1, -1}});
    CHECK(simple_roots({Family::B, 2}) == std::vector<Weight>{{1, -1}, {0, 1}});
    CHECK(simple_roots({Family::C, 2}) == std::vector<Weight>{{1, -1}, {0, 2}});
    CHECK(simple_roots({Family::D, 3}) ==
          std::vector<Weight>{{1, -1, 0}, {0, 1, -1}, {0, 1, 1}});
  }

  TEST_CASE("pairing with coroots") {
    const CartanType c2(Family::C, 2);
    CHECK(pair_with_coroot({3, 1}, 1, c2) == 2);
    CHECK(pair_with_coroot({3, 1}, 2, c2) == 1);
    const CartanType b2(Family::B, 2);
    CHECK(pair_with_coroot({3, 1}, 2, b2) == 2);
    CHECK_THROWS_AS(pair_with_coroot({1, 0}, 3, b2), InvalidArgument);
    CHECK_THROWS_AS(pair_with_coroot({1, 0, 0}, 1, b2), InvalidArgument);
  }

  TEST_CASE("decompose known differences") {
    CHECK(decompose({1, 0, -1}, {Family::A, 2}) == RootMultiset{1, 1});
    CHECK(decompose({0, 0, 0}, {Family::A, 2}) == RootMultiset{0, 0});
    CHECK(decompose({1, 1}, {Family::C, 2}) == RootMultiset{1, 1});
    CHECK(decompose({2, 0}, {Family::C, 2}) == RootMultiset{2, 1});
    CHECK(decompose({1, 1}, {Family::B, 2}) == RootMultiset{1, 2});
    CHECK(decompose({1, 1, 0}, {Family::D, 3}) == RootMultiset{1, 1, 1});
    CHECK(decompose({0, 2, 0}, {Family::D, 3}) == RootMultiset{0, 1, 1});
    CHECK(decompose({1, 0, 1}, {Family::D, 3}) == RootMultiset{1, 0, 1});
  }

  TEST_CASE("decompose rejects weights outside the root lattice") {
    CHECK_THROWS_AS(decompose({1, 0, 0}, {Family::A, 2}), NotInRootLattice);
    CHECK_THROWS_AS(decompose({1, 0}, {Family::C, 2}), NotInRootLattice);
    CHECK_THROWS_AS(decompose({1, 0, 0}, {Family::D, 3}), NotInRootLattice);
    CHECK_THROWS_AS(decompose({0, -1, 1}, {Family::A, 2}), NegativeMultiplicity);
    CHECK(decompose_signed({0, -1, 1}, {Family::A, 2}) == RootMultiset{0, -1});
    CHECK_THROWS_AS(decompose({1, 0}, {Family::A, 2}), InvalidArgument);
  }

  TEST_CASE("decompose inverts random root combinations") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-4, 6);
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      for (int n = 3; n <= 6; ++n) {
        const CartanType t(f, n);
        const auto roots = simple_roots(t);
        for (int trial = 0; trial < 50; ++trial) {
          RootMultiset c(n);
          Weight w(t.ambient_dim(), 0);
          for (int k = 0; k < n; ++k) {
            c[k] = coef(rng);
            for (int m = 0; m < t.ambient_dim(); ++m) w[m] += c[k] * roots[k][m];
          }
          CHECK(decompose_signed(w, t) == c);
        }
      }
    }
  }

  TEST_CASE("dominant weights") {
    CHECK(normalize_dominant({3, 1}, {Family::A, 2}) == Weight{3, 1, 0});
    CHECK(normalize_dominant({3, 1, 1}, {Family::A, 2}) == Weight{3, 1, 1});
    CHECK(normalize_dominant({2, 1, 1}, {Family::D, 3}) == Weight{2, 1, 1});
    CHECK_THROWS_AS(normalize_dominant({1, 2}, {Family::C, 2}), NonDominantWeight);
    CHECK_THROWS_AS(normalize_dominant({1, -1}, {Family::B, 2}), NonDominantWeight);
    CHECK(normalize_dominant({1}, {Family::B, 2}) == Weight{1, 0});
    CHECK(normalize_dominant({3, 1}, {Family::A, 4}) == Weight{3, 1, 0, 0, 0});
    CHECK_THROWS_AS(normalize_dominant({1, 1, 1}, {Family::B, 2}), NonDominantWeight);
    CHECK(add({1, 2}, {3, -1}) == Weight{4, 1});
    CHECK(subtract({1, 2}, {3, -1}) == Weight{-2, 3});
  }
}
