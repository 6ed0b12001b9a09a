#include <catch2/catch_amalgamated.hpp>

#include "efountain/linalg.hpp"

using namespace efountain;

namespace {
  Matrix from_rows(std::vector<std::vector<long>> const& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
      for (size_t c = 0; c < rows[r].size(); ++c) {
        m(r, c) = Rational(rows[r][c]);
      }
    }
    return m;
  }
}  // namespace

TEST_CASE("determinant, rank and inverse", "[linalg]") {
  auto const A = from_rows({{2, 1}, {7, 4}});
  REQUIRE(determinant(A) == 1);
  auto const inv = inverse(A);
  REQUIRE(inv.has_value());
  REQUIRE(*inv == from_rows({{4, -1}, {-7, 2}}));
  REQUIRE(A * *inv == Matrix::identity(2));

  auto const B = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  REQUIRE(determinant(B) == 0);
  REQUIRE(rank(B) == 2);
  REQUIRE_FALSE(inverse(B).has_value());

  // a swap changes the sign
  auto const P = from_rows({{0, 1}, {1, 0}});
  REQUIRE(determinant(P) == -1);

  auto const H = from_rows({{2, 0}, {0, 3}});
  REQUIRE((*inverse(H))(1, 1) == Rational(1, 3));
  REQUIRE(inverse(Matrix(0, 0)).has_value());
  REQUIRE_THROWS_AS(determinant(Matrix(2, 3)), Exception);
}

TEST_CASE("nullspace vectors are annihilated", "[linalg]") {
  auto const B  = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  auto const ns = nullspace(B);
  REQUIRE(ns.size() == 1);
  for (size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (size_t c = 0; c < 3; ++c) {
      s += B(r, c) * ns[0][c];
    }
    REQUIRE(s == 0);
  }
  REQUIRE(nullspace(Matrix::identity(3)).empty());
  REQUIRE(nullspace(Matrix(1, 4)).size() == 4);
}

TEST_CASE("matrix product checks dimensions", "[linalg]") {
  try {
    (void) (Matrix(2, 3) * Matrix(2, 3));
    FAIL("mismatched product accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::dimension_mismatch);
  }
  auto const A = from_rows({{1, 2}, {3, 4}});
  REQUIRE(A.transpose() == from_rows({{1, 3}, {2, 4}}));
  REQUIRE(Matrix(2, 2).is_zero());
}

TEST_CASE("algebra elements never store zeros", "[linalg]") {
  auto x = AlgebraElement::basis(BasisTag::semigroup, 3);
  auto y = AlgebraElement::basis(BasisTag::semigroup, 3);
  REQUIRE((x - y).is_zero());
  auto z = x + Rational(1, 2) * AlgebraElement::basis(BasisTag::semigroup, 1);
  REQUIRE(z.coefficient(1) == Rational(1, 2));
  REQUIRE(z.coefficients().size() == 2);
  z *= Rational(0);
  REQUIRE(z.is_zero());
  try {
    x += AlgebraElement::basis(BasisTag::category, 0);
    FAIL("mixed bases accepted");
  } catch (Exception const& e) {
    REQUIRE(e.code() == ErrorCode::basis_mismatch);
  }
}

TEST_CASE("linear maps apply and compose", "[linalg]") {
  LinearMap const f{BasisTag::semigroup, BasisTag::category, from_rows({{1, 1}, {0, 1}})};
  LinearMap const g{BasisTag::category, BasisTag::semigroup, from_rows({{1, -1}, {0, 1}})};
  auto const      x = AlgebraElement::basis(BasisTag::semigroup, 1);
  auto const      fx = f(x);
  REQUIRE(fx.tag() == BasisTag::category);
  REQUIRE(fx.coefficient(0) == 1);
  REQUIRE(fx.coefficient(1) == 1);
  REQUIRE(g.after(f).matrix == Matrix::identity(2));
  REQUIRE_THROWS_AS(f(fx), Exception);
  REQUIRE_THROWS_AS(f.after(f), Exception);
}
