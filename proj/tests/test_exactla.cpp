#include <doctest.h>

#include <random>

#include "domdim/exactla.hpp"

using namespace domdim;

namespace {

Matrix random_matrix(std::mt19937_64& rng, Index r, Index c, Scalar p, int zero_bias) {
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % 4) < zero_bias ? 0 : static_cast<Scalar>(rng() % static_cast<std::uint64_t>(p));
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  PrimeField f5(5);
  auto e = rref(f5, Matrix(Matrix::Identity(2, 2)));
  CHECK(e.rank == 2);
  CHECK(e.form == Matrix::Identity(2, 2));
  CHECK(e.pivots == std::vector<Index>{0, 1});

  auto z = rref(f5, Matrix(Matrix::Zero(3, 3)));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(is_zero(z.form));

  Matrix m(2, 2);
  m << 1, 2, 2, 4;
  auto r = rref(f5, m);
  Matrix expect(2, 2);
  expect << 1, 2, 0, 0;
  CHECK(r.form == expect);
  CHECK(r.rank == 1);
}

TEST_CASE("solve examples") {
  PrimeField f5(5);
  Matrix b(2, 1);
  b << 3, 4;
  auto x = solve(f5, Matrix(Matrix::Identity(2, 2)), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(f5, Matrix(Matrix::Zero(2, 2)), b));
  Matrix a(1, 1), c(1, 1);
  a << 2;
  c << 1;
  auto y = solve(f5, a, c);
  REQUIRE(y);
  CHECK((*y)(0, 0) == 3);
}

TEST_CASE("nullspace examples") {
  PrimeField f5(5);
  CHECK(nullspace(f5, Matrix(Matrix::Identity(3, 3))).cols() == 0);
  CHECK(nullspace(f5, Matrix(Matrix::Zero(3, 3))) == Matrix::Identity(3, 3));
  Matrix m(1, 2);
  m << 1, 2;
  Matrix n = nullspace(f5, m);
  REQUIRE(n.cols() == 1);
  CHECK(n(0, 0) == 3);
  CHECK(n(1, 0) == 1);
}

TEST_CASE("field rejects composite moduli") {
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_NOTHROW(PrimeField(2));
  PrimeField f(32003);
  for (Scalar a = 1; a < 200; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("random properties: rank-nullity, solve, idempotent rref") {
  std::mt19937_64 rng(7);
  for (Scalar p : {2, 3, 5, 32003, 2147483647}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const Index r = 1 + static_cast<Index>(rng() % 7), c = 1 + static_cast<Index>(rng() % 7);
      const Matrix m = random_matrix(rng, r, c, p, trial % 4);
      const auto e = rref(f, m);
      CHECK(e.rank == rank(f, m));
      const Matrix ns = nullspace(f, m);
      CHECK(e.rank + ns.cols() == c);
      CHECK(is_zero(multiply(f, m, ns)));
      CHECK(rref(f, e.form).form == e.form);
      const Matrix b = random_matrix(rng, r, 2, p, 1);
      if (auto x = solve(f, m, b)) CHECK(multiply(f, m, *x) == f.reduce(b));
      const Matrix consistent = multiply(f, m, random_matrix(rng, c, 2, p, 0));
      auto y = solve(f, m, consistent);
      REQUIRE(y);
      CHECK(multiply(f, m, *y) == consistent);
    }
  }
}

TEST_CASE("multiply is exact for large moduli") {
  PrimeField f(2147483647);
  Matrix a = Matrix::Constant(1, 40, 2147483646), b = Matrix::Constant(40, 1, 2147483646);
  // (-1)(-1) * 40 = 40
  CHECK(multiply(f, a, b)(0, 0) == 40);
}

TEST_CASE("quotient map and left inverse") {
  std::mt19937_64 rng(3);
  PrimeField f(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix sub = random_matrix(rng, 6, 3, 101, 1);
    const auto q = quotient_map(f, sub, 6);
    CHECK(q.project.rows() == 6 - rank(f, sub));
    CHECK(is_zero(multiply(f, q.project, sub)));
    CHECK(multiply(f, q.project, q.lift) == Matrix::Identity(q.project.rows(), q.project.rows()));
    const Matrix full = random_matrix(rng, 6, 3, 101, 0);
    if (rank(f, full) == 3) CHECK(multiply(f, left_inverse(f, full), full) == Matrix::Identity(3, 3));
  }
}
