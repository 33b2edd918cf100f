#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilalg/field.hpp"
#include "nilalg/rng.hpp"

using namespace nilalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(std::int64_t num, std::int64_t den = 1) {
  return Scalar::from_rational(Q, Rational(num, den));
}

Matrix mat(const FieldSpec& f, int rows, int cols, const std::vector<std::int64_t>& vals) {
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f, vals[static_cast<size_t>(i * cols + j)]);
  return m;
}

Matrix random_matrix(Rng& rng, const FieldSpec& f, int rows, int cols) {
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

// Exhaustive right-kernel over a small prime field; the independent oracle
// for nullspace.
std::vector<Vec> kernel_by_enumeration(const Matrix& m) {
  std::int64_t p = m.field().modulus();
  int n = m.cols();
  std::vector<Vec> kernel;
  std::vector<std::int64_t> digits(static_cast<size_t>(n), 0);
  while (true) {
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(Scalar::from_int(m.field(), digits[static_cast<size_t>(i)]));
    if (vec_is_zero(m.apply_right(v)) && !vec_is_zero(v)) kernel.push_back(v);
    int pos = n - 1;
    while (pos >= 0 && ++digits[static_cast<size_t>(pos)] == p) digits[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return kernel;
}

} // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar::parse(Q, "3/6").to_string() == "1/2");
  CHECK(Scalar::parse(Q, "-4/6").to_string() == "-2/3");
  CHECK(Scalar::parse(Q, "7").to_string() == "7");
  CHECK(Scalar::parse(Q, "4/2").to_string() == "2");
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(1, 2) * q(2, 3) == q(1, 3));
  CHECK((q(3) / q(4)).to_string() == "3/4");
  CHECK(q(0).is_zero());

  FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK(Scalar::from_int(f5, 7).to_string() == "2");
  CHECK(Scalar::from_int(f5, -1).to_string() == "4");
  CHECK(Scalar::from_int(f5, 2).inverse().to_string() == "3");
  CHECK(Scalar::parse(f5, "13") == Scalar::from_int(f5, 3));
  // rationals reduce into the prime field when the denominator is a unit
  CHECK(Scalar::from_rational(f5, Rational(1, 2)) == Scalar::from_int(f5, 3));
  CHECK_THROWS_AS(Scalar::from_rational(f5, Rational(1, 5)), Error);
}

TEST_CASE("field spec validation and parsing") {
  CHECK_THROWS_AS(FieldSpec::prime_field(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(1), Error);
  CHECK(FieldSpec::prime_field(2).to_string() == "GF(2)");
  CHECK(FieldSpec::parse("GF(7)") == FieldSpec::prime_field(7));
  CHECK(FieldSpec::parse("gf3") == FieldSpec::prime_field(3));
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("rref on the stated examples") {
  Matrix id3 = Matrix::identity(3, Q);
  RrefResult r = rref(id3);
  CHECK(r.reduced == id3);
  CHECK(r.rank == 3);
  CHECK(r.pivot_cols == std::vector<int>{0, 1, 2});

  Matrix zero24(2, 4, Q);
  r = rref(zero24);
  CHECK(r.reduced == zero24);
  CHECK(r.rank == 0);
  CHECK(r.pivot_cols.empty());

  // single Jordan block J3: superdiagonal ones, rank 2
  Matrix j3 = mat(Q, 3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(rref(j3).rank == 2);
}

TEST_CASE("rref is idempotent") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FieldSpec f = trial % 2 ? FieldSpec::prime_field(5) : Q;
    Matrix m = random_matrix(rng, f, 4, 6);
    Matrix once = rref(m).reduced;
    CHECK(rref(once).reduced == once);
  }
}

TEST_CASE("invert on the stated examples") {
  CHECK(invert(Matrix::identity(3, Q)) == Matrix::identity(3, Q));

  Matrix d = mat(Q, 2, 2, {2, 0, 0, 3});
  Matrix di = invert(d);
  CHECK(di.at(0, 0) == q(1, 2));
  CHECK(di.at(1, 1) == q(1, 3));
  CHECK(di.at(0, 1).is_zero());

  Matrix j2 = mat(Q, 2, 2, {0, 1, 0, 0});
  CHECK_THROWS_AS(invert(j2), Error);
}

TEST_CASE("invert round-trips") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FieldSpec f = trial % 2 ? FieldSpec::prime_field(3) : Q;
    Matrix m = random_matrix(rng, f, 5, 5);
    if (rank(m) < 5) continue;
    Matrix mi = invert(m);
    CHECK(m * mi == Matrix::identity(5, f));
    CHECK(mi * m == Matrix::identity(5, f));
  }
}

TEST_CASE("nullspace on the stated examples") {
  Matrix zero23(2, 3, Q);
  CHECK(nullspace(zero23).rows() == 3);
  CHECK(nullspace(Matrix::identity(3, Q)).rows() == 0);

  FieldSpec f2 = FieldSpec::prime_field(2);
  Matrix m = mat(f2, 1, 2, {1, 1});
  Matrix ker = nullspace(m);
  REQUIRE(ker.rows() == 1);
  CHECK(ker.at(0, 0) == Scalar::one(f2));
  CHECK(ker.at(0, 1) == Scalar::one(f2));
  // oracle: the only nonzero kernel vector among all four of GF(2)^2
  auto enumerated = kernel_by_enumeration(m);
  REQUIRE(enumerated.size() == 1);
  CHECK(enumerated[0] == ker.row(0));
}

TEST_CASE("rank-nullity and kernel enumeration over small prime fields") {
  Rng rng(23);
  for (std::int64_t p : {2, 3, 5}) {
    FieldSpec f = FieldSpec::prime_field(p);
    for (int trial = 0; trial < 8; ++trial) {
      int rows = 1 + static_cast<int>(rng.bounded(3));
      int cols = 2 + static_cast<int>(rng.bounded(3)); // <= 4
      Matrix m = random_matrix(rng, f, rows, cols);
      Matrix ker = nullspace(m);
      CHECK(rank(m) + ker.rows() == cols);
      for (int r = 0; r < ker.rows(); ++r) CHECK(vec_is_zero(m.apply_right(ker.row(r))));
      // kernel size agrees with exhaustive enumeration
      size_t expected = 1;
      for (int i = 0; i < ker.rows(); ++i) expected *= static_cast<size_t>(p);
      CHECK(kernel_by_enumeration(m).size() == expected - 1);
    }
  }
}

TEST_CASE("dimension cap is enforced") {
  CHECK_THROWS_AS(Matrix(65, 2, Q), Error);
  CHECK_NOTHROW(Matrix(64, 64, Q));
}
