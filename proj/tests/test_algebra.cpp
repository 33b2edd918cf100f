#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilalg/algebra.hpp"

using namespace nilalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// local transcription helpers, independent of the families module
AlgebraTable mu0(int n, const FieldSpec& f = Q) {
  AlgebraTable t(n, f);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j + i <= n; ++j) t.set_product_basis(i, j, i + j, Scalar::one(f));
  return t;
}

// chain e_i e_j = e_{i+j} up to top, inside an n-dim table
AlgebraTable chain_table(int n, int top, const FieldSpec& f = Q) {
  AlgebraTable t(n, f);
  for (int i = 1; i <= top; ++i)
    for (int j = 1; i + j <= top; ++j) t.set_product_basis(i, j, i + j, Scalar::one(f));
  return t;
}

Vec unit(const FieldSpec& f, int n, int one_based) { return unit_vector(f, n, one_based - 1); }

// brute-force associator scan straight from multiply; the independent oracle
std::vector<std::array<int, 3>> defects_by_brute_force(const AlgebraTable& a) {
  std::vector<std::array<int, 3>> out;
  int n = a.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        Vec lhs = multiply(a, multiply(a, unit(a.field(), n, i), unit(a.field(), n, j)), unit(a.field(), n, k));
        Vec rhs = multiply(a, unit(a.field(), n, i), multiply(a, unit(a.field(), n, j), unit(a.field(), n, k)));
        if (lhs != rhs) out.push_back({i, j, k});
      }
  return out;
}

// exhaustive center scan over a small prime field; the independent oracle
struct ScannedCenters {
  Subspace left, right, both;
};

ScannedCenters centers_by_scan(const AlgebraTable& a) {
  std::int64_t p = a.field().modulus();
  int n = a.dim();
  std::vector<Vec> left, right, both;
  std::vector<std::int64_t> digits(static_cast<size_t>(n), 0);
  while (true) {
    Vec x;
    for (int i = 0; i < n; ++i) x.push_back(Scalar::from_int(a.field(), digits[static_cast<size_t>(i)]));
    bool in_l = true, in_r = true;
    for (int j = 1; j <= n && (in_l || in_r); ++j) {
      if (in_l && !vec_is_zero(multiply(a, x, unit(a.field(), n, j)))) in_l = false;
      if (in_r && !vec_is_zero(multiply(a, unit(a.field(), n, j), x))) in_r = false;
    }
    if (in_l) left.push_back(x);
    if (in_r) right.push_back(x);
    if (in_l && in_r) both.push_back(x);
    int pos = n - 1;
    while (pos >= 0 && ++digits[static_cast<size_t>(pos)] == p) digits[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return {Subspace::span(left, n, a.field()), Subspace::span(right, n, a.field()),
          Subspace::span(both, n, a.field())};
}

std::array<int, 3> center_dims_by_scan(const AlgebraTable& a) {
  ScannedCenters s = centers_by_scan(a);
  return {s.left.dim(), s.right.dim(), s.both.dim()};
}

} // namespace

TEST_CASE("multiply on the stated examples") {
  AlgebraTable m4 = mu0(4);
  CHECK(multiply(m4, unit(Q, 4, 1), unit(Q, 4, 2)) == unit(Q, 4, 3));
  CHECK(vec_is_zero(multiply(m4, zero_vector(Q, 4), unit(Q, 4, 2))));

  // mu' at n = 6, p = 2, alpha = 1, beta_{1,2} = 3: f1 f2 = 3 e4
  AlgebraTable mp = chain_table(6, 4);
  mp.set_product_basis(1, 5, 4, Scalar::one(Q));
  mp.set_product_basis(5, 6, 4, Scalar::from_int(Q, 3));
  Vec prod = multiply(mp, unit(Q, 6, 5), unit(Q, 6, 6));
  CHECK(prod == vec_scale(Scalar::from_int(Q, 3), unit(Q, 6, 4)));

  CHECK_THROWS_AS(multiply(m4, zero_vector(Q, 3), unit(Q, 4, 1)), Error);
}

TEST_CASE("associativity defects") {
  for (int n = 2; n <= 10; ++n) CHECK(associativity_defect(mu0(n)).empty());

  // e1 e1 = e2, e2 e1 = e3: (e1 e1) e1 = e3 but e1 (e1 e1) = e1 e2 = 0
  AlgebraTable t(3, Q);
  t.set_product_basis(1, 1, 2, Scalar::one(Q));
  t.set_product_basis(2, 1, 3, Scalar::one(Q));
  auto defects = associativity_defect(t);
  CHECK(!defects.empty());
  CHECK(std::find(defects.begin(), defects.end(), std::array<int, 3>{1, 1, 1}) != defects.end());
  CHECK(defects == defects_by_brute_force(t));

  CHECK(associativity_defect(AlgebraTable(4, Q)).empty());

  // defects agree with brute force over GF(2) too
  FieldSpec f2 = FieldSpec::prime_field(2);
  AlgebraTable u(3, f2);
  u.set_product_basis(1, 2, 3, Scalar::one(f2));
  u.set_product_basis(2, 2, 1, Scalar::one(f2));
  CHECK(associativity_defect(u) == defects_by_brute_force(u));
}

TEST_CASE("power series and nilindex") {
  for (int n : {2, 4, 6}) {
    PowerSeries ps = power_series(mu0(n));
    REQUIRE(ps.nilpotent);
    REQUIRE(static_cast<int>(ps.terms.size()) == n + 1);
    for (int i = 1; i <= n + 1; ++i) CHECK(ps.terms[static_cast<size_t>(i - 1)].dim() == n + 1 - i);
    CHECK(nilindex(mu0(n)) == n + 1);
  }

  AlgebraTable zero(3, Q);
  PowerSeries zps = power_series(zero);
  CHECK(zps.nilpotent);
  CHECK(zps.terms.size() == 2);
  CHECK(zps.terms[1].is_zero());
  CHECK(nilindex(zero) == 2);

  // mu_{1,1}^6 has dims (6, 4, 3, 2, 1, 0)
  AlgebraTable m116 = chain_table(6, 5);
  PowerSeries ps = power_series(m116);
  std::vector<int> dims;
  for (const Subspace& s : ps.terms) dims.push_back(s.dim());
  CHECK(dims == std::vector<int>{6, 4, 3, 2, 1, 0});

  // idempotent e1 e1 = e1 is not nilpotent
  AlgebraTable idem(1, Q);
  idem.set_product_basis(1, 1, 1, Scalar::one(Q));
  CHECK(!nilindex(idem).has_value());

  // dim 0 is nilpotent with nilindex 1 by convention
  CHECK(nilindex(AlgebraTable(0, Q)) == 1);
}

TEST_CASE("profile classification") {
  CHECK(classify_profile(mu0(5)).classification == ProfileClass::NullFiliform);
  CHECK(classify_profile(mu0(1)).classification == ProfileClass::NullFiliform);

  // mu0^{n-p} (+) F^p is filiform of degree p
  for (auto [n, p] : {std::pair{6, 2}, std::pair{7, 3}}) {
    DimProfile prof = classify_profile(chain_table(n, n - p));
    CHECK(prof.classification == ProfileClass::FiliformOfDegree);
    CHECK(prof.degree == p);
  }

  // plain filiform: the chain of length n-1 inside dim n
  DimProfile fil = classify_profile(chain_table(6, 5));
  CHECK(fil.classification == ProfileClass::Filiform);
  CHECK(*fil.nilindex == 6);

  // mu_{2,1}^6 is quasi-filiform
  AlgebraTable m216 = chain_table(6, 4);
  m216.set_product_basis(5, 1, 6, Scalar::one(Q));
  CHECK(classify_profile(m216).classification == ProfileClass::QuasiFiliform);

  AlgebraTable idem(2, Q);
  idem.set_product_basis(1, 1, 1, Scalar::one(Q));
  CHECK_THROWS_AS(classify_profile(idem), Error);
}

TEST_CASE("centers") {
  for (int n : {3, 5}) {
    Centers c = centers(mu0(n));
    CHECK(c.left.dim() == 1);
    CHECK(c.right.dim() == 1);
    CHECK(c.two_sided.dim() == 1);
    CHECK(c.two_sided.contains(unit(Q, n, n)));
  }

  AlgebraTable zero(4, Q);
  CHECK(centers(zero).two_sided.dim() == 4);

  // mu_{1,3}^6: e6 annihilates on the left; on the right e6 itself fails
  // (e1 e6 = e5) yet e4 - e6 annihilates, so both sides have dim 2 and the
  // two-sided center is span(e5)
  AlgebraTable m136 = chain_table(6, 5);
  m136.set_product_basis(1, 6, 5, Scalar::one(Q));
  Centers c = centers(m136);
  CHECK(c.left.dim() == 2);
  CHECK(c.right.dim() == 2);
  CHECK(c.two_sided.dim() == 1);
  {
    FieldSpec f3 = FieldSpec::prime_field(3);
    AlgebraTable m136_3 = chain_table(6, 5, f3);
    m136_3.set_product_basis(1, 6, 5, Scalar::one(f3));
    auto scanned = center_dims_by_scan(m136_3);
    CHECK(scanned == std::array<int, 3>{2, 2, 1});
  }

  // exhaustive scan agrees over small prime fields
  for (std::int64_t p : {2, 3}) {
    FieldSpec f = FieldSpec::prime_field(p);
    std::vector<AlgebraTable> tables;
    tables.push_back(mu0(3, f));
    tables.push_back(mu0(4, f));
    AlgebraTable h(4, f);
    h.set_product_basis(1, 3, 2, Scalar::one(f));
    h.set_product_basis(3, 1, 2, -Scalar::one(f));
    tables.push_back(h);
    AlgebraTable m21(4, f);  // chain + extra annihilating pair products
    m21.set_product_basis(1, 1, 2, Scalar::one(f));
    m21.set_product_basis(3, 1, 4, Scalar::one(f));
    tables.push_back(m21);
    for (const AlgebraTable& t : tables) {
      // equal as subspaces, not just equal dimensions
      Centers ct = centers(t);
      ScannedCenters scanned = centers_by_scan(t);
      CHECK(ct.left == scanned.left);
      CHECK(ct.right == scanned.right);
      CHECK(ct.two_sided == scanned.both);
    }
  }
}

TEST_CASE("A^i A^j lands in A^{i+j}") {
  std::vector<AlgebraTable> tables{mu0(6), chain_table(6, 5), chain_table(7, 5)};
  tables[1].set_product_basis(6, 6, 5, Scalar::one(Q));       // mu_{1,2}^6
  tables[2].set_product_basis(6, 1, 7, Scalar::one(Q));       // mu_{2,1}^7
  for (const AlgebraTable& a : tables) {
    PowerSeries ps = power_series(a);
    REQUIRE(ps.nilpotent);
    int top = static_cast<int>(ps.terms.size());
    for (int i = 1; i < top; ++i)
      for (int j = 1; i + j <= top; ++j) {
        Subspace prod = product_span(a, ps.terms[static_cast<size_t>(i - 1)], ps.terms[static_cast<size_t>(j - 1)]);
        CHECK(ps.terms[static_cast<size_t>(i + j - 1)].contains(prod));
      }
  }
}

TEST_CASE("dims strictly decrease down to zero for nilpotent tables") {
  std::vector<AlgebraTable> tables{mu0(7), chain_table(6, 5), chain_table(8, 6), AlgebraTable(5, Q)};
  tables[1].set_product_basis(1, 6, 5, Scalar::one(Q));
  tables[2].set_product_basis(7, 1, 8, Scalar::one(Q));
  for (const AlgebraTable& a : tables) {
    PowerSeries ps = power_series(a);
    REQUIRE(ps.nilpotent);
    for (size_t i = 0; i + 1 < ps.terms.size(); ++i) CHECK(ps.terms[i].dim() > ps.terms[i + 1].dim());
    CHECK(ps.terms.back().dim() == 0);
  }
}

TEST_CASE("table equality and canonical zero handling") {
  AlgebraTable a(3, Q), b(3, Q);
  a.set_product_basis(1, 1, 2, Scalar::one(Q));
  a.set_product_basis(1, 1, 2, Scalar::zero(Q));  // erases the entry
  CHECK(a == b);
  CHECK(a.products().empty());

  b.set_product_basis(1, 2, 3, Scalar::one(Q));
  CHECK(a != b);
  CHECK(a < b);
}
