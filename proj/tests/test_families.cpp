#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilalg/families.hpp"
#include "nilalg/iso.hpp"
#include "nilalg/rng.hpp"

using namespace nilalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long long num, long long den = 1) { return Scalar::from_rational(Q, Rational(num, den)); }

Vec term(int n, int k, const Scalar& c) {
  Vec v = zero_vector(c.field(), n);
  v[static_cast<size_t>(k - 1)] = c;
  return v;
}

} // namespace

TEST_CASE("mu0 and Heisenberg tables match the displayed products") {
  AlgebraTable m = build(FamilyId::mu0(4));
  CHECK(m.product(1, 1) == term(4, 2, q(1)));
  CHECK(m.product(1, 2) == term(4, 3, q(1)));
  CHECK(m.product(2, 1) == term(4, 3, q(1)));
  CHECK(m.product(1, 3) == term(4, 4, q(1)));
  CHECK(m.product(3, 1) == term(4, 4, q(1)));
  CHECK(m.product(2, 2) == term(4, 4, q(1)));
  CHECK(m.products().size() == 6);

  AlgebraTable h = build(FamilyId::heisenberg_split(1));
  CHECK(h.dim() == 3);
  CHECK(h.product(1, 3) == term(3, 2, q(1)));
  CHECK(h.product(3, 1) == term(3, 2, q(-1)));
  CHECK(h.products().size() == 2);
  CHECK(h.labels() == std::vector<std::string>{"e1", "e2", "f1"});
}

TEST_CASE("pi_8(2) carries the substituted coefficients") {
  AlgebraTable p = build(FamilyId::pi(8, Rational(2)));
  Vec e41 = zero_vector(Q, 5);
  e41[1] = q(-1);
  e41[4] = q(2);
  CHECK(p.product(4, 1) == e41);
  CHECK(p.product(4, 2) == term(5, 3, q(-3)));
  Vec e44 = zero_vector(Q, 5);
  e44[1] = q(-2);
  e44[4] = q(3);
  CHECK(p.product(4, 4) == e44);
  CHECK(p.product(4, 5) == term(5, 3, q(-4)));
  CHECK(p.product(5, 1) == term(5, 3, q(-1)));
  CHECK(p.product(5, 4) == term(5, 3, q(-2)));
}

TEST_CASE("family constraints are validated") {
  CHECK_THROWS_AS(build(FamilyId::mu0(0)), Error);
  CHECK_THROWS_AS(FamilyId::mu1(1, 3), Error);
  CHECK_THROWS_AS(FamilyId::mu1(5, 6), Error);
  CHECK_THROWS_AS(FamilyId::mu0_split(4, 3), Error);
  CHECK_THROWS_AS(FamilyId::mu_prime(5, 3, Rational(1), {}), Error);
  CHECK_THROWS_AS(FamilyId::mu_prime(6, 2, Rational(2), {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}),
                  Error);
  CHECK_THROWS_AS(FamilyId::pi(3, Rational(1)), Error);
  CHECK_THROWS_AS(FamilyId::pi(9), Error);
  CHECK_THROWS_AS(FamilyId::mu2(2, 5, Rational(1)), Error);
  CHECK_THROWS_AS(FamilyId::mu2(2, 6), Error);
  CHECK_THROWS_AS(FamilyId::lambda(3), Error);
}

TEST_CASE("every family is associative on a spot grid") {
  std::vector<AlgebraTable> tables;
  tables.push_back(build(FamilyId::lambda(2)));
  tables.push_back(build(FamilyId::pi(5)));
  for (const Rational& a : {Rational(2), Rational(-2), Rational(1, 2)})
    tables.push_back(build(FamilyId::pi(8, a)));
  tables.push_back(build(FamilyId::mu2(2, 7, Rational(-1))));
  tables.push_back(build(FamilyId::mu2(3, 8)));
  std::vector<std::vector<Rational>> beta = {{Rational(1, 2), Rational(-2)}, {Rational(3), Rational(0)}};
  tables.push_back(build(FamilyId::mu_prime(7, 2, Rational(1), beta)));
  tables.push_back(build(FamilyId::mu_prime(7, 2, Rational(0), beta)));
  for (const AlgebraTable& t : tables) CHECK(associativity_defect(t).empty());

  // mu' stays associative for arbitrary beta
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<Rational>> b(2, std::vector<Rational>(2));
    for (auto& row : b)
      for (auto& entry : row) entry = rng.small_rational();
    CHECK(associativity_defect(build(FamilyId::mu_prime(6, 2, Rational(trial % 2), b))).empty());
  }
}

TEST_CASE("profiles match the classification") {
  CHECK(classify_profile(build(FamilyId::mu0(7))).classification == ProfileClass::NullFiliform);
  for (int k = 1; k <= 4; ++k)
    CHECK(classify_profile(build(FamilyId::mu1(k, 6))).classification == ProfileClass::Filiform);
  DimProfile split = classify_profile(build(FamilyId::mu0_split(7, 3)));
  CHECK(split.classification == ProfileClass::FiliformOfDegree);
  CHECK(split.degree == 3);
  std::vector<std::vector<Rational>> beta = {{Rational(1)}};
  DimProfile mp = classify_profile(build(FamilyId::mu_prime(6, 1, Rational(1), beta)));
  CHECK(mp.classification == ProfileClass::Filiform);  // degree 1
  CHECK(classify_profile(build(FamilyId::lambda(1))).classification == ProfileClass::QuasiFiliform);
  CHECK(classify_profile(build(FamilyId::pi(4))).classification == ProfileClass::QuasiFiliform);
  CHECK(classify_profile(build(FamilyId::mu2(1, 8))).classification == ProfileClass::QuasiFiliform);
  CHECK(classify_profile(build(FamilyId::mu2(4, 6))).classification == ProfileClass::QuasiFiliform);
}

TEST_CASE("restriction system") {
  CHECK(restriction_system_check(q(0), q(1), q(0), q(0)));
  // Case 2.2.2 at a rational-consistent point: alpha2 = -4, beta2 = 3/2,
  // alpha1 = (1 - alpha2) beta2 / (1 + alpha2), beta1 = 1
  CHECK(restriction_system_check(q(-5, 2), q(-4), q(1), q(3, 2)));
  CHECK(!restriction_system_check(q(1), q(0), q(1), q(0)));

  // the displayed pi tables satisfy the restrictions
  auto check_params = [&](const Scalar& a1, const Scalar& a2, const Scalar& b1, const Scalar& b2) {
    CHECK(restriction_system_check(a1, a2, b1, b2));
  };
  check_params(q(0), q(0), q(0), q(0));     // pi_1(0)
  check_params(q(1), q(-1), q(0), q(0));    // pi_4
  check_params(q(1), q(1), q(0), q(2));     // pi_5
  check_params(q(0), q(1), q(1), q(0));     // pi_6
  check_params(q(0), q(-1), q(1), q(0));    // pi_7
  for (long long a : {-2, 0, 3}) {           // pi_8(alpha)
    Scalar alpha = q(a);
    check_params(q(1) - alpha, alpha, -alpha, q(1) + alpha);
  }

  // parameters violating the system give a non-associative general table
  CHECK(!associativity_defect(pi_general(q(1), q(0), q(1), q(0))).empty());
  CHECK(associativity_defect(pi_general(q(-5, 2), q(-4), q(1), q(3, 2))).empty());
}

TEST_CASE("parameter maps") {
  // T39 at n = 5: (alpha, beta) = (0, 4), A1 = 1, Bn = A1^2 / 2 -> (0, 1)
  NamedCoeffs coeffs;
  coeffs["A1"] = q(1);
  coeffs["B5"] = q(1, 2);
  auto mapped = parameter_map(TheoremMap::T39, 5, {q(0), q(4)}, coeffs);
  CHECK(mapped[0] == q(0));
  CHECK(mapped[1] == q(1));

  // identity change fixes the parameters
  NamedCoeffs id_change;
  id_change["A1"] = q(1);
  id_change["B5"] = q(1);
  auto fixed = parameter_map(TheoremMap::T39, 5, {q(2), q(3)}, id_change);
  CHECK(fixed[0] == q(2));
  CHECK(fixed[1] == q(3));

  // T46 with alpha2 = 0 keeps alpha1
  NamedCoeffs t46;
  t46["A1"] = q(3);
  t46["A5"] = q(2);
  t46["B5"] = q(5);
  auto kept = parameter_map(TheoremMap::T46, 6, {q(7), q(0)}, t46);
  CHECK(kept[0] == q(7));
  CHECK(kept[1] == q(0));

  NamedCoeffs degenerate;
  degenerate["B5"] = q(1);
  CHECK_THROWS_AS(parameter_map(TheoremMap::T39, 5, {q(0), q(1)}, degenerate), Error);
}

TEST_CASE("template changes transport to the mapped constructor") {
  // one deterministic instance per theorem; the acceptance suite runs 100
  struct Case {
    TheoremMap theorem;
    int n;
    std::vector<Scalar> params;
    NamedCoeffs coeffs;
  };
  std::vector<Case> cases;
  {
    NamedCoeffs c{{"A1", q(2)}, {"A2", q(1)}, {"A5", q(3)}, {"B4", q(1)}, {"B5", q(1, 2)}};
    cases.push_back({TheoremMap::T39, 5, {q(1), q(2)}, c});
  }
  {
    NamedCoeffs c{{"A1", q(2)}, {"A4", q(3)}, {"B4", q(1, 2)}};
    cases.push_back({TheoremMap::Lam, 5, {q(1)}, c});
  }
  {
    NamedCoeffs c{{"A1", q(3)}, {"A2", q(-1)}, {"B2", q(2)}};
    cases.push_back({TheoremMap::Pi45, 5, {q(2), q(1)}, c});
  }
  {
    NamedCoeffs c{{"A1", q(1)}, {"A5", q(2)}, {"A6", q(-1)}, {"B4", q(1)}, {"B5", q(3)}, {"B6", q(0)}};
    cases.push_back({TheoremMap::T46, 6, {q(1), q(2)}, c});
  }

  for (const Case& cs : cases) {
    auto table_of = [&](const std::vector<Scalar>& p) {
      switch (cs.theorem) {
        case TheoremMap::T39: return mu1_general(cs.n, p[0], p[1]);
        case TheoremMap::Lam: return lambda_general(p[0]);
        case TheoremMap::Pi45: return pi_general(q(0), p[0], q(0), p[1]);
        case TheoremMap::T46: return mu2_general(cs.n, p[0], p[1]);
      }
      fail(Errc::InvalidParameter, "bad theorem");
    };
    AlgebraTable a = table_of(cs.params);
    TemplateChange change = make_template_change(cs.theorem, a, cs.params, cs.coeffs);
    std::vector<Scalar> mapped = parameter_map(cs.theorem, cs.n, cs.params, change.coeffs);
    CHECK(transport(a, change.matrix) == table_of(mapped));
  }
}

TEST_CASE("the beta1 = 1 scaling route lands on pi_8(-4)") {
  // alpha2 = -4, beta2 = 3/2 solve (a2+1)^2 + a2 b2^2 = 0 with rational b2;
  // scaling e4, e5 by (1 + a2)/b2 = -2 normalizes onto pi_8(-4)
  AlgebraTable a = pi_general(q(-5, 2), q(-4), q(1), q(3, 2));
  REQUIRE(associativity_defect(a).empty());
  Matrix m = Matrix::identity(5, Q);
  m.at(3, 3) = q(-2);
  m.at(4, 4) = q(-2);
  CHECK(transport(a, m) == build(FamilyId::pi(8, Rational(-4))));
}

TEST_CASE("lambda normalizes back to lambda_2 via B4 = (A1 + a2 A4)/a2") {
  Scalar alpha2 = q(3);
  AlgebraTable a = lambda_general(alpha2);
  NamedCoeffs coeffs{{"A1", q(2)}, {"A4", q(1)}};
  coeffs["B4"] = (coeffs["A1"] + alpha2 * coeffs["A4"]) / alpha2;
  TemplateChange change = make_template_change(TheoremMap::Lam, a, {alpha2}, coeffs);
  auto mapped = parameter_map(TheoremMap::Lam, 5, {alpha2}, change.coeffs);
  CHECK(mapped[0] == q(1));
  CHECK(transport(a, change.matrix) == build(FamilyId::lambda(2)));
}

TEST_CASE("template restrictions are enforced") {
  AlgebraTable a = mu1_general(5, q(0), q(4));
  NamedCoeffs bad{{"A1", q(1)}, {"B1", q(1)}, {"B5", q(1)}};
  CHECK_THROWS_AS(make_template_change(TheoremMap::T39, a, {q(0), q(4)}, bad), Error);

  NamedCoeffs wrong_b3{{"A1", q(1)}, {"A5", q(1)}, {"B3", q(7)}, {"B5", q(1)}};
  // B_{n-2} is forced to -beta A_n B_n / A1 = -4; 7 violates it
  CHECK_THROWS_AS(make_template_change(TheoremMap::T39, a, {q(0), q(4)}, wrong_b3), Error);

  NamedCoeffs filled{{"A1", q(1)}, {"A5", q(1)}, {"B5", q(1)}};
  TemplateChange change = make_template_change(TheoremMap::T39, a, {q(0), q(4)}, filled);
  CHECK(change.coeffs.at("B3") == q(-4));
}

TEST_CASE("general forms reduce to the named variants") {
  CHECK(build(FamilyId::mu1(1, 5)) == mu1_general(5, q(0), q(0)));
  CHECK(build(FamilyId::mu1(4, 5)) == mu1_general(5, q(1), q(1)));
  CHECK(build(FamilyId::lambda(2)) == lambda_general(q(1)));
  CHECK(build(FamilyId::mu2(2, 6, Rational(3))) == mu2_general(6, q(3), q(0)));
  CHECK(build(FamilyId::mu2(3, 6)) == mu2_general(6, q(1), q(1)));
  CHECK(build(FamilyId::mu2(4, 6)) == mu2_general(6, q(0), q(1)));
  CHECK(build(FamilyId::pi(2)) == pi_general(q(0), q(1), q(0), q(1)));
  CHECK(build(FamilyId::pi(7)) == pi_general(q(0), q(-1), q(1), q(0)));
}
