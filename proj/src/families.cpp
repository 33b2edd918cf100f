#include "nilalg/families.hpp"

#include <sstream>

namespace nilalg {

namespace {

void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// e_i e_j = e_{i+j} for 2 <= i+j <= top, on the first `top` chain elements
void chain_products(AlgebraTable& t, int top) {
  for (int i = 1; i <= top; ++i)
    for (int j = 1; j <= top; ++j)
      if (i + j <= top) t.set_product_basis(i, j, i + j, Scalar::one(t.field()));
}

std::vector<std::string> split_labels(int chain, int p) {
  std::vector<std::string> labels;
  for (int i = 1; i <= chain; ++i) labels.push_back("e" + std::to_string(i));
  for (int i = 1; i <= p; ++i) labels.push_back("f" + std::to_string(i));
  return labels;
}

Scalar coeff(const NamedCoeffs& coeffs, const std::string& name, const FieldSpec& f) {
  auto it = coeffs.find(name);
  return it == coeffs.end() ? Scalar::zero(f) : it->second;
}

} // namespace

FamilyId FamilyId::mu0(int n) {
  require(n >= 1, Errc::InvalidDimension, "mu0 needs n >= 1");
  FamilyId id;
  id.kind = Kind::Mu0;
  id.n = n;
  return id;
}

FamilyId FamilyId::mu0_split(int n, int p) {
  require(p >= 1 && n - p >= 2, Errc::InvalidDimension, "mu0_split needs p >= 1 and n - p >= 2");
  FamilyId id;
  id.kind = Kind::Mu0SplitF;
  id.n = n;
  id.p = p;
  return id;
}

FamilyId FamilyId::heisenberg_split(int p) {
  require(p >= 1, Errc::InvalidDimension, "heisenberg_split needs p >= 1");
  FamilyId id;
  id.kind = Kind::HeisenbergSplit;
  id.n = p + 2;
  id.p = p;
  return id;
}

FamilyId FamilyId::mu_prime(int n, int p, const Rational& alpha,
                            const std::vector<std::vector<Rational>>& beta) {
  require(p >= 1 && n > p + 2, Errc::InvalidDimension, "mu_prime needs p >= 1 and n > p + 2");
  require(alpha == 0 || alpha == 1, Errc::InvalidParameter, "mu_prime alpha must be 0 or 1");
  require(static_cast<int>(beta.size()) == p, Errc::InvalidParameter, "beta must be p x p");
  for (const auto& row : beta)
    require(static_cast<int>(row.size()) == p, Errc::InvalidParameter, "beta must be p x p");
  FamilyId id;
  id.kind = Kind::MuPrime;
  id.n = n;
  id.p = p;
  id.alpha = alpha;
  id.beta = beta;
  return id;
}

FamilyId FamilyId::mu1(int k, int n) {
  require(k >= 1 && k <= 4, Errc::InvalidParameter, "mu1 variant must be 1..4");
  require(n > 3, Errc::InvalidDimension, "mu1 needs n > 3");
  FamilyId id;
  id.kind = Kind::Mu1;
  id.n = n;
  id.k = k;
  return id;
}

FamilyId FamilyId::lambda(int k) {
  require(k == 1 || k == 2, Errc::InvalidParameter, "lambda variant must be 1 or 2");
  FamilyId id;
  id.kind = Kind::Lambda;
  id.n = 5;
  id.k = k;
  return id;
}

FamilyId FamilyId::pi(int k) {
  require(k >= 2 && k <= 7, Errc::InvalidParameter, "pi variant without alpha must be 2..7");
  FamilyId id;
  id.kind = Kind::Pi;
  id.n = 5;
  id.k = k;
  return id;
}

FamilyId FamilyId::pi(int k, const Rational& alpha) {
  require(k == 1 || k == 8, Errc::InvalidParameter, "only pi_1 and pi_8 take alpha");
  FamilyId id;
  id.kind = Kind::Pi;
  id.n = 5;
  id.k = k;
  id.alpha = alpha;
  return id;
}

FamilyId FamilyId::mu2(int k, int n) {
  require(k == 1 || k == 3 || k == 4, Errc::InvalidParameter, "mu2 variant without alpha must be 1, 3 or 4");
  require(n > 5, Errc::InvalidDimension, "mu2 needs n > 5");
  FamilyId id;
  id.kind = Kind::Mu2;
  id.n = n;
  id.k = k;
  return id;
}

FamilyId FamilyId::mu2(int k, int n, const Rational& alpha) {
  require(k == 2, Errc::InvalidParameter, "only mu2_2 takes alpha");
  require(n > 5, Errc::InvalidDimension, "mu2 needs n > 5");
  FamilyId id;
  id.kind = Kind::Mu2;
  id.n = n;
  id.k = k;
  id.alpha = alpha;
  return id;
}

std::string FamilyId::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Mu0: os << "mu0(" << n << ")"; break;
    case Kind::Mu0SplitF: os << "mu0_split(" << n << "," << p << ")"; break;
    case Kind::HeisenbergSplit: os << "heisenberg_split(" << p << ")"; break;
    case Kind::MuPrime: os << "mu_prime(" << n << "," << p << ";alpha=" << alpha->str() << ")"; break;
    case Kind::Mu1: os << "mu1_" << k << "(" << n << ")"; break;
    case Kind::Lambda: os << "lambda_" << k; break;
    case Kind::Pi:
      os << "pi_" << k;
      if (alpha) os << "(" << alpha->str() << ")";
      break;
    case Kind::Mu2:
      os << "mu2_" << k << "(" << n;
      if (alpha) os << ";alpha=" << alpha->str();
      os << ")";
      break;
  }
  return os.str();
}

AlgebraTable build(const FamilyId& id, const FieldSpec& field) {
  auto sc = [&](const Rational& r) { return Scalar::from_rational(field, r); };
  const Scalar one = Scalar::one(field);

  switch (id.kind) {
    case FamilyId::Kind::Mu0: {
      AlgebraTable t(id.n, field);
      chain_products(t, id.n);
      return t;
    }
    case FamilyId::Kind::Mu0SplitF: {
      AlgebraTable t(id.n, field);
      chain_products(t, id.n - id.p);
      t.set_labels(split_labels(id.n - id.p, id.p));
      return t;
    }
    case FamilyId::Kind::HeisenbergSplit: {
      // basis e1, e2, f1..fp; e1 f1 = -f1 e1 = e2
      AlgebraTable t(id.p + 2, field);
      t.set_product_basis(1, 3, 2, one);
      t.set_product_basis(3, 1, 2, -one);
      t.set_labels(split_labels(2, id.p));
      return t;
    }
    case FamilyId::Kind::MuPrime: {
      AlgebraTable t(id.n, field);
      int chain = id.n - id.p;
      chain_products(t, chain);
      if (*id.alpha != 0) t.set_product_basis(1, chain + 1, chain, sc(*id.alpha));
      for (int i = 1; i <= id.p; ++i)
        for (int j = 1; j <= id.p; ++j) {
          const Rational& b = id.beta[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
          if (b != 0) t.set_product_basis(chain + i, chain + j, chain, sc(b));
        }
      t.set_labels(split_labels(chain, id.p));
      return t;
    }
    case FamilyId::Kind::Mu1: {
      Scalar a = (id.k == 3 || id.k == 4) ? one : Scalar::zero(field);
      Scalar b = (id.k == 2 || id.k == 4) ? one : Scalar::zero(field);
      return mu1_general(id.n, a, b);
    }
    case FamilyId::Kind::Lambda:
      return lambda_general(id.k == 1 ? Scalar::zero(field) : one);
    case FamilyId::Kind::Pi: {
      const Scalar zero = Scalar::zero(field);
      switch (id.k) {
        case 1: return pi_general(zero, sc(*id.alpha), zero, zero);
        case 2: return pi_general(zero, one, zero, one);
        case 3: return pi_general(zero, zero, zero, one);
        case 4: return pi_general(one, -one, zero, zero);
        case 5: return pi_general(one, one, zero, one + one);
        case 6: return pi_general(zero, one, one, zero);
        case 7: return pi_general(zero, -one, one, zero);
        case 8: {
          Scalar a = sc(*id.alpha);
          return pi_general(one - a, a, -a, one + a);
        }
      }
      fail(Errc::InvalidParameter, "bad pi variant");
    }
    case FamilyId::Kind::Mu2: {
      const Scalar zero = Scalar::zero(field);
      AlgebraTable t = [&] {
        switch (id.k) {
          case 2: return mu2_general(id.n, sc(*id.alpha), zero);
          case 3: return mu2_general(id.n, one, one);
          case 4: return mu2_general(id.n, zero, one);
          default: break;
        }
        // mu2_1: chain plus e_{n-1} e_1 = e_n only
        AlgebraTable m(id.n, field);
        chain_products(m, id.n - 2);
        m.set_product_basis(id.n - 1, 1, id.n, one);
        return m;
      }();
      return t;
    }
  }
  fail(Errc::InvalidParameter, "bad family id");
}

AlgebraTable mu1_general(int n, const Scalar& alpha, const Scalar& beta) {
  require(n > 3, Errc::InvalidDimension, "mu1 general form needs n > 3");
  const FieldSpec& f = alpha.field();
  require(f == beta.field(), Errc::FieldMismatch, "parameters from different fields");
  AlgebraTable t(n, f);
  chain_products(t, n - 1);
  Vec v = zero_vector(f, n);
  v[static_cast<size_t>(n - 2)] = alpha;
  t.set_product(1, n, v);
  v[static_cast<size_t>(n - 2)] = beta;
  t.set_product(n, n, v);
  return t;
}

AlgebraTable mu2_general(int n, const Scalar& alpha1, const Scalar& alpha2) {
  require(n > 5, Errc::InvalidDimension, "mu2 general form needs n > 5");
  const FieldSpec& f = alpha1.field();
  require(f == alpha2.field(), Errc::FieldMismatch, "parameters from different fields");
  AlgebraTable t(n, f);
  chain_products(t, n - 2);
  t.set_product_basis(1, n - 1, n, Scalar::one(f));
  if (!alpha1.is_zero()) t.set_product_basis(n - 1, 1, n, alpha1);
  if (!alpha2.is_zero()) t.set_product_basis(n - 1, n - 1, n, alpha2);
  return t;
}

AlgebraTable lambda_general(const Scalar& alpha2) {
  const FieldSpec& f = alpha2.field();
  const Scalar one = Scalar::one(f);
  AlgebraTable t(5, f);
  t.set_product_basis(1, 1, 2, one);
  t.set_product_basis(1, 2, 3, one);
  t.set_product_basis(2, 1, 3, one);
  t.set_product_basis(4, 1, 5, one);
  if (!alpha2.is_zero()) {
    t.set_product_basis(4, 2, 3, alpha2);
    t.set_product_basis(5, 1, 3, alpha2);
  }
  return t;
}

AlgebraTable pi_general(const Scalar& alpha1, const Scalar& alpha2, const Scalar& beta1,
                        const Scalar& beta2) {
  const FieldSpec& f = alpha1.field();
  require(f == alpha2.field() && f == beta1.field() && f == beta2.field(), Errc::FieldMismatch,
          "parameters from different fields");
  const Scalar one = Scalar::one(f);
  AlgebraTable t(5, f);
  t.set_product_basis(1, 1, 2, one);
  t.set_product_basis(1, 2, 3, one);
  t.set_product_basis(2, 1, 3, one);
  t.set_product_basis(1, 4, 5, one);
  // e4 e1 = a1 e2 + a2 e5
  Vec v = zero_vector(f, 5);
  v[1] = alpha1;
  v[4] = alpha2;
  t.set_product(4, 1, v);
  // e4 e2 = a1 (a2 + 1) e3
  t.set_product_basis(4, 2, 3, alpha1 * (alpha2 + one));
  // e4 e4 = b1 e2 + b2 e5
  v = zero_vector(f, 5);
  v[1] = beta1;
  v[4] = beta2;
  t.set_product(4, 4, v);
  // e4 e5 = a2 b1 e3
  t.set_product_basis(4, 5, 3, alpha2 * beta1);
  // e5 e1 = a1 e3
  t.set_product_basis(5, 1, 3, alpha1);
  // e5 e4 = b1 e3
  t.set_product_basis(5, 4, 3, beta1);
  return t;
}

bool restriction_system_check(const Scalar& alpha1, const Scalar& alpha2, const Scalar& beta1,
                              const Scalar& beta2) {
  const Scalar one = Scalar::one(alpha1.field());
  Scalar lhs1 = alpha1 * beta2;
  Scalar rhs1 = alpha1 * alpha1 * (alpha2 + one) + beta1 * (alpha2 * alpha2 - one);
  Scalar lhs2 = beta1 * (alpha1 * (alpha2 + one) + beta2 * (alpha2 - one));
  return lhs1 == rhs1 && lhs2.is_zero();
}

std::vector<Scalar> parameter_map(TheoremMap theorem, int n, const std::vector<Scalar>& params,
                                  const NamedCoeffs& coeffs) {
  require(!params.empty(), Errc::InvalidParameter, "empty parameter tuple");
  const FieldSpec& f = params[0].field();
  auto c = [&](const std::string& name) { return coeff(coeffs, name, f); };
  auto nonzero = [&](const Scalar& s, const std::string& what) {
    if (s.is_zero()) fail(Errc::DegenerateChange, what + " must not vanish");
    return s;
  };

  switch (theorem) {
    case TheoremMap::T39: {
      require(params.size() == 2, Errc::InvalidParameter, "T39 takes (alpha, beta)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar bn = nonzero(c("B" + std::to_string(n)), "Bn");
      Scalar pow = Scalar::one(f);
      for (int i = 0; i < n - 2; ++i) pow *= a1;
      Scalar alpha_new = params[0] * bn / pow;
      Scalar beta_new = params[1] * bn * bn / (pow * a1);
      return {alpha_new, beta_new};
    }
    case TheoremMap::Lam: {
      require(n == 5, Errc::InvalidParameter, "Lam acts in dimension 5");
      require(params.size() == 1, Errc::InvalidParameter, "Lam takes (alpha2)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar b4 = nonzero(c("B4"), "B4");
      Scalar den = nonzero(a1 + params[0] * c("A4"), "A1 + alpha2 A4");
      return {params[0] * b4 / den};
    }
    case TheoremMap::Pi45: {
      require(n == 5, Errc::InvalidParameter, "Pi45 acts in dimension 5");
      require(params.size() == 2, Errc::InvalidParameter, "Pi45 takes (alpha2, beta2)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar b2 = nonzero(c("B2"), "B2");
      Scalar den = nonzero(a1 + params[1] * c("A2"), "A1 + beta2 A2");
      Scalar alpha2_new = (params[0] * a1 + params[1] * c("A2")) / den;
      Scalar beta2_new = params[1] * b2 / den;
      return {alpha2_new, beta2_new};
    }
    case TheoremMap::T46: {
      require(params.size() == 2, Errc::InvalidParameter, "T46 takes (alpha1, alpha2)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar an1 = c("A" + std::to_string(n - 1));
      Scalar bn1 = nonzero(c("B" + std::to_string(n - 1)), "B(n-1)");
      Scalar den = nonzero(a1 + params[1] * an1, "A1 + alpha2 A(n-1)");
      Scalar alpha1_new = (params[0] * a1 + params[1] * an1) / den;
      Scalar alpha2_new = params[1] * bn1 / den;
      return {alpha1_new, alpha2_new};
    }
  }
  fail(Errc::InvalidParameter, "bad theorem map");
}

TemplateChange make_template_change(TheoremMap theorem, const AlgebraTable& a,
                                    const std::vector<Scalar>& params, const NamedCoeffs& coeffs) {
  const FieldSpec& f = a.field();
  int n = a.dim();
  auto c = [&](const std::string& name) { return coeff(coeffs, name, f); };
  auto nonzero = [&](const Scalar& s, const std::string& what) {
    if (s.is_zero()) fail(Errc::DegenerateChange, what + " must not vanish");
    return s;
  };
  auto forbid = [&](const std::string& name) {
    if (!c(name).is_zero()) fail(Errc::DegenerateChange, "template forces " + name + " = 0");
  };

  std::vector<Vec> new_basis(static_cast<size_t>(n), zero_vector(f, n));
  NamedCoeffs used = coeffs;

  switch (theorem) {
    case TheoremMap::T39: {
      require(params.size() == 2, Errc::InvalidParameter, "T39 takes (alpha, beta)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar bn = nonzero(c("B" + std::to_string(n)), "Bn");
      for (int k = 1; k <= n - 3; ++k) forbid("B" + std::to_string(k));
      // B_{n-2} = -beta An Bn / A1
      Scalar bn2 = -(params[1] * c("A" + std::to_string(n)) * bn) / a1;
      auto it = coeffs.find("B" + std::to_string(n - 2));
      if (it != coeffs.end() && it->second != bn2)
        fail(Errc::DegenerateChange, "B(n-2) violates the template constraint");
      used["B" + std::to_string(n - 2)] = bn2;

      Vec e1p = zero_vector(f, n);
      for (int k = 1; k <= n; ++k) e1p[static_cast<size_t>(k - 1)] = c("A" + std::to_string(k));
      Vec enp = zero_vector(f, n);
      enp[static_cast<size_t>(n - 3)] = bn2;
      enp[static_cast<size_t>(n - 2)] = c("B" + std::to_string(n - 1));
      enp[static_cast<size_t>(n - 1)] = bn;
      new_basis[0] = e1p;
      for (int k = 2; k <= n - 1; ++k)
        new_basis[static_cast<size_t>(k - 1)] = multiply(a, e1p, new_basis[static_cast<size_t>(k - 2)]);
      new_basis[static_cast<size_t>(n - 1)] = enp;
      break;
    }
    case TheoremMap::Lam: {
      require(n == 5 && params.size() == 1, Errc::InvalidParameter, "Lam takes dim-5 (alpha2)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar b4 = nonzero(c("B4"), "B4");
      forbid("B1");
      nonzero(a1 + params[0] * c("A4"), "A1 + alpha2 A4");
      Vec e1p = zero_vector(f, 5);
      e1p[0] = a1;
      e1p[3] = c("A4");
      Vec e4p = zero_vector(f, 5);
      e4p[3] = b4;
      new_basis[0] = e1p;
      new_basis[1] = multiply(a, e1p, e1p);
      new_basis[2] = multiply(a, e1p, new_basis[1]);
      new_basis[3] = e4p;
      new_basis[4] = multiply(a, e4p, e1p);
      break;
    }
    case TheoremMap::Pi45: {
      require(n == 5 && params.size() == 2, Errc::InvalidParameter, "Pi45 takes dim-5 (alpha2, beta2)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar b2 = nonzero(c("B2"), "B2");
      forbid("B1");
      nonzero(a1 + params[1] * c("A2"), "A1 + beta2 A2");
      Vec e1p = zero_vector(f, 5);
      e1p[0] = a1;
      e1p[3] = c("A2");
      Vec e4p = zero_vector(f, 5);
      e4p[3] = b2;
      new_basis[0] = e1p;
      new_basis[1] = multiply(a, e1p, e1p);
      new_basis[2] = multiply(a, e1p, new_basis[1]);
      new_basis[3] = e4p;
      new_basis[4] = multiply(a, e1p, e4p);
      break;
    }
    case TheoremMap::T46: {
      require(params.size() == 2, Errc::InvalidParameter, "T46 takes (alpha1, alpha2)");
      Scalar a1 = nonzero(c("A1"), "A1");
      Scalar bn1 = nonzero(c("B" + std::to_string(n - 1)), "B(n-1)");
      for (int k = 1; k <= n - 3; ++k) forbid("B" + std::to_string(k));
      nonzero(a1 + params[1] * c("A" + std::to_string(n - 1)), "A1 + alpha2 A(n-1)");
      Vec e1p = zero_vector(f, n);
      for (int k = 1; k <= n; ++k) e1p[static_cast<size_t>(k - 1)] = c("A" + std::to_string(k));
      Vec en1p = zero_vector(f, n);
      en1p[static_cast<size_t>(n - 3)] = c("B" + std::to_string(n - 2));
      en1p[static_cast<size_t>(n - 2)] = bn1;
      en1p[static_cast<size_t>(n - 1)] = c("B" + std::to_string(n));
      new_basis[0] = e1p;
      for (int k = 2; k <= n - 2; ++k)
        new_basis[static_cast<size_t>(k - 1)] = multiply(a, e1p, new_basis[static_cast<size_t>(k - 2)]);
      new_basis[static_cast<size_t>(n - 2)] = en1p;
      new_basis[static_cast<size_t>(n - 1)] = multiply(a, e1p, en1p);
      break;
    }
  }

  Matrix m(n, n, f);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) m.at(row, col) = new_basis[static_cast<size_t>(col)][static_cast<size_t>(row)];
  // the template guarantees invertibility; verify anyway
  try {
    invert(m);
  } catch (const Error&) {
    fail(Errc::DegenerateChange, "assembled change of basis is singular");
  }
  return TemplateChange{m, used};
}

} // namespace nilalg
