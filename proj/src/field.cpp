#include "nilalg/field.hpp"

#include <algorithm>
#include <sstream>

namespace nilalg {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// extended Euclid; p prime, a != 0 mod p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(Errc::InvalidParameter, "element not invertible mod p");
  return mod_norm(t, p);
}

} // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (!is_prime(p)) fail(Errc::NotPrime, "modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  if (is_rationals()) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.size() > 4 && (s.rfind("GF(", 0) == 0 || s.rfind("gf(", 0) == 0) && s.back() == ')') {
    std::int64_t p = 0;
    try {
      p = std::stoll(s.substr(3, s.size() - 4));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad field spec: " + s);
    }
    return prime_field(p);
  }
  // short form used by CLI flags: gf2, gf3, ...
  if (s.size() > 2 && (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0)) {
    std::int64_t p = 0;
    try {
      p = std::stoll(s.substr(2));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad field spec: " + s);
    }
    return prime_field(p);
  }
  fail(Errc::ParseError, "bad field spec: " + s);
}

Scalar Scalar::from_int(const FieldSpec& f, std::int64_t v) {
  Scalar s(f);
  if (f.is_rationals())
    s.rat_ = v;
  else
    s.res_ = mod_norm(v, f.modulus());
  return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const Rational& r) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.rat_ = r;
    return s;
  }
  // reduce num/den mod p; den must be a unit
  std::int64_t p = f.modulus();
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  std::int64_t nm = static_cast<std::int64_t>(num % p);
  std::int64_t dm = static_cast<std::int64_t>(den % p);
  if (dm == 0) fail(Errc::InvalidParameter, "denominator vanishes mod " + std::to_string(p));
  s.res_ = mod_norm(mod_norm(nm, p) * mod_inverse(dm, p), p);
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& str) {
  if (str.empty()) fail(Errc::ParseError, "empty scalar literal");
  if (f.is_prime_field()) {
    try {
      size_t pos = 0;
      std::int64_t v = std::stoll(str, &pos);
      if (pos != str.size()) fail(Errc::ParseError, "bad residue literal: " + str);
      return from_int(f, v);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad residue literal: " + str);
    }
  }
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r{boost::multiprecision::cpp_int(str)};
      return from_rational(f, r);
    }
    boost::multiprecision::cpp_int num(str.substr(0, slash));
    boost::multiprecision::cpp_int den(str.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator: " + str);
    return from_rational(f, Rational(num, den));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational literal: " + str);
  }
}

bool Scalar::is_zero() const { return field_.is_rationals() ? rat_.is_zero() : res_ == 0; }

bool Scalar::is_one() const { return field_.is_rationals() ? rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = mod_norm(res_ + o.res_, field_.modulus());
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = mod_norm(res_ - o.res_, field_.modulus());
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = mod_norm(res_ * o.res_, field_.modulus());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::InvalidParameter, "inverse of zero");
  Scalar s(field_);
  if (field_.is_rationals())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.modulus());
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  return rat_.str();
}

const Rational& Scalar::rational() const {
  if (!field_.is_rationals()) fail(Errc::FieldMismatch, "rational() on a GF(p) scalar");
  return rat_;
}

std::int64_t Scalar::residue() const {
  if (!field_.is_prime_field()) fail(Errc::FieldMismatch, "residue() on a rational scalar");
  return res_;
}

Vec zero_vector(const FieldSpec& f, int n) { return Vec(static_cast<size_t>(n), Scalar::zero(f)); }

Vec unit_vector(const FieldSpec& f, int n, int index) {
  Vec v = zero_vector(f, n);
  v[static_cast<size_t>(index)] = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector sizes differ");
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::DimensionMismatch, "vector sizes differ");
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(int rows, int cols, const FieldSpec& f) : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) fail(Errc::InvalidDimension, "negative matrix dimension");
  if (rows > kMaxDim || cols > kMaxDim)
    fail(Errc::TooLarge, "matrix dimension exceeds the supported cap of " + std::to_string(kMaxDim));
  entries_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const FieldSpec& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const FieldSpec& f, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols, f);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
  return m;
}

Vec Matrix::row(int r) const {
  Vec v;
  v.reserve(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Matrix::col(int c) const {
  Vec v;
  v.reserve(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_row(int r, const Vec& v) {
  if (static_cast<int>(v.size()) != cols_) fail(Errc::DimensionMismatch, "row length mismatch");
  for (int c = 0; c < cols_; ++c) at(r, c) = v[static_cast<size_t>(c)];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) fail(Errc::FieldMismatch, "matrix fields differ");
  if (cols_ != o.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  Matrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    fail(Errc::DimensionMismatch, "matrix difference shape mismatch");
  Matrix r(*this);
  for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

Vec Matrix::apply_left(const Vec& v) const {
  if (static_cast<int>(v.size()) != rows_) fail(Errc::DimensionMismatch, "row-vector length mismatch");
  Vec r = zero_vector(field_, cols_);
  for (int i = 0; i < rows_; ++i) {
    if (v[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < cols_; ++j) {
      const Scalar& e = at(i, j);
      if (!e.is_zero()) r[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * e;
    }
  }
  return r;
}

Vec Matrix::apply_right(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(Errc::DimensionMismatch, "column-vector length mismatch");
  Vec r = zero_vector(field_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& e = at(i, j);
      if (!e.is_zero() && !v[static_cast<size_t>(j)].is_zero()) r[static_cast<size_t>(i)] += e * v[static_cast<size_t>(j)];
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const { return vec_is_zero(entries_); }

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_, field_); }

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).to_string();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    // leftmost-first pivot scan, first nonzero entry wins
    int pivot = -1;
    for (int r = lead; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(lead, c));
    Scalar inv = a.at(lead, col).inverse();
    for (int c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      Scalar f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "inverse of a non-square matrix");
  int n = m.rows();
  // Gauss-Jordan with the same row operations applied to an identity copy
  Matrix a(m);
  Matrix inv = Matrix::identity(n, m.field());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) fail(Errc::SingularMatrix, "matrix is singular");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Scalar scale = a.at(col, col).inverse();
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Scalar f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Matrix nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : r.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    Vec v = zero_vector(m.field(), n);
    v[static_cast<size_t>(free_col)] = Scalar::one(m.field());
    for (int i = 0; i < r.rank; ++i) {
      int pc = r.pivot_cols[static_cast<size_t>(i)];
      v[static_cast<size_t>(pc)] = -r.reduced.at(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  Matrix b = Matrix::from_rows(basis, m.field(), n);
  return rref(b).reduced; // canonical basis
}

} // namespace nilalg
