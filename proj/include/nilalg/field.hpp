#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilalg/error.hpp"

namespace nilalg {

using Rational = boost::multiprecision::cpp_rational;

/// Largest supported matrix/table dimension. Everything here is desk scale;
/// bigger inputs are rejected with a clear error instead of grinding.
inline constexpr int kMaxDim = 64;

/// The coefficient field: the rationals, or a prime field GF(p).
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime_field(std::int64_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }
  /// Characteristic p for GF(p); 0 for the rationals.
  std::int64_t modulus() const { return p_; }

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  /// "Q" or "GF(p)".
  std::string to_string() const;
  static FieldSpec parse(const std::string& s);

private:
  FieldSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/// Exact scalar: a canonical rational (reduced, positive denominator) or a
/// residue in [0, p). Equality is plain value equality; there is no rounding
/// anywhere.
class Scalar {
public:
  Scalar() : field_(FieldSpec::rationals()) {}
  explicit Scalar(const FieldSpec& f) : field_(f) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, std::int64_t v);
  static Scalar from_rational(const FieldSpec& f, const Rational& r);
  /// Parses "p/q" or "p" (rationals) / a decimal residue (GF(p)).
  static Scalar parse(const FieldSpec& f, const std::string& s);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Exact division; the divisor must be nonzero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical form, suitable for serialization and ordering.
  std::string to_string() const;

  /// Rational value; only valid over Q.
  const Rational& rational() const;
  /// Residue in [0, p); only valid over GF(p).
  std::int64_t residue() const;

private:
  FieldSpec field_;
  Rational rat_;          // used over Q
  std::int64_t res_ = 0;  // used over GF(p)

  void check_same_field(const Scalar& o) const;
};

using Vec = std::vector<Scalar>;

Vec zero_vector(const FieldSpec& f, int n);
Vec unit_vector(const FieldSpec& f, int n, int index); // 0-based index
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

/// Dense row-major matrix over a single field. Dimensions are capped at
/// kMaxDim; all arithmetic is exact.
class Matrix {
public:
  Matrix(int rows, int cols, const FieldSpec& f);
  static Matrix identity(int n, const FieldSpec& f);
  static Matrix from_rows(const std::vector<Vec>& rows, const FieldSpec& f, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Row vector times matrix.
  Vec apply_left(const Vec& v) const;
  /// Matrix times column vector.
  Vec apply_right(const Vec& v) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  std::string to_string() const;

private:
  int rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivot_cols; // 0-based, ascending
};

/// Unique reduced row echelon form; pivots chosen leftmost-first (arithmetic
/// is exact, so no magnitude heuristics).
RrefResult rref(const Matrix& m);

int rank(const Matrix& m);

/// Exact inverse; throws SingularMatrix if rank < n.
Matrix invert(const Matrix& m);

/// Rows form the canonical (RREF) basis of the right kernel {v : m v = 0}.
Matrix nullspace(const Matrix& m);

} // namespace nilalg
