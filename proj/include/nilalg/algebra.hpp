#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/field.hpp"

namespace nilalg {

/// Structure-constant table of a finite-dimensional algebra: e_i e_j =
/// sum_k c_{ij}^k e_k with 1-based basis indices. Absent entries are zero
/// products; stored vectors are never all-zero, so table equality is map
/// equality.
class AlgebraTable {
public:
  AlgebraTable(int n, const FieldSpec& f);

  int dim() const { return n_; }
  const FieldSpec& field() const { return field_; }

  /// Sets e_i e_j; an all-zero vector erases the entry.
  void set_product(int i, int j, const Vec& value);
  void set_product_basis(int i, int j, int k, const Scalar& c);
  /// Coefficient vector of e_i e_j (zero vector when absent).
  Vec product(int i, int j) const;

  const std::map<std::pair<int, int>, Vec>& products() const { return products_; }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const AlgebraTable& o) const;
  bool operator!=(const AlgebraTable& o) const { return !(*this == o); }

  /// Deterministic total order (dim, field, then sparse entries); used to pick
  /// canonical class representatives.
  bool operator<(const AlgebraTable& o) const;

private:
  int n_;
  FieldSpec field_;
  std::map<std::pair<int, int>, Vec> products_;
  std::vector<std::string> labels_;

  void check_index(int i) const;
};

/// Incremental row-space accumulator: feeds vectors one at a time into a
/// growing RREF basis, so spans of many vectors never materialize a large
/// matrix.
class SpanBuilder {
public:
  SpanBuilder(int ambient_dim, const FieldSpec& f);

  /// Reduces v against the basis; returns true when the span grew.
  bool add(Vec v);
  bool contains(const Vec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }

  /// Canonical RREF basis rows, in order.
  const std::vector<Vec>& rows() const { return rows_; }

private:
  int ambient_;
  FieldSpec field_;
  std::vector<Vec> rows_;      // RREF rows
  std::vector<int> pivot_of_;  // pivot column per row
};

/// Subspace of F^n held as a canonical RREF basis; equality of subspaces is
/// literal equality of the basis matrices.
class Subspace {
public:
  Subspace(int ambient_dim, const FieldSpec& f); // zero subspace
  static Subspace full(int ambient_dim, const FieldSpec& f);
  static Subspace span(const std::vector<Vec>& vectors, int ambient_dim, const FieldSpec& f);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const FieldSpec& field() const { return basis_.field(); }

  bool is_zero() const { return dim() == 0; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  int ambient_;
  Matrix basis_;
};

enum class ProfileClass { NullFiliform, Filiform, FiliformOfDegree, QuasiFiliform, Other };

std::string profile_class_name(ProfileClass c);

struct DimProfile {
  std::vector<int> dims;        // dim A^1, dim A^2, ..., ending in 0 when nilpotent
  std::optional<int> nilindex;  // nullopt = not nilpotent
  ProfileClass classification = ProfileClass::Other;
  int degree = 0;  // set for FiliformOfDegree
};

/// Bilinear extension of the table: multiply(a, x, y) = sum x_i y_j (e_i e_j).
Vec multiply(const AlgebraTable& a, const Vec& x, const Vec& y);

/// All basis triples (i, j, k), lexicographic, with (e_i e_j) e_k != e_i (e_j e_k).
std::vector<std::array<int, 3>> associativity_defect(const AlgebraTable& a);

bool is_associative(const AlgebraTable& a);

struct PowerSeries {
  std::vector<Subspace> terms;  // A^1, A^2, ..., last is zero iff nilpotent
  bool nilpotent = false;
};

/// The descending series A^{i+1} = sum_{k=1..i} A^k A^{i+1-k}, computed by the
/// full convolution (so the code stays correct on non-associative tables).
/// Stops at the first zero term, or flags non-nilpotence at index 2n+1.
PowerSeries power_series(const AlgebraTable& a);

/// Smallest i with A^i = 0; nullopt when the table is not nilpotent.
std::optional<int> nilindex(const AlgebraTable& a);

/// Classifies the dimension profile; throws NotNilpotentInput for
/// non-nilpotent tables. The most specific matching label wins.
DimProfile classify_profile(const AlgebraTable& a);

struct Centers {
  Subspace left;
  Subspace right;
  Subspace two_sided;
};

/// Left/right/two-sided centers via joint nullspaces of the stacked
/// multiplication constraints.
Centers centers(const AlgebraTable& a);

/// Span of all products u v with u in U, v in V.
Subspace product_span(const AlgebraTable& a, const Subspace& u, const Subspace& v);

} // namespace nilalg
