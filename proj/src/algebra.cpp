#include "nilalg/algebra.hpp"

#include <algorithm>
#include <array>

namespace nilalg {

AlgebraTable::AlgebraTable(int n, const FieldSpec& f) : n_(n), field_(f) {
  if (n < 0) fail(Errc::InvalidDimension, "negative dimension");
  if (n > kMaxDim) fail(Errc::TooLarge, "dimension exceeds the supported cap of " + std::to_string(kMaxDim));
  labels_.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) labels_.push_back("e" + std::to_string(i));
}

void AlgebraTable::check_index(int i) const {
  if (i < 1 || i > n_) fail(Errc::DimensionMismatch, "basis index out of range");
}

void AlgebraTable::set_product(int i, int j, const Vec& value) {
  check_index(i);
  check_index(j);
  if (static_cast<int>(value.size()) != n_) fail(Errc::DimensionMismatch, "product vector length mismatch");
  for (const Scalar& s : value)
    if (s.field() != field_) fail(Errc::FieldMismatch, "product entry from a different field");
  if (vec_is_zero(value))
    products_.erase({i, j});
  else
    products_[{i, j}] = value;
}

void AlgebraTable::set_product_basis(int i, int j, int k, const Scalar& c) {
  check_index(k);
  Vec v = product(i, j);
  v[static_cast<size_t>(k - 1)] = c;
  set_product(i, j, v);
}

Vec AlgebraTable::product(int i, int j) const {
  check_index(i);
  check_index(j);
  auto it = products_.find({i, j});
  if (it == products_.end()) return zero_vector(field_, n_);
  return it->second;
}

void AlgebraTable::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_) fail(Errc::DimensionMismatch, "label count mismatch");
  labels_ = std::move(labels);
}

bool AlgebraTable::operator==(const AlgebraTable& o) const {
  return n_ == o.n_ && field_ == o.field_ && products_ == o.products_;
}

bool AlgebraTable::operator<(const AlgebraTable& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  // dense lexicographic order over the constants c_{ijk}, (i, j, k) ascending;
  // matches the census scan order
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) {
      Vec a = product(i, j), b = o.product(i, j);
      for (int k = 0; k < n_; ++k) {
        const Scalar &x = a[static_cast<size_t>(k)], &y = b[static_cast<size_t>(k)];
        if (x == y) continue;
        if (x.field().is_prime_field()) return x.residue() < y.residue();
        return x.rational() < y.rational();
      }
    }
  return false;
}

SpanBuilder::SpanBuilder(int ambient_dim, const FieldSpec& f) : ambient_(ambient_dim), field_(f) {}

bool SpanBuilder::add(Vec v) {
  if (static_cast<int>(v.size()) != ambient_) fail(Errc::DimensionMismatch, "span vector length mismatch");
  // reduce against existing rows (each has a unit pivot)
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[static_cast<size_t>(pivot_of_[r])];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = pivot_of_[r]; j < ambient_; ++j) v[static_cast<size_t>(j)] -= f * rows_[r][static_cast<size_t>(j)];
  }
  int pivot = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!v[static_cast<size_t>(j)].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Scalar inv = v[static_cast<size_t>(pivot)].inverse();
  for (int j = pivot; j < ambient_; ++j) v[static_cast<size_t>(j)] *= inv;
  // clear the new pivot column in the older rows, keep rows sorted by pivot
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][static_cast<size_t>(pivot)];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = pivot; j < ambient_; ++j) rows_[r][static_cast<size_t>(j)] -= f * v[static_cast<size_t>(j)];
  }
  size_t pos = 0;
  while (pos < rows_.size() && pivot_of_[pos] < pivot) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivot_of_.insert(pivot_of_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
  return true;
}

bool SpanBuilder::contains(const Vec& v) const {
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = w[static_cast<size_t>(pivot_of_[r])];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = pivot_of_[r]; j < ambient_; ++j) w[static_cast<size_t>(j)] -= f * rows_[r][static_cast<size_t>(j)];
  }
  return vec_is_zero(w);
}

Subspace::Subspace(int ambient_dim, const FieldSpec& f) : ambient_(ambient_dim), basis_(0, ambient_dim, f) {}

Subspace Subspace::full(int ambient_dim, const FieldSpec& f) {
  Subspace s(ambient_dim, f);
  s.basis_ = Matrix::identity(ambient_dim, f);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient_dim, const FieldSpec& f) {
  SpanBuilder sb(ambient_dim, f);
  for (const Vec& v : vectors) sb.add(v);
  Subspace s(ambient_dim, f);
  Matrix b(sb.dim(), ambient_dim, f);
  for (int i = 0; i < sb.dim(); ++i) b.set_row(i, sb.rows()[static_cast<size_t>(i)]);
  s.basis_ = b;
  return s;
}

bool Subspace::contains(const Vec& v) const {
  // reduce v against the RREF rows
  Vec w = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < basis_.cols(); ++c)
      if (!basis_.at(r, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    const Scalar& coeff = w[static_cast<size_t>(lead)];
    if (coeff.is_zero()) continue;
    Scalar f = coeff; // pivot entries are 1
    for (int c = 0; c < basis_.cols(); ++c) w[static_cast<size_t>(c)] -= f * basis_.at(r, c);
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (int r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::DimensionMismatch, "subspace ambient dims differ");
  std::vector<Vec> rows;
  for (int r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
  for (int r = 0; r < other.basis_.rows(); ++r) rows.push_back(other.basis_.row(r));
  return span(rows, ambient_, field());
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) fail(Errc::DimensionMismatch, "subspace ambient dims differ");
  if (is_zero() || other.is_zero()) return Subspace(ambient_, field());
  // rowspace(U) = {x : x . v = 0 for v in ker(U)}, so the intersection is the
  // kernel of the combined constraint functionals
  SpanBuilder constraints(ambient_, field());
  for (const Subspace* s : {this, &other}) {
    Matrix ker = nullspace(s->basis_);
    for (int r = 0; r < ker.rows(); ++r) constraints.add(ker.row(r));
  }
  Matrix c(constraints.dim(), ambient_, field());
  for (int r = 0; r < constraints.dim(); ++r) c.set_row(r, constraints.rows()[static_cast<size_t>(r)]);
  Matrix ker = nullspace(c);
  std::vector<Vec> rows;
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return span(rows, ambient_, field());
}

std::string profile_class_name(ProfileClass c) {
  switch (c) {
    case ProfileClass::NullFiliform: return "null-filiform";
    case ProfileClass::Filiform: return "filiform";
    case ProfileClass::FiliformOfDegree: return "filiform-of-degree";
    case ProfileClass::QuasiFiliform: return "quasi-filiform";
    case ProfileClass::Other: return "other";
  }
  return "other";
}

Vec multiply(const AlgebraTable& a, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != a.dim() || static_cast<int>(y.size()) != a.dim())
    fail(Errc::DimensionMismatch, "vector length does not match the algebra dimension");
  Vec r = zero_vector(a.field(), a.dim());
  for (const auto& [key, value] : a.products()) {
    const Scalar& xi = x[static_cast<size_t>(key.first - 1)];
    if (xi.is_zero()) continue;
    const Scalar& yj = y[static_cast<size_t>(key.second - 1)];
    if (yj.is_zero()) continue;
    Scalar c = xi * yj;
    for (int k = 0; k < a.dim(); ++k) {
      const Scalar& vk = value[static_cast<size_t>(k)];
      if (!vk.is_zero()) r[static_cast<size_t>(k)] += c * vk;
    }
  }
  return r;
}

namespace {

// dense (i, j) -> product vector lookup; rows indexed (i-1)*n + (j-1)
std::vector<Vec> dense_products(const AlgebraTable& a) {
  int n = a.dim();
  std::vector<Vec> dense(static_cast<size_t>(n) * n, zero_vector(a.field(), n));
  for (const auto& [key, value] : a.products())
    dense[static_cast<size_t>(key.first - 1) * n + (key.second - 1)] = value;
  return dense;
}

// (e_i e_j) e_k - e_i (e_j e_k) via the dense table
Vec associator(const std::vector<Vec>& dense, int n, const FieldSpec& f, int i, int j, int k) {
  Vec acc = zero_vector(f, n);
  const Vec& ij = dense[static_cast<size_t>(i - 1) * n + (j - 1)];
  for (int l = 1; l <= n; ++l) {
    const Scalar& c = ij[static_cast<size_t>(l - 1)];
    if (c.is_zero()) continue;
    const Vec& lk = dense[static_cast<size_t>(l - 1) * n + (k - 1)];
    for (int m = 0; m < n; ++m)
      if (!lk[static_cast<size_t>(m)].is_zero()) acc[static_cast<size_t>(m)] += c * lk[static_cast<size_t>(m)];
  }
  const Vec& jk = dense[static_cast<size_t>(j - 1) * n + (k - 1)];
  for (int l = 1; l <= n; ++l) {
    const Scalar& c = jk[static_cast<size_t>(l - 1)];
    if (c.is_zero()) continue;
    const Vec& il = dense[static_cast<size_t>(i - 1) * n + (l - 1)];
    for (int m = 0; m < n; ++m)
      if (!il[static_cast<size_t>(m)].is_zero()) acc[static_cast<size_t>(m)] -= c * il[static_cast<size_t>(m)];
  }
  return acc;
}

} // namespace

std::vector<std::array<int, 3>> associativity_defect(const AlgebraTable& a) {
  std::vector<std::array<int, 3>> defects;
  int n = a.dim();
  std::vector<Vec> dense = dense_products(a);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!vec_is_zero(associator(dense, n, a.field(), i, j, k))) defects.push_back({i, j, k});
  return defects;
}

bool is_associative(const AlgebraTable& a) {
  int n = a.dim();
  std::vector<Vec> dense = dense_products(a);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (!vec_is_zero(associator(dense, n, a.field(), i, j, k))) return false;
  return true;
}

Subspace product_span(const AlgebraTable& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> rows;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) rows.push_back(multiply(a, u.basis().row(i), v.basis().row(j)));
  return Subspace::span(rows, a.dim(), a.field());
}

PowerSeries power_series(const AlgebraTable& a) {
  PowerSeries ps;
  int n = a.dim();
  ps.terms.push_back(Subspace::full(n, a.field()));
  if (n == 0) {
    // dim 0 is nilpotent with nilindex 1 by convention
    ps.nilpotent = true;
    return ps;
  }
  int cutoff = 2 * n + 1;
  while (static_cast<int>(ps.terms.size()) < cutoff) {
    // A^{i+1} = sum_{k=1..i} A^k A^{i+1-k}, as displayed
    int i = static_cast<int>(ps.terms.size());
    Subspace next(n, a.field());
    for (int k = 1; k <= i; ++k) {
      const Subspace& lhs = ps.terms[static_cast<size_t>(k - 1)];
      const Subspace& rhs = ps.terms[static_cast<size_t>(i - k)];
      next = next.sum(product_span(a, lhs, rhs));
    }
    ps.terms.push_back(next);
    if (next.is_zero()) {
      ps.nilpotent = true;
      return ps;
    }
  }
  ps.nilpotent = false;
  return ps;
}

std::optional<int> nilindex(const AlgebraTable& a) {
  PowerSeries ps = power_series(a);
  if (!ps.nilpotent) return std::nullopt;
  return static_cast<int>(ps.terms.size());
}

DimProfile classify_profile(const AlgebraTable& a) {
  PowerSeries ps = power_series(a);
  if (!ps.nilpotent) fail(Errc::NotNilpotentInput, "classify_profile requires a nilpotent table");
  DimProfile p;
  for (const Subspace& s : ps.terms) p.dims.push_back(s.dim());
  p.nilindex = static_cast<int>(ps.terms.size());
  int n = a.dim();

  auto dim_at = [&](int i) { // dim A^i, zero beyond the series
    return i <= static_cast<int>(p.dims.size()) ? p.dims[static_cast<size_t>(i - 1)] : 0;
  };

  // null-filiform: dim A^i = (n+1)-i for 1 <= i <= n+1
  bool null_fil = true;
  for (int i = 1; i <= n + 1; ++i)
    if (dim_at(i) != n + 1 - i) {
      null_fil = false;
      break;
    }
  if (null_fil) {
    p.classification = ProfileClass::NullFiliform;
    return p;
  }

  // filiform of degree q: dim A^i = n-q+1-i for 2 <= i <= n-q+1 and the series
  // stops there (degree 1 is the plain filiform profile). dim A^1 = n always,
  // so the defining range starts at i = 2.
  for (int q = 1; q <= n - 1; ++q) {
    if (n - q + 1 < 2) break;
    bool match = *p.nilindex == n - q + 1;
    for (int i = 2; match && i <= n - q + 1; ++i)
      if (dim_at(i) != n - q + 1 - i) match = false;
    if (match) {
      if (q == 1) {
        p.classification = ProfileClass::Filiform;
      } else {
        p.classification = ProfileClass::FiliformOfDegree;
        p.degree = q;
      }
      return p;
    }
  }

  // quasi-filiform: A^{n-2} != 0 and A^{n-1} = 0
  if (n >= 3 && dim_at(n - 2) != 0 && dim_at(n - 1) == 0) {
    p.classification = ProfileClass::QuasiFiliform;
    return p;
  }

  p.classification = ProfileClass::Other;
  return p;
}

Centers centers(const AlgebraTable& a) {
  int n = a.dim();
  // Z^l = ker of x -> (x e_j)_jk; stack the n^2 constraints
  // rows indexed by (j, k), columns by i: entry c_{ij}^k
  std::vector<Vec> left_rows, right_rows;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      Vec lrow = zero_vector(a.field(), n);
      Vec rrow = zero_vector(a.field(), n);
      for (int i = 1; i <= n; ++i) {
        lrow[static_cast<size_t>(i - 1)] = a.product(i, j)[static_cast<size_t>(k - 1)];
        rrow[static_cast<size_t>(i - 1)] = a.product(j, i)[static_cast<size_t>(k - 1)];
      }
      if (!vec_is_zero(lrow)) left_rows.push_back(std::move(lrow));
      if (!vec_is_zero(rrow)) right_rows.push_back(std::move(rrow));
    }

  auto kernel_of = [&](const std::vector<Vec>& rows) {
    // nullspace works on <= kMaxDim rows; reduce the constraints first
    Subspace row_space = Subspace::span(rows, n, a.field());
    Matrix ker = nullspace(row_space.basis());
    std::vector<Vec> kr;
    for (int r = 0; r < ker.rows(); ++r) kr.push_back(ker.row(r));
    return Subspace::span(kr, n, a.field());
  };

  Centers c{kernel_of(left_rows), kernel_of(right_rows), Subspace(n, a.field())};
  c.two_sided = c.left.intersect(c.right);
  return c;
}

} // namespace nilalg
