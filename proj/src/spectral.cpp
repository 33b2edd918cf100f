#include "nilalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nilalg/rng.hpp"

namespace nilalg {

bool CharSequence::operator<(const CharSequence& o) const {
  return std::lexicographical_compare(parts.begin(), parts.end(), o.parts.begin(), o.parts.end());
}

std::string CharSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

Matrix left_mult_matrix(const AlgebraTable& a, const Vec& x) {
  int n = a.dim();
  if (static_cast<int>(x.size()) != n) fail(Errc::DimensionMismatch, "vector length mismatch");
  Matrix m(n, n, a.field());
  for (int j = 0; j < n; ++j) {
    Vec col = multiply(a, x, unit_vector(a.field(), n, j));
    for (int i = 0; i < n; ++i) m.at(i, j) = col[static_cast<size_t>(i)];
  }
  return m;
}

CharSequence jordan_type(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "jordan_type needs a square matrix");
  int n = m.rows();
  // rank profile r_k = rank(m^k); r_0 = n
  std::vector<int> ranks{n};
  Matrix power = m;
  while (ranks.back() > 0) {
    int r = rank(power);
    ranks.push_back(r);
    if (r == 0) break;
    if (static_cast<int>(ranks.size()) > n + 1) fail(Errc::NotNilpotentOperator, "operator is not nilpotent");
    if (r == ranks[ranks.size() - 2]) fail(Errc::NotNilpotentOperator, "operator is not nilpotent");
    power = power * m;
  }
  int longest = static_cast<int>(ranks.size()) - 1;
  auto blocks_ge = [&](int k) { // number of blocks of size >= k
    if (k > longest) return 0;
    return ranks[static_cast<size_t>(k - 1)] - ranks[static_cast<size_t>(k)];
  };
  CharSequence seq;
  for (int size = longest; size >= 1; --size) {
    int count = blocks_ge(size) - blocks_ge(size + 1);
    for (int c = 0; c < count; ++c) seq.parts.push_back(size);
  }
  return seq;
}

namespace {

// Non-pivot coordinates of the RREF basis of A^2: the deterministic complement.
std::vector<int> complement_of_square(const AlgebraTable& a, const Subspace& a2) {
  std::vector<bool> pivot(static_cast<size_t>(a.dim()), false);
  const Matrix& b = a2.basis();
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      if (!b.at(r, c).is_zero()) {
        pivot[static_cast<size_t>(c)] = true;
        break;
      }
  std::vector<int> comp;
  for (int c = 0; c < a.dim(); ++c)
    if (!pivot[static_cast<size_t>(c)]) comp.push_back(c);
  return comp;
}

} // namespace

CharSeqResult char_sequence(const AlgebraTable& a, const CharSeqStrategy& strategy) {
  PowerSeries ps = power_series(a);
  if (!ps.nilpotent) fail(Errc::NotNilpotentInput, "char_sequence requires a nilpotent table");
  int n = a.dim();
  Subspace a2 = ps.terms.size() >= 2 ? ps.terms[1] : Subspace(n, a.field());

  CharSeqResult best;
  auto consider = [&](const Vec& x) {
    if (a2.contains(x)) return;
    CharSequence c = jordan_type(left_mult_matrix(a, x));
    if (best.witness.empty() || best.sequence < c) {
      best.sequence = c;
      best.witness = x;
    }
  };

  if (std::holds_alternative<ExhaustiveFiniteField>(strategy)) {
    if (!a.field().is_prime_field())
      fail(Errc::InvalidParameter, "exhaustive strategy requires a finite field");
    std::int64_t p = a.field().modulus();
    double total = std::pow(static_cast<double>(p), n);
    if (total > 1e7) fail(Errc::BudgetExceeded, "p^n exceeds the exhaustive budget of 10^7");
    // C(\lambda x) = C(x), so scan representatives whose first nonzero
    // coordinate is 1, in lexicographic order
    std::vector<std::int64_t> digits(static_cast<size_t>(n), 0);
    bool done = n == 0;
    while (!done) {
      int first_nonzero = -1;
      for (int i = 0; i < n; ++i)
        if (digits[static_cast<size_t>(i)] != 0) {
          first_nonzero = i;
          break;
        }
      if (first_nonzero >= 0 && digits[static_cast<size_t>(first_nonzero)] == 1) {
        Vec x;
        x.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) x.push_back(Scalar::from_int(a.field(), digits[static_cast<size_t>(i)]));
        consider(x);
      }
      // increment little-endian on the last coordinate: lexicographic order
      int pos = n - 1;
      while (pos >= 0) {
        if (++digits[static_cast<size_t>(pos)] < p) break;
        digits[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) done = true;
    }
    best.exact = true;
  } else {
    const Sampled& s = std::get<Sampled>(strategy);
    for (int c : complement_of_square(a, a2)) consider(unit_vector(a.field(), n, c));
    Rng rng(s.seed);
    int accepted = 0, attempts = 0;
    while (accepted < s.count && attempts < s.count * 20 + 100) {
      ++attempts;
      Vec x;
      x.reserve(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) x.push_back(rng.scalar(a.field()));
      if (a2.contains(x)) continue;
      consider(x);
      ++accepted;
    }
    best.exact = false;
  }

  if (best.witness.empty()) {
    // A = A^2 can only happen for the zero-dimensional algebra here (nilpotent
    // tables have A^2 proper); report the empty sequence
    best.sequence = CharSequence{};
    best.witness = zero_vector(a.field(), n);
    best.exact = std::holds_alternative<ExhaustiveFiniteField>(strategy);
  }
  return best;
}

bool rank_bound_check(const AlgebraTable& a, const Vec& base, const Vec& dir, int bound,
                      int samples, std::uint64_t seed) {
  auto check = [&](const Scalar& t) {
    Vec x = vec_add(base, vec_scale(t, dir));
    return rank(left_mult_matrix(a, x)) <= bound;
  };
  if (a.field().is_prime_field()) {
    for (std::int64_t v = 1; v < a.field().modulus(); ++v)
      if (!check(Scalar::from_int(a.field(), v))) return false;
    return true;
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i)
    if (!check(Scalar::from_rational(a.field(), rng.nonzero_small_rational()))) return false;
  return true;
}

} // namespace nilalg
