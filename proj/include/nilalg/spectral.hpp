#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilalg/algebra.hpp"

namespace nilalg {

/// Jordan block sizes of a nilpotent operator, non-increasing; the parts sum
/// to the ambient dimension. Ordered lexicographically.
struct CharSequence {
  std::vector<int> parts;

  bool operator==(const CharSequence& o) const { return parts == o.parts; }
  bool operator!=(const CharSequence& o) const { return !(*this == o); }
  bool operator<(const CharSequence& o) const;
  std::string to_string() const;
};

/// Matrix of L_x : z -> x z; column j is multiply(a, x, e_j).
Matrix left_mult_matrix(const AlgebraTable& a, const Vec& x);

/// Block sizes from the rank profile: #blocks of size >= k equals
/// rank(m^{k-1}) - rank(m^k). Throws NotNilpotentOperator if m^dim != 0.
CharSequence jordan_type(const Matrix& m);

struct ExhaustiveFiniteField {};
struct Sampled {
  int count = 40;
  std::uint64_t seed = 0;
};
using CharSeqStrategy = std::variant<ExhaustiveFiniteField, Sampled>;

struct CharSeqResult {
  CharSequence sequence;
  Vec witness;
  /// True maximum (exhaustive) or a certified lower bound (sampled).
  bool exact = false;
};

/// C(A) = max over x in A \ A^2 of the Jordan type of L_x. Exhaustive
/// enumeration over GF(p) requires p^n <= 10^7; the sampled strategy scans the
/// standard complement of A^2 plus seeded random combinations and reports a
/// certified lower bound.
CharSeqResult char_sequence(const AlgebraTable& a, const CharSeqStrategy& strategy);

/// True iff rank(L_{base + t dir}) <= bound for every sampled/enumerated
/// t != 0: the whole of GF(p)* over a finite field, `samples` seeded nonzero
/// rationals over Q.
bool rank_bound_check(const AlgebraTable& a, const Vec& base, const Vec& dir, int bound,
                      int samples = 50, std::uint64_t seed = 0);

} // namespace nilalg
