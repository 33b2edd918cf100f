#pragma once

#include <cstdint>

#include "nilalg/field.hpp"

namespace nilalg {

/// Deterministic splitmix64 stream. The standard <random> distributions are
/// implementation-defined, so seeded outputs here are hand-rolled to keep
/// reports byte-identical across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Small-height rational: numerator in {-3..3}, denominator in {1,2,3}.
  Rational small_rational() {
    std::int64_t num = static_cast<std::int64_t>(bounded(7)) - 3;
    std::int64_t den = static_cast<std::int64_t>(bounded(3)) + 1;
    return Rational(num, den);
  }

  Rational nonzero_small_rational() {
    Rational r;
    do {
      r = small_rational();
    } while (r == 0);
    return r;
  }

  /// Uniform scalar in the field (small-height rational over Q).
  Scalar scalar(const FieldSpec& f) {
    if (f.is_prime_field()) return Scalar::from_int(f, static_cast<std::int64_t>(bounded(static_cast<std::uint64_t>(f.modulus()))));
    return Scalar::from_rational(f, small_rational());
  }

  Scalar nonzero_scalar(const FieldSpec& f) {
    Scalar s = scalar(f);
    while (s.is_zero()) s = scalar(f);
    return s;
  }

private:
  std::uint64_t state_;
};

} // namespace nilalg
