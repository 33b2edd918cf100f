#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"
#include "nilalg/spectral.hpp"

namespace nilalg {

/// Transport-invariant signature of a nilpotent table. The char_seq
/// coordinate is comparable only when both sides were computed exhaustively;
/// sampled sequences are lower bounds and are skipped in comparisons.
struct InvariantVector {
  std::vector<int> dim_profile;      // dims of A^1, A^2, ..., 0
  std::array<int, 3> center_dims{};  // dim Z^l, Z^r, Z
  bool commutative = false;
  CharSequence char_seq;
  bool char_seq_exact = false;
  int gen_count = 0;  // dim A / A^2
  int sym_rank = 0;   // rank of (x,y) -> xy + yx as a map A (x) A -> A
  int alt_rank = 0;   // rank of (x,y) -> xy - yx
};

/// Name of the first coordinate where the vectors differ, or nullopt when
/// equal (char_seq compared only if both sides are exact).
std::optional<std::string> first_invariant_mismatch(const InvariantVector& a,
                                                    const InvariantVector& b);

struct InvariantOptions {
  std::uint64_t seed = 0;
  int sampled_count = 40;
  /// Exhaustive char_seq budget: used when the field is finite and p^n stays
  /// under this many vectors.
  double exhaustive_budget = 1e7;
};

/// Computes the invariant vector; requires a nilpotent table.
InvariantVector invariants(const AlgebraTable& a, const InvariantOptions& opts = {});

/// Rewrites the table in the basis given by the columns of m: the new product
/// of coordinate vectors u, v is m^{-1} multiply(a, m u, m v).
AlgebraTable transport(const AlgebraTable& a, const Matrix& m);

/// True iff transport(a, m) equals b entrywise.
bool verify_witness(const AlgebraTable& a, const AlgebraTable& b, const Matrix& m);

struct IsoOptions {
  long long max_nodes = 10'000'000;
  bool use_invariants = true;
  /// Random probes over Q (finite fields search exhaustively instead).
  int probe_count = 64;
  std::uint64_t seed = 0;
  InvariantOptions invariant_opts{};
};

struct IsoResult {
  enum class Outcome { Witness, ProvedDistinct, ExhaustedNo, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::optional<Matrix> witness;  // passes verify_witness(a, b, m)
  std::string coordinate;         // separating invariant for ProvedDistinct
  long long nodes = 0;

  bool isomorphic() const { return outcome == Outcome::Witness; }
};

std::string outcome_name(IsoResult::Outcome o);

/// Isomorphism decision. Invariant comparison first (unless disabled); over
/// GF(p) a complete generator-image backtracking search follows, so the
/// answer is Witness or ExhaustedNo. Over Q only deterministic probing runs:
/// Witness or Inconclusive. Throws BudgetExceeded past max_nodes.
IsoResult iso_search(const AlgebraTable& a, const AlgebraTable& b, const IsoOptions& opts = {});

} // namespace nilalg
