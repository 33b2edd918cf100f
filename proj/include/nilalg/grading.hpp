#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"
#include "nilalg/iso.hpp"

namespace nilalg {

/// Associated graded algebra gr A = (+) A^i / A^{i+1} with its induced
/// products, expressed in an adapted basis whose row blocks refine the power
/// filtration (trailing blocks span A^2, A^3, ...).
struct GradedAlgebra {
  std::vector<int> component_dims;  // dim A_1, A_2, ...
  Matrix adapted;                   // rows = adapted basis vectors, block order
  AlgebraTable induced;             // graded products in the adapted basis
  std::vector<int> placement;       // original index (0-based) -> filtration depth

  /// Component holding the k-th adapted basis vector (1-based position).
  int component_of(int adapted_pos) const;
};

/// Builds gr A. Completion runs from the deepest filtration step upward,
/// preferring standard coordinate vectors with smallest index; the induced
/// product of components i and j keeps exactly the block i+j.
GradedAlgebra associated_graded(const AlgebraTable& a);

enum class NatGradedVerdict { Yes, No, Unknown };

struct NatGradedResult {
  NatGradedVerdict verdict = NatGradedVerdict::Unknown;
  std::optional<Matrix> witness;  // transport(a, witness) = induced table
  std::string reason;             // separating invariant / note for No
};

struct NatGradedMethod {
  enum class Kind { Invariants, FiniteFieldSearch, Witness };
  Kind kind = Kind::Invariants;
  std::optional<Matrix> witness;  // for Kind::Witness
  IsoOptions iso_opts{};
};

/// Decides whether a is isomorphic to gr a. A graded presentation is detected
/// directly (adapted transport equals the induced table); otherwise the
/// chosen method applies. Unknown is a legal answer over Q.
NatGradedResult is_naturally_graded(const AlgebraTable& a, const NatGradedMethod& method = {});

} // namespace nilalg
