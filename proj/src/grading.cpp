#include "nilalg/grading.hpp"

namespace nilalg {

int GradedAlgebra::component_of(int adapted_pos) const {
  int acc = 0;
  for (size_t c = 0; c < component_dims.size(); ++c) {
    acc += component_dims[c];
    if (adapted_pos <= acc) return static_cast<int>(c) + 1;
  }
  fail(Errc::DimensionMismatch, "adapted position out of range");
}

GradedAlgebra associated_graded(const AlgebraTable& a) {
  PowerSeries ps = power_series(a);
  if (!ps.nilpotent) fail(Errc::NotNilpotentInput, "associated graded requires a nilpotent table");
  int n = a.dim();
  int s = static_cast<int>(ps.terms.size());  // nilindex: A^s = 0

  // complete each A^{i+1} basis to A^i, deepest level first; standard
  // coordinate vectors are preferred, RREF rows of A^i fill any remainder
  std::vector<std::vector<Vec>> blocks(static_cast<size_t>(s > 0 ? s - 1 : 0));
  SpanBuilder span(n, a.field());
  for (int i = s - 1; i >= 1; --i) {
    const Subspace& ai = ps.terms[static_cast<size_t>(i - 1)];
    std::vector<Vec>& block = blocks[static_cast<size_t>(i - 1)];
    for (int j = 0; j < n && span.dim() < ai.dim(); ++j) {
      Vec e = unit_vector(a.field(), n, j);
      if (!ai.contains(e)) continue;
      if (span.add(e)) block.push_back(std::move(e));
    }
    for (int r = 0; r < ai.basis().rows() && span.dim() < ai.dim(); ++r) {
      Vec v = ai.basis().row(r);
      if (span.add(v)) block.push_back(std::move(v));
    }
  }

  GradedAlgebra gr{{}, Matrix(n, n, a.field()), AlgebraTable(n, a.field()), {}};
  int row = 0;
  for (const auto& block : blocks) {
    gr.component_dims.push_back(static_cast<int>(block.size()));
    for (const Vec& v : block) gr.adapted.set_row(row++, v);
  }

  // coordinates of w in the adapted basis: solve adapted^T x = w
  Matrix to_adapted = invert(gr.adapted.transpose());

  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      int ci = gr.component_of(r), cj = gr.component_of(c);
      if (ci + cj >= s) continue;  // product lies in A^{i+j} = 0
      Vec w = multiply(a, gr.adapted.row(r - 1), gr.adapted.row(c - 1));
      if (vec_is_zero(w)) continue;
      Vec coords = to_adapted.apply_right(w);
      // keep exactly the block i+j; earlier blocks vanish since w is in A^{i+j}
      int lo = 0;
      for (int k = 0; k < ci + cj - 1; ++k) lo += gr.component_dims[static_cast<size_t>(k)];
      int hi = lo + gr.component_dims[static_cast<size_t>(ci + cj - 1)];
      for (int k = 0; k < n; ++k)
        if (k < lo || k >= hi) coords[static_cast<size_t>(k)] = Scalar::zero(a.field());
      gr.induced.set_product(r, c, coords);
    }

  gr.placement.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Vec e = unit_vector(a.field(), n, j);
    int depth = 1;
    for (int i = 2; i < s; ++i)
      if (ps.terms[static_cast<size_t>(i - 1)].contains(e)) depth = i;
    gr.placement.push_back(depth);
  }
  return gr;
}

NatGradedResult is_naturally_graded(const AlgebraTable& a, const NatGradedMethod& method) {
  GradedAlgebra gr = associated_graded(a);
  NatGradedResult res;

  // already graded in the adapted basis: the adapted transport is a witness
  Matrix adapted_change = gr.adapted.transpose();
  if (transport(a, adapted_change) == gr.induced) {
    res.verdict = NatGradedVerdict::Yes;
    res.witness = adapted_change;
    return res;
  }

  switch (method.kind) {
    case NatGradedMethod::Kind::Witness: {
      if (!method.witness) fail(Errc::InvalidParameter, "witness method needs a matrix");
      if (verify_witness(a, gr.induced, *method.witness)) {
        res.verdict = NatGradedVerdict::Yes;
        res.witness = method.witness;
      } else {
        res.verdict = NatGradedVerdict::Unknown;
        res.reason = "provided witness does not transport onto the graded table";
      }
      return res;
    }
    case NatGradedMethod::Kind::Invariants: {
      InvariantVector ia = invariants(a, method.iso_opts.invariant_opts);
      InvariantVector ig = invariants(gr.induced, method.iso_opts.invariant_opts);
      if (auto coord = first_invariant_mismatch(ia, ig)) {
        res.verdict = NatGradedVerdict::No;
        res.reason = *coord;
      } else {
        res.verdict = NatGradedVerdict::Unknown;
        res.reason = "invariants agree and no witness found";
      }
      return res;
    }
    case NatGradedMethod::Kind::FiniteFieldSearch: {
      if (!a.field().is_prime_field())
        fail(Errc::InvalidParameter, "finite-field search requires a GF(p) table");
      IsoResult iso = iso_search(a, gr.induced, method.iso_opts);
      switch (iso.outcome) {
        case IsoResult::Outcome::Witness:
          res.verdict = NatGradedVerdict::Yes;
          res.witness = iso.witness;
          break;
        case IsoResult::Outcome::ProvedDistinct:
          res.verdict = NatGradedVerdict::No;
          res.reason = iso.coordinate;
          break;
        case IsoResult::Outcome::ExhaustedNo:
          res.verdict = NatGradedVerdict::No;
          res.reason = "exhaustive search found no isomorphism";
          break;
        case IsoResult::Outcome::Inconclusive:
          res.verdict = NatGradedVerdict::Unknown;
          res.reason = "search inconclusive";
          break;
      }
      return res;
    }
  }
  return res;
}

} // namespace nilalg
