#include "nilalg/iso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nilalg/rng.hpp"

namespace nilalg {

std::optional<std::string> first_invariant_mismatch(const InvariantVector& a,
                                                    const InvariantVector& b) {
  if (a.dim_profile != b.dim_profile) return "dim_profile";
  if (a.center_dims != b.center_dims) return "center_dims";
  if (a.commutative != b.commutative) return "commutative";
  if (a.gen_count != b.gen_count) return "gen_count";
  if (a.sym_rank != b.sym_rank) return "sym_rank";
  if (a.alt_rank != b.alt_rank) return "alt_rank";
  if (a.char_seq_exact && b.char_seq_exact && a.char_seq != b.char_seq) return "char_seq";
  return std::nullopt;
}

InvariantVector invariants(const AlgebraTable& a, const InvariantOptions& opts) {
  PowerSeries ps = power_series(a);
  if (!ps.nilpotent) fail(Errc::NotNilpotentInput, "invariants requires a nilpotent table");
  InvariantVector v;
  for (const Subspace& s : ps.terms) v.dim_profile.push_back(s.dim());

  Centers c = centers(a);
  v.center_dims = {c.left.dim(), c.right.dim(), c.two_sided.dim()};

  v.commutative = true;
  for (const auto& [key, value] : a.products())
    if (a.product(key.second, key.first) != value) {
      v.commutative = false;
      break;
    }

  int n = a.dim();
  v.gen_count = n - (ps.terms.size() >= 2 ? ps.terms[1].dim() : 0);

  SpanBuilder sym(n, a.field()), alt(n, a.field());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec ij = a.product(i, j), ji = a.product(j, i);
      sym.add(vec_add(ij, ji));
      alt.add(vec_sub(ij, ji));
    }
  v.sym_rank = sym.dim();
  v.alt_rank = alt.dim();

  bool exhaustive = false;
  if (a.field().is_prime_field()) {
    double total = std::pow(static_cast<double>(a.field().modulus()), n);
    exhaustive = total <= opts.exhaustive_budget;
  }
  CharSeqResult cs = exhaustive
                         ? char_sequence(a, ExhaustiveFiniteField{})
                         : char_sequence(a, Sampled{opts.sampled_count, opts.seed});
  v.char_seq = cs.sequence;
  v.char_seq_exact = cs.exact;
  return v;
}

AlgebraTable transport(const AlgebraTable& a, const Matrix& m) {
  int n = a.dim();
  if (m.rows() != n || m.cols() != n) fail(Errc::DimensionMismatch, "basis change shape mismatch");
  if (m.field() != a.field()) fail(Errc::FieldMismatch, "basis change over a different field");
  Matrix minv = invert(m);  // throws SingularMatrix
  AlgebraTable out(n, a.field());
  out.set_labels(a.labels());
  for (int i = 1; i <= n; ++i) {
    Vec mi = m.col(i - 1);
    for (int j = 1; j <= n; ++j) {
      Vec prod = multiply(a, mi, m.col(j - 1));
      if (vec_is_zero(prod)) continue;
      out.set_product(i, j, minv.apply_right(prod));
    }
  }
  return out;
}

bool verify_witness(const AlgebraTable& a, const AlgebraTable& b, const Matrix& m) {
  if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "tables have different dimensions");
  return transport(a, m) == b;
}

std::string outcome_name(IsoResult::Outcome o) {
  switch (o) {
    case IsoResult::Outcome::Witness: return "witness";
    case IsoResult::Outcome::ProvedDistinct: return "proved-distinct";
    case IsoResult::Outcome::ExhaustedNo: return "exhausted-no";
    case IsoResult::Outcome::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// product word over generator indices; words are evaluated by recipe so both
// tables multiply in the same association order
struct Word {
  int gen = -1;          // >= 0 for a bare generator
  int left = -1, right = -1;  // indices into the word list otherwise
  int max_gen = 0;       // largest generator index used
};

struct WordSystem {
  std::vector<Word> words;       // spanning words, in discovery order
  std::vector<Vec> values;       // their values in a (independent, n of them)
  std::vector<int> gen_indices;  // 0-based coordinates of the generators
};

// Greedy spanning set of generator words for a nilpotent table; the kept
// values are linearly independent and span F^n.
WordSystem build_word_system(const AlgebraTable& a, const std::vector<int>& generators) {
  int n = a.dim();
  WordSystem ws;
  ws.gen_indices = generators;
  SpanBuilder span(n, a.field());
  std::vector<int> level_of;

  for (size_t g = 0; g < generators.size(); ++g) {
    Vec v = unit_vector(a.field(), n, generators[g]);
    if (!span.add(v)) fail(Errc::NotGenerated, "generator lies in the span of earlier ones");
    ws.words.push_back(Word{static_cast<int>(g), -1, -1, static_cast<int>(g)});
    ws.values.push_back(std::move(v));
    level_of.push_back(1);
  }

  for (int level = 2; level <= n + 1 && span.dim() < n; ++level) {
    size_t count = ws.words.size();
    for (size_t l = 0; l < count && span.dim() < n; ++l)
      for (size_t r = 0; r < count && span.dim() < n; ++r) {
        if (level_of[l] + level_of[r] != level) continue;
        Vec v = multiply(a, ws.values[l], ws.values[r]);
        if (!span.add(v)) continue;
        ws.words.push_back(Word{-1, static_cast<int>(l), static_cast<int>(r),
                                std::max(ws.words[l].max_gen, ws.words[r].max_gen)});
        ws.values.push_back(std::move(v));
        level_of.push_back(level);
      }
  }
  if (span.dim() < n)
    fail(Errc::NotGenerated, "complement of A^2 does not generate the table");
  return ws;
}

// Rank-consistency of the pairing w -> (value in a | value in b): a partial
// map is extendable to a linear bijection on the spans iff the stacked
// [val_a | val_b] rows have the same rank as each side alone.
bool pairing_consistent(const std::vector<const Vec*>& va, const std::vector<Vec>& vb,
                        const FieldSpec& f, int n) {
  SpanBuilder stacked(2 * n, f);
  SpanBuilder left(n, f), right(n, f);
  for (size_t i = 0; i < va.size(); ++i) {
    Vec row;
    row.reserve(static_cast<size_t>(2 * n));
    row.insert(row.end(), va[i]->begin(), va[i]->end());
    row.insert(row.end(), vb[i].begin(), vb[i].end());
    stacked.add(std::move(row));
    left.add(*va[i]);
    right.add(vb[i]);
  }
  return stacked.dim() == left.dim() && left.dim() == right.dim();
}

// All vectors of GF(p)^n in lexicographic coordinate order.
class VectorEnumerator {
public:
  VectorEnumerator(const FieldSpec& f, int n) : f_(f), n_(n), digits_(static_cast<size_t>(n), 0) {}

  bool next(Vec& out) {
    if (done_) return false;
    out.clear();
    out.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) out.push_back(Scalar::from_int(f_, digits_[static_cast<size_t>(i)]));
    int pos = n_ - 1;
    while (pos >= 0 && ++digits_[static_cast<size_t>(pos)] == f_.modulus()) digits_[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) done_ = true;
    return true;
  }

private:
  FieldSpec f_;
  int n_;
  std::vector<std::int64_t> digits_;
  bool done_ = false;
};

// Left-normed powers x, x^2, ..., x^n as rows.
std::vector<Vec> power_rows(const AlgebraTable& a, const Vec& x) {
  std::vector<Vec> rows{x};
  for (int k = 2; k <= a.dim(); ++k) rows.push_back(multiply(a, x, rows.back()));
  return rows;
}

struct GenCandidates {
  std::vector<Vec> images;
};

// Candidate images in b for one generator of a: outside B^2, matching power
// relations and the Jordan type of the left multiplication operator.
GenCandidates candidate_images(const AlgebraTable& a, const AlgebraTable& b, const Vec& gen,
                               const Subspace& b2) {
  GenCandidates out;
  int n = a.dim();
  std::vector<Vec> pa = power_rows(a, gen);
  CharSequence ja = jordan_type(left_mult_matrix(a, gen));

  VectorEnumerator en(b.field(), n);
  Vec u;
  while (en.next(u)) {
    if (vec_is_zero(u) || b2.contains(u)) continue;
    std::vector<Vec> pb = power_rows(b, u);
    std::vector<const Vec*> va;
    for (const Vec& v : pa) va.push_back(&v);
    if (!pairing_consistent(va, pb, a.field(), n)) continue;
    if (jordan_type(left_mult_matrix(b, u)) != ja) continue;
    out.images.push_back(u);
  }
  return out;
}

struct SearchState {
  const AlgebraTable& a;
  const AlgebraTable& b;
  const WordSystem& ws;
  const std::vector<GenCandidates>& candidates;
  const std::vector<std::vector<int>>& words_by_depth;  // word indices usable at depth d
  Matrix wa_inv;  // inverse of the stacked a-side word values
  long long max_nodes;
  long long nodes = 0;
  std::vector<Vec> images;    // chosen generator images
  std::optional<Matrix> witness;
};

// evaluates word w in b under the current images
Vec eval_word(SearchState& st, int w, std::vector<Vec>& cache, std::vector<bool>& have) {
  if (have[static_cast<size_t>(w)]) return cache[static_cast<size_t>(w)];
  const Word& word = st.ws.words[static_cast<size_t>(w)];
  Vec v = word.gen >= 0 ? st.images[static_cast<size_t>(word.gen)]
                        : multiply(st.b, eval_word(st, word.left, cache, have),
                                   eval_word(st, word.right, cache, have));
  cache[static_cast<size_t>(w)] = v;
  have[static_cast<size_t>(w)] = true;
  return v;
}

bool try_complete(SearchState& st) {
  int n = st.a.dim();
  const FieldSpec& f = st.a.field();
  std::vector<Vec> cache(st.ws.words.size());
  std::vector<bool> have(st.ws.words.size(), false);

  Matrix wb(n, n, f);
  for (int i = 0; i < n; ++i) wb.set_row(i, eval_word(st, i, cache, have));
  if (rank(wb) < n) return false;
  // row map: x -> x F with word_a F = word_b
  Matrix fmat = st.wa_inv * wb;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec lhs = multiply(st.b, fmat.row(i - 1), fmat.row(j - 1));
      Vec rhs = fmat.apply_left(st.a.product(i, j));
      if (lhs != rhs) return false;
    }
  // transport convention wants columns = preimages of the new basis
  st.witness = invert(fmat.transpose());
  return true;
}

bool backtrack(SearchState& st, size_t depth) {
  if (depth == st.candidates.size()) return try_complete(st);
  for (const Vec& u : st.candidates[depth].images) {
    if (++st.nodes > st.max_nodes) fail(Errc::BudgetExceeded, "isomorphism search node budget exceeded");
    st.images.push_back(u);
    // consistency of every spanning word available at this depth
    std::vector<Vec> cache(st.ws.words.size());
    std::vector<bool> have(st.ws.words.size(), false);
    std::vector<const Vec*> va;
    std::vector<Vec> vb;
    for (int w : st.words_by_depth[depth]) {
      va.push_back(&st.ws.values[static_cast<size_t>(w)]);
      vb.push_back(eval_word(st, w, cache, have));
    }
    bool ok = pairing_consistent(va, vb, st.a.field(), st.a.dim());
    if (ok && backtrack(st, depth + 1)) return true;
    st.images.pop_back();
  }
  return false;
}

IsoResult finite_field_search(const AlgebraTable& a, const AlgebraTable& b, const IsoOptions& opts,
                              IsoResult result) {
  int n = a.dim();
  if (a == b) {
    result.outcome = IsoResult::Outcome::Witness;
    result.witness = Matrix::identity(n, a.field());
    return result;
  }
  PowerSeries psa = power_series(a), psb = power_series(b);
  if (!psa.nilpotent || !psb.nilpotent)
    fail(Errc::NotNilpotentInput, "finite-field search requires nilpotent tables");
  Subspace a2 = psa.terms.size() >= 2 ? psa.terms[1] : Subspace(n, a.field());
  Subspace b2 = psb.terms.size() >= 2 ? psb.terms[1] : Subspace(n, b.field());

  // generators: standard vectors at the non-pivot coordinates of A^2
  std::vector<bool> pivot(static_cast<size_t>(n), false);
  for (int r = 0; r < a2.basis().rows(); ++r)
    for (int c = 0; c < n; ++c)
      if (!a2.basis().at(r, c).is_zero()) {
        pivot[static_cast<size_t>(c)] = true;
        break;
      }
  std::vector<int> gens;
  for (int c = 0; c < n; ++c)
    if (!pivot[static_cast<size_t>(c)]) gens.push_back(c);

  if (gens.empty()) {
    // dim 0 or degenerate: equal tables only
    if (a == b) {
      result.outcome = IsoResult::Outcome::Witness;
      result.witness = Matrix::identity(n, a.field());
    } else {
      result.outcome = IsoResult::Outcome::ExhaustedNo;
    }
    return result;
  }

  WordSystem ws = build_word_system(a, gens);

  std::vector<GenCandidates> candidates;
  for (int g : gens)
    candidates.push_back(candidate_images(a, b, unit_vector(a.field(), n, g), b2));

  // word indices whose recipes only use generators <= depth
  std::vector<std::vector<int>> words_by_depth(gens.size());
  for (size_t d = 0; d < gens.size(); ++d)
    for (size_t w = 0; w < ws.words.size(); ++w)
      if (ws.words[w].max_gen <= static_cast<int>(d)) words_by_depth[d].push_back(static_cast<int>(w));

  Matrix wa(n, n, a.field());
  for (int i = 0; i < n; ++i) wa.set_row(i, ws.values[static_cast<size_t>(i)]);

  SearchState st{a, b, ws, candidates, words_by_depth, invert(wa), opts.max_nodes, 0, {}, {}};
  backtrack(st, 0);
  result.nodes = st.nodes;
  if (st.witness) {
    result.outcome = IsoResult::Outcome::Witness;
    result.witness = st.witness;
  } else {
    result.outcome = IsoResult::Outcome::ExhaustedNo;
  }
  return result;
}

IsoResult rational_probe(const AlgebraTable& a, const AlgebraTable& b, const IsoOptions& opts,
                         IsoResult result) {
  int n = a.dim();
  const FieldSpec& f = a.field();
  if (a == b) {
    result.outcome = IsoResult::Outcome::Witness;
    result.witness = Matrix::identity(n, f);
    return result;
  }
  // permutation probes first (deterministic), then seeded random changes
  if (n <= 6) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Matrix m(n, n, f);
      for (int c = 0; c < n; ++c) m.at(perm[static_cast<size_t>(c)], c) = Scalar::one(f);
      if (transport(a, m) == b) {
        result.outcome = IsoResult::Outcome::Witness;
        result.witness = m;
        return result;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  Rng rng(opts.seed);
  for (int probe = 0; probe < opts.probe_count; ++probe) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rng.scalar(f);
    if (rank(m) < n) continue;
    if (transport(a, m) == b) {
      result.outcome = IsoResult::Outcome::Witness;
      result.witness = m;
      return result;
    }
  }
  result.outcome = IsoResult::Outcome::Inconclusive;
  return result;
}

} // namespace

IsoResult iso_search(const AlgebraTable& a, const AlgebraTable& b, const IsoOptions& opts) {
  if (a.dim() != b.dim()) fail(Errc::DimensionMismatch, "tables have different dimensions");
  if (a.field() != b.field()) fail(Errc::FieldMismatch, "tables over different fields");

  IsoResult result;
  if (opts.use_invariants) {
    InvariantVector ia = invariants(a, opts.invariant_opts);
    InvariantVector ib = invariants(b, opts.invariant_opts);
    if (auto coord = first_invariant_mismatch(ia, ib)) {
      result.outcome = IsoResult::Outcome::ProvedDistinct;
      result.coordinate = *coord;
      return result;
    }
  }

  if (a.field().is_prime_field()) return finite_field_search(a, b, opts, result);
  return rational_probe(a, b, opts, result);
}

} // namespace nilalg
