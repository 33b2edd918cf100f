#include "nilalg/census.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "nilalg/families.hpp"

namespace nilalg {

namespace {

// ---- packed fast path: GF(2), dim 3, 27-bit tables ----
//
// bit layout: c_{ijk} sits at bit 26 - (((i-1)*3 + (j-1))*3 + (k-1)), so
// ascending integers enumerate tables in lexicographic (i, j, k) order.
// product vectors are 3-bit masks with e_i at bit (3 - i).

inline std::uint32_t packed_row(std::uint32_t t, int i, int j) {
  int base = ((i - 1) * 3 + (j - 1)) * 3;
  return (t >> (24 - base)) & 7u;
}

// v * e_j for a 3-bit mask v
inline std::uint32_t packed_mul_vb(std::uint32_t t, std::uint32_t v, int j) {
  std::uint32_t r = 0;
  if (v & 4u) r ^= packed_row(t, 1, j);
  if (v & 2u) r ^= packed_row(t, 2, j);
  if (v & 1u) r ^= packed_row(t, 3, j);
  return r;
}

// e_i * v
inline std::uint32_t packed_mul_bv(std::uint32_t t, int i, std::uint32_t v) {
  std::uint32_t r = 0;
  if (v & 4u) r ^= packed_row(t, i, 1);
  if (v & 2u) r ^= packed_row(t, i, 2);
  if (v & 1u) r ^= packed_row(t, i, 3);
  return r;
}

bool packed_associative(std::uint32_t t) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::uint32_t ij = packed_row(t, i, j);
      for (int k = 1; k <= 3; ++k)
        if (packed_mul_vb(t, ij, k) != packed_mul_bv(t, i, packed_row(t, j, k))) return false;
    }
  return true;
}

// GF(2)^3 subspace as a tiny bit-RREF
struct BitSpan {
  std::uint32_t rows[3] = {0, 0, 0};
  int count = 0;

  bool add(std::uint32_t v) {
    // reduce by each row's leading bit; rows keep distinct leading bits
    for (int r = 0; r < count; ++r) {
      std::uint32_t high = 4;
      while (high && !(rows[r] & high)) high >>= 1;
      if (v & high) v ^= rows[r];
    }
    if (!v) return false;
    rows[count++] = v;
    return true;
  }
};

// product span of two packed subspaces
void packed_product_into(std::uint32_t t, const BitSpan& u, const BitSpan& v, BitSpan& out) {
  for (int a = 0; a < u.count; ++a)
    for (int b = 0; b < v.count; ++b) {
      std::uint32_t w = 0;
      for (int i = 1; i <= 3; ++i) {
        if (!(u.rows[a] & (1u << (3 - i)))) continue;
        w ^= packed_mul_bv(t, i, v.rows[b]);
      }
      out.add(w);
    }
}

bool packed_nilpotent(std::uint32_t t) {
  // A^1 = full space
  std::vector<BitSpan> terms(1);
  terms[0].add(4u);
  terms[0].add(2u);
  terms[0].add(1u);
  for (int next = 2; next <= 7; ++next) {  // cutoff 2n+1 = 7
    BitSpan sum;
    for (int k = 1; k <= next - 1; ++k)
      packed_product_into(t, terms[static_cast<size_t>(k - 1)], terms[static_cast<size_t>(next - 1 - k)], sum);
    if (sum.count == 0) return true;
    terms.push_back(sum);
  }
  return false;
}

AlgebraTable unpack_table(std::uint32_t t, const FieldSpec& f2) {
  AlgebraTable a(3, f2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      std::uint32_t row = packed_row(t, i, j);
      if (!row) continue;
      Vec v = zero_vector(f2, 3);
      for (int k = 1; k <= 3; ++k)
        if (row & (1u << (3 - k))) v[static_cast<size_t>(k - 1)] = Scalar::one(f2);
      a.set_product(i, j, v);
    }
  return a;
}

std::vector<std::uint32_t> packed_scan_range(std::uint32_t lo, std::uint32_t hi,
                                             long long& associative) {
  std::vector<std::uint32_t> nilpotent;
  for (std::uint32_t t = lo; t < hi; ++t) {
    if (!packed_associative(t)) continue;
    ++associative;
    if (packed_nilpotent(t)) nilpotent.push_back(t);
  }
  return nilpotent;
}

// ---- generic path: base-p digit counter over all structure constants ----

// constants enumerated in lexicographic (i, j, k) order, most significant first
AlgebraTable table_from_digits(const std::vector<std::int64_t>& digits, int n, const FieldSpec& f) {
  AlgebraTable a(n, f);
  size_t idx = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec v = zero_vector(f, n);
      bool nonzero = false;
      for (int k = 1; k <= n; ++k, ++idx) {
        std::int64_t d = digits[idx];
        if (d != 0) {
          v[static_cast<size_t>(k - 1)] = Scalar::from_int(f, d);
          nonzero = true;
        }
      }
      if (nonzero) a.set_product(i, j, v);
    }
  return a;
}

} // namespace

namespace census_detail {
bool packed_associative(std::uint32_t table) { return nilalg::packed_associative(table); }
bool packed_nilpotent(std::uint32_t table) { return nilalg::packed_nilpotent(table); }
AlgebraTable unpack(std::uint32_t table, const FieldSpec& gf2) { return unpack_table(table, gf2); }
}  // namespace census_detail

std::vector<AlgebraTable> enumerate_nilpotent_associative(int dim, const FieldSpec& field,
                                                          int workers, long long& total_scanned,
                                                          long long& associative_count) {
  if (!field.is_prime_field()) fail(Errc::InvalidParameter, "census enumerates over prime fields");
  if (dim < 1) fail(Errc::InvalidDimension, "census needs dim >= 1");
  double cells = std::pow(static_cast<double>(field.modulus()), dim * dim * dim);
  if (cells > 134217728.0) fail(Errc::BudgetExceeded, "p^(dim^3) exceeds the 2^27 census cap");
  if (workers < 1) workers = 1;

  total_scanned = static_cast<long long>(cells);
  associative_count = 0;
  std::vector<AlgebraTable> out;

  if (field.modulus() == 2 && dim == 3) {
    // packed scan, partitioned by range; deterministic merge in range order
    std::uint32_t total = 1u << 27;
    int w = std::min<int>(workers, 64);
    std::vector<std::vector<std::uint32_t>> found(static_cast<size_t>(w));
    std::vector<long long> assoc(static_cast<size_t>(w), 0);
    std::vector<std::thread> threads;
    std::uint32_t chunk = total / static_cast<std::uint32_t>(w);
    for (int i = 0; i < w; ++i) {
      std::uint32_t lo = chunk * static_cast<std::uint32_t>(i);
      std::uint32_t hi = (i == w - 1) ? total : lo + chunk;
      threads.emplace_back([&, i, lo, hi] {
        found[static_cast<size_t>(i)] = packed_scan_range(lo, hi, assoc[static_cast<size_t>(i)]);
      });
    }
    for (auto& th : threads) th.join();
    for (int i = 0; i < w; ++i) {
      associative_count += assoc[static_cast<size_t>(i)];
      for (std::uint32_t t : found[static_cast<size_t>(i)]) out.push_back(unpack_table(t, field));
    }
    return out;
  }

  // generic scan
  int cells_n = dim * dim * dim;
  std::vector<std::int64_t> digits(static_cast<size_t>(cells_n), 0);
  std::int64_t p = field.modulus();
  while (true) {
    AlgebraTable a = table_from_digits(digits, dim, field);
    if (is_associative(a)) {
      ++associative_count;
      if (power_series(a).nilpotent) out.push_back(a);
    }
    int pos = cells_n - 1;
    while (pos >= 0 && ++digits[static_cast<size_t>(pos)] == p) digits[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<CensusClass> orbit_classify(const std::vector<AlgebraTable>& tables,
                                        long long max_nodes) {
  std::vector<CensusClass> classes;
  std::vector<InvariantVector> class_invariants;
  IsoOptions opts;
  opts.max_nodes = max_nodes;

  for (const AlgebraTable& t : tables) {
    InvariantVector iv = invariants(t);
    bool placed = false;
    for (size_t c = 0; c < classes.size(); ++c) {
      if (first_invariant_mismatch(iv, class_invariants[c])) continue;
      IsoResult r = iso_search(t, classes[c].representative, opts);
      if (r.outcome == IsoResult::Outcome::Witness) {
        ++classes[c].orbit_size;
        placed = true;
        break;
      }
    }
    if (!placed) {
      DimProfile profile = classify_profile(t);
      CensusClass cls{t, 1, profile_class_name(profile.classification), *profile.nilindex};
      if (profile.classification == ProfileClass::FiliformOfDegree)
        cls.classification += "(" + std::to_string(profile.degree) + ")";
      classes.push_back(std::move(cls));
      class_invariants.push_back(std::move(iv));
    }
  }
  return classes;
}

CensusReport run_census(int dim, const FieldSpec& field, const CensusOptions& opts) {
  CensusReport report;
  report.field = field;
  report.dim = dim;
  std::vector<AlgebraTable> tables = enumerate_nilpotent_associative(
      dim, field, opts.workers, report.total_scanned, report.associative_count);
  report.nilpotent_count = static_cast<long long>(tables.size());

  if (opts.classify) report.classes = orbit_classify(tables, opts.max_nodes);

  if (opts.verify) {
    IsoOptions iso_opts;
    iso_opts.max_nodes = opts.max_nodes;
    AlgebraTable mu0_table = build(FamilyId::mu0(dim), field);

    TheoremVerdict null_filiform{"null-filiform tables are isomorphic to mu0", true, 0, std::nullopt};
    TheoremVerdict filiform_iff{"filiform <=> nilindex equals dim", true, 0, std::nullopt};
    TheoremVerdict square_codim_one{"dim A^2 = n-1 forces null-filiform", true, 0, std::nullopt};

    for (const AlgebraTable& t : tables) {
      DimProfile profile = classify_profile(t);
      PowerSeries ps = power_series(t);
      int dim_a2 = ps.terms.size() >= 2 ? ps.terms[1].dim() : 0;

      if (profile.classification == ProfileClass::NullFiliform) {
        ++null_filiform.checked;
        IsoResult r = iso_search(t, mu0_table, iso_opts);
        bool ok = r.outcome == IsoResult::Outcome::Witness && r.witness &&
                  verify_witness(t, mu0_table, *r.witness);
        if (!ok && null_filiform.pass) {
          null_filiform.pass = false;
          null_filiform.counterexample = t;
        }
      }

      ++filiform_iff.checked;
      bool is_fil = profile.classification == ProfileClass::Filiform;
      bool nil_n = profile.nilindex && *profile.nilindex == dim;
      if (is_fil != nil_n && filiform_iff.pass) {
        filiform_iff.pass = false;
        filiform_iff.counterexample = t;
      }

      if (dim_a2 == dim - 1) {
        ++square_codim_one.checked;
        if (profile.classification != ProfileClass::NullFiliform && square_codim_one.pass) {
          square_codim_one.pass = false;
          square_codim_one.counterexample = t;
        }
      }
    }
    report.verdicts = {null_filiform, filiform_iff, square_codim_one};
  }
  return report;
}

} // namespace nilalg
