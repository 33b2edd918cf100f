#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"
#include "nilalg/iso.hpp"

namespace nilalg {

struct CensusOptions {
  bool classify = true;
  bool verify = true;       // run the per-theorem verdicts
  int workers = 1;          // range partitions for the scan
  long long max_nodes = 10'000'000;  // iso-search budget during classification
};

struct CensusClass {
  AlgebraTable representative;  // lexicographically least member
  long long orbit_size = 0;
  std::string classification;
  int nilindex = 0;
};

struct TheoremVerdict {
  std::string name;
  bool pass = false;
  long long checked = 0;
  std::optional<AlgebraTable> counterexample;
};

struct CensusReport {
  FieldSpec field = FieldSpec::rationals();
  int dim = 0;
  long long total_scanned = 0;
  long long associative_count = 0;
  long long nilpotent_count = 0;
  std::vector<CensusClass> classes;
  std::vector<TheoremVerdict> verdicts;
};

/// Every structure-constant assignment over GF(p) in ascending lexicographic
/// order, filtered to associative nilpotent tables. Requires p^(dim^3) <= 2^27.
/// Counts of scanned/associative tables are reported through the out-params.
std::vector<AlgebraTable> enumerate_nilpotent_associative(int dim, const FieldSpec& field,
                                                          int workers, long long& total_scanned,
                                                          long long& associative_count);

/// Groups tables (same dim/field) into isomorphism classes with iso_search;
/// complete at census scale. Representatives are the lexicographically least
/// members; orbit sizes partition the input.
std::vector<CensusClass> orbit_classify(const std::vector<AlgebraTable>& tables,
                                        long long max_nodes);

/// Full census: scan, optional classification, optional theorem verdicts
/// (null-filiform => isomorphic to mu0; filiform <=> nilindex n;
/// dim A^2 = n-1 => null-filiform).
CensusReport run_census(int dim, const FieldSpec& field, const CensusOptions& opts = {});

/// Packed GF(2) dim-3 kernels, exposed so tests can cross-check them against
/// the generic table path.
namespace census_detail {
bool packed_associative(std::uint32_t table);
bool packed_nilpotent(std::uint32_t table);
AlgebraTable unpack(std::uint32_t table, const FieldSpec& gf2);
}  // namespace census_detail

} // namespace nilalg
