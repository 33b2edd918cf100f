#pragma once

#include <string>

#include <json.hpp>

#include "nilalg/algebra.hpp"
#include "nilalg/census.hpp"
#include "nilalg/iso.hpp"
#include "nilalg/spectral.hpp"

namespace nilalg {

using Json = nlohmann::ordered_json;

/// Canonical table document: scalars as strings (never JSON numbers),
/// products sorted by (i, j), outputs sorted by basis index. Round trips are
/// bit-exact on canonical documents.
Json table_to_json(const AlgebraTable& a);

/// Strict parse: unknown fields and malformed entries are rejected with
/// ParseError.
AlgebraTable table_from_json(const Json& doc);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& doc);

Json invariants_to_json(const InvariantVector& v);
Json census_report_to_json(const CensusReport& r);
std::string census_classes_to_csv(const CensusReport& r);

/// Serializes with a fixed layout (2-space indent, trailing newline).
std::string dump_json(const Json& j);

Json load_json_file(const std::string& path);

/// Writes via a temp file in the same directory plus rename.
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace nilalg
