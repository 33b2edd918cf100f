#include "nilalg/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace nilalg {

namespace {

void require_fields(const Json& doc, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const std::string& what) {
  if (!doc.is_object()) fail(Errc::ParseError, what + ": expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!required.count(key) && !optional.count(key))
      fail(Errc::ParseError, what + ": unknown field '" + key + "'");
  }
  for (const std::string& key : required)
    if (!doc.contains(key)) fail(Errc::ParseError, what + ": missing field '" + key + "'");
}

int get_int(const Json& doc, const std::string& key) {
  if (!doc.at(key).is_number_integer()) fail(Errc::ParseError, "field '" + key + "' must be an integer");
  return doc.at(key).get<int>();
}

std::string get_string(const Json& j, const std::string& what) {
  if (!j.is_string()) fail(Errc::ParseError, what + " must be a string");
  return j.get<std::string>();
}

} // namespace

Json table_to_json(const AlgebraTable& a) {
  Json doc;
  doc["schema_version"] = 1;
  doc["field"] = a.field().to_string();
  doc["dim"] = a.dim();
  doc["labels"] = a.labels();
  Json products = Json::array();
  for (const auto& [key, value] : a.products()) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    Json out = Json::array();
    for (int k = 0; k < a.dim(); ++k) {
      const Scalar& c = value[static_cast<size_t>(k)];
      if (!c.is_zero()) out.push_back(Json::array({k + 1, c.to_string()}));
    }
    entry["out"] = out;
    products.push_back(entry);
  }
  doc["products"] = products;
  return doc;
}

AlgebraTable table_from_json(const Json& doc) {
  require_fields(doc, {"schema_version", "field", "dim", "products"}, {"labels"}, "table document");
  if (get_int(doc, "schema_version") != 1) fail(Errc::ParseError, "unsupported schema_version");
  FieldSpec field = FieldSpec::parse(get_string(doc.at("field"), "field"));
  int n = get_int(doc, "dim");
  if (n < 0 || n > kMaxDim) fail(Errc::ParseError, "dim out of range");
  AlgebraTable a(n, field);

  if (doc.contains("labels")) {
    if (!doc.at("labels").is_array() || static_cast<int>(doc.at("labels").size()) != n)
      fail(Errc::ParseError, "labels must list one string per basis element");
    std::vector<std::string> labels;
    for (const Json& l : doc.at("labels")) labels.push_back(get_string(l, "label"));
    a.set_labels(std::move(labels));
  }

  if (!doc.at("products").is_array()) fail(Errc::ParseError, "products must be an array");
  std::set<std::pair<int, int>> seen;
  for (const Json& entry : doc.at("products")) {
    require_fields(entry, {"i", "j", "out"}, {}, "product entry");
    int i = get_int(entry, "i"), j = get_int(entry, "j");
    if (i < 1 || i > n || j < 1 || j > n) fail(Errc::ParseError, "product index out of range");
    if (!seen.insert({i, j}).second) fail(Errc::ParseError, "duplicate product entry");
    if (!entry.at("out").is_array()) fail(Errc::ParseError, "product out must be an array");
    Vec v = zero_vector(field, n);
    for (const Json& term : entry.at("out")) {
      if (!term.is_array() || term.size() != 2 || !term.at(0).is_number_integer())
        fail(Errc::ParseError, "product term must be [index, scalar-string]");
      int k = term.at(0).get<int>();
      if (k < 1 || k > n) fail(Errc::ParseError, "product term index out of range");
      v[static_cast<size_t>(k - 1)] = Scalar::parse(field, get_string(term.at(1), "scalar"));
    }
    a.set_product(i, j, v);
  }
  return a;
}

Json matrix_to_json(const Matrix& m) {
  Json doc;
  doc["schema_version"] = 1;
  doc["field"] = m.field().to_string();
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    entries.push_back(row);
  }
  doc["entries"] = entries;
  return doc;
}

Matrix matrix_from_json(const Json& doc) {
  require_fields(doc, {"schema_version", "field", "rows", "cols", "entries"}, {}, "matrix document");
  if (get_int(doc, "schema_version") != 1) fail(Errc::ParseError, "unsupported schema_version");
  FieldSpec field = FieldSpec::parse(get_string(doc.at("field"), "field"));
  int rows = get_int(doc, "rows"), cols = get_int(doc, "cols");
  if (rows < 0 || cols < 0 || rows > kMaxDim || cols > kMaxDim)
    fail(Errc::ParseError, "matrix dimensions out of range");
  Matrix m(rows, cols, field);
  if (!doc.at("entries").is_array() || static_cast<int>(doc.at("entries").size()) != rows)
    fail(Errc::ParseError, "entries must hold one array per row");
  for (int i = 0; i < rows; ++i) {
    const Json& row = doc.at("entries").at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(Errc::ParseError, "matrix row length mismatch");
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::parse(field, get_string(row.at(static_cast<size_t>(j)), "entry"));
  }
  return m;
}

Json invariants_to_json(const InvariantVector& v) {
  Json doc;
  doc["dim_profile"] = v.dim_profile;
  doc["center_dims"] = Json::array({v.center_dims[0], v.center_dims[1], v.center_dims[2]});
  doc["commutative"] = v.commutative;
  doc["char_seq"] = Json{{"parts", v.char_seq.parts},
                         {"strategy", v.char_seq_exact ? "exhaustive" : "sampled"},
                         {"certified", v.char_seq_exact ? "exact" : "lower-bound"}};
  doc["gen_count"] = v.gen_count;
  doc["sym_rank"] = v.sym_rank;
  doc["alt_rank"] = v.alt_rank;
  return doc;
}

Json census_report_to_json(const CensusReport& r) {
  Json doc;
  doc["schema_version"] = 1;
  doc["field"] = r.field.to_string();
  doc["dim"] = r.dim;
  doc["total_tables_scanned"] = r.total_scanned;
  doc["associative_count"] = r.associative_count;
  doc["nilpotent_count"] = r.nilpotent_count;
  doc["iso_class_count"] = static_cast<long long>(r.classes.size());
  Json classes = Json::array();
  for (const CensusClass& c : r.classes) {
    Json entry;
    entry["representative"] = table_to_json(c.representative);
    entry["orbit_size"] = c.orbit_size;
    entry["classification"] = c.classification;
    entry["nilindex"] = c.nilindex;
    classes.push_back(entry);
  }
  doc["classes"] = classes;
  Json verdicts = Json::array();
  for (const TheoremVerdict& v : r.verdicts) {
    Json entry;
    entry["name"] = v.name;
    entry["pass"] = v.pass;
    entry["checked"] = v.checked;
    entry["counterexample"] = v.counterexample ? table_to_json(*v.counterexample) : Json(nullptr);
    verdicts.push_back(entry);
  }
  doc["verdicts"] = verdicts;
  return doc;
}

std::string census_classes_to_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "class,orbit_size,classification,nilindex,table\n";
  for (size_t i = 0; i < r.classes.size(); ++i) {
    const CensusClass& c = r.classes[i];
    std::ostringstream table;
    bool first = true;
    for (const auto& [key, value] : c.representative.products()) {
      for (int k = 0; k < c.representative.dim(); ++k) {
        const Scalar& s = value[static_cast<size_t>(k)];
        if (s.is_zero()) continue;
        if (!first) table << " ";
        first = false;
        table << "c" << key.first << key.second << "^" << (k + 1) << "=" << s.to_string();
      }
    }
    os << i << "," << c.orbit_size << "," << c.classification << "," << c.nilindex << ",\""
       << table.str() << "\"\n";
  }
  return os.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::ParseError, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(Errc::ParseError, "cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

} // namespace nilalg
