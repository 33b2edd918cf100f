#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nilalg/census.hpp"
#include "nilalg/families.hpp"
#include "nilalg/grading.hpp"
#include "nilalg/iso.hpp"
#include "nilalg/json_io.hpp"
#include "nilalg/spectral.hpp"
#include "nilalg/verify.hpp"

namespace {

using namespace nilalg;

constexpr int kExitUsage = 64;
constexpr int kExitBadDocument = 65;
constexpr int kExitBudget = 70;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
      return kExitBadDocument;
    case Errc::InvalidParameter:
    case Errc::InvalidDimension:
      return kExitUsage;
    default:
      return kExitBudget;
  }
}

long long default_max_nodes() {
  if (const char* env = std::getenv("NILALG_MAX_NODES")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed NILALG_MAX_NODES\n";
    }
  }
  return 10'000'000;
}

Rational parse_rational_flag(const std::string& s) {
  Scalar v = Scalar::parse(FieldSpec::rationals(), s);
  return v.rational();
}

// rows separated by ';', entries by ','
std::vector<std::vector<Rational>> parse_beta_flag(const std::string& s) {
  std::vector<std::vector<Rational>> rows;
  std::stringstream row_stream(s);
  std::string row;
  while (std::getline(row_stream, row, ';')) {
    std::vector<Rational> entries;
    std::stringstream entry_stream(row);
    std::string entry;
    while (std::getline(entry_stream, entry, ',')) entries.push_back(parse_rational_flag(entry));
    rows.push_back(std::move(entries));
  }
  return rows;
}

struct BuildArgs {
  std::string family;
  int dim = 0;
  int p = 0;
  int k = 0;
  std::string alpha;
  std::string beta;
  std::string field = "Q";
  std::string out;
};

FamilyId family_from_args(const BuildArgs& args) {
  const std::string& f = args.family;
  auto alpha = [&] { return parse_rational_flag(args.alpha.empty() ? "0" : args.alpha); };
  if (f == "mu0") return FamilyId::mu0(args.dim);
  if (f == "mu0-split" || f == "mu0_split") return FamilyId::mu0_split(args.dim, args.p);
  if (f == "heisenberg-split" || f == "heisenberg_split") return FamilyId::heisenberg_split(args.p);
  if (f == "mu-prime" || f == "mu_prime") {
    if (args.beta.empty()) fail(Errc::InvalidParameter, "mu-prime needs --beta");
    return FamilyId::mu_prime(args.dim, args.p, alpha(), parse_beta_flag(args.beta));
  }
  if (f == "mu1") return FamilyId::mu1(args.k, args.dim);
  if (f == "lambda") return FamilyId::lambda(args.k);
  if (f == "pi") {
    if (args.k == 1 || args.k == 8) return FamilyId::pi(args.k, alpha());
    return FamilyId::pi(args.k);
  }
  if (f == "mu2") {
    if (args.k == 2) return FamilyId::mu2(2, args.dim, alpha());
    return FamilyId::mu2(args.k, args.dim);
  }
  fail(Errc::InvalidParameter, "unknown family: " + f);
}

void write_report(const std::string& path, const Json& doc) {
  if (path.empty()) return;
  atomic_write_file(path, dump_json(doc));
}

AlgebraTable load_table(const std::string& path) { return table_from_json(load_json_file(path)); }

std::string nilindex_text(const std::optional<int>& ni) {
  return ni ? std::to_string(*ni) : std::string("not nilpotent");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant computations for nilpotent associative algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::uint64_t seed = 0;
  int workers = 1;
  long long max_nodes = default_max_nodes();
  app.add_option("--seed", seed, "PRNG seed for sampled strategies")->capture_default_str();
  app.add_option("--workers", workers, "parallel partitions for census scans")->capture_default_str();
  app.add_option("--max-nodes", max_nodes, "isomorphism search node budget")->capture_default_str();

  // build
  BuildArgs build_args;
  CLI::App* cmd_build = app.add_subcommand("build", "construct a classified family table");
  cmd_build->add_option("--family", build_args.family, "family id (mu0, mu0-split, heisenberg-split, mu-prime, mu1, lambda, pi, mu2)")->required();
  cmd_build->add_option("--dim", build_args.dim, "dimension n");
  cmd_build->add_option("--p", build_args.p, "split/degree parameter p");
  cmd_build->add_option("--k", build_args.k, "variant index");
  cmd_build->add_option("--alpha", build_args.alpha, "alpha parameter (rational string)");
  cmd_build->add_option("--beta", build_args.beta, "beta matrix: rows ';', entries ','");
  cmd_build->add_option("--field", build_args.field, "coefficient field (Q, gf2, gf3, ...)")->capture_default_str();
  cmd_build->add_option("--out", build_args.out, "output table JSON");

  // check
  std::string check_file, check_out;
  CLI::App* cmd_check = app.add_subcommand("check", "associativity and nilindex of a table");
  cmd_check->add_option("file", check_file, "table JSON")->required();
  cmd_check->add_option("--out", check_out, "machine-readable report");

  // profile
  std::string profile_file, profile_out;
  CLI::App* cmd_profile = app.add_subcommand("profile", "dimension profile and classification");
  cmd_profile->add_option("file", profile_file, "table JSON")->required();
  cmd_profile->add_option("--out", profile_out, "machine-readable report");

  // charseq
  std::string charseq_file, charseq_out;
  bool charseq_sampled = false;
  int charseq_samples = 40;
  CLI::App* cmd_charseq = app.add_subcommand("charseq", "characteristic sequence");
  cmd_charseq->add_option("file", charseq_file, "table JSON")->required();
  cmd_charseq->add_flag("--sampled", charseq_sampled, "force the sampled strategy");
  cmd_charseq->add_option("--samples", charseq_samples, "sample count for the sampled strategy")->capture_default_str();
  cmd_charseq->add_option("--out", charseq_out, "machine-readable report");

  // grade
  std::string grade_file, grade_out;
  CLI::App* cmd_grade = app.add_subcommand("grade", "associated graded algebra");
  cmd_grade->add_option("file", grade_file, "table JSON")->required();
  cmd_grade->add_option("--out", grade_out, "machine-readable report");

  // invariants
  std::string inv_file, inv_out;
  CLI::App* cmd_inv = app.add_subcommand("invariants", "transport-invariant vector");
  cmd_inv->add_option("file", inv_file, "table JSON")->required();
  cmd_inv->add_option("--out", inv_out, "machine-readable report");

  // iso
  std::string iso_a, iso_b, iso_witness, iso_out;
  bool iso_do_search = false;
  CLI::App* cmd_iso = app.add_subcommand("iso", "isomorphism test (exit 0 iso / 1 distinct / 2 inconclusive)");
  cmd_iso->add_option("a", iso_a, "first table JSON")->required();
  cmd_iso->add_option("b", iso_b, "second table JSON")->required();
  cmd_iso->add_option("--witness", iso_witness, "verify this basis-change document");
  cmd_iso->add_flag("--search", iso_do_search, "run the isomorphism search");
  cmd_iso->add_option("--out", iso_out, "machine-readable report");

  // census
  int census_dim = 2;
  std::string census_field = "gf2", census_out, census_csv;
  bool census_classify = false, census_no_verify = false;
  CLI::App* cmd_census = app.add_subcommand("census", "exhaustive small-dimension enumeration");
  cmd_census->add_option("--dim", census_dim, "dimension to scan")->required();
  cmd_census->add_option("--field", census_field, "prime field (gf2, gf3)")->capture_default_str();
  cmd_census->add_flag("--classify", census_classify, "group tables into isomorphism classes");
  cmd_census->add_flag("--no-verify", census_no_verify, "skip the per-theorem verdicts");
  cmd_census->add_option("--out", census_out, "census report JSON");
  cmd_census->add_option("--csv", census_csv, "class representatives CSV");

  // verify-paper
  std::string verify_suite, verify_out, verify_golden;
  int verify_census_dim = 3;
  CLI::App* cmd_verify = app.add_subcommand("verify-paper", "run the acceptance suites");
  cmd_verify->add_option("--suite", verify_suite, "one of s2, s3, s4, census, all")->required();
  cmd_verify->add_option("--out", verify_out, "machine-readable report");
  cmd_verify->add_option("--golden-dir", verify_golden, "override the golden data directory");
  cmd_verify->add_option("--census-dim,--dim", verify_census_dim, "largest census dimension to scan")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cmd_build) {
      FamilyId id = family_from_args(build_args);
      AlgebraTable t = build(id, FieldSpec::parse(build_args.field));
      write_report(build_args.out, table_to_json(t));
      std::cout << id.to_string() << ": dim " << t.dim() << " over " << t.field().to_string()
                << ", " << t.products().size() << " nonzero products\n";
      return 0;
    }

    if (*cmd_check) {
      AlgebraTable t = load_table(check_file);
      auto defects = associativity_defect(t);
      auto ni = nilindex(t);
      std::cout << "associative: " << (defects.empty() ? "true" : "false")
                << "; nilindex: " << nilindex_text(ni) << "\n";
      if (!defects.empty()) {
        std::cout << defects.size() << " defect triples; first:";
        for (size_t i = 0; i < defects.size() && i < 5; ++i)
          std::cout << " (" << defects[i][0] << "," << defects[i][1] << "," << defects[i][2] << ")";
        std::cout << "\n";
      }
      Json doc;
      doc["associative"] = defects.empty();
      Json dj = Json::array();
      for (const auto& d : defects) dj.push_back(Json::array({d[0], d[1], d[2]}));
      doc["defects"] = dj;
      doc["nilindex"] = ni ? Json(*ni) : Json(nullptr);
      write_report(check_out, doc);
      return 0;
    }

    if (*cmd_profile) {
      AlgebraTable t = load_table(profile_file);
      DimProfile p = classify_profile(t);
      Json doc;
      doc["dims"] = p.dims;
      doc["nilindex"] = *p.nilindex;
      std::string cls = profile_class_name(p.classification);
      if (p.classification == ProfileClass::FiliformOfDegree) cls += "(" + std::to_string(p.degree) + ")";
      doc["classification"] = cls;
      std::cout << "dims:";
      for (int d : p.dims) std::cout << " " << d;
      std::cout << "; nilindex " << *p.nilindex << "; " << cls << "\n";
      write_report(profile_out, doc);
      return 0;
    }

    if (*cmd_charseq) {
      AlgebraTable t = load_table(charseq_file);
      bool exhaustive = !charseq_sampled && t.field().is_prime_field();
      if (exhaustive) {
        double total = 1;
        for (int i = 0; i < t.dim(); ++i) total *= static_cast<double>(t.field().modulus());
        exhaustive = total <= 1e7;
      }
      CharSeqResult r = exhaustive
                            ? char_sequence(t, ExhaustiveFiniteField{})
                            : char_sequence(t, Sampled{charseq_samples, seed});
      Json doc;
      doc["parts"] = r.sequence.parts;
      doc["strategy"] = r.exact ? "exhaustive" : "sampled";
      doc["certified"] = r.exact ? "exact" : "lower-bound";
      Json w = Json::array();
      for (const Scalar& s : r.witness) w.push_back(s.to_string());
      doc["witness"] = w;
      std::cout << "C(A) " << (r.exact ? "=" : ">=") << " " << r.sequence.to_string() << "\n";
      write_report(charseq_out, doc);
      return 0;
    }

    if (*cmd_grade) {
      AlgebraTable t = load_table(grade_file);
      GradedAlgebra gr = associated_graded(t);
      Json doc;
      doc["component_dims"] = gr.component_dims;
      doc["placement"] = gr.placement;
      doc["adapted"] = matrix_to_json(gr.adapted);
      doc["induced"] = table_to_json(gr.induced);
      NatGradedResult nat = is_naturally_graded(t);
      doc["naturally_graded"] = nat.verdict == NatGradedVerdict::Yes
                                    ? "yes"
                                    : (nat.verdict == NatGradedVerdict::No ? "no" : "unknown");
      std::cout << "components:";
      for (int d : gr.component_dims) std::cout << " " << d;
      std::cout << "; naturally graded: " << doc["naturally_graded"].get<std::string>() << "\n";
      write_report(grade_out, doc);
      return 0;
    }

    if (*cmd_inv) {
      AlgebraTable t = load_table(inv_file);
      InvariantOptions iopts;
      iopts.seed = seed;
      InvariantVector v = invariants(t, iopts);
      Json doc = invariants_to_json(v);
      std::cout << "dim profile:";
      for (int d : v.dim_profile) std::cout << " " << d;
      std::cout << "; centers (" << v.center_dims[0] << "," << v.center_dims[1] << ","
                << v.center_dims[2] << "); " << (v.commutative ? "commutative" : "noncommutative")
                << "; C(A) " << (v.char_seq_exact ? "=" : ">=") << " " << v.char_seq.to_string() << "\n";
      write_report(inv_out, doc);
      return 0;
    }

    if (*cmd_iso) {
      AlgebraTable a = load_table(iso_a), b = load_table(iso_b);
      Json doc;
      int rc = 2;
      if (!iso_witness.empty()) {
        Matrix w = matrix_from_json(load_json_file(iso_witness));
        bool ok = verify_witness(a, b, w);
        doc["outcome"] = ok ? "witness" : "witness-rejected";
        std::cout << (ok ? "witness verified\n" : "witness rejected\n");
        rc = ok ? 0 : 2;
      } else {
        IsoOptions opts;
        opts.max_nodes = max_nodes;
        opts.seed = seed;
        if (!iso_do_search) opts.probe_count = 0;
        IsoResult r = iso_search(a, b, opts);
        doc["outcome"] = outcome_name(r.outcome);
        doc["nodes"] = r.nodes;
        if (!r.coordinate.empty()) doc["coordinate"] = r.coordinate;
        if (r.witness) doc["witness"] = matrix_to_json(*r.witness);
        std::cout << outcome_name(r.outcome)
                  << (r.coordinate.empty() ? "" : " (" + r.coordinate + ")") << "\n";
        switch (r.outcome) {
          case IsoResult::Outcome::Witness: rc = 0; break;
          case IsoResult::Outcome::ProvedDistinct:
          case IsoResult::Outcome::ExhaustedNo: rc = 1; break;
          case IsoResult::Outcome::Inconclusive: rc = 2; break;
        }
      }
      write_report(iso_out, doc);
      return rc;
    }

    if (*cmd_census) {
      CensusOptions copts;
      copts.classify = census_classify;
      copts.verify = !census_no_verify;
      copts.workers = workers;
      copts.max_nodes = max_nodes;
      CensusReport report = run_census(census_dim, FieldSpec::parse(census_field), copts);
      std::cout << "scanned " << report.total_scanned << " tables; " << report.associative_count
                << " associative; " << report.nilpotent_count << " nilpotent";
      if (census_classify) std::cout << "; " << report.classes.size() << " isomorphism classes";
      std::cout << "\n";
      for (const TheoremVerdict& v : report.verdicts)
        std::cout << (v.pass ? "pass" : "FAIL") << ": " << v.name << " (" << v.checked << " checked)\n";
      write_report(census_out, census_report_to_json(report));
      if (!census_csv.empty()) atomic_write_file(census_csv, census_classes_to_csv(report));
      for (const TheoremVerdict& v : report.verdicts)
        if (!v.pass) return 1;
      return 0;
    }

    if (*cmd_verify) {
      VerifyOptions vopts;
      vopts.seed = seed;
      vopts.workers = workers;
      vopts.max_nodes = max_nodes;
      vopts.golden_dir = verify_golden;
      vopts.census_max_dim = verify_census_dim;
      std::vector<CheckResult> results = run_suite(verify_suite, vopts);
      bool all_pass = true;
      Json checks = Json::array();
      for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "pass" : "FAIL") << " [criterion " << r.id << "] " << r.name;
        if (!r.details.empty()) std::cout << " -- " << r.details;
        std::cout << "\n";
        Json c;
        c["criterion"] = r.id;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["seconds"] = r.seconds;
        c["limit_seconds"] = r.limit_seconds;
        c["details"] = r.details;
        checks.push_back(c);
      }
      Json doc;
      doc["suite"] = verify_suite;
      doc["pass"] = all_pass;
      doc["checks"] = checks;
      write_report(verify_out, doc);
      return all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitUsage;
}
