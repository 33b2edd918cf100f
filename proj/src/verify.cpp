#include "nilalg/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "nilalg/census.hpp"
#include "nilalg/families.hpp"
#include "nilalg/grading.hpp"
#include "nilalg/iso.hpp"
#include "nilalg/json_io.hpp"
#include "nilalg/rng.hpp"
#include "nilalg/spectral.hpp"

#ifndef NILALG_DEFAULT_GOLDEN_DIR
#define NILALG_DEFAULT_GOLDEN_DIR ""
#endif

namespace nilalg {

namespace {

const FieldSpec kQ = FieldSpec::rationals();

CheckResult timed_check(int id, const std::string& name, double limit,
                        const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.limit_seconds = limit;
  auto start = std::chrono::steady_clock::now();
  try {
    r.pass = body(r.details);
  } catch (const Error& e) {
    r.pass = false;
    r.details = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.pass && limit > 0 && r.seconds > limit) {
    r.pass = false;
    r.details += (r.details.empty() ? "" : "; ") + std::string("exceeded the runtime budget");
  }
  return r;
}

// order-insensitive JSON equality (ordered_json compares element order)
bool json_semantic_equal(const Json& a, const Json& b) {
  return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump());
}

std::vector<Rational> parameter_grid() {
  return {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(1, 2)};
}

struct FamilyInstance {
  FamilyId id;
  std::string golden;  // golden file stem, empty if none
};

std::vector<FamilyInstance> fidelity_instances() {
  std::vector<FamilyInstance> out;
  auto grid = parameter_grid();

  for (int n = 1; n <= 12; ++n) out.push_back({FamilyId::mu0(n), n == 4 ? "mu0_4" : ""});
  for (int n = 3; n <= 12; ++n)
    for (int p = 1; p <= n - 2; ++p)
      out.push_back({FamilyId::mu0_split(n, p), (n == 5 && p == 3) ? "mu0_split_5_3" : ""});
  for (int p = 1; p <= 10; ++p)
    out.push_back({FamilyId::heisenberg_split(p),
                   p == 1 ? "heisenberg_split_1" : (p == 3 ? "heisenberg_split_3" : "")});

  for (int n = 4; n <= 12; ++n)
    for (int p = 1; p <= n - 3; ++p) {
      std::vector<std::vector<std::vector<Rational>>> betas;
      auto constant = [&](const Rational& v) {
        return std::vector<std::vector<Rational>>(static_cast<size_t>(p),
                                                  std::vector<Rational>(static_cast<size_t>(p), v));
      };
      betas.push_back(constant(Rational(1)));
      betas.push_back(constant(Rational(1, 2)));
      auto pat1 = constant(Rational(0));
      auto pat2 = constant(Rational(0));
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
          pat1[static_cast<size_t>(i)][static_cast<size_t>(j)] = grid[static_cast<size_t>((i * 3 + j) % 6)];
          pat2[static_cast<size_t>(i)][static_cast<size_t>(j)] = grid[static_cast<size_t>((i + 2 * j) % 6)];
        }
      betas.push_back(pat1);
      betas.push_back(pat2);
      for (const Rational& alpha : {Rational(0), Rational(1)})
        for (size_t b = 0; b < betas.size(); ++b) {
          bool golden = n == 6 && p == 2 && alpha == 1 && b == 2;
          out.push_back({FamilyId::mu_prime(n, p, alpha, betas[b]), golden ? "mu_prime_6_2" : ""});
        }
    }

  for (int k = 1; k <= 4; ++k)
    for (int n = 4; n <= 12; ++n) {
      std::string g;
      if (n == 5 || n == 6) g = "mu1_" + std::to_string(k) + "_" + std::to_string(n);
      out.push_back({FamilyId::mu1(k, n), g});
    }

  out.push_back({FamilyId::lambda(1), "lambda_1"});
  out.push_back({FamilyId::lambda(2), "lambda_2"});

  for (const Rational& a : grid) {
    out.push_back({FamilyId::pi(1, a), a == 0 ? "pi_1_0" : (a == 1 ? "pi_1_1" : "")});
    out.push_back({FamilyId::pi(8, a), a == 0 ? "pi_8_0" : (a == 2 ? "pi_8_2" : "")});
  }
  for (int k = 2; k <= 7; ++k) out.push_back({FamilyId::pi(k), "pi_" + std::to_string(k)});

  for (int n = 6; n <= 12; ++n) {
    out.push_back({FamilyId::mu2(1, n), n <= 7 ? "mu2_1_" + std::to_string(n) : ""});
    out.push_back({FamilyId::mu2(3, n), n == 6 ? "mu2_3_6" : ""});
    out.push_back({FamilyId::mu2(4, n), n == 6 ? "mu2_4_6" : ""});
    for (const Rational& a : grid) {
      std::string g;
      if (n == 6 && a == 0) g = "mu2_2_6_0";
      if (n == 6 && a == 2) g = "mu2_2_6_2";
      out.push_back({FamilyId::mu2(2, n, a), g});
    }
  }
  return out;
}

bool criterion1_family_fidelity(const VerifyOptions& opts, std::string& details) {
  int checked = 0, goldens = 0;
  for (const FamilyInstance& inst : fidelity_instances()) {
    AlgebraTable t = build(inst.id);
    if (!associativity_defect(t).empty()) {
      details = inst.id.to_string() + " has associativity defects";
      return false;
    }
    ++checked;
    if (!inst.golden.empty()) {
      Json expected = load_json_file(opts.golden_dir + "/families/" + inst.golden + ".json");
      if (!json_semantic_equal(table_to_json(t), expected)) {
        details = inst.id.to_string() + " does not match golden " + inst.golden;
        return false;
      }
      ++goldens;
    }
  }
  std::ostringstream os;
  os << checked << " instances associative, " << goldens << " golden tables matched";
  details = os.str();
  return true;
}

// census shared between criteria 2 and 3
struct CensusOutcome {
  std::vector<CensusReport> reports;
  std::string error;
};

CensusOutcome run_census_scope(const VerifyOptions& opts) {
  CensusOutcome out;
  try {
    FieldSpec gf2 = FieldSpec::prime_field(2);
    CensusOptions copts;
    copts.workers = opts.workers;
    copts.max_nodes = opts.max_nodes;
    for (int dim = 1; dim <= opts.census_max_dim; ++dim)
      out.reports.push_back(run_census(dim, gf2, copts));
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

bool criterion2_census_mu0(const CensusOutcome& census, const VerifyOptions& opts,
                           std::string& details) {
  if (!census.error.empty()) {
    details = census.error;
    return false;
  }
  Json golden = load_json_file(opts.golden_dir + "/census_gf2.json");
  std::ostringstream os;
  for (const CensusReport& r : census.reports) {
    for (const TheoremVerdict& v : r.verdicts)
      if (v.name.rfind("null-filiform", 0) == 0 && !v.pass) {
        details = "dim " + std::to_string(r.dim) + ": " + v.name + " failed";
        return false;
      }
    long long members = 0;
    for (const CensusClass& c : r.classes) members += c.orbit_size;
    if (members != r.nilpotent_count) {
      details = "dim " + std::to_string(r.dim) + ": orbit sizes do not partition the nilpotent set";
      return false;
    }
    bool found = false;
    for (const Json& g : golden.at("dims")) {
      if (g.at("dim").get<int>() != r.dim) continue;
      found = true;
      if (g.at("total").get<long long>() != r.total_scanned ||
          g.at("associative").get<long long>() != r.associative_count ||
          g.at("nilpotent").get<long long>() != r.nilpotent_count ||
          g.at("classes").get<long long>() != static_cast<long long>(r.classes.size())) {
        details = "dim " + std::to_string(r.dim) + " counts differ from the golden record";
        return false;
      }
    }
    if (!found) {
      details = "no golden record for dim " + std::to_string(r.dim);
      return false;
    }
    os << "dim " << r.dim << ": " << r.nilpotent_count << " nilpotent tables, "
       << r.classes.size() << " classes; ";
  }
  details = os.str();
  return true;
}

bool criterion3_census_propositions(const CensusOutcome& census, std::string& details) {
  if (!census.error.empty()) {
    details = census.error;
    return false;
  }
  long long checked = 0;
  for (const CensusReport& r : census.reports)
    for (const TheoremVerdict& v : r.verdicts) {
      if (v.name.rfind("null-filiform", 0) == 0) continue;
      checked += v.checked;
      if (!v.pass) {
        details = "dim " + std::to_string(r.dim) + ": " + v.name + " failed";
        return false;
      }
    }
  details = "zero counterexamples over " + std::to_string(checked) + " checks";
  return true;
}

bool criterion4_char_sequences(std::string& details) {
  FieldSpec gf5 = FieldSpec::prime_field(5);
  struct Expect {
    FamilyId id;
    std::vector<int> parts;
  };
  std::vector<Expect> expects;
  for (int n = 2; n <= 6; ++n) expects.push_back({FamilyId::mu0(n), {n}});
  for (int n : {6, 7}) expects.push_back({FamilyId::mu2(1, n), {n - 2, 1, 1}});
  for (const Rational& a : {Rational(0), Rational(1), Rational(2)})
    expects.push_back({FamilyId::pi(1, a), {3, 2}});
  for (int k = 2; k <= 7; ++k) expects.push_back({FamilyId::pi(k), {3, 2}});
  for (const Rational& a : {Rational(0), Rational(2)}) expects.push_back({FamilyId::pi(8, a), {3, 2}});
  for (int n : {6, 7}) {
    for (const Rational& a : {Rational(0), Rational(1), Rational(2)})
      expects.push_back({FamilyId::mu2(2, n, a), {n - 2, 2}});
    expects.push_back({FamilyId::mu2(3, n), {n - 2, 2}});
    expects.push_back({FamilyId::mu2(4, n), {n - 2, 2}});
  }

  for (const Expect& e : expects) {
    CharSeqResult r = char_sequence(build(e.id, gf5), ExhaustiveFiniteField{});
    if (!r.exact || r.sequence.parts != e.parts) {
      details = e.id.to_string() + " gave " + r.sequence.to_string();
      return false;
    }
  }
  details = std::to_string(expects.size()) + " exhaustive sequences over GF(5) match";
  return true;
}

bool criterion5_rank_bound(const VerifyOptions& opts, std::string& details) {
  FieldSpec gf5 = FieldSpec::prime_field(5);
  for (int n : {6, 7}) {
    AlgebraTable over_q = build(FamilyId::mu2(1, n));
    AlgebraTable over_5 = build(FamilyId::mu2(1, n), gf5);
    Vec base5 = unit_vector(gf5, n, 0), dir5 = unit_vector(gf5, n, n - 2);
    Vec baseq = unit_vector(kQ, n, 0), dirq = unit_vector(kQ, n, n - 2);
    if (!rank_bound_check(over_5, base5, dir5, n - 3)) {
      details = "GF(5) rank bound violated at n = " + std::to_string(n);
      return false;
    }
    if (!rank_bound_check(over_q, baseq, dirq, n - 3, 50, opts.seed)) {
      details = "rational rank bound violated at n = " + std::to_string(n);
      return false;
    }
  }
  details = "rank L_{e1 + A e_{n-1}} <= n-3 for all GF(5) A != 0 and 50 rationals, n = 6, 7";
  return true;
}

// one valid random template change + map consistency trial
bool map_trial(TheoremMap theorem, int n, const std::vector<Scalar>& params, Rng& rng,
               std::string& details) {
  const FieldSpec& f = params[0].field();
  auto table_of = [&](const std::vector<Scalar>& p) {
    switch (theorem) {
      case TheoremMap::T39: return mu1_general(n, p[0], p[1]);
      case TheoremMap::Lam: return lambda_general(p[0]);
      case TheoremMap::Pi45: return pi_general(Scalar::zero(f), p[0], Scalar::zero(f), p[1]);
      case TheoremMap::T46: return mu2_general(n, p[0], p[1]);
    }
    fail(Errc::InvalidParameter, "bad theorem");
  };
  AlgebraTable a = table_of(params);

  for (int attempt = 0; attempt < 50; ++attempt) {
    NamedCoeffs coeffs;
    switch (theorem) {
      case TheoremMap::T39:
        coeffs["A1"] = Scalar::from_rational(f, rng.nonzero_small_rational());
        for (int k = 2; k <= n; ++k) coeffs["A" + std::to_string(k)] = Scalar::from_rational(f, rng.small_rational());
        coeffs["B" + std::to_string(n - 1)] = Scalar::from_rational(f, rng.small_rational());
        coeffs["B" + std::to_string(n)] = Scalar::from_rational(f, rng.nonzero_small_rational());
        break;
      case TheoremMap::Lam:
        coeffs["A1"] = Scalar::from_rational(f, rng.nonzero_small_rational());
        coeffs["A4"] = Scalar::from_rational(f, rng.small_rational());
        coeffs["B4"] = Scalar::from_rational(f, rng.nonzero_small_rational());
        break;
      case TheoremMap::Pi45:
        coeffs["A1"] = Scalar::from_rational(f, rng.nonzero_small_rational());
        coeffs["A2"] = Scalar::from_rational(f, rng.small_rational());
        coeffs["B2"] = Scalar::from_rational(f, rng.nonzero_small_rational());
        break;
      case TheoremMap::T46:
        coeffs["A1"] = Scalar::from_rational(f, rng.nonzero_small_rational());
        for (int k = 2; k <= n; ++k) coeffs["A" + std::to_string(k)] = Scalar::from_rational(f, rng.small_rational());
        coeffs["B" + std::to_string(n - 2)] = Scalar::from_rational(f, rng.small_rational());
        coeffs["B" + std::to_string(n - 1)] = Scalar::from_rational(f, rng.nonzero_small_rational());
        coeffs["B" + std::to_string(n)] = Scalar::from_rational(f, rng.small_rational());
        break;
    }
    try {
      TemplateChange change = make_template_change(theorem, a, params, coeffs);
      std::vector<Scalar> mapped = parameter_map(theorem, n, params, change.coeffs);
      AlgebraTable expected = table_of(mapped);
      if (transport(a, change.matrix) != expected) {
        details = "transport disagrees with the mapped constructor";
        return false;
      }
      return true;
    } catch (const Error& e) {
      if (e.code() == Errc::DegenerateChange) continue;  // resample
      throw;
    }
  }
  details = "could not draw an admissible change";
  return false;
}

bool criterion6_parameter_maps(const VerifyOptions& opts, std::string& details) {
  Rng rng(opts.seed + 600);
  auto q = [&](long long num, long long den = 1) { return Scalar::from_rational(kQ, Rational(num, den)); };

  struct Plan {
    TheoremMap theorem;
    int n;
    std::vector<std::vector<Scalar>> params;
    int trials;
  };
  std::vector<Plan> plans = {
      {TheoremMap::T39, 5, {{q(0), q(0)}, {q(0), q(4)}, {q(1), q(0)}, {q(1), q(1)}, {q(2), q(3)}}, 50},
      {TheoremMap::T39, 6, {{q(0), q(4)}, {q(1), q(2)}}, 50},
      {TheoremMap::Lam, 5, {{q(0)}, {q(1)}, {q(2)}, {q(-1)}, {q(1, 2)}}, 100},
      {TheoremMap::Pi45, 5, {{q(0), q(0)}, {q(1), q(0)}, {q(2), q(1)}, {q(1), q(2)}, {q(-1), q(1, 2)}}, 100},
      {TheoremMap::T46, 6, {{q(0), q(0)}, {q(2), q(0)}, {q(1), q(1)}, {q(0), q(1)}, {q(3), q(2)}}, 60},
      {TheoremMap::T46, 7, {{q(1), q(2)}, {q(2), q(1)}}, 40},
  };

  long long total = 0;
  for (const Plan& plan : plans)
    for (int t = 0; t < plan.trials; ++t) {
      const std::vector<Scalar>& params = plan.params[static_cast<size_t>(t) % plan.params.size()];
      if (!map_trial(plan.theorem, plan.n, params, rng, details)) return false;
      ++total;
    }
  details = std::to_string(total) + " template transports equal the mapped constructors exactly";
  return true;
}

bool criterion7_orbit_fixed_points(const VerifyOptions& opts, std::string& details) {
  Rng rng(opts.seed + 700);
  auto q = [&](long long num, long long den = 1) { return Scalar::from_rational(kQ, Rational(num, den)); };

  // mu2_2(alpha): the alpha2 = 0 branch of T46 fixes alpha exactly
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(2), Rational(-1), Rational(5)}) {
    AlgebraTable a = build(FamilyId::mu2(2, 6, alpha));
    std::vector<Scalar> params = {Scalar::from_rational(kQ, alpha), q(0)};
    for (int t = 0; t < 20; ++t) {
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 50) {
          details = "no admissible T46 change drawn";
          return false;
        }
        NamedCoeffs coeffs;
        coeffs["A1"] = Scalar::from_rational(kQ, rng.nonzero_small_rational());
        for (int k = 2; k <= 6; ++k) coeffs["A" + std::to_string(k)] = Scalar::from_rational(kQ, rng.small_rational());
        coeffs["B4"] = Scalar::from_rational(kQ, rng.small_rational());
        coeffs["B5"] = Scalar::from_rational(kQ, rng.nonzero_small_rational());
        coeffs["B6"] = Scalar::from_rational(kQ, rng.small_rational());
        try {
          TemplateChange change = make_template_change(TheoremMap::T46, a, params, coeffs);
          if (transport(a, change.matrix) != a) {
            details = "mu2_2(" + alpha.str() + ") not fixed by an admissible transport";
            return false;
          }
          break;
        } catch (const Error& e) {
          if (e.code() == Errc::DegenerateChange) continue;
          throw;
        }
      }
    }
  }

  // pi_1(alpha): the beta2 = 0 branch of the pi analysis fixes alpha2
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
    AlgebraTable a = build(FamilyId::pi(1, alpha));
    std::vector<Scalar> params = {Scalar::from_rational(kQ, alpha), q(0)};
    for (int t = 0; t < 20; ++t) {
      for (int attempt = 0;; ++attempt) {
        if (attempt >= 50) {
          details = "no admissible Pi45 change drawn";
          return false;
        }
        NamedCoeffs coeffs;
        coeffs["A1"] = Scalar::from_rational(kQ, rng.nonzero_small_rational());
        coeffs["A2"] = Scalar::from_rational(kQ, rng.small_rational());
        coeffs["B2"] = Scalar::from_rational(kQ, rng.nonzero_small_rational());
        try {
          TemplateChange change = make_template_change(TheoremMap::Pi45, a, params, coeffs);
          if (transport(a, change.matrix) != a) {
            details = "pi_1(" + alpha.str() + ") not fixed by an admissible transport";
            return false;
          }
          break;
        } catch (const Error& e) {
          if (e.code() == Errc::DegenerateChange) continue;
          throw;
        }
      }
    }
  }
  details = "200 admissible transports fix mu2_2(alpha) and pi_1(alpha) exactly";
  return true;
}

struct SeparationPair {
  std::string suite;
  FamilyId a, b;
  FieldSpec field;
};

std::vector<SeparationPair> separation_pairs() {
  std::vector<SeparationPair> pairs;
  FieldSpec gf2 = FieldSpec::prime_field(2), gf3 = FieldSpec::prime_field(3), gf5 = FieldSpec::prime_field(5);

  for (int n : {5, 6})
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        pairs.push_back({"mu1_n" + std::to_string(n), FamilyId::mu1(i, n), FamilyId::mu1(j, n), kQ});

  for (const FieldSpec& f : {gf2, gf3})
    pairs.push_back({"lambda_" + f.to_string(), FamilyId::lambda(1), FamilyId::lambda(2), f});

  std::vector<FamilyId> pis = {FamilyId::pi(1, Rational(0)), FamilyId::pi(1, Rational(1)),
                               FamilyId::pi(2), FamilyId::pi(3), FamilyId::pi(4), FamilyId::pi(5),
                               FamilyId::pi(6), FamilyId::pi(7), FamilyId::pi(8, Rational(0)),
                               FamilyId::pi(8, Rational(2))};
  for (size_t i = 0; i < pis.size(); ++i)
    for (size_t j = i + 1; j < pis.size(); ++j) pairs.push_back({"pi_gf5", pis[i], pis[j], gf5});

  std::vector<FamilyId> mu2s = {FamilyId::mu2(2, 6, Rational(0)), FamilyId::mu2(2, 6, Rational(1)),
                                FamilyId::mu2(3, 6), FamilyId::mu2(4, 6)};
  for (size_t i = 0; i < mu2s.size(); ++i)
    for (size_t j = i + 1; j < mu2s.size(); ++j) pairs.push_back({"mu2_gf5", mu2s[i], mu2s[j], gf5});

  return pairs;
}

bool criterion8_separation(const VerifyOptions& opts, std::string& details) {
  Json golden = load_json_file(opts.golden_dir + "/separations.json");
  IsoOptions iso_opts;
  iso_opts.max_nodes = opts.max_nodes;
  iso_opts.seed = opts.seed;

  size_t index = 0;
  for (const SeparationPair& pair : separation_pairs()) {
    IsoResult r = iso_search(build(pair.a, pair.field), build(pair.b, pair.field), iso_opts);
    if (r.outcome == IsoResult::Outcome::Witness) {
      details = pair.a.to_string() + " vs " + pair.b.to_string() + " over " + pair.field.to_string() +
                " returned a witness";
      return false;
    }
    if (index >= golden.at("pairs").size()) {
      details = "golden separation record is shorter than the suite";
      return false;
    }
    const Json& g = golden.at("pairs").at(index);
    if (g.at("a").get<std::string>() != pair.a.to_string() ||
        g.at("b").get<std::string>() != pair.b.to_string() ||
        g.at("field").get<std::string>() != pair.field.to_string() ||
        g.at("outcome").get<std::string>() != outcome_name(r.outcome) ||
        g.at("coordinate").get<std::string>() != r.coordinate) {
      details = pair.a.to_string() + " vs " + pair.b.to_string() + ": outcome '" +
                outcome_name(r.outcome) + (r.coordinate.empty() ? "" : "/" + r.coordinate) +
                "' differs from the golden record";
      return false;
    }
    ++index;
  }
  if (index != golden.at("pairs").size()) {
    details = "golden separation record is longer than the suite";
    return false;
  }
  details = std::to_string(index) + " pairs separated, outcomes match the golden record";
  return true;
}

bool criterion9_natural_grading(std::string& details) {
  FieldSpec gf5 = FieldSpec::prime_field(5);

  std::vector<FamilyId> graded = {FamilyId::mu0_split(6, 2), FamilyId::mu0_split(5, 3),
                                  FamilyId::mu0_split(7, 2), FamilyId::heisenberg_split(1),
                                  FamilyId::heisenberg_split(3), FamilyId::lambda(1),
                                  FamilyId::lambda(2), FamilyId::mu2(1, 6), FamilyId::mu2(1, 7)};
  for (const FamilyId& id : graded) {
    AlgebraTable a = build(id);
    NatGradedResult r = is_naturally_graded(a);
    if (r.verdict != NatGradedVerdict::Yes || !r.witness) {
      details = id.to_string() + " not recognized as naturally graded";
      return false;
    }
    if (!verify_witness(a, associated_graded(a).induced, *r.witness)) {
      details = id.to_string() + ": grading witness fails verification";
      return false;
    }
  }

  // gr(mu1_2^6) carries the table of mu1_1^6 after the adapted relabeling
  // (e1, e6, e2, e3, e4, e5)
  AlgebraTable mu12 = build(FamilyId::mu1(2, 6), gf5);
  GradedAlgebra gr = associated_graded(mu12);
  AlgebraTable mu11 = build(FamilyId::mu1(1, 6), gf5);
  Matrix perm(6, 6, gf5);
  int order[6] = {1, 6, 2, 3, 4, 5};  // new position -> old index
  for (int c = 0; c < 6; ++c) perm.at(order[c] - 1, c) = Scalar::one(gf5);
  if (transport(mu11, perm) != gr.induced) {
    details = "gr(mu1_2^6) does not carry the relabeled table of mu1_1^6";
    return false;
  }

  NatGradedResult no = is_naturally_graded(mu12, {NatGradedMethod::Kind::Invariants, std::nullopt, {}});
  if (no.verdict != NatGradedVerdict::No || no.reason != "center_dims") {
    details = "mu1_2^6 over GF(5) not separated from its graded algebra by center dims";
    return false;
  }
  details = "graded witnesses verified; gr(mu1_2^6) = mu1_1^6 and center dims separate";
  return true;
}

bool criterion10_metamorphic(const VerifyOptions& opts, std::string& details) {
  FieldSpec gf2 = FieldSpec::prime_field(2), gf3 = FieldSpec::prime_field(3), gf5 = FieldSpec::prime_field(5);
  std::vector<std::vector<Rational>> beta = {{Rational(1), Rational(0)}, {Rational(3), Rational(1)}};

  std::vector<FamilyId> ids = {
      FamilyId::mu0(4),       FamilyId::mu0(5),
      FamilyId::mu0_split(5, 2), FamilyId::heisenberg_split(2),
      FamilyId::mu_prime(6, 2, Rational(1), beta),
      FamilyId::mu1(1, 5),    FamilyId::mu1(2, 5),  FamilyId::mu1(3, 5), FamilyId::mu1(4, 5),
      FamilyId::lambda(1),    FamilyId::lambda(2),
      FamilyId::pi(1, Rational(1)), FamilyId::pi(2), FamilyId::pi(3), FamilyId::pi(4),
      FamilyId::pi(5),        FamilyId::pi(6),      FamilyId::pi(7), FamilyId::pi(8, Rational(2)),
      FamilyId::mu2(1, 6),    FamilyId::mu2(2, 6, Rational(1)), FamilyId::mu2(3, 6), FamilyId::mu2(4, 6)};

  Rng rng(opts.seed + 1000);
  IsoOptions iso_opts;
  iso_opts.max_nodes = opts.max_nodes;
  iso_opts.seed = opts.seed;

  auto random_invertible = [&](const FieldSpec& f, int n) {
    while (true) {
      Matrix m(n, n, f);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng.scalar(f);
      if (rank(m) == n) return m;
    }
  };

  int pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const FamilyId& id = ids[static_cast<size_t>(trial) % ids.size()];
    // GF(5) instances stay at dim 5 so exhaustive char sequences remain cheap
    FieldSpec f = trial % 3 == 0 ? gf2 : (trial % 3 == 1 ? gf3 : (id.n <= 5 ? gf5 : gf3));
    AlgebraTable a = build(id, f);
    Matrix m = random_invertible(f, a.dim());
    AlgebraTable b = transport(a, m);

    if (auto coord = first_invariant_mismatch(invariants(a), invariants(b))) {
      details = id.to_string() + " over " + f.to_string() + ": invariant '" + *coord +
                "' changed under transport";
      return false;
    }
    IsoResult r = iso_search(a, b, iso_opts);
    if (r.outcome != IsoResult::Outcome::Witness || !r.witness || !verify_witness(a, b, *r.witness)) {
      details = id.to_string() + " over " + f.to_string() + ": no witness for a transported copy";
      return false;
    }
    ++pairs;
  }

  // rational instances: invariance of the comparable coordinates
  for (int trial = 0; trial < 24; ++trial) {
    const FamilyId& id = ids[static_cast<size_t>(trial) % ids.size()];
    AlgebraTable a = build(id);
    Matrix m = random_invertible(kQ, a.dim());
    AlgebraTable b = transport(a, m);
    if (auto coord = first_invariant_mismatch(invariants(a), invariants(b))) {
      details = id.to_string() + " over Q: invariant '" + *coord + "' changed under transport";
      return false;
    }
  }
  details = std::to_string(pairs) + " transported pairs kept invariants and yielded witnesses";
  return true;
}

} // namespace

std::vector<std::string> known_suites() { return {"s2", "s3", "s4", "census", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts_in) {
  VerifyOptions opts = opts_in;
  if (opts.golden_dir.empty()) opts.golden_dir = NILALG_DEFAULT_GOLDEN_DIR;

  bool all = suite == "all";
  std::vector<CheckResult> results;

  if (all || suite == "s3") {
    results.push_back(timed_check(1, "family fidelity (constructors vs golden tables)", 5.0,
                                  [&](std::string& d) { return criterion1_family_fidelity(opts, d); }));
  }
  if (all || suite == "census") {
    // both criteria share one scan; its cost lands on criterion 2's clock
    CensusOutcome census;
    results.push_back(timed_check(2, "census: one-generated tables are mu0 (GF(2), dims 1-3)", 600.0,
                                  [&](std::string& d) {
                                    census = run_census_scope(opts);
                                    return criterion2_census_mu0(census, opts, d);
                                  }));
    results.push_back(timed_check(3, "census: filiform <=> nilindex n; dim A^2 = n-1 => null-filiform", 600.0,
                                  [&](std::string& d) { return criterion3_census_propositions(census, d); }));
  }
  if (all || suite == "s2") {
    results.push_back(timed_check(4, "characteristic sequences over GF(5)", 120.0,
                                  [&](std::string& d) { return criterion4_char_sequences(d); }));
  }
  if (all || suite == "s4") {
    results.push_back(timed_check(5, "rank bound on L_{e1 + A e_{n-1}} for mu2_1", 5.0,
                                  [&](std::string& d) { return criterion5_rank_bound(opts, d); }));
  }
  if (all || suite == "s3") {
    results.push_back(timed_check(6, "parameter-map consistency (T39, Lam, Pi45, T46)", 30.0,
                                  [&](std::string& d) { return criterion6_parameter_maps(opts, d); }));
  }
  if (all || suite == "s4") {
    results.push_back(timed_check(7, "orbit fixed points for mu2_2(alpha) and pi_1(alpha)", 30.0,
                                  [&](std::string& d) { return criterion7_orbit_fixed_points(opts, d); }));
    results.push_back(timed_check(8, "pairwise separation suites", 600.0,
                                  [&](std::string& d) { return criterion8_separation(opts, d); }));
  }
  if (all || suite == "s3") {
    results.push_back(timed_check(9, "natural grading detection and refutation", 60.0,
                                  [&](std::string& d) { return criterion9_natural_grading(d); }));
  }
  if (all || suite == "s2") {
    results.push_back(timed_check(10, "metamorphic invariance under transport", 120.0,
                                  [&](std::string& d) { return criterion10_metamorphic(opts, d); }));
  }

  if (results.empty()) fail(Errc::InvalidParameter, "unknown suite: " + suite);
  return results;
}

} // namespace nilalg
