#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilalg/algebra.hpp"

namespace nilalg {

/// Identifiers for the classified families. Greek-letter names follow the
/// established labels for these algebras.
struct FamilyId {
  enum class Kind {
    Mu0,              // null-filiform chain, dim n
    Mu0SplitF,        // mu0^{n-p} (+) F^p, naturally graded filiform of degree p
    HeisenbergSplit,  // H1 (+) F^{p-1}, dim p+2
    MuPrime,          // filiform of degree p with alpha in {0,1} and free beta matrix
    Mu1,              // filiform normal forms mu_{1,k}^n, k = 1..4
    Lambda,           // 5-dim 2-filiform normal forms lambda_1, lambda_2
    Pi,               // 5-dim (3,2) normal forms pi_1(alpha)..pi_8(alpha)
    Mu2,              // quasi-filiform normal forms mu_{2,k}^n, k = 1..4
  };

  Kind kind;
  int n = 0;  // dimension (where applicable)
  int p = 0;  // split/degree parameter
  int k = 0;  // variant index within the family
  std::optional<Rational> alpha;                 // Pi(1), Pi(8), Mu2(2), MuPrime
  std::vector<std::vector<Rational>> beta;       // MuPrime only, p x p

  static FamilyId mu0(int n);
  static FamilyId mu0_split(int n, int p);
  static FamilyId heisenberg_split(int p);
  static FamilyId mu_prime(int n, int p, const Rational& alpha,
                           const std::vector<std::vector<Rational>>& beta);
  static FamilyId mu1(int k, int n);
  static FamilyId lambda(int k);
  static FamilyId pi(int k);                          // k not in {1, 8}
  static FamilyId pi(int k, const Rational& alpha);   // k in {1, 8}
  static FamilyId mu2(int k, int n);                  // k != 2
  static FamilyId mu2(int k, int n, const Rational& alpha);  // k == 2

  std::string to_string() const;
};

/// Builds the family's table, as displayed in the classification, over the
/// requested field (rational parameters are reduced into GF(p) when needed).
AlgebraTable build(const FamilyId& id, const FieldSpec& field = FieldSpec::rationals());

/// Pre-normal-form scaffolds from the proofs: the general tables that the
/// theorems' basis changes act on.
AlgebraTable mu1_general(int n, const Scalar& alpha, const Scalar& beta);
AlgebraTable mu2_general(int n, const Scalar& alpha1, const Scalar& alpha2);
AlgebraTable lambda_general(const Scalar& alpha2);
AlgebraTable pi_general(const Scalar& alpha1, const Scalar& alpha2, const Scalar& beta1,
                        const Scalar& beta2);

/// Both polynomial identities restricting the (3,2) analysis parameters:
///   a1 b2 = a1^2 (a2+1) + b1 (a2^2-1)   and   b1 (a1 (a2+1) + b2 (a2-1)) = 0.
bool restriction_system_check(const Scalar& alpha1, const Scalar& alpha2, const Scalar& beta1,
                              const Scalar& beta2);

/// The proofs' parameter-normalization maps, keyed by theorem.
enum class TheoremMap {
  T39,   // filiform: alpha' = alpha Bn / A1^{n-2}, beta' = beta Bn^2 / A1^{n-1}
  Lam,   // lambda: alpha2' = alpha2 B4 / (A1 + alpha2 A4)
  Pi45,  // pi, e5 central: alpha2' = (alpha2 A1 + beta2 A2)/(A1 + beta2 A2), beta2' = beta2 B2 / (A1 + beta2 A2)
  T46,   // quasi-filiform: alpha1' = (alpha1 A1 + alpha2 A_{n-1})/(A1 + alpha2 A_{n-1}), alpha2' = alpha2 B_{n-1}/(A1 + alpha2 A_{n-1})
};

/// Free named coefficients of a proof-template basis change ("A1".."An",
/// "B1".."Bn"); coefficients a template forces are filled by
/// make_template_change.
using NamedCoeffs = std::map<std::string, Scalar>;

/// A basis change following a proof template: the full matrix (columns are
/// the new basis vectors) plus the named coefficients actually used.
struct TemplateChange {
  Matrix matrix;
  NamedCoeffs coeffs;
};

/// Transformed parameters per the quoted formulas; `n` is the dimension of
/// the general form the theorem acts on (5 for Lam and Pi45). Throws
/// DegenerateChange on vanishing denominators or violated nondegeneracy
/// conditions.
std::vector<Scalar> parameter_map(TheoremMap theorem, int n, const std::vector<Scalar>& params,
                                  const NamedCoeffs& coeffs);

/// Assembles the proof's full change of basis from the free coefficients:
/// generator images as written, forced coefficients filled in, and the
/// remaining basis vectors obtained as products. The table `a` must be the
/// matching general form at `params`.
TemplateChange make_template_change(TheoremMap theorem, const AlgebraTable& a,
                                    const std::vector<Scalar>& params, const NamedCoeffs& coeffs);

} // namespace nilalg
