#pragma once

#include "toricham/linalg.hpp"

#include <vector>

// Closed-form reference values for the one-point blow-up of CP^3 and for
// CP^n. Plain formula transcriptions over Rational; nothing here touches the
// polytope pipeline.
namespace toricham::oracles {

/// Blow-up of CP^3 at level (tau, mu), 0 < mu < tau; lambda = tau - mu is the
/// side of the corner simplex cut off the tetrahedron of size tau.
class BlowupParams {
 public:
  /// Throws Error(BadParams) naming the violated inequality.
  BlowupParams(Rational tau, Rational mu);

  const Rational& tau() const { return tau_; }
  const Rational& mu() const { return mu_; }
  const Rational& lambda() const { return lambda_; }

 private:
  Rational tau_;
  Rational mu_;
  Rational lambda_;
};

/// Quotient data (W, level) with W r x m (columns are the weights w_j).
struct QuotientData {
  IntMatrix weights;
  RatVector level;
};

/// w1 = w2 = w5 = (1,0), w3 = (1,1), w4 = (0,1); level (tau, mu).
QuotientData blowup_model(const BlowupParams& p);

/// 1 x (n+1) all-ones W, level (tau). Throws Error(BadParams) unless n >= 1
/// and tau > 0.
QuotientData cpn_model(unsigned n, const Rational& tau);

/// Normalizing constants of the rotations of z1, z3 and z4.
Rational kappa(const BlowupParams& p);
Rational kappa_tilde(const BlowupParams& p);
Rational kappa_hat(const BlowupParams& p);

/// I for the rotation of z1, as the closed rational function of (tau, lambda).
Rational invariant_closed_form(const BlowupParams& p);
/// I for the rotation of z1, from kappa: 6κ(2τ² - λ²) + λ³ - 3τ³.
Rational invariant_from_kappa(const BlowupParams& p);
/// invariant_closed_form, cross-checked against invariant_from_kappa.
/// Throws Error(InternalInconsistency) if the two disagree.
Rational invariant(const BlowupParams& p);

/// I for the rotation of z3, from kappa_tilde, cross-checked against
/// -3·invariant(p). Throws Error(InternalInconsistency).
Rational invariant_tilde(const BlowupParams& p);
/// I for the rotation of z4: 3·invariant(p).
Rational invariant_hat(const BlowupParams& p);

enum class BlowupLoop { Psi, PsiTilde, PsiHat };

/// Per-facet contributions for coordinates z1..z5, in coordinate order.
std::vector<Rational> facet_values(const BlowupParams& p, BlowupLoop loop);

struct CpnValues {
  Rational kappa;
  std::vector<Rational> facets;  // z1..z_{n+1}
  Rational invariant;
};

/// Rotation of z1 on CP^n of size tau: kappa = tau/(n+1), facet values of
/// the standard simplex, and I = -n·tau^{n-1}·(tau - (n+1)κ) = 0.
CpnValues cpn_values(unsigned n, const Rational& tau);

}  // namespace toricham::oracles
