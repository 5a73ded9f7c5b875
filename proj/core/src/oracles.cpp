#include "toricham/oracles.hpp"

#include "toricham/error.hpp"

namespace toricham::oracles {
namespace {

Rational sq(const Rational& x) { return x * x; }
Rational cube(const Rational& x) { return x * x * x; }
Rational quart(const Rational& x) { return sq(x) * sq(x); }

// tau^3 - lambda^3, i.e. the symplectic volume ∫ω³.
Rational liouville_volume(const BlowupParams& p) { return cube(p.tau()) - cube(p.lambda()); }

}  // namespace

BlowupParams::BlowupParams(Rational tau, Rational mu) : tau_(std::move(tau)), mu_(std::move(mu)) {
  if (tau_.sign() <= 0) throw Error(ErrorCode::BadParams, "tau > 0 required (got tau = " + tau_.str() + ")");
  if (mu_.sign() <= 0) throw Error(ErrorCode::BadParams, "mu > 0 required (got mu = " + mu_.str() + ")");
  if (!(mu_ < tau_)) {
    throw Error(ErrorCode::BadParams, "mu < tau required (got tau = " + tau_.str() + ", mu = " + mu_.str() + ")");
  }
  lambda_ = tau_ - mu_;
}

QuotientData blowup_model(const BlowupParams& p) {
  return {IntMatrix{{1, 1, 1, 0, 1}, {0, 0, 1, 1, 0}}, RatVector{p.tau(), p.mu()}};
}

QuotientData cpn_model(unsigned n, const Rational& tau) {
  if (n < 1) throw Error(ErrorCode::BadParams, "n >= 1 required");
  if (tau.sign() <= 0) throw Error(ErrorCode::BadParams, "tau > 0 required (got tau = " + tau.str() + ")");
  IntMatrix w(1, n + 1);
  for (unsigned j = 0; j <= n; ++j) w(0, j) = 1;
  return {w, RatVector{tau}};
}

Rational kappa(const BlowupParams& p) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  return Rational(1, 4) * (quart(t) - quart(l)) / liouville_volume(p);
}

Rational kappa_tilde(const BlowupParams& p) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  return Rational(1, 4) * (quart(t) - Rational(4) * t * cube(l) + Rational(3) * quart(l)) / liouville_volume(p);
}

Rational kappa_hat(const BlowupParams& p) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  return Rational(1, 4) * (quart(l) - Rational(4) * l * cube(t) + Rational(3) * quart(t)) / liouville_volume(p);
}

Rational invariant_closed_form(const BlowupParams& p) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  const Rational numerator = sq(l) * (Rational(-3) * quart(t) + Rational(8) * cube(t) * l -
                                      Rational(6) * sq(t) * sq(l) + quart(l));
  return numerator / (Rational(2) * liouville_volume(p));
}

Rational invariant_from_kappa(const BlowupParams& p) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  return Rational(6) * kappa(p) * (Rational(2) * sq(t) - sq(l)) + cube(l) - Rational(3) * cube(t);
}

Rational invariant(const BlowupParams& p) {
  const Rational closed = invariant_closed_form(p);
  const Rational via_kappa = invariant_from_kappa(p);
  if (closed != via_kappa) {
    throw Error(ErrorCode::InternalInconsistency,
                "closed-form I = " + closed.str() + " disagrees with the kappa route " + via_kappa.str());
  }
  return closed;
}

Rational invariant_tilde(const BlowupParams& p) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  const Rational via_kappa = Rational(6) * kappa_tilde(p) * (Rational(2) * sq(t) - sq(l)) -
                             Rational(3) * (cube(t) - Rational(2) * t * sq(l) + cube(l));
  const Rational via_relation = Rational(-3) * invariant(p);
  if (via_kappa != via_relation) {
    throw Error(ErrorCode::InternalInconsistency,
                "I~ from kappa~ = " + via_kappa.str() + " disagrees with -3I = " + via_relation.str());
  }
  return via_kappa;
}

Rational invariant_hat(const BlowupParams& p) { return Rational(3) * invariant(p); }

std::vector<Rational> facet_values(const BlowupParams& p, BlowupLoop loop) {
  const Rational& t = p.tau();
  const Rational& l = p.lambda();
  const Rational& mu = p.mu();
  const Rational t2l2 = sq(t) - sq(l);
  const Rational vol = liouville_volume(p);
  switch (loop) {
    case BlowupLoop::Psi: {
      const Rational k = kappa(p);
      const Rational n1 = Rational(3) * k * t2l2;
      const Rational n2 = -vol + Rational(3) * k * t2l2;
      const Rational n3 = sq(t) * (Rational(3) * k - t);
      const Rational n4 = sq(l) * (Rational(3) * k - l);
      return {n1, n2, n3, n4, n2};
    }
    case BlowupLoop::PsiTilde: {
      const Rational k = kappa_tilde(p);
      const Rational n1 = Rational(-3) * (t - k) * t2l2 + Rational(2) * vol;
      const Rational n3 = Rational(3) * k * sq(t);
      const Rational n4 = Rational(3) * sq(l) * (k - mu);
      return {n1, n1, n3, n4, n1};
    }
    case BlowupLoop::PsiHat: {
      const Rational k = kappa_hat(p);
      const Rational n1 = Rational(3) * (l + k) * t2l2 - Rational(2) * vol;
      const Rational n3 = Rational(3) * sq(t) * (k - mu);
      const Rational n4 = Rational(3) * k * sq(l);
      return {n1, n1, n3, n4, n1};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown loop");
}

CpnValues cpn_values(unsigned n, const Rational& tau) {
  if (n < 1) throw Error(ErrorCode::BadParams, "n >= 1 required");
  if (tau.sign() <= 0) throw Error(ErrorCode::BadParams, "tau > 0 required (got tau = " + tau.str() + ")");
  CpnValues out;
  out.kappa = tau / Rational(static_cast<long>(n) + 1);
  const Rational nn(static_cast<long>(n));
  const Rational t_pow = pow(tau, n - 1);
  // z1 = 0 carries s1 = 0; every other facet has mean s1 = tau/n.
  out.facets.push_back(nn * t_pow * out.kappa);
  for (unsigned k = 1; k <= n; ++k) out.facets.push_back(-t_pow * (tau - nn * out.kappa));
  out.invariant = -nn * t_pow * (tau - (nn + Rational(1)) * out.kappa);
  return out;
}

}  // namespace toricham::oracles
