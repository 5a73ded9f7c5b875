#include "toricham/error.hpp"
#include "toricham/oracles.hpp"

#include <gtest/gtest.h>

using namespace toricham;
using namespace toricham::oracles;

namespace {

Rational sum(const std::vector<Rational>& v) {
  Rational s;
  for (const auto& x : v) s += x;
  return s;
}

std::string bad_params_message(const Rational& tau, const Rational& mu) {
  try {
    BlowupParams p(tau, mu);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadParams);
    return e.what();
  }
  return "";
}

}  // namespace

TEST(BlowupOracle, ModelData) {
  const auto q = blowup_model(BlowupParams(2, 1));
  EXPECT_EQ(q.weights, (IntMatrix{{1, 1, 1, 0, 1}, {0, 0, 1, 1, 0}}));
  EXPECT_EQ(q.level, (RatVector{2, 1}));
  EXPECT_EQ(blowup_model(BlowupParams(1, Rational(1, 2))).level, (RatVector{1, Rational(1, 2)}));
  EXPECT_EQ(BlowupParams(2, Rational(1, 3)).lambda(), Rational(5, 3));
}

TEST(BlowupOracle, RejectsBadParameters) {
  EXPECT_NE(bad_params_message(1, 2).find("mu < tau"), std::string::npos);
  EXPECT_NE(bad_params_message(1, 1).find("mu < tau"), std::string::npos);
  EXPECT_NE(bad_params_message(1, 0).find("mu > 0"), std::string::npos);
  EXPECT_NE(bad_params_message(-1, Rational(-2)).find("tau > 0"), std::string::npos);
}

TEST(CpnOracle, ModelData) {
  EXPECT_EQ(cpn_model(1, 3).weights, (IntMatrix{{1, 1}}));
  EXPECT_EQ(cpn_model(2, 3).weights, (IntMatrix{{1, 1, 1}}));
  EXPECT_EQ(cpn_model(3, 1).weights, (IntMatrix{{1, 1, 1, 1}}));
  EXPECT_THROW((void)cpn_model(0, 1), Error);
  EXPECT_THROW((void)cpn_model(2, 0), Error);
}

TEST(BlowupOracle, NormalizedConstants) {
  const BlowupParams p(2, 1);
  EXPECT_EQ(kappa(p), Rational(15, 28));
  EXPECT_EQ(kappa_tilde(p), Rational(11, 28));
  EXPECT_EQ(kappa_hat(p), Rational(17, 28));
  EXPECT_EQ(kappa_tilde(p) + kappa_hat(p), Rational(1));
}

TEST(BlowupOracle, CharacteristicNumbers) {
  const BlowupParams p(2, 1);
  EXPECT_EQ(invariant(p), Rational(-1, 2));
  EXPECT_EQ(invariant_tilde(p), Rational(3, 2));
  EXPECT_EQ(invariant_hat(p), Rational(-3, 2));
  EXPECT_EQ(invariant_tilde(p) + invariant_hat(p), Rational(0));
}

TEST(BlowupOracle, SecondSpotValue) {
  // tau = 1, lambda = 1/2: lambda^2 = 1/4, the quartic is
  // -3 + 4 - 3/2 + 1/16 = -7/16, and 2 (tau^3 - lambda^3) = 7/4, so
  // I = (1/4)(-7/16) / (7/4) = -1/16. Both routes must agree.
  const BlowupParams p(1, Rational(1, 2));
  EXPECT_EQ(invariant_closed_form(p), Rational(-1, 16));
  EXPECT_EQ(invariant_from_kappa(p), Rational(-1, 16));
  EXPECT_EQ(invariant(p), Rational(-1, 16));
}

TEST(BlowupOracle, FacetValues) {
  const BlowupParams p(2, 1);
  const auto psi = facet_values(p, BlowupLoop::Psi);
  EXPECT_EQ(psi, (std::vector<Rational>{Rational(135, 28), Rational(-61, 28), Rational(-44, 28), Rational(17, 28),
                                        Rational(-61, 28)}));
  EXPECT_EQ(sum(psi), Rational(-1, 2));
  EXPECT_EQ(sum(facet_values(p, BlowupLoop::PsiTilde)), Rational(3, 2));
  EXPECT_EQ(sum(facet_values(p, BlowupLoop::PsiHat)), Rational(-3, 2));
}

TEST(BlowupOracle, RoutesAgreeAndNeverVanishOnGrid) {
  for (long t = 1; t <= 6; ++t) {
    for (long num = 1; num < 4 * t; ++num) {
      const BlowupParams p(Rational(t), Rational(Integer(num), Integer(4)));
      EXPECT_EQ(invariant_closed_form(p), invariant_from_kappa(p));
      EXPECT_NE(invariant(p), Rational(0));
      EXPECT_EQ(invariant_tilde(p), Rational(-3) * invariant(p));
      EXPECT_EQ(sum(facet_values(p, BlowupLoop::Psi)), invariant(p));
      EXPECT_EQ(sum(facet_values(p, BlowupLoop::PsiTilde)), invariant_tilde(p));
      EXPECT_EQ(sum(facet_values(p, BlowupLoop::PsiHat)), invariant_hat(p));
      EXPECT_EQ(kappa_tilde(p) + kappa_hat(p), p.mu());
      EXPECT_EQ(Rational(3) * kappa(p) + kappa_tilde(p), p.tau());
    }
  }
}

TEST(CpnOracle, Values) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto v = cpn_values(n, Rational(5, 2));
    EXPECT_EQ(v.kappa, Rational(5, 2) / Rational(static_cast<long>(n) + 1));
    EXPECT_EQ(v.invariant, Rational(0));
    EXPECT_EQ(sum(v.facets), Rational(0));
    EXPECT_EQ(v.facets.size(), n + 1);
  }
  // CP^1: -tau + 2 kappa = 0.
  EXPECT_EQ(cpn_values(1, 1).kappa, Rational(1, 2));
  EXPECT_EQ(cpn_values(2, 1).kappa, Rational(1, 3));
}
