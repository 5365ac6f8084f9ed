#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crisisopt/bounds.hpp"
#include "crisisopt/errors.hpp"
#include "crisisopt/pricing.hpp"
#include "oracles.hpp"

using namespace crisis;

namespace {

const ModelParams kStandard{100.0, 0.05, 0.2, 0.0, 1.0};
const GFunction kExp = GFunction::exponential();
const GFunction kOsc = GFunction::damped_oscillator(1.0, 0.5, 0.1, 2.0 * std::numbers::pi);
constexpr OptionSpec kAtmCall{OptionKind::Call, 100.0, 0.0};
constexpr OptionSpec kAtmPut{OptionKind::Put, 100.0, 0.0};

ModelParams with_beta(double beta) {
  ModelParams p = kStandard;
  p.beta = beta;
  return p;
}

SimConfig mc(std::size_t paths, std::size_t steps, std::uint64_t seed) {
  return SimConfig{paths, TimeGrid(0.0, 1.0, steps), seed, Scheme::ExactSolution, SolutionMode::Corrected, 0};
}

}  // namespace

TEST(BlackScholes, StandardCall) {
  const auto q = bs_price(100, 100, 0.05, 0.2, 1.0, OptionKind::Call);
  // Payoff quadrature against the lognormal law, computed independently.
  const double quad = oracle::shifted_lognormal_call_quadrature(100, 0, 100, 0.05, 0.2, 1.0);
  EXPECT_NEAR(quad, 10.450583572185567, 1e-9);
  EXPECT_NEAR(q.value, 10.450584, 1e-5);
  EXPECT_NEAR(q.value, quad, 1e-9);
  EXPECT_NEAR(q.d1 - q.d2, 0.2, 1e-15);
}

TEST(BlackScholes, Limits) {
  EXPECT_NEAR(bs_price(100, 1e9, 0.05, 0.2, 1.0, OptionKind::Call).value, 0.0, 1e-9);
  for (double K : {90.0, 110.0}) {
    const double intrinsic = std::max(100.0 - K * std::exp(-0.05), 0.0);
    EXPECT_NEAR(bs_price(100, K, 0.05, 1e-9, 1.0, OptionKind::Call).value, intrinsic, 1e-9);
  }
}

TEST(BlackScholes, DomainErrors) {
  EXPECT_THROW(bs_price(0, 100, 0.05, 0.2, 1, OptionKind::Call), DomainError);
  EXPECT_THROW(bs_price(100, -1, 0.05, 0.2, 1, OptionKind::Call), DomainError);
  EXPECT_THROW(bs_price(100, 100, 0.05, 0.2, 0, OptionKind::Call), DomainError);
  EXPECT_THROW(bs_price(100, 100, 0.05, 0.0, 1, OptionKind::Call), DomainError);
}

TEST(Premium, BetaZeroReducesToBlackScholes) {
  for (auto mode : {SolutionMode::Paper, SolutionMode::Corrected}) {
    EXPECT_NEAR(call_premium(kStandard, kAtmCall, mode).value, 10.450583572185567, 1e-12);
    // 5.573526022256968 from parity on the 30-digit call value.
    EXPECT_NEAR(put_premium(kStandard, kAtmPut, mode).value, 5.573526, 1e-5);
    EXPECT_NEAR(put_premium(kStandard, kAtmPut, mode).value, 5.573526022256968, 1e-12);
  }
}

TEST(Premium, CrisisCallPaperMode) {
  const auto q = call_premium(with_beta(1.0), kAtmCall, SolutionMode::Paper);
  // K' = 100 + 5 e^{0.05} = 105.25635548188012; value from a 30-digit BS evaluation.
  EXPECT_NEAR(q.effective_strike, 105.25635548188012, 1e-11);
  EXPECT_NEAR(q.value, 7.909, 1e-3);
  EXPECT_NEAR(q.value, 7.909142666576272, 1e-11);
  EXPECT_NEAR(q.value, oracle::bs_call(100, 105.25635548188012, 0.05, 0.2, 1.0), 1e-11);
  // Same number by quadrature over S_T = x xi_T - (beta/sigma) e^{rT}.
  EXPECT_NEAR(q.value, oracle::shifted_lognormal_call_quadrature(100, 5 * std::exp(0.05), 100, 0.05, 0.2, 1.0),
              1e-8);
}

TEST(Premium, CrisisCallCorrectedMode) {
  const auto q = call_premium(with_beta(1.0), kAtmCall, SolutionMode::Corrected);
  EXPECT_NEAR(q.value, 10.84, 0.01);
  EXPECT_NEAR(q.value, 10.837235384687365, 1e-11);
  // Corrected terminal law: (x + beta/sigma) xi_T - (beta/sigma) e^{rT}.
  EXPECT_NEAR(q.value, oracle::shifted_lognormal_call_quadrature(105, 5 * std::exp(0.05), 100, 0.05, 0.2, 1.0),
              1e-8);
  EXPECT_DOUBLE_EQ(q.effective_spot, 105.0);
}

TEST(Premium, PutLimitsAndErrors) {
  const OptionSpec tiny{OptionKind::Put, 1e-12, 0.0};
  EXPECT_NEAR(put_premium(kStandard, tiny, SolutionMode::Corrected).value, 0.0, 1e-9);
  EXPECT_THROW(call_premium(kStandard, kAtmCall, SolutionMode::Paper, kOsc), DomainError);
  EXPECT_THROW(call_premium(kStandard, {OptionKind::Call, 100, 0.5}, SolutionMode::Paper), DomainError);
  EXPECT_THROW(call_premium(kStandard, {OptionKind::Call, 0.0, 0.0}, SolutionMode::Paper), DomainError);
}

TEST(Premium, ParityHoldsForRandomInputs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    ModelParams p{50 + 100 * u(rng), 0.1 * u(rng), 0.05 + 0.5 * u(rng), 0.0, 0.1 + 2.9 * u(rng)};
    p.beta = beta_max(p) * u(rng);
    const double K = p.x * (0.5 + u(rng));
    for (auto mode : {SolutionMode::Paper, SolutionMode::Corrected}) {
      for (double t : {0.0, p.T / 2}) {
        const double spot = p.x * (0.8 + 0.4 * u(rng));
        const double C = price_at_t(p, {OptionKind::Call, K, t}, spot, mode).value;
        const double P = price_at_t(p, {OptionKind::Put, K, t}, spot, mode).value;
        EXPECT_LE(std::abs(spot + P - C - K * std::exp(-p.r * (p.T - t))), 1e-12);
      }
    }
  }
}

TEST(PriceAtT, OriginMatchesPremiumInPaperMode) {
  const ModelParams p = with_beta(1.0);
  EXPECT_EQ(price_at_t(p, kAtmCall, p.x, SolutionMode::Paper).value,
            call_premium(p, kAtmCall, SolutionMode::Paper).value);
  EXPECT_EQ(price_at_t(p, kAtmCall, p.x, SolutionMode::Corrected).value,
            call_premium(p, kAtmCall, SolutionMode::Corrected).value);
}

TEST(PriceAtT, BetaZeroIsClassical) {
  for (double t : {0.0, 0.3, 0.9}) {
    for (auto mode : {SolutionMode::Paper, SolutionMode::Corrected}) {
      const auto q = price_at_t(kStandard, {OptionKind::Call, 95.0, t}, 103.0, mode);
      EXPECT_NEAR(q.value, oracle::bs_call(103, 95, 0.05, 0.2, 1.0 - t), 1e-12);
      EXPECT_NEAR(q.d1 - q.d2, 0.2 * std::sqrt(1.0 - t), 1e-14);
    }
  }
  EXPECT_THROW(price_at_t(kStandard, {OptionKind::Call, 100, 1.0}, 100, SolutionMode::Paper), DomainError);
}

TEST(PriceAtT, CorrectedMatchesNestedMonteCarlo) {
  const ModelParams p = with_beta(1.0);
  // Take the level of one simulated corrected path at t = 0.5 as the observed state.
  SimConfig outer = mc(1, 2, 31);
  double spot_half = 0.0;
  for_each_path(p, kExp, outer, p.x, [&](std::size_t, const PathView& v) { spot_half = v.s[1]; });

  const OptionSpec spec{OptionKind::Call, 100.0, 0.5};
  const auto closed = price_at_t(p, spec, spot_half, SolutionMode::Corrected);
  const auto nested = mc_price_at(p, kExp, spec, spot_half, mc(1'000'000, 1, 32), SolutionMode::Corrected);
  EXPECT_NEAR(nested.value, closed.value, 3 * nested.std_error);
}

TEST(MonteCarlo, BetaZeroMatchesBlackScholes) {
  const auto q = mc_price(kStandard, kExp, kAtmCall, mc(1'000'000, 1, 1), SolutionMode::Corrected);
  EXPECT_NEAR(q.value, 10.450583572185567, 3 * q.std_error);
  EXPECT_EQ(q.method, PricingMethod::MonteCarlo);
  EXPECT_TRUE(std::isnan(q.d1));
}

TEST(MonteCarlo, ExponentialMatchesSameModeClosedForm) {
  const ModelParams p = with_beta(1.0);
  for (auto mode : {SolutionMode::Paper, SolutionMode::Corrected}) {
    const auto m = mc_price(p, kExp, kAtmCall, mc(1'000'000, 1, 3), mode);
    EXPECT_NEAR(m.value, call_premium(p, kAtmCall, mode).value, 3 * m.std_error) << to_string(mode);
  }
  const auto put = mc_price(p, kExp, kAtmPut, mc(1'000'000, 1, 4), SolutionMode::Corrected);
  EXPECT_NEAR(put.value, put_premium(p, kAtmPut, SolutionMode::Corrected).value, 3 * put.std_error);
}

TEST(MonteCarlo, PaperPutDiffersByCouplingShift) {
  // Paper-mode dynamics have e^{-rT} E[S_T] = x - beta/sigma, while the
  // Paper put uses parity against x; the two differ by exactly beta/sigma.
  const ModelParams p = with_beta(1.0);
  const auto m = mc_price(p, kExp, kAtmPut, mc(1'000'000, 1, 5), SolutionMode::Paper);
  const double closed = put_premium(p, kAtmPut, SolutionMode::Paper).value;
  EXPECT_NEAR(m.value - closed, p.beta / p.sigma, 3 * m.std_error);
}

TEST(MonteCarlo, OscillatorRegression) {
  // Pinned by `crisisopt price --method mc --g osc --beta 1 --paths 10000000
  // --steps 128 --seed 20240601` (corrected mode): 10.819934 +/- 0.004861.
  constexpr double kPinned = 10.819933641543443;
  constexpr double kPinnedSe = 0.004861421453702941;
  const auto q = mc_price(with_beta(1.0), kOsc, kAtmCall, mc(200'000, 128, 555), SolutionMode::Corrected);
  EXPECT_NEAR(q.value, kPinned, 3 * std::hypot(q.std_error, kPinnedSe));
}

TEST(MonteCarlo, RefusesTinySamples) {
  EXPECT_THROW(mc_price(kStandard, kExp, kAtmCall, mc(99, 1, 1), SolutionMode::Paper), DomainError);
}

TEST(MonteCarlo, StandardErrorShrinksWithRootN) {
  const ModelParams p = with_beta(1.0);
  const auto a = mc_price(p, kOsc, kAtmCall, mc(30'000, 16, 8), SolutionMode::Corrected);
  const auto b = mc_price(p, kOsc, kAtmCall, mc(90'000, 16, 9), SolutionMode::Corrected);
  EXPECT_NEAR(a.std_error / b.std_error, std::sqrt(3.0), 0.2 * std::sqrt(3.0));
}

TEST(MonteCarlo, IndependentOfWorkerCount) {
  auto one = mc(5000, 8, 12);
  one.workers = 1;
  auto many = one;
  many.workers = 7;
  const auto a = mc_price(with_beta(1.0), kOsc, kAtmCall, one, SolutionMode::Paper);
  const auto b = mc_price(with_beta(1.0), kOsc, kAtmCall, many, SolutionMode::Paper);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(Properties, MonotoneInStrike) {
  const ModelParams p = with_beta(2.0);
  for (auto mode : {SolutionMode::Paper, SolutionMode::Corrected}) {
    double prev_call = INFINITY, prev_put = -INFINITY;
    for (int i = 0; i < 20; ++i) {
      const double K = 60.0 + 4.0 * i;
      const double c = price_at_t(p, {OptionKind::Call, K, 0.2}, 100.0, mode).value;
      const double q = price_at_t(p, {OptionKind::Put, K, 0.2}, 100.0, mode).value;
      EXPECT_LE(c, prev_call);
      EXPECT_GE(q, prev_put);
      prev_call = c;
      prev_put = q;
    }
  }
}

TEST(Properties, CrisisLowersPaperCallPremium) {
  const double base = call_premium(kStandard, kAtmCall, SolutionMode::Paper).value;
  for (double beta : {0.1, 1.0, 5.0, 10.0})
    EXPECT_LT(call_premium(with_beta(beta), kAtmCall, SolutionMode::Paper).value, base);
}

TEST(Properties, QuoteInvariants) {
  const ModelParams p = with_beta(3.0);
  for (double t : {0.0, 0.25, 0.75}) {
    for (auto mode : {SolutionMode::Paper, SolutionMode::Corrected}) {
      const auto q = price_at_t(p, {OptionKind::Call, 110.0, t}, 97.0, mode);
      EXPECT_NEAR(q.d1 - q.d2, p.sigma * std::sqrt(p.T - t), 1e-14);
      EXPECT_GE(q.value, 0.0);
      EXPECT_LE(q.value, q.effective_spot);
    }
  }
}
