// Physical-parameter layer: coupling derivation, regime classification, and
// the dispersive-validity ratios.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "rfwm/params.hpp"

namespace {

using rfwm::Couplings;
using rfwm::PhysicalParams;
using rfwm::Regime;

PhysicalParams sample_params(std::mt19937& rng) {
    auto uni = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    auto sign = [&rng]() { return (rng() & 1u) ? 1.0 : -1.0; };
    PhysicalParams p;
    p.omega_rabi = uni(1e5, 1e9);
    p.g_coupling = uni(1e3, 1e7);
    p.delta_one = sign() * uni(1e8, 1e10);
    p.delta_two = sign() * uni(1e5, 1e8);
    p.k_quantum = uni(1e6, 1.2e7);
    p.k_pump = p.k_quantum + sign() * uni(0.0, 1e-4) * p.k_quantum;
    p.alpha0 = uni(1.0, 1e4);
    return p;
}

TEST(Params, MhzConversion) {
    EXPECT_DOUBLE_EQ(rfwm::rad_per_s_from_mhz(1.0), 2.0 * std::numbers::pi * 1.0e6);
    EXPECT_EQ(rfwm::rad_per_s_from_mhz(0.0), 0.0);
    EXPECT_DOUBLE_EQ(rfwm::rad_per_s_from_mhz(-3.0), -3.0 * 2.0 * std::numbers::pi * 1.0e6);
}

// chi0 = 2 sigma0 - delta_k c must hold to the last bit: downstream code
// relies on chi0 - 2 sigma0 + delta_k c vanishing identically.
TEST(Params, CouplingIdentityIsExact) {
    std::mt19937 rng(20260815);
    for (int i = 0; i < 10000; ++i) {
        const PhysicalParams p = sample_params(rng);
        const Couplings c = rfwm::derive_couplings(p);
        EXPECT_EQ(c.chi0, 2.0 * c.sigma0 - c.delta_k * p.c_light);
        EXPECT_EQ(c.delta_k, p.k_pump - p.k_quantum);
    }
}

// sigma0 is even in Delta and odd in delta; the dimensionless couplings scale
// as 1/alpha0.
TEST(Params, CouplingSymmetries) {
    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        PhysicalParams p = sample_params(rng);
        const Couplings base = rfwm::derive_couplings(p);

        PhysicalParams q = p;
        q.delta_one = -q.delta_one;
        EXPECT_EQ(rfwm::derive_couplings(q).sigma0, base.sigma0);

        q = p;
        q.delta_two = -q.delta_two;
        EXPECT_EQ(rfwm::derive_couplings(q).sigma0, -base.sigma0);

        q = p;
        q.alpha0 = 2.0 * p.alpha0;
        const Couplings half = rfwm::derive_couplings(q);
        EXPECT_NEAR(half.chi, 0.5 * base.chi, 1e-15 * std::abs(base.chi) + 1e-300);
        EXPECT_NEAR(half.sigma, 0.5 * base.sigma, 1e-15 * std::abs(base.sigma) + 1e-300);
    }
}

TEST(Params, RegimeClassification) {
    EXPECT_EQ(rfwm::classify_regime(1.9, 1.0), Regime::Propagating);
    EXPECT_EQ(rfwm::classify_regime(-0.5, 1.0), Regime::BandGap);
    EXPECT_EQ(rfwm::classify_regime(1.0, 1.0), Regime::Boundary);
    EXPECT_EQ(rfwm::classify_regime(-1.0, 1.0), Regime::Boundary);
    EXPECT_EQ(rfwm::classify_regime(0.0, 0.0), Regime::Boundary);
    EXPECT_EQ(rfwm::classify_regime(0.0, 0.3), Regime::BandGap);
    // the tolerance band around |chi| = |sigma| is relative
    EXPECT_EQ(rfwm::classify_regime(1.0 + 1e-13, 1.0), Regime::Boundary);
    EXPECT_EQ(rfwm::classify_regime(1.0 + 1e-5, 1.0), Regime::Propagating);
}

// With sigma = 1 and chi = 2 - 1/P the gap opens exactly on 1/3 < P < 1.
TEST(Params, GapWindowInP) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(-2.0, 3.0);
    int gap_seen = 0;
    for (int i = 0; i < 10000; ++i) {
        const double p = uni(rng);
        if (std::abs(p) < 1e-9) continue;
        if (std::abs(p - 1.0) < 1e-6 || std::abs(p - 1.0 / 3.0) < 1e-6) continue;
        const double chi = 2.0 - 1.0 / p;
        const bool in_window = p > 1.0 / 3.0 && p < 1.0;
        const Regime r = rfwm::classify_regime(chi, 1.0);
        EXPECT_EQ(r == Regime::BandGap, in_window) << "P = " << p;
        gap_seen += r == Regime::BandGap;
    }
    EXPECT_GT(gap_seen, 500);
}

// Exact-power-of-ten inputs make sigma0 = 1 exactly, pinning the whole chain.
TEST(Params, DerivedCouplingsFrozen) {
    PhysicalParams p;
    p.omega_rabi = 1e8;
    p.g_coupling = 1e4;
    p.delta_one = 1e9;
    p.delta_two = 1e6;
    p.k_quantum = 1e7;
    p.k_pump = 1e7 + 4e-9;
    p.alpha0 = 2.0;
    const Couplings c = rfwm::derive_couplings(p);

    EXPECT_DOUBLE_EQ(c.sigma0, 1.0);
    const double dkc = c.delta_k * p.c_light;
    EXPECT_EQ(c.chi0, 2.0 - dkc);
    ASSERT_TRUE(c.p_param.has_value());
    EXPECT_DOUBLE_EQ(*c.p_param, 1.0 / dkc);
    // delta_k c ~ 1.2, so P ~ 0.83 sits inside the gap window
    EXPECT_EQ(c.regime, Regime::BandGap);
    EXPECT_DOUBLE_EQ(c.sigma, -1.0 / (2.0 * p.c_light));
    EXPECT_DOUBLE_EQ(c.chi, -(2.0 - dkc) / (2.0 * p.c_light));
}

TEST(Params, ZeroMismatchHasNoP) {
    PhysicalParams p;
    p.omega_rabi = 1e8;
    p.g_coupling = 1e4;
    p.delta_one = 1e9;
    p.delta_two = 1e6;
    p.k_quantum = 1e7;
    p.k_pump = 1e7;
    p.alpha0 = 1.0;
    const Couplings c = rfwm::derive_couplings(p);
    EXPECT_FALSE(c.p_param.has_value());
    EXPECT_EQ(c.chi0, 2.0 * c.sigma0);
    // |chi| = 2|sigma| > |sigma|: no gap without wavevector mismatch
    EXPECT_EQ(c.regime, Regime::Propagating);
}

TEST(Params, DeriveCouplingsRejectsBadInput) {
    PhysicalParams p;
    p.omega_rabi = 1.0;
    p.g_coupling = 1.0;
    p.delta_one = 0.0;
    p.delta_two = 1.0;
    p.alpha0 = 1.0;
    EXPECT_THROW(rfwm::derive_couplings(p), std::invalid_argument);
    p.delta_one = 1.0;
    p.delta_two = 0.0;
    EXPECT_THROW(rfwm::derive_couplings(p), std::invalid_argument);
    p.delta_two = 1.0;
    p.alpha0 = 0.0;
    EXPECT_THROW(rfwm::derive_couplings(p), std::invalid_argument);
    p.alpha0 = 1.0;
    p.c_light = -1.0;
    EXPECT_THROW(rfwm::derive_couplings(p), std::invalid_argument);
}

TEST(Params, DispersiveRatiosFrozen) {
    PhysicalParams p;
    p.omega_rabi = 60.0;
    p.g_coupling = 16.0;
    p.delta_one = 3000.0;
    p.delta_two = 200.0;
    const rfwm::DispersiveReport rep = rfwm::validate_dispersive(p, 8);
    EXPECT_DOUBLE_EQ(rep.ratio_pump, 0.04);
    EXPECT_DOUBLE_EQ(rep.ratio_quantum, 1920.0 * std::sqrt(8.0) / 600000.0);
    EXPECT_DOUBLE_EQ(rep.threshold, 0.1);
    EXPECT_TRUE(rep.pass);

    EXPECT_FALSE(rfwm::validate_dispersive(p, 8, 0.009).pass);
    // n = 0 photons: only the pump ratio is in play
    EXPECT_EQ(rfwm::validate_dispersive(p, 0).ratio_quantum, 0.0);
}

TEST(Params, DispersiveValidationRejectsBadInput) {
    PhysicalParams p;
    p.omega_rabi = 1.0;
    p.g_coupling = 1.0;
    p.delta_one = 1.0;
    p.delta_two = 1.0;
    EXPECT_THROW(rfwm::validate_dispersive(p, -1), std::invalid_argument);
    EXPECT_THROW(rfwm::validate_dispersive(p, 1, 0.0), std::invalid_argument);
    p.delta_two = 0.0;
    EXPECT_THROW(rfwm::validate_dispersive(p, 1), std::invalid_argument);
}

TEST(Params, RegimeNames) {
    EXPECT_STREQ(rfwm::to_string(Regime::Propagating), "propagating");
    EXPECT_STREQ(rfwm::to_string(Regime::BandGap), "band_gap");
    EXPECT_STREQ(rfwm::to_string(Regime::Boundary), "boundary");
}

}  // namespace
