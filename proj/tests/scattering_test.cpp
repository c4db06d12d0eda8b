// Scattering pair: closed form against frozen high-precision values, the
// shooting-method oracle, and the unitarity/periodicity structure.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "rfwm/scattering.hpp"

namespace {

using cplx = std::complex<double>;
using rfwm::SMatrix;
using rfwm::transfer;
using rfwm::transfer_shooting;

constexpr double kPi = std::numbers::pi;

void expect_close(cplx got, cplx want, double tol, const char* label) {
    EXPECT_NEAR(got.real(), want.real(), tol) << label;
    EXPECT_NEAR(got.imag(), want.imag(), tol) << label;
}

TEST(Scattering, SParamBranches) {
    const cplx osc = rfwm::s_param(1.9, 1.0);
    EXPECT_NEAR(osc.real(), 1.6155494421403512, 1e-15);
    EXPECT_NEAR(osc.imag(), 0.0, 1e-15);

    const cplx gap = rfwm::s_param(-0.5, 1.0);
    EXPECT_NEAR(gap.real(), 0.0, 1e-15);
    EXPECT_NEAR(gap.imag(), 0.8660254037844386, 1e-15);
}

// chi = 1.9, sigma = 1 at sL = pi/2: S1 = i s / chi, S2 = -sigma / chi.
TEST(Scattering, OscillatoryQuarterPeriodFrozen) {
    const double abs_s = std::abs(rfwm::s_param(1.9, 1.0));
    const SMatrix m = transfer(1.9, 1.0, kPi / 2.0 / abs_s);
    expect_close(m.s1, {0.0, 0.85028918007386906}, 1e-12, "S1");
    expect_close(m.s2, {-0.52631578947368421, 0.0}, 1e-12, "S2");
    EXPECT_NEAR(std::norm(m.s1), 0.72299168975069252, 1e-12);
    EXPECT_NEAR(std::norm(m.s2), 0.27700831024930748, 1e-12);
}

// chi = -0.5, sigma = 1 at |s|L = 1: evanescent regime, growing |S2|^2.
TEST(Scattering, EvanescentFrozen) {
    const double abs_s = 0.8660254037844386;
    const SMatrix m = transfer(-0.5, 1.0, 1.0 / abs_s);
    expect_close(m.s1, {0.54305834832149402, -0.23878633502972057}, 1e-12, "S1");
    expect_close(m.s2, {0.32403435826070246, 0.73693313888573341}, 1e-12, "S2");
    EXPECT_NEAR(std::norm(m.s1), 0.35193128347859509, 1e-12);
    EXPECT_NEAR(std::norm(m.s2), 0.64806871652140491, 1e-12);
}

// Generic oscillatory point with exactly representable inputs.
TEST(Scattering, GenericPointFrozen) {
    const SMatrix m = transfer(1.3, 0.9, 1.7);
    expect_close(m.s1, {-0.012470653713991200, 0.72159382560734395}, 1e-13, "S1");
    expect_close(m.s2, {-0.69210098192632771, -0.011960955560355718}, 1e-13, "S2");
}

TEST(Scattering, ZeroLengthIsIdentity) {
    const SMatrix m = transfer(1.3, 0.9, 0.0);
    expect_close(m.s1, {1.0, 0.0}, 0.0, "S1");
    expect_close(m.s2, {0.0, 0.0}, 0.0, "S2");
}

// No coupling: pure phase rotation of the forward mode, e^{i chi L}.
TEST(Scattering, UncoupledIsPhaseRotation) {
    for (const double chi : {0.7, -0.7}) {
        for (const double len : {1.0, 2.3}) {
            const SMatrix m = transfer(chi, 0.0, len);
            expect_close(m.s1, std::exp(cplx(0.0, chi * len)), 1e-14, "S1");
            expect_close(m.s2, {0.0, 0.0}, 1e-14, "S2");
        }
    }
}

// |S1|^2 + |S2|^2 = 1 and S1 S2* purely imaginary, both regimes, any length.
TEST(Scattering, UnitarityProperty) {
    std::mt19937 rng(20260815);
    std::uniform_real_distribution<double> coupling(-3.0, 3.0);
    std::uniform_real_distribution<double> len(0.0, 20.0);
    for (int i = 0; i < 10000; ++i) {
        const double chi = coupling(rng);
        const double sigma = coupling(rng);
        const double l = len(rng);
        const SMatrix m = transfer(chi, sigma, l);
        EXPECT_LT(rfwm::unitarity_defect(m), 1e-12)
            << "chi=" << chi << " sigma=" << sigma << " L=" << l;
        EXPECT_LT(std::abs((m.s1 * std::conj(m.s2)).real()), 1e-12)
            << "chi=" << chi << " sigma=" << sigma << " L=" << l;
    }
}

// The series branch used for |sL| < 1e-6 must join the trig branch smoothly
// and cover the band-edge crossing chi^2 = sigma^2 without a jump.
TEST(Scattering, BandEdgeCrossingIsContinuous) {
    const SMatrix edge = transfer(1.0, 1.0, 1.0);
    // s = 0: S1 = 1/(1 - i chi L), S2 = i sigma L S1
    expect_close(edge.s1, cplx(1.0, 0.0) / cplx(1.0, -1.0), 1e-14, "S1");
    expect_close(edge.s2, cplx(0.0, 1.0) / cplx(1.0, -1.0), 1e-14, "S2");

    for (const double d : {1e-12, 1e-10, 1e-8, 1e-7}) {
        const SMatrix above = transfer(1.0 + d, 1.0, 1.0);
        const SMatrix below = transfer(1.0 - d, 1.0, 1.0);
        EXPECT_LT(std::abs(above.s1 - edge.s1), 1e-6);
        EXPECT_LT(std::abs(below.s1 - edge.s1), 1e-6);
        EXPECT_LT(std::abs(above.s2 - below.s2), 1e-6);
    }

    // straddle the series/trig switch at |sL| = 1e-6
    const double target = 1e-6;
    for (const double f : {0.97, 0.99, 1.01, 1.03}) {
        const double u = f * target;
        const double chi = std::sqrt(1.0 + u * u);  // sigma = 1, L = 1
        const SMatrix just = transfer(chi, 1.0, 1.0);
        const SMatrix ref = transfer(std::sqrt(1.0 + target * target), 1.0, 1.0);
        EXPECT_LT(std::abs(just.s1 - ref.s1), 1e-12);
        EXPECT_LT(std::abs(just.s2 - ref.s2), 1e-12);
    }
}

// Oscillatory regime: adding pi/s to the length flips S1, fixes S2, and
// leaves both moduli unchanged; 2pi/s restores the pair exactly.
TEST(Scattering, PeriodicityInLength) {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> len(0.1, 4.0);
    std::uniform_real_distribution<double> gap(0.2, 2.0);
    for (int i = 0; i < 500; ++i) {
        const double sigma = gap(rng);
        const double chi = sigma + gap(rng);  // strictly propagating
        const double s = std::abs(rfwm::s_param(chi, sigma));
        const double l = len(rng);
        const SMatrix base = transfer(chi, sigma, l);
        const SMatrix half = transfer(chi, sigma, l + kPi / s);
        const SMatrix full = transfer(chi, sigma, l + 2.0 * kPi / s);
        EXPECT_LT(std::abs(half.s1 + base.s1), 1e-9);
        EXPECT_LT(std::abs(half.s2 - base.s2), 1e-9);
        EXPECT_LT(std::abs(full.s1 - base.s1), 1e-9);
        EXPECT_LT(std::abs(full.s2 - base.s2), 1e-9);
        EXPECT_NEAR(std::norm(half.s1), std::norm(base.s1), 1e-10);
    }
}

// In the gap the cross term grows monotonically toward 1 with length.
TEST(Scattering, GapGrowthIsMonotone) {
    double prev = 0.0;
    for (const double l : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double p2 = std::norm(transfer(-0.5, 1.0, l).s2);
        EXPECT_GT(p2, prev);
        prev = p2;
    }
    EXPECT_LT(prev, 1.0);
    EXPECT_GT(prev, 0.999);
}

// The adaptive-RK oracle shares no trig/series code with the closed form.
TEST(Scattering, ShootingOracleAgrees) {
    const double s_osc = std::abs(rfwm::s_param(1.9, 1.0));
    const struct {
        double chi, sigma, len;
    } cases[] = {
        {1.9, 1.0, kPi / 2.0 / s_osc},
        {-0.5, 1.0, 1.1547005383792515},
        {1.3, 0.9, 1.7},
        {1.0, 1.0, 1.0},
        {0.3, 1.7, 2.0},
        {0.7, 0.0, 2.3},
        {0.0, 0.0, 5.0},
        {1.9, 1.0, 1e-7},
    };
    for (const auto& c : cases) {
        const SMatrix closed = transfer(c.chi, c.sigma, c.len);
        const SMatrix shot = transfer_shooting(c.chi, c.sigma, c.len);
        EXPECT_LT(std::abs(closed.s1 - shot.s1), 1e-8)
            << "chi=" << c.chi << " sigma=" << c.sigma << " L=" << c.len;
        EXPECT_LT(std::abs(closed.s2 - shot.s2), 1e-8)
            << "chi=" << c.chi << " sigma=" << c.sigma << " L=" << c.len;
    }

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> len(0.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double chi = coupling(rng);
        const double sigma = coupling(rng);
        const double l = len(rng);
        const SMatrix closed = transfer(chi, sigma, l);
        const SMatrix shot = transfer_shooting(chi, sigma, l);
        EXPECT_LT(std::abs(closed.s1 - shot.s1), 1e-7)
            << "chi=" << chi << " sigma=" << sigma << " L=" << l;
        EXPECT_LT(std::abs(closed.s2 - shot.s2), 1e-7)
            << "chi=" << chi << " sigma=" << sigma << " L=" << l;
    }
}

TEST(Scattering, RejectsBadArguments) {
    EXPECT_THROW(transfer(std::nan(""), 1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(transfer(1.0, std::numeric_limits<double>::infinity(), 1.0),
                 std::invalid_argument);
    EXPECT_THROW(transfer(1.0, 1.0, -0.5), std::invalid_argument);
    EXPECT_THROW(transfer_shooting(1.0, 1.0, 1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(transfer_shooting(1.0, 1.0, -1.0), std::invalid_argument);
}

}  // namespace
