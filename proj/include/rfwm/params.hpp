#pragma once
// Physical parameters of the pump-driven Raman medium and their reduction to
// the dimensionless coupled-mode coefficients used by the scattering layer.
//
// Two counterpropagating quantum modes are coupled through a far-detuned
// atomic transition driven by a classical standing-wave pump. After adiabatic
// elimination of the excited state the medium acts on the modes through two
// coefficients:
//
//   sigma0 = Omega^2 g^2 / (Delta^2 delta)          cross-coupling, rad/s
//   chi0   = 2 sigma0 - delta_k c                   self-action, rad/s
//
// with delta_k = k - k0 the pump/quantum-field wavevector mismatch. In the
// dimensionless frame z = alpha0 * z0 the propagation coefficients are
// chi = -chi0/(alpha0 c) and sigma = -sigma0/(alpha0 c). The spectrum is
// evanescent (band gap) exactly when chi^2 < sigma^2, which in terms of
// P = sigma0/(delta_k c) is the window 1/3 < P < 1.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace rfwm {

// All frequencies/detunings are angular (rad/s); wavenumbers are 1/m.
struct PhysicalParams {
    double omega_rabi = 0.0;  // pump Rabi frequency
    double g_coupling = 0.0;  // field-atom coupling constant
    double delta_one = 0.0;   // one-photon detuning (Delta)
    double delta_two = 0.0;   // two-photon detuning (delta)
    double k_pump = 0.0;      // pump wavenumber k
    double k_quantum = 0.0;   // quantum-field carrier wavenumber k0
    double alpha0 = 0.0;      // resonant absorption coefficient, 1/m
    double c_light = 299792458.0;  // m/s
    double length = 0.0;      // interaction length in units of 1/alpha0
};

enum class Regime { Propagating, BandGap, Boundary };

constexpr const char* to_string(Regime r) {
    switch (r) {
        case Regime::Propagating: return "propagating";
        case Regime::BandGap: return "band_gap";
        case Regime::Boundary: return "boundary";
    }
    return "unknown";
}

struct Couplings {
    double chi0 = 0.0;     // self-action coefficient, rad/s
    double sigma0 = 0.0;   // cross-coupling coefficient, rad/s
    double delta_k = 0.0;  // k - k0, 1/m
    double chi = 0.0;      // dimensionless self-action
    double sigma = 0.0;    // dimensionless cross-coupling
    std::optional<double> p_param;  // sigma0/(delta_k c); empty when delta_k == 0
    Regime regime = Regime::Boundary;
};

// CLI-facing frequencies are plain MHz; internally everything is angular.
inline double rad_per_s_from_mhz(double mhz) {
    return 2.0 * std::numbers::pi * 1.0e6 * mhz;
}

// Band gap iff chi^2 < sigma^2; boundary within relative tolerance of the
// crossing. chi = sigma = 0 counts as boundary (s = 0 identically).
inline Regime classify_regime(double chi, double sigma, double rel_tol = 1e-12) {
    const double a = chi * chi;
    const double b = sigma * sigma;
    const double scale = std::max(a, b);
    if (std::abs(a - b) <= rel_tol * scale) return Regime::Boundary;
    return a < b ? Regime::BandGap : Regime::Propagating;
}

inline Couplings derive_couplings(const PhysicalParams& p) {
    if (p.delta_one == 0.0 || p.delta_two == 0.0)
        throw std::invalid_argument("derive_couplings: detunings must be nonzero");
    if (p.alpha0 <= 0.0)
        throw std::invalid_argument("derive_couplings: alpha0 must be positive");
    if (p.c_light <= 0.0)
        throw std::invalid_argument("derive_couplings: c_light must be positive");

    Couplings c;
    c.delta_k = p.k_pump - p.k_quantum;
    const double w2g2 = p.omega_rabi * p.omega_rabi * p.g_coupling * p.g_coupling;
    c.sigma0 = w2g2 / (p.delta_one * p.delta_one * p.delta_two);
    // Written as 2*sigma0 - delta_k*c so chi0 - 2 sigma0 + delta_k c == 0 exactly.
    c.chi0 = 2.0 * c.sigma0 - c.delta_k * p.c_light;
    const double unit = p.alpha0 * p.c_light;  // rad/s per unit of z = alpha0 z0
    c.chi = -c.chi0 / unit;
    c.sigma = -c.sigma0 / unit;
    if (c.delta_k != 0.0) c.p_param = c.sigma0 / (c.delta_k * p.c_light);
    c.regime = classify_regime(c.chi, c.sigma);
    return c;
}

struct DispersiveReport {
    double ratio_pump = 0.0;     // |2 Omega / Delta|
    double ratio_quantum = 0.0;  // |2 Omega g sqrt(n) / (Delta delta)|
    double threshold = 0.1;
    bool pass = false;
};

// Checks the adiabatic-elimination smallness parameters at photon number
// n_max. Failing is a warning for callers, not an error: the coupled-mode
// model still evaluates, it just stops being a faithful reduction.
inline DispersiveReport validate_dispersive(const PhysicalParams& p, int n_max,
                                            double threshold = 0.1) {
    if (n_max < 0) throw std::invalid_argument("validate_dispersive: n_max must be >= 0");
    if (p.delta_one == 0.0 || p.delta_two == 0.0)
        throw std::invalid_argument("validate_dispersive: detunings must be nonzero");
    if (threshold <= 0.0) throw std::invalid_argument("validate_dispersive: threshold must be positive");

    DispersiveReport rep;
    rep.ratio_pump = std::abs(2.0 * p.omega_rabi / p.delta_one);
    rep.ratio_quantum = std::abs(2.0 * p.omega_rabi * p.g_coupling *
                                 std::sqrt(static_cast<double>(n_max)) /
                                 (p.delta_one * p.delta_two));
    rep.threshold = threshold;
    rep.pass = rep.ratio_pump < threshold && rep.ratio_quantum < threshold;
    return rep;
}

}  // namespace rfwm
