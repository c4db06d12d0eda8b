#pragma once
// Input-output scattering pair for two counterpropagating modes.
//
// The dimensionless mode equations
//
//   da/dz = +i (chi a + sigma b)
//   db/dz = -i (sigma a + chi b)
//
// with split boundary data a(0), b(L) (the b mode enters from the far face)
// solve to
//
//   a(L) = S1 a(0) + S2 b(L),   b(0) = S2 a(0) + S1 b(L)
//   S1 = 1 / (cos sL - i (chi/s) sin sL)
//   S2 = i S1 (sigma/s) sin sL
//   s  = sqrt(chi^2 - sigma^2)
//
// Both S1 and S2 depend on s only through cos(sL) and sin(sL)/s, which are
// even in s, so the square-root branch is irrelevant. Real chi, sigma give
// |S1|^2 + |S2|^2 = 1 in both regimes (oscillatory s^2 > 0, evanescent
// s^2 < 0), i.e. the pair is a passive beamsplitter-type map.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace rfwm {

struct SMatrix {
    std::complex<double> s1{1.0, 0.0};
    std::complex<double> s2{0.0, 0.0};
    std::complex<double> s_param{0.0, 0.0};
    double length = 0.0;
};

// Principal branch; purely imaginary in the band gap.
inline std::complex<double> s_param(double chi, double sigma) {
    return std::sqrt(std::complex<double>(chi * chi - sigma * sigma, 0.0));
}

inline double unitarity_defect(const SMatrix& m) {
    return std::abs(std::norm(m.s1) + std::norm(m.s2) - 1.0);
}

namespace detail {

inline void check_transfer_args(double chi, double sigma, double length) {
    if (!(std::isfinite(chi) && std::isfinite(sigma) && std::isfinite(length)))
        throw std::invalid_argument("transfer: arguments must be finite");
    if (length < 0.0)
        throw std::invalid_argument("transfer: length must be >= 0");
}

}  // namespace detail

// Closed-form evaluation. sin(sL)/s is evaluated by a short even series in
// (sL)^2 for |sL| < 1e-6, which covers the s -> 0 crossing without a branch
// in the result.
inline SMatrix transfer(double chi, double sigma, double length) {
    detail::check_transfer_args(chi, sigma, length);
    const std::complex<double> i1(0.0, 1.0);
    const std::complex<double> s = s_param(chi, sigma);
    const std::complex<double> u = s * length;

    std::complex<double> cos_u;
    std::complex<double> sine;  // sin(sL)/s, finite at s = 0
    if (std::abs(u) < 1e-6) {
        const std::complex<double> u2 = u * u;
        sine = length * (1.0 - u2 / 6.0 + u2 * u2 / 120.0);
        cos_u = 1.0 - u2 / 2.0 + u2 * u2 / 24.0;
    } else {
        sine = std::sin(u) / s;
        cos_u = std::cos(u);
    }

    SMatrix m;
    m.s_param = s;
    m.length = length;
    m.s1 = 1.0 / (cos_u - i1 * chi * sine);
    m.s2 = i1 * m.s1 * sigma * sine;
    return m;
}

// Independent route to the same map: integrate the initial-value problem for
// the two basis columns with an adaptive Cash-Karp RK45 stepper, then invert
// the 2x2 relation between (a(0), b(0)) and (a(0), b(L)). Used as the
// numerical oracle for transfer(); shares no trig/series code with it.
inline SMatrix transfer_shooting(double chi, double sigma, double length,
                                 double tol = 1e-10) {
    detail::check_transfer_args(chi, sigma, length);
    if (tol <= 0.0) throw std::invalid_argument("transfer_shooting: tol must be positive");

    using state_t = std::array<std::complex<double>, 2>;
    namespace ode = boost::numeric::odeint;
    const std::complex<double> i1(0.0, 1.0);

    auto rhs = [chi, sigma, i1](const state_t& y, state_t& dy, double) {
        dy[0] = i1 * (chi * y[0] + sigma * y[1]);
        dy[1] = -i1 * (sigma * y[0] + chi * y[1]);
    };
    auto propagate = [&](state_t y) {
        if (length > 0.0) {
            auto stepper =
                ode::make_controlled<ode::runge_kutta_cash_karp54<state_t>>(0.01 * tol, 0.01 * tol);
            ode::integrate_adaptive(stepper, rhs, y, 0.0, length,
                                    std::min(length, 0.1) / 4.0);
        }
        return y;
    };

    const state_t col_a = propagate({1.0, 0.0});
    const state_t col_b = propagate({0.0, 1.0});
    const std::complex<double> phi11 = col_a[0], phi21 = col_a[1];
    const std::complex<double> phi12 = col_b[0], phi22 = col_b[1];

    // b(L) = phi21 a(0) + phi22 b(0) is solved for b(0); phi22 = 1/S1 has
    // modulus >= 1 for real couplings, so the inversion cannot degenerate
    // there, but guard anyway for robustness against bad inputs.
    const double scale =
        std::max({std::abs(phi11), std::abs(phi12), std::abs(phi21), std::abs(phi22), 1.0});
    if (std::abs(phi22) < tol * scale)
        throw std::runtime_error("transfer_shooting: boundary inversion is ill-conditioned");

    const std::complex<double> t_aa = phi11 - phi12 * phi21 / phi22;  // a(0) -> a(L)
    const std::complex<double> t_ab = phi12 / phi22;                  // b(L) -> a(L)
    const std::complex<double> t_ba = -phi21 / phi22;                 // a(0) -> b(0)
    const std::complex<double> t_bb = 1.0 / phi22;                    // b(L) -> b(0)

    // The exact map is symmetric (t_aa = t_bb, t_ab = t_ba); a large defect
    // means the integration failed, not that the map lost its structure.
    const double sym_defect = std::max(std::abs(t_aa - t_bb), std::abs(t_ab - t_ba));
    if (sym_defect > 1e4 * tol)
        throw std::runtime_error("transfer_shooting: integration lost the symmetric structure");

    SMatrix m;
    m.s_param = s_param(chi, sigma);
    m.length = length;
    m.s1 = 0.5 * (t_aa + t_bb);
    m.s2 = 0.5 * (t_ab + t_ba);
    return m;
}

}  // namespace rfwm
