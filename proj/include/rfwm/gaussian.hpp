#pragma once
// Gaussian two-mode layer: input states, symplectic propagation through a
// scattering pair, and the closed-form quadrature/entanglement diagnostics.
//
// Quadratures are X = (a + a+)/2, Y = (a - a+)/2i, so vacuum variance is 1/4.
// States are (mean, covariance) over (X_a, Y_a, X_b, Y_b), where mode a is
// the near-face input a(0) and mode b the far-face input b(L); after
// propagation the same slots hold the outputs a(L) and b(0).
//
// Closed forms below are for the standard input configuration
// coherent(alpha) in mode a, squeezed vacuum (r, theta = 0) in mode b:
//
//   VarX_a = 1/4 + (1/4)[2|S2|^2 sinh^2 r - 2 Re(S2^2) sinh r cosh r]
//   VarY_a = 1/4 + (1/4)[2|S2|^2 sinh^2 r + 2 Re(S2^2) sinh r cosh r]
//            (mode b: same with S1)
//
//   Q = (1 + sinh^2 r)(|S1|^2 + |S2|^2)
//       - sinh r cosh r [Re(S1^2) + Re(S2^2)]
//
// Q < 1 is the entanglement flag used by the sweeps. Note that under
// unitarity Q is algebraically identical to 2(VarX_a + VarX_b); the direct
// covariance-matrix sum Var(X_a + X_b) + Var(Y_a - Y_b) is exposed separately
// as q_from_covariance and is NOT the same quantity for r > 0 (it differs by
// the cross-covariance term 2 sinh r cosh r [Re(S1 S2) - (Re S1^2 + Re S2^2)/2]).
// Both are kept: duan_q is the closed-form diagnostic the sweeps report,
// q_from_covariance is the literal two-mode variance sum.

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "rfwm/scattering.hpp"

namespace rfwm {

struct ModeSpec {
    enum class Kind { Vacuum, Coherent, Squeezed };
    Kind kind = Kind::Vacuum;
    std::complex<double> alpha{0.0, 0.0};  // coherent amplitude
    double r = 0.0;                        // squeezing magnitude, >= 0
    double theta = 0.0;                    // squeezing-ellipse angle

    static ModeSpec vacuum() { return {}; }
    static ModeSpec coherent(std::complex<double> alpha) {
        ModeSpec m;
        m.kind = Kind::Coherent;
        m.alpha = alpha;
        return m;
    }
    static ModeSpec squeezed(double r, double theta = 0.0) {
        if (r < 0.0) throw std::invalid_argument("ModeSpec::squeezed: r must be >= 0");
        ModeSpec m;
        m.kind = Kind::Squeezed;
        m.r = r;
        m.theta = theta;
        return m;
    }
};

struct InputSpec {
    ModeSpec mode_a;  // a(0)
    ModeSpec mode_b;  // b(L)
};

struct GaussianState {
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    Eigen::Matrix4d cov = 0.25 * Eigen::Matrix4d::Identity();
};

inline double mean_photon_number(const ModeSpec& m) {
    switch (m.kind) {
        case ModeSpec::Kind::Vacuum: return 0.0;
        case ModeSpec::Kind::Coherent: return std::norm(m.alpha);
        case ModeSpec::Kind::Squeezed: return std::sinh(m.r) * std::sinh(m.r);
    }
    return 0.0;
}

namespace detail {

// Single-mode covariance block. Squeezed vacuum: VarX = e^{-2r}/4 at theta=0,
// theta rotates the ellipse (theta = pi swaps the squeezed axis to Y).
inline Eigen::Matrix2d mode_cov(const ModeSpec& m) {
    Eigen::Matrix2d v = 0.25 * Eigen::Matrix2d::Identity();
    if (m.kind == ModeSpec::Kind::Squeezed) {
        const double c2 = std::cosh(2.0 * m.r);
        const double s2 = std::sinh(2.0 * m.r);
        v(0, 0) = 0.25 * (c2 - s2 * std::cos(m.theta));
        v(1, 1) = 0.25 * (c2 + s2 * std::cos(m.theta));
        v(0, 1) = v(1, 0) = -0.25 * s2 * std::sin(m.theta);
    }
    return v;
}

}  // namespace detail

inline GaussianState make_state(const InputSpec& in) {
    GaussianState st;
    st.mean(0) = in.mode_a.alpha.real();
    st.mean(1) = in.mode_a.alpha.imag();
    st.mean(2) = in.mode_b.alpha.real();
    st.mean(3) = in.mode_b.alpha.imag();
    st.cov.setZero();
    st.cov.block<2, 2>(0, 0) = detail::mode_cov(in.mode_a);
    st.cov.block<2, 2>(2, 2) = detail::mode_cov(in.mode_b);
    return st;
}

// Real 4x4 action of the complex pair (a,b) -> (S1 a + S2 b, S2 a + S1 b) on
// the quadrature vector.
inline Eigen::Matrix4d symplectic_from(const SMatrix& m) {
    const double r1 = m.s1.real(), i1 = m.s1.imag();
    const double r2 = m.s2.real(), i2 = m.s2.imag();
    Eigen::Matrix4d M;
    M << r1, -i1, r2, -i2,
         i1,  r1, i2,  r2,
         r2, -i2, r1, -i1,
         i2,  r2, i1,  r1;
    return M;
}

// Mean -> M mean, cov -> M cov M^T. Rejects maps that are not passive:
// unit row norm (unitarity defect) and row orthogonality are both required
// for the complex pair to be a unitary mode map.
inline GaussianState apply_scattering(const GaussianState& st, const SMatrix& m,
                                      double tol = 1e-8) {
    if (unitarity_defect(m) >= tol)
        throw std::invalid_argument("apply_scattering: scattering pair is not unitary");
    if (std::abs(2.0 * (m.s1 * std::conj(m.s2)).real()) >= 2.0 * tol)
        throw std::invalid_argument("apply_scattering: scattering pair rows are not orthogonal");
    const Eigen::Matrix4d M = symplectic_from(m);
    GaussianState out;
    out.mean = M * st.mean;
    out.cov = M * st.cov * M.transpose();
    return out;
}

struct OutputAmplitudes {
    double mode_a = 0.0;  // mean photon number of a(L)
    double mode_b = 0.0;  // mean photon number of b(0)
};

// For uncorrelated inputs the output photon numbers mix with |S1|^2, |S2|^2;
// their sum is conserved whenever |S1|^2 + |S2|^2 = 1.
inline OutputAmplitudes amplitudes(const InputSpec& in, const SMatrix& m) {
    const double na = mean_photon_number(in.mode_a);
    const double nb = mean_photon_number(in.mode_b);
    const double p1 = std::norm(m.s1);
    const double p2 = std::norm(m.s2);
    return {p1 * na + p2 * nb, p2 * na + p1 * nb};
}

struct QuadratureVariances {
    double x_a = 0.25;
    double y_a = 0.25;
    double x_b = 0.25;
    double y_b = 0.25;
};

// Closed forms for coherent (mode a) x squeezed (mode b, theta = 0) inputs.
// Mode-a variances carry S2 (they inherit noise from the squeezed far-face
// input), mode-b variances carry S1.
inline QuadratureVariances quadrature_variances_closed(const SMatrix& m, double r) {
    if (r < 0.0) throw std::invalid_argument("quadrature_variances_closed: r must be >= 0");
    const double sh = std::sinh(r), ch = std::cosh(r);
    auto contrib = [sh, ch](std::complex<double> s) {
        const double common = 2.0 * std::norm(s) * sh * sh;
        const double cross = 2.0 * (s * s).real() * sh * ch;
        return std::pair<double, double>{0.25 * (common - cross), 0.25 * (common + cross)};
    };
    const auto [dxa, dya] = contrib(m.s2);
    const auto [dxb, dyb] = contrib(m.s1);
    return {0.25 + dxa, 0.25 + dya, 0.25 + dxb, 0.25 + dyb};
}

struct DuanResult {
    double q = 1.0;
    bool entangled = false;  // strict q < 1
};

// Closed-form entanglement diagnostic for the same input configuration.
// Equals exactly 1 for r = 0 and any unitary pair.
inline DuanResult duan_q(const SMatrix& m, double r) {
    if (r < 0.0) throw std::invalid_argument("duan_q: r must be >= 0");
    const double sh = std::sinh(r), ch = std::cosh(r);
    const double q = (1.0 + sh * sh) * (std::norm(m.s1) + std::norm(m.s2)) -
                     sh * ch * ((m.s1 * m.s1).real() + (m.s2 * m.s2).real());
    return {q, q < 1.0};
}

inline QuadratureVariances variances_from_covariance(const GaussianState& st) {
    return {st.cov(0, 0), st.cov(1, 1), st.cov(2, 2), st.cov(3, 3)};
}

// Literal two-mode variance sum Var(X_a + X_b) + Var(Y_a - Y_b) read off the
// covariance matrix. This is the quantity a homodyne-difference measurement
// estimates; see the header comment for how it relates to duan_q.
inline double q_from_covariance(const GaussianState& st) {
    const double var_u = st.cov(0, 0) + st.cov(2, 2) + 2.0 * st.cov(0, 2);
    const double var_v = st.cov(1, 1) + st.cov(3, 3) - 2.0 * st.cov(1, 3);
    return var_u + var_v;
}

// Squeezing transfer in dB terms: input mode b is squeezed by
// 10 log10(e^{2r}) dB below vacuum; the output of mode a is squeezed by
// -10 log10(4 min(VarX_a, VarY_a)) dB. Returns the ratio (negative when the
// output is antisqueezed in both quadratures); 0 for r = 0.
inline double squeezing_transfer_efficiency(const SMatrix& m, double r) {
    if (r < 0.0) throw std::invalid_argument("squeezing_transfer_efficiency: r must be >= 0");
    if (r == 0.0) return 0.0;
    const auto v = quadrature_variances_closed(m, r);
    const double in_db = 10.0 * 2.0 * r / std::log(10.0);  // 10 log10 e^{2r}
    const double out_db = -10.0 * std::log10(4.0 * std::min(v.x_a, v.y_a));
    return out_db / in_db;
}

// Smallest eigenvalue of cov + (i/4) Omega; >= -tol_for_rounding for any
// physical state, and exactly 0 (doubly) for pure states.
inline double min_physicality_eigenvalue(const GaussianState& st) {
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = 1.0; omega(1, 0) = -1.0;
    omega(2, 3) = 1.0; omega(3, 2) = -1.0;
    Eigen::Matrix4cd h = st.cov.cast<std::complex<double>>() +
                         std::complex<double>(0.0, 0.25) * omega.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h);
    return es.eigenvalues().minCoeff();
}

// det(4 cov) = 1 for pure Gaussian states; passive maps preserve it.
inline double purity_det(const GaussianState& st) {
    return (4.0 * st.cov).determinant();
}

}  // namespace rfwm
