#pragma once
// Truncated Fock-space oracle for the three-level atom coupled to two
// quantized modes. This layer exists to validate the dispersive reduction
// used everywhere else: it evolves the full Hamiltonian
//
//   H = -Delta |c><c| - delta |b><b| + W (|a><c| + |c><a|) + s+ |b><c| + s |c><b|
//   s = g (a + b)        (spatially reduced form, W constant)
//
// exactly (matrix exponential via Hermitian eigendecomposition) and compares
// against the effective photonic Hamiltonian obtained by eliminating |c> and
// |b>:
//
//   H_eff = W^2 g^2 / (Delta^2 delta) (a+ + b+)(a + b)
//
// which is the beamsplitter form chi0'(n_a + n_b) + sigma0'(a b+ + a+ b) with
// chi0' = sigma0' = W^2 g^2/(Delta^2 delta), up to dropped c-number shifts
// (W^2/Delta and the commutator constant) that only contribute global phase.
//
// Basis ordering: |atom> (x) |n_a> (x) |n_b>, atom in {a, b, c}, photon
// numbers 0..n_max, index = atom*(n_max+1)^2 + n_a*(n_max+1) + n_b.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "rfwm/scattering.hpp"

namespace rfwm {

struct FockConfig {
    int n_max = 1;          // per-mode photon cutoff, >= 1
    double w_amp = 0.0;     // pump amplitude W (plays 2*Omega)
    double g_coupling = 0.0;
    double delta_one = 0.0;  // Delta
    double delta_two = 0.0;  // delta
};

inline int photonic_dim(const FockConfig& cfg) {
    if (cfg.n_max < 1) throw std::invalid_argument("FockConfig: n_max must be >= 1");
    return (cfg.n_max + 1) * (cfg.n_max + 1);
}

inline int full_dim(const FockConfig& cfg) { return 3 * photonic_dim(cfg); }

namespace fock_detail {

inline Eigen::MatrixXcd annihilation(int levels) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(levels, levels);
    for (int n = 1; n < levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

// g (a + b) on the two-mode photonic space.
inline Eigen::MatrixXcd sum_mode_op(const FockConfig& cfg) {
    const int d = cfg.n_max + 1;
    const Eigen::MatrixXcd a1 = annihilation(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    return kron(a1, id) + kron(id, a1);
}

}  // namespace fock_detail

inline Eigen::MatrixXcd build_full_hamiltonian(const FockConfig& cfg) {
    const int ph = photonic_dim(cfg);
    const Eigen::MatrixXcd id_ph = Eigen::MatrixXcd::Identity(ph, ph);
    const Eigen::MatrixXcd s_op = cfg.g_coupling * fock_detail::sum_mode_op(cfg);

    auto proj = [](int i, int j) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(3, 3);
        e(i, j) = 1.0;
        return e;
    };
    // atom indices: a = 0, b = 1, c = 2
    Eigen::MatrixXcd h = fock_detail::kron(-cfg.delta_one * proj(2, 2), id_ph) +
                         fock_detail::kron(-cfg.delta_two * proj(1, 1), id_ph) +
                         fock_detail::kron(cfg.w_amp * (proj(0, 2) + proj(2, 0)), id_ph) +
                         fock_detail::kron(proj(1, 2), s_op.adjoint()) +
                         fock_detail::kron(proj(2, 1), s_op);
    return h;
}

inline Eigen::MatrixXcd build_effective_hamiltonian(const FockConfig& cfg) {
    if (cfg.delta_one == 0.0 || cfg.delta_two == 0.0)
        throw std::invalid_argument("build_effective_hamiltonian: detunings must be nonzero");
    const double kappa = cfg.w_amp * cfg.w_amp * cfg.g_coupling * cfg.g_coupling /
                         (cfg.delta_one * cfg.delta_one * cfg.delta_two);
    const Eigen::MatrixXcd sum = fock_detail::sum_mode_op(cfg);
    return kappa * (sum.adjoint() * sum);
}

// Under H_eff the Heisenberg mode map after time t is the scattering pair
// S1 = e^{-i kappa t} cos(kappa t), S2 = -i e^{-i kappa t} sin(kappa t).
// Bridges the Fock oracle and the Gaussian layer in tests.
inline SMatrix smatrix_from_effective(const FockConfig& cfg, double t) {
    if (cfg.delta_one == 0.0 || cfg.delta_two == 0.0)
        throw std::invalid_argument("smatrix_from_effective: detunings must be nonzero");
    const double kappa = cfg.w_amp * cfg.w_amp * cfg.g_coupling * cfg.g_coupling /
                         (cfg.delta_one * cfg.delta_one * cfg.delta_two);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -kappa * t));
    SMatrix m;
    m.s1 = phase * std::cos(kappa * t);
    m.s2 = std::complex<double>(0.0, -1.0) * phase * std::sin(kappa * t);
    m.s_param = kappa;
    m.length = t;
    return m;
}

// Exact unitary propagation of a Hermitian matrix: diagonalize once, apply
// phases per time. Cheaper than scaling-and-squaring when several times are
// needed for the same Hamiltonian.
class Propagator {
  public:
    explicit Propagator(const Eigen::MatrixXcd& h, double herm_tol = 1e-12) {
        const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
        if ((h - h.adjoint()).cwiseAbs().maxCoeff() > herm_tol * scale)
            throw std::invalid_argument("Propagator: matrix is not Hermitian");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("Propagator: eigendecomposition failed");
        vecs_ = es.eigenvectors();
        evals_ = es.eigenvalues();
    }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& psi, double t) const {
        Eigen::VectorXcd coeff = vecs_.adjoint() * psi;
        for (Eigen::Index k = 0; k < coeff.size(); ++k)
            coeff(k) *= std::exp(std::complex<double>(0.0, -evals_(k) * t));
        return vecs_ * coeff;
    }

    const Eigen::VectorXd& eigenvalues() const { return evals_; }

  private:
    Eigen::MatrixXcd vecs_;
    Eigen::VectorXd evals_;
};

inline Eigen::VectorXcd evolve(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& psi0,
                               double t, double norm_tol = 1e-10) {
    if (h.rows() != h.cols() || h.rows() != psi0.size())
        throw std::invalid_argument("evolve: dimension mismatch");
    const Propagator prop(h);
    Eigen::VectorXcd psi = prop.apply(psi0, t);
    if (std::abs(psi.norm() - psi0.norm()) > norm_tol)
        throw std::runtime_error("evolve: norm drift above tolerance");
    return psi;
}

// Truncated, renormalized single-mode states.
inline Eigen::VectorXcd coherent_state(std::complex<double> alpha, int n_max) {
    if (n_max < 1) throw std::invalid_argument("coherent_state: n_max must be >= 1");
    Eigen::VectorXcd c(n_max + 1);
    c(0) = 1.0;
    for (int n = 1; n <= n_max; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    c /= c.norm();
    return c;
}

inline Eigen::VectorXcd squeezed_state(double r, int n_max) {
    if (r < 0.0) throw std::invalid_argument("squeezed_state: r must be >= 0");
    if (n_max < 1) throw std::invalid_argument("squeezed_state: n_max must be >= 1");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_max + 1);
    c(0) = 1.0;
    const double th = std::tanh(r);
    for (int m = 1; 2 * m <= n_max; ++m)
        c(2 * m) = -c(2 * m - 2) * th *
                   std::sqrt(static_cast<double>(2 * m) * (2 * m - 1)) /
                   static_cast<double>(2 * m);
    c /= c.norm();
    return c;
}

inline Eigen::VectorXcd product_state(const Eigen::VectorXcd& mode_a,
                                      const Eigen::VectorXcd& mode_b) {
    Eigen::VectorXcd out(mode_a.size() * mode_b.size());
    for (Eigen::Index i = 0; i < mode_a.size(); ++i)
        out.segment(i * mode_b.size(), mode_b.size()) = mode_a(i) * mode_b;
    return out;
}

struct ModeStats {
    double mean_x = 0.0;
    double mean_y = 0.0;
    double var_x = 0.25;
    double var_y = 0.25;
    double photons = 0.0;
};

struct TwoModeStats {
    ModeStats mode_a;
    ModeStats mode_b;
    double cutoff_population = 0.0;  // max over modes of the n = n_max shell
};

namespace fock_detail {

inline ModeStats stats_from_moments(std::complex<double> m1, std::complex<double> m2,
                                    double n) {
    // VarX = (1 + 2<n> + 2 Re<a^2>)/4 - (Re<a>)^2, VarY with the opposite sign.
    ModeStats s;
    s.mean_x = m1.real();
    s.mean_y = m1.imag();
    s.var_x = 0.25 * (1.0 + 2.0 * n + 2.0 * m2.real()) - m1.real() * m1.real();
    s.var_y = 0.25 * (1.0 + 2.0 * n - 2.0 * m2.real()) - m1.imag() * m1.imag();
    s.photons = n;
    return s;
}

}  // namespace fock_detail

// Moments of a pure two-mode photonic state (row-major photon index as in the
// basis ordering above). Accumulated directly from the amplitudes; no
// operator matrices are materialized.
inline TwoModeStats fock_quadrature_stats(const Eigen::VectorXcd& psi, int n_max) {
    const int d = n_max + 1;
    if (psi.size() != static_cast<Eigen::Index>(d) * d)
        throw std::invalid_argument("fock_quadrature_stats: state size does not match n_max");
    auto at = [&](int na, int nb) { return psi(na * d + nb); };

    std::complex<double> a1{}, a2{}, b1{}, b2{};
    double na_mean = 0.0, nb_mean = 0.0, edge_a = 0.0, edge_b = 0.0;
    for (int na = 0; na < d; ++na) {
        for (int nb = 0; nb < d; ++nb) {
            const double p = std::norm(at(na, nb));
            na_mean += na * p;
            nb_mean += nb * p;
            if (na == n_max) edge_a += p;
            if (nb == n_max) edge_b += p;
            if (na + 1 < d) a1 += std::conj(at(na, nb)) * std::sqrt(na + 1.0) * at(na + 1, nb);
            if (na + 2 < d)
                a2 += std::conj(at(na, nb)) * std::sqrt((na + 1.0) * (na + 2.0)) * at(na + 2, nb);
            if (nb + 1 < d) b1 += std::conj(at(na, nb)) * std::sqrt(nb + 1.0) * at(na, nb + 1);
            if (nb + 2 < d)
                b2 += std::conj(at(na, nb)) * std::sqrt((nb + 1.0) * (nb + 2.0)) * at(na, nb + 2);
        }
    }
    TwoModeStats out;
    out.mode_a = fock_detail::stats_from_moments(a1, a2, na_mean);
    out.mode_b = fock_detail::stats_from_moments(b1, b2, nb_mean);
    out.cutoff_population = std::max(edge_a, edge_b);
    return out;
}

inline ModeStats mode_stats(const Eigen::VectorXcd& psi) {
    std::complex<double> m1{}, m2{};
    double n_mean = 0.0;
    const int d = static_cast<int>(psi.size());
    for (int n = 0; n < d; ++n) {
        n_mean += n * std::norm(psi(n));
        if (n + 1 < d) m1 += std::conj(psi(n)) * std::sqrt(n + 1.0) * psi(n + 1);
        if (n + 2 < d) m2 += std::conj(psi(n)) * std::sqrt((n + 1.0) * (n + 2.0)) * psi(n + 2);
    }
    return fock_detail::stats_from_moments(m1, m2, n_mean);
}

struct EliminationResult {
    double fidelity = 0.0;  // |<psi_eff|P_a psi_full>|^2 / <P_a psi_full|P_a psi_full>
    double leakage = 0.0;   // 1 - <P_a psi_full|P_a psi_full>
    double cutoff_population = 0.0;
};

// Truncation policy shared by the elimination checks: the n = n_max shell
// must stay essentially unpopulated for the cutoff to be meaningful.
inline constexpr double k_truncation_warn = 1e-8;
inline constexpr double k_truncation_fail = 1e-4;

// Evolves |atom a> (x) psi_ph under the full Hamiltonian and compares the
// a-sector against the H_eff evolution of psi_ph at the same times.
inline std::vector<EliminationResult> elimination_scan(const FockConfig& cfg,
                                                       const Eigen::VectorXcd& psi_ph,
                                                       const std::vector<double>& times) {
    const int ph = photonic_dim(cfg);
    if (psi_ph.size() != ph)
        throw std::invalid_argument("elimination_scan: photonic state size mismatch");

    const Propagator full(build_full_hamiltonian(cfg));
    const Propagator eff(build_effective_hamiltonian(cfg));

    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(3 * ph);
    psi0.segment(0, ph) = psi_ph;  // atom index a = 0 occupies the first block

    std::vector<EliminationResult> out;
    out.reserve(times.size());
    for (const double t : times) {
        const Eigen::VectorXcd psi_full = full.apply(psi0, t);
        const Eigen::VectorXcd psi_a = psi_full.segment(0, ph);
        const Eigen::VectorXcd psi_eff = eff.apply(psi_ph, t);
        const double pa = psi_a.squaredNorm();

        EliminationResult r;
        r.leakage = 1.0 - pa;
        r.fidelity = pa > 1e-300 ? std::norm(psi_eff.dot(psi_a)) / pa : 0.0;
        double edge = 0.0;
        const int d = cfg.n_max + 1;
        for (int atom = 0; atom < 3; ++atom)
            for (int na = 0; na < d; ++na)
                for (int nb = 0; nb < d; ++nb)
                    if (na == cfg.n_max || nb == cfg.n_max)
                        edge += std::norm(psi_full(atom * ph + na * d + nb));
        r.cutoff_population = edge;
        if (edge > k_truncation_fail)
            throw std::runtime_error("elimination_scan: population reached the photon cutoff");
        out.push_back(r);
    }
    return out;
}

inline EliminationResult elimination_fidelity(const FockConfig& cfg,
                                              const Eigen::VectorXcd& psi_ph, double t) {
    return elimination_scan(cfg, psi_ph, {t}).front();
}

}  // namespace rfwm
