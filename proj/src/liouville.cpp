#include "dressedpair/liouville.hpp"

#include <cmath>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "dressedpair/errors.hpp"

namespace dressedpair {

namespace {

constexpr double kDegeneracyTol = 1e-9;

// vec(A rho B) = (B^T kron A) vec(rho), column stacking.
Eigen::MatrixXcd sandwich(const Matrix4c& a, const Matrix4c& b) {
    return Eigen::kroneckerProduct(b.transpose(), a);
}

Matrix4c projector(int j) {
    Matrix4c p = Matrix4c::Zero();
    p(j, j) = 1.0;
    return p;
}

void add_dissipator(Superoperator& L, int to, int from, double weight) {
    if (weight < 0.0) throw std::domain_error("dissipator weight must be >= 0");
    if (weight == 0.0) return;
    Matrix4c jump = Matrix4c::Zero();
    jump(to, from) = 1.0;
    const Matrix4c p = projector(from);
    const Matrix4c id = Matrix4c::Identity();
    L += weight * (sandwich(jump, jump.adjoint()) -
                   0.5 * sandwich(p, id) - 0.5 * sandwich(id, p));
}

Superoperator commutator_part(const Matrix4c& h) {
    const Matrix4c id = Matrix4c::Identity();
    return Complex(0.0, -1.0) * (sandwich(h, id) - sandwich(id, h));
}

} // namespace

Complex ComplexFrequencies::operator[](int j) const {
    switch (j) {
        case 0: return zeta0;
        case 1: return zeta1;
        case 2: return zeta2;
        case 3: return zeta3;
        default: throw UsageError("zeta index out of range");
    }
}

namespace {

void add_dressed_dissipators(Superoperator& L, const RateSet& rates, double n1,
                             double n2) {
    add_dissipator(L, 2, 3, rates.gamma1_plus * (1.0 + n1));
    add_dissipator(L, 3, 2, rates.gamma1_plus * n1);
    add_dissipator(L, 0, 2, rates.gamma2_plus * (1.0 + n2));
    add_dissipator(L, 2, 0, rates.gamma2_plus * n2);
    add_dissipator(L, 1, 3, rates.gamma2_minus * (1.0 + n2));
    add_dissipator(L, 3, 1, rates.gamma2_minus * n2);
    add_dissipator(L, 0, 1, rates.gamma1_minus * (1.0 + n1));
    add_dissipator(L, 1, 0, rates.gamma1_minus * n1);
}

} // namespace

Superoperator build_dressed_generator(const RateSet& rates, double n1, double n2,
                                      double omega_over_gamma) {
    if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("occupations must be >= 0");
    Matrix4c h = Matrix4c::Zero();
    h(1, 1) = omega_over_gamma - rates.g;
    h(2, 2) = omega_over_gamma + rates.g;
    h(3, 3) = 2.0 * omega_over_gamma;
    Superoperator L = commutator_part(h);
    add_dressed_dissipators(L, rates, n1, n2);
    return L;
}

Superoperator build_phenomenological_generator(double omega_over_gamma, double g,
                                               double n1, double n2) {
    if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("occupations must be >= 0");
    // Computational order |gg>, |ge>, |eg>, |ee>; atom 1 is the first letter.
    Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
    lower(0, 1) = 1.0; // |g><e|
    const Eigen::Matrix2cd id2 = Eigen::Matrix2cd::Identity();
    const Matrix4c s1m = Eigen::kroneckerProduct(lower, id2);
    const Matrix4c s2m = Eigen::kroneckerProduct(id2, lower);

    Matrix4c h = omega_over_gamma * (s1m.adjoint() * s1m + s2m.adjoint() * s2m);
    h += g * (s1m.adjoint() * s2m + s1m * s2m.adjoint());

    Superoperator L = commutator_part(h);
    const Matrix4c id = Matrix4c::Identity();
    auto lindblad = [&L, &id](const Matrix4c& op, double weight) {
        if (weight <= 0.0) return;
        const Matrix4c opd_op = op.adjoint() * op;
        L += weight * (sandwich(op, op.adjoint()) -
                       0.5 * sandwich(opd_op, id) - 0.5 * sandwich(id, opd_op));
    };
    lindblad(s1m, 1.0 + n1);
    lindblad(Matrix4c(s1m.adjoint()), n1);
    lindblad(s2m, 1.0 + n2);
    lindblad(Matrix4c(s2m.adjoint()), n2);

    // Return in the dressed basis: rho_d = U^dag rho_c U.
    const Matrix4c u = bell_basis_unitary();
    const Eigen::MatrixXcd t = sandwich(u.adjoint(), u);
    const Eigen::MatrixXcd t_inv = sandwich(u, u.adjoint());
    return t * L * t_inv;
}

ComplexFrequencies complex_frequencies(const RateSet& rates, double omega_over_gamma) {
    ComplexFrequencies z;
    z.zeta0 = 0.0;
    z.zeta1 = Complex(omega_over_gamma - rates.g, -0.5 * rates.gamma1_minus);
    z.zeta2 = Complex(omega_over_gamma + rates.g, -0.5 * rates.gamma2_plus);
    z.zeta3 = Complex(2.0 * omega_over_gamma,
                      -0.5 * (rates.gamma1_plus + rates.gamma2_minus));
    return z;
}

EigenSystem analytic_eigensystem_zero_temperature(const RateSet& rates,
                                                  const ComplexFrequencies& zetas) {
    const double g1p = rates.gamma1_plus, g1m = rates.gamma1_minus;
    const double g2p = rates.gamma2_plus, g2m = rates.gamma2_minus;
    const double cascade = g1p + g2m;
    for (double denom : {cascade - g1m, cascade - g2p}) {
        if (std::abs(denom) <= kDegeneracyTol) {
            throw DegenerateSpectrumError(
                "near-degenerate decay rates: use eig_dense on the built generator");
        }
    }

    EigenSystem sys;
    sys.modes.reserve(16);

    // Stationary mode.
    sys.modes.push_back({Complex(0.0), projector(0), Matrix4c::Identity()});

    // Slow mode protecting |1>.
    {
        LiouvilleMode m;
        m.lambda = Complex(-g1m);
        m.right = projector(1) - projector(0);
        m.left = projector(1) + (g2m / (cascade - g1m)) * projector(3);
        sys.modes.push_back(std::move(m));
    }

    // Fast mode draining |2>.
    {
        LiouvilleMode m;
        m.lambda = Complex(-g2p);
        m.right = projector(2) - projector(0);
        m.left = projector(2) + (g1p / (cascade - g2p)) * projector(3);
        sys.modes.push_back(std::move(m));
    }

    // Cascade mode out of |3>. The eigenvector is traceless: d0 = -(d1+d2+d3).
    {
        LiouvilleMode m;
        m.lambda = Complex(-cascade);
        const double d3 = 1.0;
        const double d2 = g1p / (g2p - cascade);
        const double d1 = g2m / (g1m - cascade);
        const double d0 = -(d1 + d2 + d3);
        m.right = d0 * projector(0) + d1 * projector(1) + d2 * projector(2) +
                  d3 * projector(3);
        m.left = projector(3);
        sys.modes.push_back(std::move(m));
    }

    // Off-diagonal modes: |j><k| with lambda = i conj(zeta_k) - i zeta_j.
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j == k) continue;
            LiouvilleMode m;
            m.lambda = Complex(0.0, 1.0) * std::conj(zetas[k]) -
                       Complex(0.0, 1.0) * zetas[j];
            m.right = Matrix4c::Zero();
            m.right(j, k) = 1.0;
            m.left = m.right;
            sys.modes.push_back(std::move(m));
        }
    }
    return sys;
}

DensityMatrix spectral_evolve(const EigenSystem& eigensystem,
                              const DensityMatrix& rho0, double t) {
    if (rho0.basis != Basis::dressed) {
        throw UsageError("spectral_evolve expects a dressed-basis state");
    }
    Matrix4c acc = Matrix4c::Zero();
    for (const auto& mode : eigensystem.modes) {
        const Complex coeff = (mode.left.adjoint() * rho0.rho).trace();
        acc += coeff * std::exp(mode.lambda * t) * mode.right;
    }
    DensityMatrix out;
    out.basis = Basis::dressed;
    out.rho = 0.5 * (acc + acc.adjoint());
    return out;
}

DensityMatrix evolve_closed_form_zero_temperature(const Matrix4c& P,
                                                  const RateSet& rates,
                                                  const ComplexFrequencies& zetas,
                                                  double t) {
    const double g1p = rates.gamma1_plus, g1m = rates.gamma1_minus;
    const double g2p = rates.gamma2_plus, g2m = rates.gamma2_minus;
    const double cascade = g1p + g2m;
    for (double denom : {cascade - g1m, cascade - g2p}) {
        if (std::abs(denom) <= kDegeneracyTol) {
            throw DegenerateSpectrumError(
                "near-degenerate decay rates: use spectral_evolve with eig_dense modes");
        }
    }
    const double p11 = P(1, 1).real(), p22 = P(2, 2).real(), p33 = P(3, 3).real();
    const double e1 = std::exp(-g1m * t);
    const double e2 = std::exp(-g2p * t);
    const double e3 = std::exp(-cascade * t);

    Matrix4c rho = Matrix4c::Zero();
    rho(1, 1) = p33 * g2m * (e1 - e3) / (cascade - g1m) + p11 * e1;
    rho(2, 2) = p33 * g1p * (e2 - e3) / (cascade - g2p) + p22 * e2;
    rho(3, 3) = p33 * e3;
    rho(0, 0) = 1.0 - rho(1, 1).real() - rho(2, 2).real() - rho(3, 3).real();
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            if (j == k) continue;
            const Complex lambda = Complex(0.0, 1.0) * std::conj(zetas[k]) -
                                   Complex(0.0, 1.0) * zetas[j];
            rho(j, k) = P(j, k) * std::exp(lambda * t);
        }
    }
    DensityMatrix out;
    out.basis = Basis::dressed;
    out.rho = 0.5 * (rho + rho.adjoint());
    return out;
}

Eigen::Matrix3d reduced_generator_finite_temperature(const RateSet& rates,
                                                     double n1, double n2) {
    if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("occupations must be >= 0");
    const double g1p = rates.gamma1_plus, g2p = rates.gamma2_plus;
    Eigen::Matrix3d L;
    L << -g2p * n2, g2p * (n2 + 1.0), 0.0,
         g2p * n2, -g2p * (n2 + 1.0) - g1p * n1, g1p * (n1 + 1.0),
         0.0, g1p * n1, -g1p * (n1 + 1.0);
    return L;
}

DensityMatrix transient_steady_state(double n1, double n2) {
    if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("occupations must be >= 0");
    const double s = 1.0 + n1 + 2.0 * n2 + 3.0 * n1 * n2;
    DensityMatrix out;
    out.basis = Basis::dressed;
    out.rho = Matrix4c::Zero();
    out.rho(0, 0) = (n1 + 1.0) * (n2 + 1.0) / s;
    out.rho(2, 2) = (n1 + 1.0) * n2 / s;
    out.rho(3, 3) = n1 * n2 / s;
    return out;
}

Eigen::Vector4d evolve_phenomenological_diagonal(const Eigen::Vector4d& P, double t) {
    for (int j = 0; j < 4; ++j) {
        if (P(j) < -1e-12) throw std::domain_error("populations must be >= 0");
    }
    if (std::abs(P.sum() - 1.0) > 1e-9) {
        throw UsageError("initial populations must sum to 1");
    }
    const double e = std::exp(-t);
    Eigen::Vector4d rho;
    rho(1) = e * (P(1) + P(3) - P(3) * e);
    rho(2) = e * (P(2) + P(3) - P(3) * e);
    rho(3) = P(3) * e * e;
    rho(0) = 1.0 - rho(1) - rho(2) - rho(3);
    return rho;
}

std::vector<DensityMatrix> evolve_rotating_frame(const RateSet& rates, double n1,
                                                 double n2,
                                                 const DensityMatrix& rho0,
                                                 const std::vector<double>& t_grid,
                                                 const IntegrateOptions& opts) {
    if (rho0.basis != Basis::dressed) {
        throw UsageError("evolve_rotating_frame expects a dressed-basis state");
    }
    // Dissipative flow alone. The Hamiltonian part is zero on the diagonal
    // sector and diagonal on each coherence, so it commutes with the
    // dissipative part and can be applied as exact phase factors afterwards.
    Superoperator diss = Superoperator::Zero(16, 16);
    add_dressed_dissipators(diss, rates, n1, n2);
    std::vector<DensityMatrix> traj = integrate_linear_ode(diss, rho0, t_grid, opts);

    const double om[4] = {0.0, rates.omega1, rates.omega2, rates.omega3};
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const double t = t_grid[i];
        Matrix4c& m = traj[i].rho;
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                if (j == k) continue;
                m(j, k) *= std::exp(Complex(0.0, -(om[j] - om[k]) * t));
            }
        }
        m = 0.5 * (m + m.adjoint());
        traj[i].check(opts.invariant_tol, opts.invariant_tol, opts.invariant_tol);
    }
    return traj;
}

std::vector<DensityMatrix> evolve_eig(const Superoperator& generator,
                                      const DensityMatrix& rho0,
                                      const std::vector<double>& t_grid) {
    const auto pairs = eig_dense(generator);
    const Eigen::Index n = generator.rows();
    Eigen::MatrixXcd v(n, n);
    Eigen::VectorXcd lambdas(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        v.col(k) = pairs[k].right;
        lambdas(k) = pairs[k].value;
    }
    const Eigen::VectorXcd c = v.partialPivLu().solve(vectorize(rho0.rho));
    std::vector<DensityMatrix> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        Eigen::VectorXcd state = Eigen::VectorXcd::Zero(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            state += c(k) * std::exp(lambdas(k) * t) * v.col(k);
        }
        DensityMatrix d;
        d.basis = rho0.basis;
        const Eigen::MatrixXcd m = devectorize(state);
        d.rho = 0.5 * (m + m.adjoint());
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace dressedpair
