#include "dressedpair/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dressedpair/errors.hpp"

namespace dressedpair {

namespace {

constexpr double kEigLeakTol = 1e-10;

double clamp01(double c) {
    return std::min(1.0, std::max(0.0, c));
}

} // namespace

DensityMatrix dressed_to_computational(const DensityMatrix& rho) {
    if (rho.basis != Basis::dressed) {
        throw UsageError("dressed_to_computational: state is not tagged dressed");
    }
    const Matrix4c u = bell_basis_unitary();
    DensityMatrix out;
    out.basis = Basis::computational;
    out.rho = u * rho.rho * u.adjoint();
    return out;
}

DensityMatrix computational_to_dressed(const DensityMatrix& rho) {
    if (rho.basis != Basis::computational) {
        throw UsageError("computational_to_dressed: state is not tagged computational");
    }
    const Matrix4c u = bell_basis_unitary();
    DensityMatrix out;
    out.basis = Basis::dressed;
    out.rho = u.adjoint() * rho.rho * u;
    return out;
}

double concurrence_general(const DensityMatrix& rho_comp) {
    if (rho_comp.basis != Basis::computational) {
        throw UsageError("concurrence_general expects the computational basis");
    }
    // (sigma_y kron sigma_y) is the anti-diagonal (-1, 1, 1, -1).
    Matrix4c flip = Matrix4c::Zero();
    flip(0, 3) = -1.0; flip(1, 2) = 1.0; flip(2, 1) = 1.0; flip(3, 0) = -1.0;
    const Matrix4c rho_tilde = flip * rho_comp.rho.conjugate() * flip;
    const Matrix4c m = rho_comp.rho * rho_tilde;

    Eigen::ComplexEigenSolver<Matrix4c> es(m, false);
    if (es.info() != Eigen::Success) {
        throw NumericalError("concurrence_general: eigensolver failed");
    }
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) {
        const Complex ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) > kEigLeakTol || ev.real() < -kEigLeakTol) {
            std::ostringstream msg;
            msg << "concurrence_general: eigenvalue of rho*rho_tilde outside tolerance: ("
                << ev.real() << ", " << ev.imag() << ")";
            throw NumericalError(msg.str());
        }
        lam[i] = std::sqrt(std::max(0.0, ev.real()));
    }
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return clamp01(lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence_x_state(const DensityMatrix& rho_comp) {
    if (rho_comp.basis != Basis::computational) {
        throw UsageError("concurrence_x_state expects the computational basis");
    }
    const Matrix4c& r = rho_comp.rho;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            const bool allowed = j == k || (j == 0 && k == 3) || (j == 3 && k == 0) ||
                                 (j == 1 && k == 2) || (j == 2 && k == 1);
            if (!allowed && std::abs(r(j, k)) > 1e-10) {
                std::ostringstream msg;
                msg << "concurrence_x_state: entry (" << j << ", " << k
                    << ") is nonzero; state is not an X state";
                throw UsageError(msg.str());
            }
        }
    }
    const double inner = std::abs(r(0, 3)) -
                         std::sqrt(std::max(0.0, r(2, 2).real() * r(1, 1).real()));
    const double outer = std::abs(r(1, 2)) -
                         std::sqrt(std::max(0.0, r(0, 0).real() * r(3, 3).real()));
    return clamp01(2.0 * std::max({0.0, inner, outer}));
}

double concurrence_single_excitation(double rho11, double rho22, Complex rho12) {
    if (rho11 < -1e-12 || rho22 < -1e-12) {
        throw UsageError("concurrence_single_excitation: negative population");
    }
    if (rho11 + rho22 > 1.0 + 1e-9) {
        throw UsageError("concurrence_single_excitation: populations exceed unit trace");
    }
    if (std::norm(rho12) > rho11 * rho22 + 1e-9) {
        throw UsageError("concurrence_single_excitation: coherence violates positivity");
    }
    const double d = rho22 - rho11;
    const double im = rho12.imag();
    return clamp01(std::sqrt(d * d + 4.0 * im * im));
}

double concurrence_excited_atom_zero_T(const RateSet& rates, double t) {
    const double e2 = std::exp(-rates.gamma2_plus * t);
    const double e1 = std::exp(-rates.gamma1_minus * t);
    const double s = std::sin(2.0 * rates.g * t);
    const double cross = std::exp(-(rates.gamma2_plus + rates.gamma1_minus) * t);
    return clamp01(0.5 * std::sqrt((e2 - e1) * (e2 - e1) + 4.0 * cross * s * s));
}

double concurrence_transient_steady(double P11, double n1, double n2) {
    if (P11 < 0.0 || P11 > 1.0) throw std::domain_error("P11 must lie in [0, 1]");
    if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("occupations must be >= 0");
    const double s = 1.0 + n1 + 2.0 * n2 + 3.0 * n1 * n2;
    const double n12 = (n1 + 1.0) * n2 / s;
    const double n21 = (n2 + 1.0) * n1 / s;
    const double p_rest = 1.0 - P11;
    const double c = std::abs(n12 * p_rest - P11) - 2.0 * p_rest * std::sqrt(n12 * n21);
    return clamp01(std::max(0.0, c));
}

} // namespace dressedpair
