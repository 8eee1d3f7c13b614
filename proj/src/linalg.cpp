#include "dressedpair/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dressedpair/errors.hpp"

namespace dressedpair {

double DensityMatrix::hermiticity_error() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_error() const {
    return std::abs(rho.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix4c h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4c> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

void DensityMatrix::check(double herm_tol, double trace_tol, double pos_tol) const {
    std::ostringstream msg;
    if (const double e = hermiticity_error(); e > herm_tol) {
        msg << "hermiticity error " << e << " > " << herm_tol;
    } else if (const double t = trace_error(); t > trace_tol) {
        msg << "trace error " << t << " > " << trace_tol;
    } else if (const double m = min_eigenvalue(); m < -pos_tol) {
        msg << "minimum eigenvalue " << m << " < -" << pos_tol;
    } else {
        return;
    }
    throw InvariantViolation("density matrix invariant violated: " + msg.str());
}

Matrix4c bell_basis_unitary() {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4c u = Matrix4c::Zero();
    u(0, 0) = 1.0;
    u(1, 1) = s;  u(2, 1) = -s; // |1> = (|ge> - |eg>)/sqrt2
    u(1, 2) = s;  u(2, 2) = s;  // |2> = (|ge> + |eg>)/sqrt2
    u(3, 3) = 1.0;
    return u;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m) {
    return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v) {
    const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(double(v.size()))));
    if (n * n != v.size()) throw UsageError("devectorize: length is not a perfect square");
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), n, n);
}

namespace {

// Indices whose row and column carry no off-diagonal entries are exact
// eigen-coordinates; peel them off before the dense solve. The dressed-state
// generators are block diagonal in the elementary-matrix basis, and QR on the
// full matrix would smear the frequency scale into the small decay rates.
std::vector<Eigen::Index> decoupled_indices(const Eigen::MatrixXcd& a) {
    std::vector<Eigen::Index> out;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        bool isolated = true;
        for (Eigen::Index j = 0; j < a.rows() && isolated; ++j) {
            if (j != i && (a(i, j) != 0.0 || a(j, i) != 0.0)) isolated = false;
        }
        if (isolated) out.push_back(i);
    }
    return out;
}

} // namespace

std::vector<EigPair> eig_dense(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw UsageError("eig_dense: matrix must be square");
    const Eigen::Index n = a.rows();
    const double norm_a = a.cwiseAbs().maxCoeff();

    std::vector<EigPair> pairs;
    pairs.reserve(n);

    const auto isolated = decoupled_indices(a);
    std::vector<bool> is_isolated(n, false);
    for (auto i : isolated) is_isolated[i] = true;

    for (auto i : isolated) {
        EigPair p;
        p.value = a(i, i);
        p.right = Eigen::VectorXcd::Zero(n);
        p.left = Eigen::VectorXcd::Zero(n);
        p.right(i) = 1.0;
        p.left(i) = 1.0;
        pairs.push_back(std::move(p));
    }

    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!is_isolated[i]) active.push_back(i);
    }

    if (!active.empty()) {
        const auto m = static_cast<Eigen::Index>(active.size());
        Eigen::MatrixXcd sub(m, m);
        for (Eigen::Index r = 0; r < m; ++r) {
            for (Eigen::Index c = 0; c < m; ++c) sub(r, c) = a(active[r], active[c]);
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> right_es(sub, true);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> left_es(sub.adjoint(), true);
        if (right_es.info() != Eigen::Success || left_es.info() != Eigen::Success) {
            throw NumericalError("eig_dense: QR iteration did not converge");
        }

        // Match each left vector to the right eigenvalue it conjugates to.
        std::vector<bool> used(m, false);
        for (Eigen::Index k = 0; k < m; ++k) {
            const Complex lam = right_es.eigenvalues()(k);
            Eigen::Index best = -1;
            double best_dist = std::numeric_limits<double>::infinity();
            for (Eigen::Index l = 0; l < m; ++l) {
                if (used[l]) continue;
                const double dist = std::abs(std::conj(left_es.eigenvalues()(l)) - lam);
                if (dist < best_dist) {
                    best_dist = dist;
                    best = l;
                }
            }
            used[best] = true;

            Eigen::VectorXcd right = Eigen::VectorXcd::Zero(n);
            Eigen::VectorXcd left = Eigen::VectorXcd::Zero(n);
            for (Eigen::Index r = 0; r < m; ++r) {
                right(active[r]) = right_es.eigenvectors()(r, k);
                left(active[r]) = left_es.eigenvectors()(r, best);
            }
            const Complex overlap = left.dot(right); // conj(left) . right
            if (std::abs(overlap) < 1e-12) {
                throw NumericalError("eig_dense: defective or ill-conditioned eigenpair");
            }
            left /= std::conj(overlap);
            pairs.push_back(EigPair{lam, std::move(right), std::move(left)});
        }
    }

    std::sort(pairs.begin(), pairs.end(), [](const EigPair& x, const EigPair& y) {
        if (x.value.real() != y.value.real()) return x.value.real() > y.value.real();
        return x.value.imag() > y.value.imag();
    });

    for (const auto& p : pairs) {
        const double resid = (a * p.right - p.value * p.right).norm();
        if (resid > 1e-9 * std::max(norm_a, 1.0)) {
            std::ostringstream msg;
            msg << "eig_dense residual " << resid << " exceeds 1e-9 * ||A|| for lambda = ("
                << p.value.real() << ", " << p.value.imag() << ")";
            throw NumericalError(msg.str());
        }
    }
    return pairs;
}

std::vector<Eigen::VectorXcd> null_space(const Eigen::MatrixXcd& a, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() > 0 ? sv(0) : 0.0;
    std::vector<Eigen::VectorXcd> basis;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= tol * std::max(scale, 1.0)) {
            basis.push_back(svd.matrixV().col(i));
        }
    }
    return basis;
}

std::vector<DensityMatrix> integrate_linear_ode(const Superoperator& generator,
                                                const DensityMatrix& rho0,
                                                const std::vector<double>& t_grid,
                                                const IntegrateOptions& opts) {
    if (generator.rows() != 16 || generator.cols() != 16) {
        throw UsageError("integrate_linear_ode: generator must be 16x16");
    }
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw UsageError("integrate_linear_ode: t_grid must start at 0");
    }
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (t_grid[i] <= t_grid[i - 1]) {
            throw UsageError("integrate_linear_ode: t_grid must be strictly increasing");
        }
    }

    const double max_rate = generator.diagonal().cwiseAbs().maxCoeff();
    double h_target = opts.max_step;
    if (max_rate > 0.0) h_target = std::min(h_target, 0.01 / max_rate);

    std::vector<DensityMatrix> out;
    out.reserve(t_grid.size());
    Eigen::VectorXcd v = vectorize(rho0.rho);

    auto emit = [&](const Eigen::VectorXcd& state) {
        DensityMatrix d;
        d.basis = rho0.basis;
        const Eigen::MatrixXcd m = devectorize(state);
        d.rho = 0.5 * (m + m.adjoint()); // re-hermitise at output points only
        try {
            d.check(opts.invariant_tol, opts.invariant_tol, opts.invariant_tol);
        } catch (const InvariantViolation& e) {
            throw InvariantViolation(std::string(e.what()) +
                                     " during integration; reduce the step size");
        }
        out.push_back(std::move(d));
    };

    emit(v);
    Eigen::VectorXcd k1(16), k2(16), k3(16), k4(16);
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const long steps = std::isfinite(h_target)
                               ? std::max(1L, std::lround(std::ceil(span / h_target)))
                               : 1L;
        const double h = span / double(steps);
        for (long s = 0; s < steps; ++s) {
            k1.noalias() = generator * v;
            k2.noalias() = generator * (v + 0.5 * h * k1);
            k3.noalias() = generator * (v + 0.5 * h * k2);
            k4.noalias() = generator * (v + h * k3);
            v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        emit(v);
    }
    return out;
}

} // namespace dressedpair
