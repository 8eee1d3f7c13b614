#ifndef DRESSEDPAIR_LINALG_HPP_
#define DRESSEDPAIR_LINALG_HPP_

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace dressedpair {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Superoperator = Eigen::MatrixXcd;

enum class Basis { dressed, computational };

// 4x4 density matrix tagged with the basis its entries refer to.
// Dressed order: |0>, |1>, |2>, |3|; computational order: |gg>, |ge>, |eg>, |ee>.
struct DensityMatrix {
    Matrix4c rho = Matrix4c::Zero();
    Basis basis = Basis::dressed;

    double hermiticity_error() const; // max |rho_jk - conj(rho_kj)|
    double trace_error() const;       // |Tr rho - 1|
    double min_eigenvalue() const;    // smallest eigenvalue of (rho + rho^dag)/2

    // Throws InvariantViolation when outside tolerance.
    void check(double herm_tol = 1e-12, double trace_tol = 1e-10,
               double pos_tol = 1e-10) const;
};

// Unitary whose columns are the dressed states expressed in the computational
// basis: columns (|gg>, (|ge>-|eg>)/sqrt2, (|ge>+|eg>)/sqrt2, |ee>).
Matrix4c bell_basis_unitary();

// Column stacking: entry (r, c) of an n x n matrix maps to index c*n + r,
// so that vec(A X B) = (B^T kron A) vec(X).
Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v);

struct EigPair {
    Complex value;
    Eigen::VectorXcd right;
    Eigen::VectorXcd left; // normalised so that left^dag * right = 1
};

// Dense eigendecomposition with left vectors from the adjoint problem.
// Coordinates whose row and column are structurally decoupled (exact zeros off
// the diagonal) are deflated first; mixing frequency-scale diagonal entries
// into the QR sweep would otherwise cost absolute accuracy on the small rates.
// Contract: ||A v - lambda v|| <= 1e-9 ||A|| per pair, else NumericalError.
std::vector<EigPair> eig_dense(const Eigen::MatrixXcd& a);

// Orthonormal basis of the numerical null space: right singular vectors whose
// singular value is <= tol * sigma_max. May be empty.
std::vector<Eigen::VectorXcd> null_space(const Eigen::MatrixXcd& a, double tol);

struct IntegrateOptions {
    // Extra cap on the internal step in addition to the default rule
    // h <= min(0.01 / max_rate, grid spacing); max_rate is taken as the
    // largest diagonal magnitude of the generator so that oscillatory
    // diagonal entries also bound the step.
    double max_step = std::numeric_limits<double>::infinity();
    double invariant_tol = 1e-6;
};

// Classical fixed-step RK4 for d/dt vec(rho) = L vec(rho) on a 16x16
// generator. t_grid must start at 0 and be strictly increasing. Every output
// point is re-hermitised and checked against the density-matrix invariants at
// opts.invariant_tol; a violation raises InvariantViolation with a hint to
// reduce the step.
std::vector<DensityMatrix> integrate_linear_ode(const Superoperator& generator,
                                                const DensityMatrix& rho0,
                                                const std::vector<double>& t_grid,
                                                const IntegrateOptions& opts = {});

} // namespace dressedpair

#endif
