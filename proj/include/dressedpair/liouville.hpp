#ifndef DRESSEDPAIR_LIOUVILLE_HPP_
#define DRESSEDPAIR_LIOUVILLE_HPP_

#include <vector>

#include "dressedpair/linalg.hpp"
#include "dressedpair/params.hpp"

namespace dressedpair {

// Complex eigenfrequencies of the effective non-Hermitian Hamiltonian at zero
// temperature: real part the dressed frequency, imaginary part minus half the
// total decay rate out of the level.
//   zeta0 = 0
//   zeta1 = (Omega - g) - i gamma1_minus / 2
//   zeta2 = (Omega + g) - i gamma2_plus / 2
//   zeta3 = 2 Omega - i (gamma1_plus + gamma2_minus) / 2
struct ComplexFrequencies {
    Complex zeta0, zeta1, zeta2, zeta3;
    Complex operator[](int j) const;
};

struct LiouvilleMode {
    Complex lambda;
    Matrix4c right;
    Matrix4c left; // Tr[left^dag right] = 1
};

// Biorthonormal set of 16 modes of the dressed-state generator.
struct EigenSystem {
    std::vector<LiouvilleMode> modes;
};

// 16x16 generator of the dressed-state master equation: commutator with
// H = diag(0, Omega-g, Omega+g, 2 Omega) plus the eight dissipators
//   gamma1+ (1+n1) D_23 + gamma1+ n1 D_32 + gamma2+ (1+n2) D_02 + gamma2+ n2 D_20
// + gamma2- (1+n2) D_13 + gamma2- n2 D_31 + gamma1- (1+n1) D_01 + gamma1- n1 D_10
// where D_{j'j} rho = |j'><j| rho |j><j'| - {|j><j|, rho}/2.
Superoperator build_dressed_generator(const RateSet& rates, double n1, double n2,
                                      double omega_over_gamma);

// Local-dissipator model: same Hamiltonian, but independent single-atom decay
// channels sigma_1^-, sigma_2^- at rate gamma (plus the standard thermal
// raising terms when n1, n2 > 0). Built in the computational basis and
// returned in the dressed basis.
Superoperator build_phenomenological_generator(double omega_over_gamma, double g,
                                               double n1 = 0.0, double n2 = 0.0);

ComplexFrequencies complex_frequencies(const RateSet& rates,
                                       double omega_over_gamma);

// Closed-form eigensystem at zero temperature. The four diagonal-sector modes
//   lambda = 0:                right |0><0|,          left identity
//   lambda = -gamma1-:         right |1><1| - |0><0|, left |1><1| + w1 |3><3|
//   lambda = -gamma2+:         right |2><2| - |0><0|, left |2><2| + w2 |3><3|
//   lambda = -(gamma1+ + gamma2-): right sum_j d_j |j><j|, left |3><3|
// with w1 = gamma2-/(gamma1+ + gamma2- - gamma1-),
//      w2 = gamma1+/(gamma1+ + gamma2- - gamma2+),
//      d3 = 1, d2 = gamma1+/(gamma2+ - gamma1+ - gamma2-),
//      d1 = gamma2-/(gamma1- - gamma1+ - gamma2-), d0 = -(d1 + d2 + d3),
// plus the twelve off-diagonal modes |j><k| with
// lambda = i conj(zeta_k) - i zeta_j. Throws DegenerateSpectrumError when a
// denominator is below 1e-9 (fall back to eig_dense on the built generator).
EigenSystem analytic_eigensystem_zero_temperature(const RateSet& rates,
                                                  const ComplexFrequencies& zetas);

// rho(t) = sum_lambda Tr[left^dag rho0] exp(lambda t) right.
DensityMatrix spectral_evolve(const EigenSystem& eigensystem,
                              const DensityMatrix& rho0, double t);

// Closed-form solution at zero temperature for an arbitrary initial dressed
// matrix P: populations
//   rho11 = P33 g2m (e^{-g1m t} - e^{-A t})/(A - g1m) + P11 e^{-g1m t}
//   rho22 = P33 g1p (e^{-g2p t} - e^{-A t})/(A - g2p) + P22 e^{-g2p t}
//   rho33 = P33 e^{-A t},  A = g1p + g2m,  rho00 from unit trace,
// coherences rho_jk = P_jk exp[(i conj(zeta_k) - i zeta_j) t].
DensityMatrix evolve_closed_form_zero_temperature(const Matrix4c& P,
                                                  const RateSet& rates,
                                                  const ComplexFrequencies& zetas,
                                                  double t);

// 3x3 generator of the fast diagonal dynamics in the basis
// (|0><0|, |2><2|, |3><3|), valid while gamma_i^- are negligible.
Eigen::Matrix3d reduced_generator_finite_temperature(const RateSet& rates,
                                                     double n1, double n2);

// Stationary state of the reduced generator:
// diag((n1+1)(n2+1), 0, (n1+1) n2, n1 n2) / s, s = 1 + n1 + 2 n2 + 3 n1 n2.
DensityMatrix transient_steady_state(double n1, double n2);

// Populations of the phenomenological model at zero temperature from a
// diagonal initial state (dressed labels):
//   rho11 = e^{-t}(P11 + P33 - P33 e^{-t}),
//   rho22 = e^{-t}(P22 + P33 - P33 e^{-t}),  rho33 = P33 e^{-2t}.
Eigen::Vector4d evolve_phenomenological_diagonal(const Eigen::Vector4d& P,
                                                 double t);

// Numeric propagation in the frame where the Hamiltonian phases are applied
// exactly: the commutator and dissipator parts of the dressed generator
// commute (verified on the built matrices), so exp(L t) factorises into an
// RK4-integrated dissipative flow times exact phase factors
// exp(-i (Omega_j - Omega_k) t) on the coherences. Stiff-frequency-safe for
// arbitrarily large Omega/gamma.
std::vector<DensityMatrix> evolve_rotating_frame(const RateSet& rates, double n1,
                                                 double n2,
                                                 const DensityMatrix& rho0,
                                                 const std::vector<double>& t_grid,
                                                 const IntegrateOptions& opts = {});

// Propagation through the numeric eigendecomposition of an arbitrary 16x16
// generator; exact in t, independent of the closed forms above.
std::vector<DensityMatrix> evolve_eig(const Superoperator& generator,
                                      const DensityMatrix& rho0,
                                      const std::vector<double>& t_grid);

} // namespace dressedpair

#endif
