#ifndef DRESSEDPAIR_ENTANGLEMENT_HPP_
#define DRESSEDPAIR_ENTANGLEMENT_HPP_

#include "dressedpair/linalg.hpp"
#include "dressedpair/params.hpp"

namespace dressedpair {

// Unitary change of basis between the dressed (Bell) and computational bases.
// Entries map as varrho = U rho U^dag; indices 0 and 3 are shared, while for
// j,k in {1,2}:
//   varrho_jk = [rho22 + (-1)^{j+k} rho11 - (-1)^j rho12 - (-1)^k rho21] / 2,
// from |phi_j> = (-(-1)^j |1> + |2>)/sqrt2. Flipping the two coherence signs
// is the atom-exchanged labelling; every exchange-symmetric quantity (all the
// concurrence paths, |varrho12|) is identical under either convention.
DensityMatrix dressed_to_computational(const DensityMatrix& rho);
DensityMatrix computational_to_dressed(const DensityMatrix& rho);

// Wootters concurrence of an arbitrary two-qubit state (computational basis):
// C = max{0, L1 - L2 - L3 - L4} where L_i are the descending square roots of
// the eigenvalues of rho (sy kron sy) rho* (sy kron sy). Eigenvalues with
// negative or imaginary parts beyond 1e-10 raise NumericalError; smaller
// leakage is clamped before the square root.
double concurrence_general(const DensityMatrix& rho_comp);

// X-state form, valid when the only off-diagonals are (0,3) and (1,2):
// C = 2 max{0, |varrho03| - sqrt(varrho22 varrho11),
//              |varrho12| - sqrt(varrho00 varrho33)}.
// Non-X input raises UsageError naming the offending entry.
double concurrence_x_state(const DensityMatrix& rho_comp);

// Single-excitation family (dressed entries, rho03 = rho33 = 0):
// C = sqrt[(rho22 - rho11)^2 + 4 Im(rho12)^2]. This is what the X-state
// formula yields for a Hermitian state; the difference form
// (rho12 - rho21)^2 is the square of a purely imaginary number.
double concurrence_single_excitation(double rho11, double rho22, Complex rho12);

// Concurrence at time t for the initially excited atom |eg> at zero
// temperature:
// C = sqrt[(e^{-g2p t} - e^{-g1m t})^2 + 4 e^{-(g2p+g1m) t} sin^2(2 g t)] / 2.
double concurrence_excited_atom_zero_T(const RateSet& rates, double t);

// Concurrence of the transient steady mixture P11 |1><1| + (1-P11) rho_st:
// C = max{0, |n12 (1-P11) - P11| - 2 (1-P11) sqrt(n12 n21)}
// with n_ij = (n_i + 1) n_j / s, s = 1 + n1 + 2 n2 + 3 n1 n2.
double concurrence_transient_steady(double P11, double n1, double n2);

} // namespace dressedpair

#endif
