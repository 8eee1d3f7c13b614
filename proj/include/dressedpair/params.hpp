#ifndef DRESSEDPAIR_PARAMS_HPP_
#define DRESSEDPAIR_PARAMS_HPP_

#include <string>
#include <vector>

namespace dressedpair {

// Dimensionless configuration of the two-atom system. Everything is in
// single-atom units: gamma = 1, frequencies in units of gamma, time in 1/gamma.
struct SystemParams {
    double omega_over_gamma = 0.0; // atomic transition frequency Omega/gamma
    double chi = 0.0;              // separation parameter chi = 2 R Omega / c
    double n1 = 0.0;               // mean thermal photon number at Omega_1
    double n2 = 0.0;               // mean thermal photon number at Omega_2

    static SystemParams from_occupations(double omega_over_gamma, double chi,
                                         double n1, double n2);
    // n1, n2 from a single temperature ratio hbar*Omega/(kB*T); the ratio is
    // rescaled per dressed branch as (Omega_i/Omega) * ratio.
    static SystemParams from_temperature(double omega_over_gamma, double chi,
                                         double hbar_omega_over_kT);

    void validate() const; // throws std::domain_error
};

// Dressed frequencies and the four dressed-state decay rates, units of gamma.
struct RateSet {
    double g = 0.0;                                      // dipole coupling 6/chi^3
    double omega1 = 0.0, omega2 = 0.0, omega3 = 0.0;     // Omega -+ g, 2 Omega
    double gamma1_plus = 0.0, gamma1_minus = 0.0;
    double gamma2_plus = 0.0, gamma2_minus = 0.0;
};

// Separation window with clearly split fast/slow timescales.
// chi_lo is the numerically located minimiser of gamma2_minus(chi)/gamma;
// chi_hi the numerically located crossing of gamma2_minus/gamma with
// g/Omega = 6 gamma/(Omega chi^3). The small-chi closed-form candidates
// (30 gamma/Omega)^(1/5) and (39 gamma/Omega)^(1/3) are reported alongside;
// the literature assigns them inconsistently, so neither is endorsed here.
struct ValidityReport {
    double chi_lo = 0.0;
    double chi_hi = 0.0;
    double g_over_omega = 0.0; // evaluated at chi_lo (largest value in window)
    bool rwa_ok = false;
    double chi_candidate_fifth_root = 0.0; // (30 gamma/Omega)^(1/5)
    double chi_candidate_cube_root = 0.0;  // (39 gamma/Omega)^(1/3)
    std::vector<std::string> warnings;

    // Log-scale midpoint of the window, the natural operating point.
    double chi_mid() const;
};

// Geometry factor f1(chi) = f2(chi) = 3[(chi^2-1) sin chi + chi cos chi]/(2 chi^3)
// for dipoles orthogonal to the interatomic axis. Small arguments use the
// series 1 - chi^2/5 + 3 chi^4/280 to avoid cancellation.
double geometry_factor_parallel(double chi);

// Geometry factor f3(chi) = 3(sin chi - chi cos chi)/chi^3 for the axial
// dipole component; series 1 - chi^2/10 + chi^4/280 at small chi. Not used
// by the orthogonal-dipole generator, provided for completeness.
double geometry_factor_axial(double chi);

// Dipole-dipole coupling g = 6/chi^3 in units of gamma.
double coupling_g(double chi);

// Bose-Einstein occupation 1/(exp(x) - 1) with x = hbar*omega/(kB*T).
// x = +infinity encodes T = 0 and returns 0.
double thermal_occupation(double hbar_omega_over_kT);

// Dressed frequencies Omega_i = Omega(1 + (-1)^i g/Omega) and decay rates
// gamma_i^+- = (Omega_i/Omega)^3 [1 +- f1(chi Omega_i/Omega)].
// Throws RegimeError if Omega_1 <= 0 (coupling at least as large as Omega).
RateSet dressed_rates(const SystemParams& params);

ValidityReport validity_window(double omega_over_gamma);

} // namespace dressedpair

#endif
