#include "dressedpair/params.hpp"

#include <cmath>
#include <limits>

#include "dressedpair/errors.hpp"

namespace dressedpair {

namespace {

// Below this argument the closed forms lose ~3 significant digits per decade
// to cancellation; the quartic series term is then accurate to O(1e-8).
constexpr double kSeriesSwitchover = 1e-2;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

} // namespace

double geometry_factor_parallel(double chi) {
    require_finite(chi, "chi");
    if (chi < 0.0) throw std::domain_error("chi must be >= 0");
    if (chi < kSeriesSwitchover) {
        const double c2 = chi * chi;
        return 1.0 - c2 / 5.0 + 3.0 * c2 * c2 / 280.0;
    }
    const double c2 = chi * chi;
    return 3.0 * ((c2 - 1.0) * std::sin(chi) + chi * std::cos(chi)) / (2.0 * c2 * chi);
}

double geometry_factor_axial(double chi) {
    require_finite(chi, "chi");
    if (chi < 0.0) throw std::domain_error("chi must be >= 0");
    if (chi < kSeriesSwitchover) {
        const double c2 = chi * chi;
        return 1.0 - c2 / 10.0 + c2 * c2 / 280.0;
    }
    return 3.0 * (std::sin(chi) - chi * std::cos(chi)) / (chi * chi * chi);
}

double coupling_g(double chi) {
    require_finite(chi, "chi");
    if (chi <= 0.0) throw std::domain_error("chi must be > 0");
    return 6.0 / (chi * chi * chi);
}

double thermal_occupation(double hbar_omega_over_kT) {
    if (std::isnan(hbar_omega_over_kT) || hbar_omega_over_kT <= 0.0) {
        throw std::domain_error("hbar*omega/kT must be > 0 (use +inf for T = 0)");
    }
    if (std::isinf(hbar_omega_over_kT)) return 0.0;
    return 1.0 / std::expm1(hbar_omega_over_kT);
}

SystemParams SystemParams::from_occupations(double omega_over_gamma, double chi,
                                            double n1, double n2) {
    SystemParams p{omega_over_gamma, chi, n1, n2};
    p.validate();
    return p;
}

SystemParams SystemParams::from_temperature(double omega_over_gamma, double chi,
                                            double hbar_omega_over_kT) {
    require_finite(omega_over_gamma, "omega_over_gamma");
    require_finite(chi, "chi");
    if (omega_over_gamma <= 0.0) throw std::domain_error("omega_over_gamma must be > 0");
    if (chi <= 0.0) throw std::domain_error("chi must be > 0");
    const double g_over_omega = coupling_g(chi) / omega_over_gamma;
    SystemParams p{omega_over_gamma, chi, 0.0, 0.0};
    if (!std::isinf(hbar_omega_over_kT)) {
        p.n1 = thermal_occupation((1.0 - g_over_omega) * hbar_omega_over_kT);
        p.n2 = thermal_occupation((1.0 + g_over_omega) * hbar_omega_over_kT);
    }
    p.validate();
    return p;
}

void SystemParams::validate() const {
    require_finite(omega_over_gamma, "omega_over_gamma");
    require_finite(chi, "chi");
    require_finite(n1, "n1");
    require_finite(n2, "n2");
    if (omega_over_gamma <= 0.0) throw std::domain_error("omega_over_gamma must be > 0");
    if (chi <= 0.0) throw std::domain_error("chi must be > 0");
    if (n1 < 0.0 || n2 < 0.0) throw std::domain_error("occupations must be >= 0");
}

RateSet dressed_rates(const SystemParams& params) {
    params.validate();
    const double omega = params.omega_over_gamma;
    const double g = coupling_g(params.chi);
    const double g_over_omega = g / omega;
    if (g_over_omega >= 1.0) {
        throw RegimeError("coupling g >= Omega: lower dressed frequency would be non-positive");
    }
    RateSet r;
    r.g = g;
    r.omega1 = omega - g;
    r.omega2 = omega + g;
    r.omega3 = r.omega1 + r.omega2;

    const double b1 = 1.0 - g_over_omega; // Omega_1 / Omega
    const double b2 = 1.0 + g_over_omega; // Omega_2 / Omega
    const double f1_lo = geometry_factor_parallel(params.chi * b1);
    const double f1_hi = geometry_factor_parallel(params.chi * b2);
    r.gamma1_plus = b1 * b1 * b1 * (1.0 + f1_lo);
    r.gamma1_minus = b1 * b1 * b1 * (1.0 - f1_lo);
    r.gamma2_plus = b2 * b2 * b2 * (1.0 + f1_hi);
    r.gamma2_minus = b2 * b2 * b2 * (1.0 - f1_hi);

    // |f1| <= 1 keeps the rates non-negative; clamp rounding-level dips.
    for (double* rate : {&r.gamma1_plus, &r.gamma1_minus, &r.gamma2_plus, &r.gamma2_minus}) {
        if (*rate < 0.0) {
            if (*rate < -1e-14) {
                throw NumericalError("negative dressed decay rate beyond rounding noise");
            }
            *rate = 0.0;
        }
    }
    return r;
}

double ValidityReport::chi_mid() const {
    return std::sqrt(chi_lo * chi_hi);
}

namespace {

double gamma2_minus_of_chi(double u, double chi) {
    const double g_over_omega = 6.0 * u / (chi * chi * chi);
    const double b2 = 1.0 + g_over_omega;
    return b2 * b2 * b2 * (1.0 - geometry_factor_parallel(chi * b2));
}

} // namespace

ValidityReport validity_window(double omega_over_gamma) {
    if (!std::isfinite(omega_over_gamma) || omega_over_gamma <= 0.0) {
        throw std::domain_error("omega_over_gamma must be > 0");
    }
    const double u = 1.0 / omega_over_gamma;
    ValidityReport report;
    report.chi_candidate_fifth_root = std::pow(30.0 * u, 0.2);
    report.chi_candidate_cube_root = std::cbrt(39.0 * u);
    if (omega_over_gamma < 1e3) {
        report.warnings.push_back("omega_over_gamma < 1e3: timescale separation is weak");
    }

    // chi below cbrt(6u) puts g above Omega; search from just inside that
    // boundary out to chi = 10 where all rates have converged near gamma.
    const double chi_min = 1.02 * std::cbrt(6.0 * u);
    const double chi_max = 10.0;
    const int n_scan = 4000;
    const double log_lo = std::log(chi_min), log_hi = std::log(chi_max);
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    std::vector<double> chis(n_scan), vals(n_scan);
    for (int i = 0; i < n_scan; ++i) {
        chis[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n_scan - 1));
        vals[i] = gamma2_minus_of_chi(u, chis[i]);
        if (vals[i] < best_val) {
            best_val = vals[i];
            best = i;
        }
    }
    if (best == 0 || best == n_scan - 1) {
        report.rwa_ok = false;
        report.warnings.push_back("no interior minimum of gamma2_minus found in search bracket");
        return report;
    }

    // Golden-section refinement of the minimiser on log(chi).
    {
        const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = std::log(chis[best - 1]), b = std::log(chis[best + 1]);
        double c = b - invphi * (b - a), d = a + invphi * (b - a);
        double fc = gamma2_minus_of_chi(u, std::exp(c));
        double fd = gamma2_minus_of_chi(u, std::exp(d));
        for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
            if (fc < fd) {
                b = d; d = c; fd = fc;
                c = b - invphi * (b - a);
                fc = gamma2_minus_of_chi(u, std::exp(c));
            } else {
                a = c; c = d; fc = fd;
                d = a + invphi * (b - a);
                fd = gamma2_minus_of_chi(u, std::exp(d));
            }
        }
        report.chi_lo = std::exp(0.5 * (a + b));
    }
    report.g_over_omega = 6.0 * u / std::pow(report.chi_lo, 3);

    // Crossing of gamma2_minus/gamma with g/Omega, bisected above chi_lo.
    auto crossing = [u](double chi) {
        return gamma2_minus_of_chi(u, chi) - 6.0 * u / (chi * chi * chi);
    };
    double lo = report.chi_lo, hi = chi_max;
    if (crossing(lo) >= 0.0 || crossing(hi) <= 0.0) {
        report.rwa_ok = false;
        report.warnings.push_back("no crossing of gamma2_minus with g/Omega in search bracket");
        return report;
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (crossing(mid) < 0.0 ? lo : hi) = mid;
    }
    report.chi_hi = 0.5 * (lo + hi);
    report.rwa_ok = report.chi_lo < report.chi_hi && report.g_over_omega < 1.0;
    if (!report.rwa_ok) {
        report.warnings.push_back("timescale window is empty or coupling exceeds Omega");
    }
    return report;
}

} // namespace dressedpair
