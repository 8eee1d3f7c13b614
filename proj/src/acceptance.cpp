#include "dressedpair/acceptance.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "dressedpair/entanglement.hpp"
#include "dressedpair/errors.hpp"
#include "dressedpair/io.hpp"
#include "dressedpair/liouville.hpp"

namespace dressedpair {

namespace {

DensityMatrix ket_eg_state() {
    return parse_initial_state("ket-eg");
}

DensityMatrix random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix4c g;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) g(r, c) = Complex(normal(rng), normal(rng));
    }
    DensityMatrix d;
    d.basis = Basis::dressed;
    d.rho = g * g.adjoint();
    d.rho /= d.rho.trace();
    return d;
}

double max_abs_diff(const Matrix4c& a, const Matrix4c& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double pipeline_concurrence(const DensityMatrix& dressed_state) {
    return concurrence_general(dressed_to_computational(dressed_state));
}

// ---- criterion 1: analytic eigensystem vs numeric spectrum --------------

CriterionResult criterion_spectrum() {
    CriterionResult res{"table1-spectrum", false, 0.0, 1e-10, ""};
    const double omega = 1e5;
    const ValidityReport window = validity_window(omega);
    const double chi = window.chi_mid();
    const SystemParams params = SystemParams::from_occupations(omega, chi, 0.0, 0.0);
    const RateSet rates = dressed_rates(params);
    const EigenSystem analytic =
        analytic_eigensystem_zero_temperature(rates, complex_frequencies(rates, omega));
    const Superoperator L = build_dressed_generator(rates, 0.0, 0.0, omega);
    const auto numeric = eig_dense(L);

    double worst = 0.0;
    for (const auto& mode : analytic.modes) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& p : numeric) best = std::min(best, std::abs(p.value - mode.lambda));
        // relative, floored at 1 gamma so the zero eigenvalue is well defined
        worst = std::max(worst, best / std::max(std::abs(mode.lambda), 1.0));
    }

    // Biorthonormality overlap of the analytic set.
    for (std::size_t a = 0; a < analytic.modes.size(); ++a) {
        for (std::size_t b = 0; b < analytic.modes.size(); ++b) {
            const Complex overlap =
                (analytic.modes[a].left.adjoint() * analytic.modes[b].right).trace();
            const double target = a == b ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(overlap - target));
        }
    }

    std::ostringstream d;
    d << "omega/gamma=1e5, chi=" << format_double(chi)
      << " (log-midpoint of [" << format_double(window.chi_lo) << ", "
      << format_double(window.chi_hi) << "])";
    res.detail = d.str();
    res.residual = worst;
    return res;
}

// ---- criterion 2: closed form vs spectral vs RK4 ------------------------

CriterionResult criterion_evolution_equivalence() {
    CriterionResult res{"evolution-equivalence", false, 0.0, 1e-8, ""};
    const double omega = 10.0, chi = 1.3;
    const SystemParams params = SystemParams::from_occupations(omega, chi, 0.0, 0.0);
    const RateSet rates = dressed_rates(params);
    const ComplexFrequencies zetas = complex_frequencies(rates, omega);
    const EigenSystem modes = analytic_eigensystem_zero_temperature(rates, zetas);
    const Superoperator L = build_dressed_generator(rates, 0.0, 0.0, omega);

    const double t_max = 20.0 / rates.gamma2_plus;
    const std::vector<double> grid = linear_grid(0.0, t_max, 9);
    IntegrateOptions opts;
    opts.max_step = 2e-4; // resolves the 2*Omega coherence phase to < 1e-10

    std::mt19937_64 rng(0x5eed2024u);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho0 = random_state(rng);
        const auto rk4 = integrate_linear_ode(L, rho0, grid, opts);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const DensityMatrix spectral = spectral_evolve(modes, rho0, grid[i]);
            const DensityMatrix closed =
                evolve_closed_form_zero_temperature(rho0.rho, rates, zetas, grid[i]);
            worst = std::max(worst, max_abs_diff(spectral.rho, closed.rho));
            worst = std::max(worst, max_abs_diff(spectral.rho, rk4[i].rho));
            worst = std::max(worst, max_abs_diff(closed.rho, rk4[i].rho));
        }
    }
    res.residual = worst;
    res.detail = "omega/gamma=10, chi=1.3, 50 random states, t in [0, 20/gamma2+]";
    return res;
}

// ---- criterion 3: concurrence closed form from |eg> ---------------------

CriterionResult criterion_concurrence_closed_form() {
    CriterionResult res{"concurrence-eq30", false, 0.0, 1e-6, ""};
    const double omega = 300.0;
    const ValidityReport window = validity_window(omega);
    const double chi = window.chi_mid();
    const SystemParams params = SystemParams::from_occupations(omega, chi, 0.0, 0.0);
    const RateSet rates = dressed_rates(params);
    const Superoperator L = build_dressed_generator(rates, 0.0, 0.0, omega);

    const double t_end = 5.0 / rates.gamma1_minus;
    std::vector<double> grid = log_grid_from_zero(1e-3 / rates.gamma2_plus, t_end, 200);
    IntegrateOptions opts;
    opts.max_step = 2e-4;

    const DensityMatrix rho0 = ket_eg_state();
    const auto traj = integrate_linear_ode(L, rho0, grid, opts);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double c_pipeline = pipeline_concurrence(traj[i]);
        const double c_closed = concurrence_excited_atom_zero_T(rates, grid[i]);
        worst = std::max(worst, std::abs(c_pipeline - c_closed));
    }

    // Long-time limit of the closed form: C -> exp(-gamma1- t)/2.
    double ratio_dev = 0.0;
    for (double t : grid) {
        if (rates.gamma2_plus * t < 20.0) continue;
        const double ratio = concurrence_excited_atom_zero_T(rates, t) /
                             (0.5 * std::exp(-rates.gamma1_minus * t));
        ratio_dev = std::max(ratio_dev, std::abs(ratio - 1.0));
    }
    if (ratio_dev > 1e-4) {
        worst = std::max(worst, ratio_dev);
    }

    std::ostringstream d;
    d << "omega/gamma=300, chi=" << format_double(chi)
      << ", 200-point log grid to 5/gamma1-; long-time ratio dev "
      << format_double(ratio_dev) << " (limit 1e-4)";
    res.detail = d.str();
    res.residual = worst;
    return res;
}

// ---- criterion 4: transient steady state vs null space ------------------

CriterionResult criterion_transient_steady_null() {
    CriterionResult res{"transient-steady-null", false, 0.0, 1e-12, ""};
    std::mt19937_64 rng(0xabcd1234u);
    std::uniform_real_distribution<double> uni(0.0, 2.0);

    // Placeholder rates: the reduced generator needs gamma_i^+ only, and the
    // stationary direction is independent of their values. Use a window point.
    const ValidityReport window = validity_window(1e5);
    const SystemParams params =
        SystemParams::from_occupations(1e5, window.chi_mid(), 0.0, 0.0);
    const RateSet rates = dressed_rates(params);

    double worst = 0.0;
    auto check_pair = [&](double n1, double n2) {
        const Eigen::Matrix3d L3 = reduced_generator_finite_temperature(rates, n1, n2);
        const auto basis = null_space(L3.cast<Complex>(), 1e-12);
        if (basis.size() != 1) {
            throw NumericalError("reduced generator null space is not one-dimensional");
        }
        Eigen::Vector3d v = basis[0].real();
        if (basis[0].imag().cwiseAbs().maxCoeff() > 1e-13) {
            throw NumericalError("reduced generator null vector is not real");
        }
        v /= v.sum(); // trace normalisation fixes sign too
        const DensityMatrix st = transient_steady_state(n1, n2);
        const Eigen::Vector3d closed(st.rho(0, 0).real(), st.rho(2, 2).real(),
                                     st.rho(3, 3).real());
        worst = std::max(worst, (v - closed).cwiseAbs().maxCoeff());
    };
    for (int trial = 0; trial < 100; ++trial) check_pair(uni(rng), uni(rng));

    check_pair(1.0, 1.0);
    const DensityMatrix spot = transient_steady_state(1.0, 1.0);
    worst = std::max(worst, std::abs(spot.rho(0, 0).real() - 4.0 / 7.0));
    worst = std::max(worst, std::abs(spot.rho(2, 2).real() - 2.0 / 7.0));
    worst = std::max(worst, std::abs(spot.rho(3, 3).real() - 1.0 / 7.0));

    res.residual = worst;
    res.detail = "100 random (n1, n2) in [0,2]^2 plus spot value (1,1) -> (4/7, 2/7, 1/7)";
    return res;
}

// ---- criterion 5: plateau concurrence vs evolved state ------------------

CriterionResult criterion_plateau_concurrence() {
    CriterionResult res{"plateau-eq36", false, 0.0, 1e-3, ""};
    const double omega = 1e8;
    const ValidityReport window = validity_window(omega);
    const double chi = window.chi_lo; // protection-optimal separation
    const SystemParams base = SystemParams::from_occupations(omega, chi, 0.0, 0.0);
    const RateSet rates = dressed_rates(base);

    double worst = 0.0;
    std::ostringstream d;
    d << "omega/gamma=1e8, chi=chi_lo=" << format_double(chi) << ";";
    for (auto [n1, n2] : {std::pair{0.127, 0.132}, std::pair{0.363, 0.367}}) {
        const double t_star = 20.0 / rates.gamma2_plus;
        const std::vector<double> grid{0.0, t_star};
        const auto traj = evolve_rotating_frame(rates, n1, n2, ket_eg_state(), grid);
        const double c_evolved = pipeline_concurrence(traj.back());
        const double c_plateau = concurrence_transient_steady(0.5, n1, n2);
        const double dev = std::abs(c_evolved - c_plateau);
        worst = std::max(worst, dev);
        d << " (n1=" << n1 << ", n2=" << n2 << "): evolved "
          << format_double(c_evolved) << " vs plateau " << format_double(c_plateau) << ";";
    }
    res.residual = worst;
    res.detail = d.str();
    return res;
}

// ---- criterion 6: rate structure and asymptotics ------------------------

CriterionResult criterion_rate_asymptotics() {
    CriterionResult res{"rate-asymptotics", false, 0.0, 1e-2, ""};
    double worst = 0.0;
    std::ostringstream d;
    for (double omega : {1e5, 1e8}) {
        const ValidityReport window = validity_window(omega);
        if (!window.rwa_ok) {
            throw NumericalError("expected a valid timescale window");
        }
        // Interior minimum: the small-chi approximation matches the exact
        // gamma2- within 1% at the window midpoint.
        const double chi = window.chi_mid();
        const SystemParams params = SystemParams::from_occupations(omega, chi, 0.0, 0.0);
        const RateSet rates = dressed_rates(params);
        const double g_over_omega = rates.g / omega;
        const double approx =
            std::pow(1.0 + g_over_omega, 5) * chi * chi / 5.0;
        const double rel = std::abs(approx / rates.gamma2_minus - 1.0);
        worst = std::max(worst, rel);
        d << "omega/gamma=" << format_double(omega) << ": window ["
          << format_double(window.chi_lo) << ", " << format_double(window.chi_hi)
          << "], approx rel dev " << format_double(rel) << "; ";

        const SystemParams far = SystemParams::from_occupations(omega, 1e3, 0.0, 0.0);
        const RateSet far_rates = dressed_rates(far);
        for (double r : {far_rates.gamma1_plus, far_rates.gamma1_minus,
                         far_rates.gamma2_plus, far_rates.gamma2_minus}) {
            worst = std::max(worst, std::abs(r - 1.0));
        }
    }
    res.residual = worst;
    res.detail = d.str() + "all rates within 1e-2 of gamma at chi=1e3";
    return res;
}

// ---- criterion 7: phenomenological limit at large separation ------------

CriterionResult criterion_phenomenological_limit() {
    CriterionResult res{"phenomenological-limit", false, 0.0, 1e-4, ""};
    const double omega = 1e5, chi = 1e3;
    const SystemParams params = SystemParams::from_occupations(omega, chi, 0.0, 0.0);
    const RateSet rates = dressed_rates(params);
    const ComplexFrequencies zetas = complex_frequencies(rates, omega);

    const std::vector<Eigen::Vector4d> initials = {
        {0.0, 1.0, 0.0, 0.0},
        {0.0, 0.0, 1.0, 0.0},
        {0.0, 0.0, 0.0, 1.0},
        {0.25, 0.25, 0.25, 0.25},
    };
    const std::vector<double> grid = linear_grid(0.0, 5.0, 101);

    double worst = 0.0;
    for (const auto& P : initials) {
        Matrix4c P_m = Matrix4c::Zero();
        for (int i = 0; i < 4; ++i) P_m(i, i) = P(i);
        DensityMatrix rho0;
        rho0.basis = Basis::dressed;
        rho0.rho = P_m;
        // Diagonal dynamics carries no Hamiltonian phases; the rotating-frame
        // integrator doubles as an independent numeric cross-check here.
        const auto numeric = evolve_rotating_frame(rates, 0.0, 0.0, rho0, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const DensityMatrix closed =
                evolve_closed_form_zero_temperature(P_m, rates, zetas, grid[i]);
            if (max_abs_diff(closed.rho, numeric[i].rho) > 1e-8) {
                throw NumericalError("dressed closed form disagrees with integrator");
            }
            const Eigen::Vector4d pheno = evolve_phenomenological_diagonal(P, grid[i]);
            for (int j = 0; j < 4; ++j) {
                worst = std::max(worst, std::abs(closed.rho(j, j).real() - pheno(j)));
            }
        }
    }
    res.residual = worst;

    // Negative control (documented, not asserted): coherence evolution from
    // (|1>+|2>)/sqrt2 = |ge> differs between the two generators at small chi.
    {
        const double omega_s = 10.0, chi_s = 1.3;
        const SystemParams ps = SystemParams::from_occupations(omega_s, chi_s, 0.0, 0.0);
        const RateSet rs = dressed_rates(ps);
        const Superoperator Ld = build_dressed_generator(rs, 0.0, 0.0, omega_s);
        const Superoperator Lp = build_phenomenological_generator(omega_s, rs.g);
        const DensityMatrix ge = parse_initial_state("ket-ge");
        const std::vector<double> short_grid = linear_grid(0.0, 2.0, 21);
        IntegrateOptions opts;
        opts.max_step = 2e-4;
        const auto a = integrate_linear_ode(Ld, ge, short_grid, opts);
        const auto b = integrate_linear_ode(Lp, ge, short_grid, opts);
        double coh_diff = 0.0;
        for (std::size_t i = 0; i < short_grid.size(); ++i) {
            coh_diff = std::max(coh_diff, std::abs(a[i].rho(1, 2) - b[i].rho(1, 2)));
        }
        std::ostringstream d;
        d << "chi=1e3 diagonal comparison; negative control at chi=1.3: max "
             "|rho12_dressed - rho12_pheno| = "
          << format_double(coh_diff) << " (expected to differ)";
        res.detail = d.str();
    }
    return res;
}

// ---- criterion 8: invariants and off-diagonal eigenvector property ------

CriterionResult criterion_invariant_suite() {
    CriterionResult res{"invariant-suite", false, 0.0, 1e-10, ""};
    double worst = 0.0;

    // Off-diagonal elementary matrices are eigenvectors of the generator at
    // zero and finite temperature; residual measured against 1e-12 * max(1, |lambda|).
    const double omega = 1e5;
    const ValidityReport window = validity_window(omega);
    const SystemParams params =
        SystemParams::from_occupations(omega, window.chi_mid(), 0.0, 0.0);
    const RateSet rates = dressed_rates(params);
    double eigvec_rel = 0.0;
    for (auto [n1, n2] : {std::pair{0.0, 0.0}, std::pair{0.2, 0.35}}) {
        const Superoperator L = build_dressed_generator(rates, n1, n2, omega);
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                if (j == k) continue;
                const int idx = k * 4 + j;
                Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
                v(idx) = 1.0;
                const Eigen::VectorXcd w = L * v;
                const Complex lambda = w(idx);
                const double resid = (w - lambda * v).cwiseAbs().maxCoeff();
                eigvec_rel = std::max(
                    eigvec_rel, resid / std::max(1.0, std::abs(lambda)));
            }
        }
    }
    if (eigvec_rel > 1e-12) {
        worst = std::max(worst, eigvec_rel);
    }

    // Density-matrix invariants along representative trajectories.
    const double omega_s = 10.0, chi_s = 1.3;
    const SystemParams ps = SystemParams::from_occupations(omega_s, chi_s, 0.0, 0.0);
    const RateSet rs = dressed_rates(ps);
    const Superoperator L = build_dressed_generator(rs, 0.0, 0.0, omega_s);
    const EigenSystem modes =
        analytic_eigensystem_zero_temperature(rs, complex_frequencies(rs, omega_s));
    const std::vector<double> grid = linear_grid(0.0, 20.0 / rs.gamma2_plus, 21);
    IntegrateOptions opts;
    opts.max_step = 2e-4;
    std::mt19937_64 rng(0x600df00du);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho0 = random_state(rng);
        for (const auto& point : integrate_linear_ode(L, rho0, grid, opts)) {
            point.check();
            worst = std::max({worst, point.trace_error(),
                              std::max(0.0, -point.min_eigenvalue())});
        }
        for (double t : grid) {
            const DensityMatrix s = spectral_evolve(modes, rho0, t);
            s.check();
            worst = std::max({worst, s.trace_error(), s.hermiticity_error(),
                              std::max(0.0, -s.min_eigenvalue())});
        }
    }
    for (double n1 : {0.0, 0.5, 1.7}) {
        for (double n2 : {0.0, 0.3, 1.9}) {
            const DensityMatrix st = transient_steady_state(n1, n2);
            st.check();
            worst = std::max(worst, st.trace_error());
        }
    }

    std::ostringstream d;
    d << "off-diagonal eigenvector residual (rel) " << format_double(eigvec_rel)
      << " at zero and finite T; trace/hermiticity/positivity on RK4, spectral "
         "and steady-state outputs";
    res.detail = d.str();
    res.residual = worst;
    return res;
}

using CriterionFn = std::function<CriterionResult()>;

const std::vector<CriterionFn>& criteria() {
    static const std::vector<CriterionFn> fns = {
        criterion_spectrum,
        criterion_evolution_equivalence,
        criterion_concurrence_closed_form,
        criterion_transient_steady_null,
        criterion_plateau_concurrence,
        criterion_rate_asymptotics,
        criterion_phenomenological_limit,
        criterion_invariant_suite,
    };
    return fns;
}

CriterionResult finalize(CriterionResult res, const AcceptanceOptions& opts) {
    if (!opts.corrupt_tolerance_for.empty() && res.name == opts.corrupt_tolerance_for) {
        res.tolerance = 0.0;
        res.detail += " [tolerance corrupted by test hook]";
    }
    res.pass = res.residual <= res.tolerance;
    return res;
}

} // namespace

int acceptance_criterion_count() {
    return static_cast<int>(criteria().size());
}

CriterionResult run_acceptance_criterion(int index, const AcceptanceOptions& opts) {
    if (index < 0 || index >= acceptance_criterion_count()) {
        throw UsageError("acceptance criterion index out of range");
    }
    return finalize(criteria()[index](), opts);
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    std::vector<CriterionResult> out;
    out.reserve(criteria().size());
    for (const auto& fn : criteria()) out.push_back(finalize(fn(), opts));
    return out;
}

} // namespace dressedpair
