#include <doctest.h>

#include <cmath>
#include <random>

#include "dressedpair/errors.hpp"
#include "dressedpair/linalg.hpp"
#include "dressedpair/liouville.hpp"

using namespace dressedpair;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x11a6u);
    return gen;
}

Matrix4c random_matrix() {
    std::normal_distribution<double> normal;
    Matrix4c m;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) m(r, c) = Complex(normal(rng()), normal(rng()));
    }
    return m;
}

DensityMatrix random_density() {
    const Matrix4c g = random_matrix();
    DensityMatrix d;
    d.rho = g * g.adjoint();
    d.rho /= d.rho.trace();
    return d;
}

RateSet test_rates() {
    return dressed_rates(SystemParams::from_occupations(10.0, 1.3, 0.0, 0.0));
}

} // namespace

TEST_CASE("vectorize follows the column-stacking convention") {
    Eigen::VectorXcd v = vectorize(Matrix4c::Identity());
    for (int i = 0; i < 16; ++i) {
        const bool diag = i == 0 || i == 5 || i == 10 || i == 15;
        CHECK(v(i) == (diag ? Complex(1.0) : Complex(0.0)));
    }

    Matrix4c e01 = Matrix4c::Zero();
    e01(0, 1) = 1.0; // column 1, row 0 -> index 1*4 + 0 = 4
    CHECK(vectorize(e01)(4) == Complex(1.0));

    const Matrix4c m = random_matrix();
    CHECK((devectorize(vectorize(m)) - m).cwiseAbs().maxCoeff() == 0.0);

    // linear bijection
    const Matrix4c a = random_matrix(), b = random_matrix();
    const Complex alpha(0.3, -1.1), beta(-2.0, 0.7);
    const Eigen::VectorXcd lhs = vectorize(alpha * a + beta * b);
    const Eigen::VectorXcd rhs = alpha * vectorize(a) + beta * vectorize(b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("eig_dense on simple and random matrices") {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    d(2, 2) = 3.0;
    const auto pairs = eig_dense(d);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].value == Complex(3.0));
    CHECK(pairs[1].value == Complex(2.0));
    CHECK(pairs[2].value == Complex(1.0));
    for (const auto& p : pairs) {
        CHECK((d * p.right - p.value * p.right).norm() < 1e-12);
    }

    // Hermitian matrices have a real spectrum.
    const Matrix4c m = random_matrix();
    const Matrix4c h = 0.5 * (m + m.adjoint());
    for (const auto& p : eig_dense(h)) {
        CHECK(std::abs(p.value.imag()) < 1e-12);
    }

    // Left/right biorthogonality after normalisation.
    const Eigen::MatrixXcd g = Eigen::MatrixXcd::Random(6, 6);
    const auto gp = eig_dense(g);
    for (std::size_t a = 0; a < gp.size(); ++a) {
        for (std::size_t b = 0; b < gp.size(); ++b) {
            const Complex overlap = gp[a].left.dot(gp[b].right);
            CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-9);
        }
    }
}

TEST_CASE("eig_dense matches the closed-form spectrum of the dressed generator") {
    const double omega = 1e3;
    const RateSet r = dressed_rates(SystemParams::from_occupations(omega, 0.4, 0, 0));
    const Superoperator L = build_dressed_generator(r, 0.0, 0.0, omega);
    const auto sys = analytic_eigensystem_zero_temperature(
        r, complex_frequencies(r, omega));
    const auto numeric = eig_dense(L);
    for (const auto& mode : sys.modes) {
        double best = 1e300;
        for (const auto& p : numeric) best = std::min(best, std::abs(p.value - mode.lambda));
        CHECK(best / std::max(std::abs(mode.lambda), 1.0) < 1e-10);
    }
}

TEST_CASE("null_space basics and the reduced-generator example") {
    CHECK(null_space(Eigen::MatrixXcd::Identity(4, 4), 1e-12).empty());
    CHECK(null_space(Eigen::MatrixXcd::Zero(3, 3), 1e-12).size() == 3);

    const RateSet r = test_rates();
    const Eigen::Matrix3d L3 = reduced_generator_finite_temperature(r, 1.0, 1.0);
    const auto basis = null_space(L3.cast<Complex>(), 1e-12);
    REQUIRE(basis.size() == 1);
    Eigen::Vector3d v = basis[0].real();
    v /= v.sum();
    CHECK(v(0) == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
    CHECK(v(1) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    CHECK(v(2) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
}

TEST_CASE("integrate_linear_ode: trivial generators") {
    const DensityMatrix rho0 = random_density();
    const std::vector<double> grid{0.0, 0.5, 1.0, 2.0};

    const auto constant = integrate_linear_ode(Superoperator::Zero(16, 16), rho0, grid);
    for (const auto& point : constant) {
        CHECK((point.rho - rho0.rho).cwiseAbs().maxCoeff() < 1e-14);
    }

    // Pure Hamiltonian: populations frozen, the (1,2) coherence rotates at
    // omega2 - omega1 = 2 g.
    const double omega = 5.0;
    const RateSet r = dressed_rates(SystemParams::from_occupations(omega, 2.0, 0, 0));
    RateSet lossless = r;
    lossless.gamma1_plus = lossless.gamma1_minus = 0.0;
    lossless.gamma2_plus = lossless.gamma2_minus = 0.0;
    const Superoperator L = build_dressed_generator(lossless, 0.0, 0.0, omega);
    IntegrateOptions opts;
    opts.max_step = 1e-4;
    const auto traj = integrate_linear_ode(L, rho0, grid, opts);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(traj[i].rho(j, j).real() ==
                  doctest::Approx(rho0.rho(j, j).real()).epsilon(1e-9));
        }
        const Complex expected =
            rho0.rho(1, 2) * std::exp(Complex(0.0, 2.0 * r.g * grid[i]));
        CHECK(std::abs(traj[i].rho(1, 2) - expected) < 1e-8);
    }
}

TEST_CASE("integrate_linear_ode: cascade decay from |3><3|") {
    const double omega = 10.0;
    const RateSet r = dressed_rates(SystemParams::from_occupations(omega, 1.3, 0, 0));
    const Superoperator L = build_dressed_generator(r, 0.0, 0.0, omega);
    DensityMatrix rho0;
    rho0.rho = Matrix4c::Zero();
    rho0.rho(3, 3) = 1.0;
    const std::vector<double> grid = {0.0, 1.0 / r.gamma2_plus, 5.0 / r.gamma2_plus,
                                      10.0 / r.gamma2_plus};
    const auto traj = integrate_linear_ode(L, rho0, grid);
    const double cascade = r.gamma1_plus + r.gamma2_minus;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(traj[i].rho(3, 3).real() - std::exp(-cascade * grid[i])) < 1e-8);
    }
}

TEST_CASE("integrate_linear_ode: step halving changes the result below 1e-8") {
    const double omega = 10.0;
    const RateSet r = dressed_rates(SystemParams::from_occupations(omega, 1.3, 0, 0));
    const Superoperator L = build_dressed_generator(r, 0.0, 0.0, omega);
    const DensityMatrix rho0 = random_density();
    const std::vector<double> grid{0.0, 20.0 / r.gamma2_plus};
    IntegrateOptions coarse, fine;
    coarse.max_step = 4e-4;
    fine.max_step = 2e-4;
    const auto a = integrate_linear_ode(L, rho0, grid, coarse);
    const auto b = integrate_linear_ode(L, rho0, grid, fine);
    CHECK((a.back().rho - b.back().rho).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("generator-level trace preservation over random states") {
    const double omega = 10.0;
    const RateSet r = dressed_rates(SystemParams::from_occupations(omega, 1.3, 0, 0));
    for (const Superoperator& L :
         {build_dressed_generator(r, 0.3, 0.6, omega),
          build_phenomenological_generator(omega, r.g, 0.1, 0.2)}) {
        for (int trial = 0; trial < 100; ++trial) {
            const DensityMatrix rho = random_density();
            const Eigen::MatrixXcd image = devectorize(L * vectorize(rho.rho));
            CHECK(std::abs(image.trace()) < 1e-12);
        }
        // the vectorized identity is a left null vector
        const Eigen::VectorXcd id = vectorize(Matrix4c::Identity());
        CHECK((L.adjoint() * id).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("integrate_linear_ode rejects bad grids and dimensions") {
    const DensityMatrix rho0 = random_density();
    CHECK_THROWS_AS(
        integrate_linear_ode(Superoperator::Zero(16, 16), rho0, {0.5, 1.0}),
        UsageError);
    CHECK_THROWS_AS(
        integrate_linear_ode(Superoperator::Zero(16, 16), rho0, {0.0, 1.0, 1.0}),
        UsageError);
    CHECK_THROWS_AS(
        integrate_linear_ode(Superoperator::Zero(3, 3), rho0, {0.0, 1.0}),
        UsageError);
}

TEST_CASE("density matrix invariant checks") {
    DensityMatrix ok;
    ok.rho = Matrix4c::Identity() * 0.25;
    ok.check();

    DensityMatrix bad_trace = ok;
    bad_trace.rho *= 2.0;
    CHECK_THROWS_AS(bad_trace.check(), InvariantViolation);

    DensityMatrix bad_herm = ok;
    bad_herm.rho(0, 1) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(bad_herm.check(), InvariantViolation);

    DensityMatrix bad_pos;
    bad_pos.rho = Matrix4c::Zero();
    bad_pos.rho(0, 0) = 1.5;
    bad_pos.rho(1, 1) = -0.5;
    CHECK_THROWS_AS(bad_pos.check(), InvariantViolation);
}
