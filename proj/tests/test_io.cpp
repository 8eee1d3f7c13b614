#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "dressedpair/errors.hpp"
#include "dressedpair/io.hpp"

using namespace dressedpair;

TEST_CASE("format_double round-trips doubles exactly") {
    for (double x : {1.0 / 3.0, 6.4800346307990938036, -1.9009513170618674e-05,
                     0.0, 1e300, -2.5e-300}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("csv writer emits header, comments and fixed-width rows") {
    std::ostringstream os;
    CsvWriter w(os, {"a", "b"});
    w.comment("note");
    w.row({1.0, 2.5});
    w.row_mixed({"x", "0.5"});
    CHECK(os.str() == "# note\na,b\n1,2.5\nx,0.5\n");

    std::ostringstream os2;
    CsvWriter w2(os2, {"a", "b"});
    CHECK_THROWS_AS(w2.row({1.0}), UsageError);
}

TEST_CASE("time grids") {
    const auto lin = linear_grid(0.0, 1.0, 5);
    REQUIRE(lin.size() == 5);
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == 1.0);
    CHECK(lin[2] == doctest::Approx(0.5));

    const auto lg = log_grid_from_zero(1e-3, 10.0, 6);
    REQUIRE(lg.size() == 6);
    CHECK(lg[0] == 0.0);
    CHECK(lg[1] == doctest::Approx(1e-3));
    CHECK(lg.back() == doctest::Approx(10.0));
    CHECK(lg[3] / lg[2] == doctest::Approx(lg[4] / lg[3]).epsilon(1e-12));

    CHECK_THROWS_AS(log_grid(0.0, 1.0, 4), UsageError);
    CHECK_THROWS_AS(linear_grid(1.0, 0.0, 4), UsageError);
}

TEST_CASE("initial-state specs") {
    const DensityMatrix eg = parse_initial_state("ket-eg");
    CHECK(eg.basis == Basis::dressed);
    CHECK(eg.rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(eg.rho(2, 2).real() == doctest::Approx(0.5));
    CHECK(eg.rho(1, 2).real() == doctest::Approx(-0.5));
    eg.check();

    const DensityMatrix ge = parse_initial_state("ket-ge");
    CHECK(ge.rho(1, 2).real() == doctest::Approx(0.5));

    const DensityMatrix ee = parse_initial_state("ket-ee");
    CHECK(ee.rho(3, 3).real() == doctest::Approx(1.0));

    const DensityMatrix diag = parse_initial_state("diagonal:0.1,0.2,0.3,0.4");
    CHECK(diag.rho(3, 3).real() == doctest::Approx(0.4));
    CHECK(std::abs(diag.rho(0, 1)) == 0.0);

    CHECK_THROWS_AS(parse_initial_state("diagonal:0.9,0.2,0.3,0.4"), UsageError);
    CHECK_THROWS_AS(parse_initial_state("ket-bogus"), UsageError);

    // JSON file round trip
    const std::string path = "initial_state_test.json";
    {
        std::ofstream out(path);
        out << R"({"basis": "dressed",
                   "matrix_re": [[0.5,0,0,0],[0,0.5,0,0],[0,0,0,0],[0,0,0,0]],
                   "matrix_im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})";
    }
    const DensityMatrix from_file = parse_initial_state("file:" + path);
    CHECK(from_file.rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(from_file.rho(1, 1).real() == doctest::Approx(0.5));
    CHECK_THROWS_AS(parse_initial_state("file:/no/such/file.json"), UsageError);
}
