#include "dressedpair/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dressedpair/errors.hpp"

namespace dressedpair {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, std::vector<std::string> columns)
    : os_(os), n_columns_(columns.size()), columns_(std::move(columns)) {}

void CsvWriter::write_header() {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        os_ << (i ? "," : "") << columns_[i];
    }
    os_ << "\n";
    header_written_ = true;
}

void CsvWriter::comment(const std::string& text) {
    os_ << "# " << text << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    if (!header_written_) write_header();
    if (values.size() != n_columns_) throw UsageError("CSV row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        os_ << (i ? "," : "") << format_double(values[i]);
    }
    os_ << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& values) {
    if (!header_written_) write_header();
    if (values.size() != n_columns_) throw UsageError("CSV row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        os_ << (i ? "," : "") << values[i];
    }
    os_ << "\n";
}

std::vector<double> linear_grid(double t_min, double t_max, int points) {
    if (points < 1 || t_max < t_min) throw UsageError("bad grid specification");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = t_min;
        return g;
    }
    for (int i = 0; i < points; ++i) {
        g[i] = t_min + (t_max - t_min) * i / (points - 1);
    }
    return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (points < 1 || lo <= 0.0 || hi < lo) throw UsageError("bad log grid specification");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i) {
        g[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
    }
    return g;
}

std::vector<double> log_grid_from_zero(double t_min, double t_max, int points) {
    std::vector<double> g = log_grid(t_min, t_max, points - 1);
    g.insert(g.begin(), 0.0);
    return g;
}

namespace {

DensityMatrix pure_state(const Eigen::Vector4cd& psi) {
    DensityMatrix d;
    d.basis = Basis::dressed;
    d.rho = psi * psi.adjoint();
    return d;
}

DensityMatrix state_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open initial-state file: " + path);
    nlohmann::json j;
    in >> j;
    DensityMatrix d;
    const std::string basis = j.value("basis", "dressed");
    if (basis == "dressed") {
        d.basis = Basis::dressed;
    } else if (basis == "computational") {
        d.basis = Basis::computational;
    } else {
        throw UsageError("initial-state file: unknown basis '" + basis + "'");
    }
    const auto& re = j.at("matrix_re");
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            double im = 0.0;
            if (j.contains("matrix_im")) im = j["matrix_im"].at(r).at(c).get<double>();
            d.rho(r, c) = Complex(re.at(r).at(c).get<double>(), im);
        }
    }
    d.check(1e-9, 1e-9, 1e-9);
    return d;
}

} // namespace

DensityMatrix parse_initial_state(const std::string& spec) {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    if (spec == "ket-eg") {
        psi(1) = -s; psi(2) = s; // |eg> = (|2> - |1>)/sqrt2
        return pure_state(psi);
    }
    if (spec == "ket-ge") {
        psi(1) = s; psi(2) = s; // |ge> = (|1> + |2>)/sqrt2
        return pure_state(psi);
    }
    if (spec == "ket-ee") {
        psi(3) = 1.0;
        return pure_state(psi);
    }
    if (spec == "ket-1") {
        psi(1) = 1.0;
        return pure_state(psi);
    }
    if (spec == "ket-2") {
        psi(2) = 1.0;
        return pure_state(psi);
    }
    if (spec.rfind("diagonal:", 0) == 0) {
        std::istringstream ss(spec.substr(9));
        Eigen::Vector4d p;
        char comma = ',';
        for (int i = 0; i < 4; ++i) {
            if (!(ss >> p(i))) throw UsageError("diagonal: expects four populations");
            if (i < 3 && !(ss >> comma)) throw UsageError("diagonal: expects four populations");
        }
        if (std::abs(p.sum() - 1.0) > 1e-9) {
            throw UsageError("diagonal: populations must sum to 1");
        }
        if (p.minCoeff() < 0.0) throw UsageError("diagonal: populations must be >= 0");
        DensityMatrix d;
        d.basis = Basis::dressed;
        d.rho = Matrix4c::Zero();
        for (int i = 0; i < 4; ++i) d.rho(i, i) = p(i);
        return d;
    }
    if (spec.rfind("file:", 0) == 0) {
        return state_from_file(spec.substr(5));
    }
    throw UsageError("unknown initial-state spec: " + spec);
}

} // namespace dressedpair
