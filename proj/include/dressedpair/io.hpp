#ifndef DRESSEDPAIR_IO_HPP_
#define DRESSEDPAIR_IO_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "dressedpair/linalg.hpp"

namespace dressedpair {

// Round-trip-exact decimal form of a double (17 significant digits).
std::string format_double(double x);

// Minimal CSV emitter: header row, comma separator, values via format_double.
// Complex quantities are the caller's concern (split into _re/_im columns).
class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::vector<std::string> columns);
    void comment(const std::string& text); // emitted as a '# ...' line
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);

private:
    std::ostream& os_;
    std::size_t n_columns_;
    bool header_written_ = false;
    std::vector<std::string> columns_;
    void write_header();
};

std::vector<double> linear_grid(double t_min, double t_max, int points);
// Log-spaced grid with t = 0 prepended so trajectories can start at rest.
std::vector<double> log_grid_from_zero(double t_min, double t_max, int points);
std::vector<double> log_grid(double lo, double hi, int points);

// Initial-state specs: ket-eg, ket-ge, ket-ee, ket-1, ket-2,
// diagonal:p0,p1,p2,p3 or file:<path> (JSON with basis + matrix_re/matrix_im).
DensityMatrix parse_initial_state(const std::string& spec);

} // namespace dressedpair

#endif
