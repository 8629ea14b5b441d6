#ifndef STURMSTAB_SWEEP_HPP
#define STURMSTAB_SWEEP_HPP

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sturmstab/dispersion.hpp"
#include "sturmstab/rational.hpp"

namespace sturmstab {

/// Evenly subdivided parameter axis "name:lo:hi:count"; all points exact.
struct Axis {
    std::string name;
    int order = 0; // dispersive order the parameter multiplies
    Rational lo;
    Rational hi;
    int count = 0;

    /// Throws ParseError / std::invalid_argument on malformed text, unknown
    /// parameter names, lo >= hi or count < 2.
    static Axis parse(std::string_view text);

    Rational at(int i) const { return lo + (hi - lo) * Rational(i, count - 1); }
};

/// Parses "name=value" for a fixed parameter; returns (order, value).
std::pair<int, Rational> parse_assignment(std::string_view text);

/// Two-parameter family of specs: base coefficients (orders 3, 5, ...),
/// overridden by fixed assignments, then by the two free parameters.
struct ParameterFamily {
    std::vector<Rational> base;
    std::vector<std::pair<int, Rational>> fixed;
    int x_order = 0;
    int y_order = 0;

    /// Dense coefficient list for orders 3, 5, ... at the point (x, y).
    std::vector<Rational> coefficients(const Rational& x, const Rational& y) const;
};

struct SweepGrid {
    ParameterFamily family;
    Axis x;
    Axis y;
    int n_max = 100;

    /// Checks axis names are distinct, not also fixed, and n_max >= 1.
    void validate() const;
    ParameterFamily with_axes() const;
};

enum class CellVerdict { stable, possibly_unstable, invalid };

std::string to_string(CellVerdict v);

struct CellResult {
    Rational x;
    Rational y;
    std::vector<int> unstable_n; // ascending
    CellVerdict verdict = CellVerdict::stable;

    friend bool operator==(const CellResult&, const CellResult&) = default;
};

/// Evaluates every grid point, rows of constant y in ascending y, x
/// ascending within a row. Output is independent of `threads` (0 = all
/// hardware threads). Cells whose spec is all zero get verdict `invalid`.
std::vector<CellResult> run_sweep(const SweepGrid& grid, unsigned threads = 0);

/// Header "x,y,unstable_n,verdict", LF line endings, rationals as p/q,
/// unstable modes joined with ';'.
void write_csv(std::ostream& os, const std::vector<CellResult>& cells);

/// Raised by read_csv; `row()` is the 1-based line number (header = 1).
class SweepFormatError : public std::runtime_error {
public:
    SweepFormatError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

std::vector<CellResult> read_csv(std::istream& is);

nlohmann::json sweep_json(const SweepGrid& grid, const std::vector<CellResult>& cells);

} // namespace sturmstab

#endif
