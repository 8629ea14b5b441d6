#include "sturmstab/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sturmstab/parallel.hpp"
#include "sturmstab/stability.hpp"

namespace sturmstab {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

int order_of(std::string_view name) {
    const int order = parameter_order(name);
    if (order == 0)
        throw std::invalid_argument("unknown parameter '" + std::string(name) +
                                    "' (expected alpha, beta, gamma or c<odd order>)");
    return order;
}

void put(std::vector<Rational>& coeffs, int order, const Rational& value) {
    const auto idx = static_cast<std::size_t>((order - 3) / 2);
    if (coeffs.size() <= idx)
        coeffs.resize(idx + 1);
    coeffs[idx] = value;
}

} // namespace

Axis Axis::parse(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 4)
        throw std::invalid_argument("axis '" + std::string(text) + "' must look like name:lo:hi:count");
    Axis axis;
    axis.name = std::string(parts[0]);
    axis.order = order_of(parts[0]);
    axis.lo = Rational::parse(parts[1]);
    axis.hi = Rational::parse(parts[2]);
    const auto count_text = parts[3];
    auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), axis.count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size())
        throw std::invalid_argument("axis count '" + std::string(count_text) + "' is not an integer");
    if (!(axis.lo < axis.hi))
        throw std::invalid_argument("axis '" + axis.name + "' needs lo < hi");
    if (axis.count < 2)
        throw std::invalid_argument("axis '" + axis.name + "' needs at least 2 points");
    return axis;
}

std::pair<int, Rational> parse_assignment(std::string_view text) {
    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos)
        throw std::invalid_argument("fixed parameter '" + std::string(text) + "' must look like name=value");
    return {order_of(text.substr(0, eq)), Rational::parse(text.substr(eq + 1))};
}

std::vector<Rational> ParameterFamily::coefficients(const Rational& x, const Rational& y) const {
    std::vector<Rational> coeffs = base;
    for (const auto& [order, value] : fixed)
        put(coeffs, order, value);
    put(coeffs, x_order, x);
    put(coeffs, y_order, y);
    return coeffs;
}

void SweepGrid::validate() const {
    if (x.order == y.order)
        throw std::invalid_argument("sweep axes must name distinct parameters");
    for (const auto& [order, value] : family.fixed)
        if (order == x.order || order == y.order)
            throw std::invalid_argument("parameter '" + parameter_name(order) + "' is both fixed and swept");
    if (x.count < 2 || y.count < 2 || !(x.lo < x.hi) || !(y.lo < y.hi))
        throw std::invalid_argument("sweep axes need lo < hi and count >= 2");
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");
}

ParameterFamily SweepGrid::with_axes() const {
    ParameterFamily f = family;
    f.x_order = x.order;
    f.y_order = y.order;
    return f;
}

std::string to_string(CellVerdict v) {
    switch (v) {
    case CellVerdict::stable: return "stable";
    case CellVerdict::possibly_unstable: return "possibly-unstable";
    case CellVerdict::invalid: return "invalid";
    }
    return "invalid";
}

std::vector<CellResult> run_sweep(const SweepGrid& grid, unsigned threads) {
    grid.validate();
    const ParameterFamily family = grid.with_axes();
    const auto nx = static_cast<std::size_t>(grid.x.count);
    const auto ny = static_cast<std::size_t>(grid.y.count);
    std::vector<CellResult> cells(nx * ny);

    parallel_for(cells.size(), threads, [&](std::size_t i) {
        CellResult& cell = cells[i];
        cell.x = grid.x.at(static_cast<int>(i % nx));
        cell.y = grid.y.at(static_cast<int>(i / nx));
        const auto coeffs = family.coefficients(cell.x, cell.y);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); })) {
            cell.verdict = CellVerdict::invalid;
            return;
        }
        cell.unstable_n = unstable_modes(DispersionSpec::from_coefficients(coeffs), grid.n_max);
        cell.verdict = cell.unstable_n.empty() ? CellVerdict::stable : CellVerdict::possibly_unstable;
    });
    return cells;
}

void write_csv(std::ostream& os, const std::vector<CellResult>& cells) {
    os << "x,y,unstable_n,verdict\n";
    for (const auto& c : cells) {
        os << c.x << ',' << c.y << ',';
        for (std::size_t k = 0; k < c.unstable_n.size(); ++k)
            os << (k ? ";" : "") << c.unstable_n[k];
        os << ',' << to_string(c.verdict) << '\n';
    }
}

std::vector<CellResult> read_csv(std::istream& is) {
    std::string line;
    std::size_t row = 1;
    if (!std::getline(is, line))
        throw SweepFormatError(row, "empty sweep file");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "x,y,unstable_n,verdict")
        throw SweepFormatError(row, "expected header 'x,y,unstable_n,verdict', got '" + line + "'");

    std::vector<CellResult> cells;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto fields = split(line, ',');
        if (fields.size() != 4)
            throw SweepFormatError(row, "expected 4 fields, got " + std::to_string(fields.size()));
        CellResult cell;
        try {
            cell.x = Rational::parse(fields[0]);
            cell.y = Rational::parse(fields[1]);
        } catch (const std::exception& e) {
            throw SweepFormatError(row, e.what());
        }
        if (!fields[2].empty()) {
            for (auto tok : split(fields[2], ';')) {
                int n = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
                if (ec != std::errc() || ptr != tok.data() + tok.size() || n < 1)
                    throw SweepFormatError(row, "bad mode number '" + std::string(tok) + "'");
                if (!cell.unstable_n.empty() && n <= cell.unstable_n.back())
                    throw SweepFormatError(row, "unstable modes must be strictly increasing");
                cell.unstable_n.push_back(n);
            }
        }
        if (fields[3] == "stable")
            cell.verdict = CellVerdict::stable;
        else if (fields[3] == "possibly-unstable")
            cell.verdict = CellVerdict::possibly_unstable;
        else if (fields[3] == "invalid")
            cell.verdict = CellVerdict::invalid;
        else
            throw SweepFormatError(row, "unknown verdict '" + std::string(fields[3]) + "'");
        if ((cell.verdict == CellVerdict::possibly_unstable) == cell.unstable_n.empty())
            throw SweepFormatError(row, "verdict does not match unstable_n");
        cells.push_back(std::move(cell));
    }
    return cells;
}

nlohmann::json sweep_json(const SweepGrid& grid, const std::vector<CellResult>& cells) {
    using nlohmann::json;
    json fixed = json::object();
    for (const auto& [order, value] : grid.family.fixed)
        fixed[parameter_name(order)] = value.str();
    json base = json::array();
    for (const auto& c : grid.family.base)
        base.push_back(c.str());
    json rows = json::array();
    for (const auto& c : cells)
        rows.push_back({{"x", c.x.str()}, {"y", c.y.str()}, {"unstableN", c.unstable_n}, {"verdict", to_string(c.verdict)}});
    auto axis = [](const Axis& a) {
        return json{{"name", a.name}, {"lo", a.lo.str()}, {"hi", a.hi.str()}, {"count", a.count}};
    };
    return {{"format", 1}, {"base", base}, {"fixed", fixed}, {"x", axis(grid.x)}, {"y", axis(grid.y)},
            {"nMax", grid.n_max}, {"cells", rows}};
}

} // namespace sturmstab
