#include "sturmstab/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sturmstab/reduce.hpp"

namespace sturmstab {

namespace {

constexpr double kLeft = 80.0;
constexpr double kTop = 40.0;
constexpr double kWidth = 600.0;
constexpr double kHeight = 450.0;
constexpr double kLegendX = kLeft + kWidth + 20.0;

const char* colour(int n) {
    static constexpr const char* palette[] = {"#d62728", "#ff7f0e", "#bcbd22", "#2ca02c", "#17becf",
                                              "#1f77b4", "#9467bd", "#e377c2", "#8c564b", "#7f7f7f"};
    return palette[static_cast<std::size_t>(n - 1) % std::size(palette)];
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string fmt_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Point {
    double x;
    double y;
};

// Marching squares over node values; returns SVG path data.
std::string contour_path(const std::vector<std::vector<Rational>>& values, std::size_t nx, std::size_t ny,
                         double cw, double ch) {
    auto px = [&](double ix) { return kLeft + (ix + 0.5) * cw; };
    auto py = [&](double iy) { return kTop + kHeight - (iy + 0.5) * ch; };
    auto positive = [&](std::size_t ix, std::size_t iy) { return values[iy][ix].sign() >= 0; };
    auto crossing = [&](std::size_t ax, std::size_t ay, std::size_t bx, std::size_t by) {
        const double va = values[ay][ax].to_double();
        const double vb = values[by][bx].to_double();
        const double t = va == vb ? 0.5 : va / (va - vb);
        return Point{px(static_cast<double>(ax) + t * (static_cast<double>(bx) - static_cast<double>(ax))),
                     py(static_cast<double>(ay) + t * (static_cast<double>(by) - static_cast<double>(ay)))};
    };

    std::ostringstream d;
    for (std::size_t iy = 0; iy + 1 < ny; ++iy) {
        for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
            const std::size_t corners[4][2] = {{ix, iy}, {ix + 1, iy}, {ix + 1, iy + 1}, {ix, iy + 1}};
            std::vector<Point> pts;
            for (int e = 0; e < 4; ++e) {
                const auto* a = corners[e];
                const auto* b = corners[(e + 1) % 4];
                if (positive(a[0], a[1]) != positive(b[0], b[1]))
                    pts.push_back(crossing(a[0], a[1], b[0], b[1]));
            }
            for (std::size_t k = 0; k + 1 < pts.size(); k += 2)
                d << 'M' << fmt(pts[k].x) << ' ' << fmt(pts[k].y) << 'L' << fmt(pts[k + 1].x) << ' '
                  << fmt(pts[k + 1].y);
        }
    }
    return d.str();
}

} // namespace

std::string render_svg(const std::vector<CellResult>& cells, const PlotOptions& options) {
    std::set<Rational> xset;
    std::set<Rational> yset;
    for (const auto& c : cells) {
        xset.insert(c.x);
        yset.insert(c.y);
    }
    const std::vector<Rational> xs(xset.begin(), xset.end());
    const std::vector<Rational> ys(yset.begin(), yset.end());
    const std::size_t nx = xs.size();
    const std::size_t ny = ys.size();
    if (cells.empty() || cells.size() != nx * ny)
        throw std::invalid_argument("sweep cells do not form a complete grid");

    std::map<std::pair<std::size_t, std::size_t>, const CellResult*> grid;
    for (const auto& c : cells) {
        const auto ix = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), c.x) - xs.begin());
        const auto iy = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), c.y) - ys.begin());
        if (!grid.emplace(std::make_pair(ix, iy), &c).second)
            throw std::invalid_argument("duplicate sweep cell at (" + c.x.str() + ", " + c.y.str() + ")");
    }

    const double cw = kWidth / static_cast<double>(nx);
    const double ch = kHeight / static_cast<double>(ny);
    const double total_w = kLegendX + 220.0;
    const double total_h = kTop + kHeight + 60.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(total_w) << "\" height=\"" << fmt(total_h)
       << "\" viewBox=\"0 0 " << fmt(total_w) << ' ' << fmt(total_h) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(total_w) << "\" height=\"" << fmt(total_h) << "\" fill=\"white\"/>\n";
    if (!options.title.empty())
        os << "<text x=\"" << fmt(kLeft + kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
           << escape(options.title) << "</text>\n";

    std::set<int> legend;
    os << "<g class=\"cells\" shape-rendering=\"crispEdges\">\n";
    for (const auto& [key, c] : grid) {
        if (c->unstable_n.empty())
            continue;
        const int min_n = c->unstable_n.front();
        legend.insert(min_n);
        std::string modes;
        for (std::size_t k = 0; k < c->unstable_n.size(); ++k)
            modes += (k ? ";" : "") + std::to_string(c->unstable_n[k]);
        const double x0 = kLeft + static_cast<double>(key.first) * cw;
        const double y0 = kTop + kHeight - static_cast<double>(key.second + 1) * ch;
        os << "<rect class=\"cell\" data-x=\"" << c->x << "\" data-y=\"" << c->y << "\" data-n=\"" << modes
           << "\" x=\"" << fmt(x0) << "\" y=\"" << fmt(y0) << "\" width=\"" << fmt(cw) << "\" height=\"" << fmt(ch)
           << "\" fill=\"" << colour(min_n) << "\"/>\n";
    }
    os << "</g>\n";

    if (options.overlay) {
        const auto& overlay = *options.overlay;
        std::vector<std::vector<std::optional<ReducedPolynomial>>> q(ny, std::vector<std::optional<ReducedPolynomial>>(nx));
        for (std::size_t iy = 0; iy < ny; ++iy)
            for (std::size_t ix = 0; ix < nx; ++ix) {
                try {
                    q[iy][ix] = build_reduced(
                        DispersionSpec::from_coefficients(overlay.family.coefficients(xs[ix], ys[iy])));
                } catch (const std::invalid_argument&) {
                    // all-zero spec: q vanishes identically
                }
            }
        os << "<g class=\"boundaries\" fill=\"none\" stroke-width=\"1.2\">\n";
        std::vector<std::vector<Rational>> at_zero(ny, std::vector<Rational>(nx));
        std::vector<std::vector<Rational>> at_lower(ny, std::vector<Rational>(nx));
        for (int n = 1; n <= overlay.n_max; ++n) {
            const Rational nn(n);
            const Rational lower = -Rational(static_cast<long>(n) * n, 4);
            for (std::size_t iy = 0; iy < ny; ++iy)
                for (std::size_t ix = 0; ix < nx; ++ix) {
                    const auto& qq = q[iy][ix];
                    at_zero[iy][ix] = qq ? qq->evaluate(Rational(0), nn) : Rational();
                    at_lower[iy][ix] = qq ? qq->evaluate(lower, nn) : Rational();
                }
            const std::string upper_path = contour_path(at_zero, nx, ny, cw, ch);
            const std::string lower_path = contour_path(at_lower, nx, ny, cw, ch);
            if (!upper_path.empty())
                os << "<path class=\"boundary upper\" data-n=\"" << n << "\" stroke=\"red\" d=\"" << upper_path
                   << "\"/>\n";
            if (!lower_path.empty())
                os << "<path class=\"boundary lower\" data-n=\"" << n << "\" stroke=\"blue\" d=\"" << lower_path
                   << "\"/>\n";
        }
        os << "</g>\n";
    }

    // Frame, ticks and labels.
    os << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(kWidth) << "\" height=\""
       << fmt(kHeight) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t k : {std::size_t{0}, nx / 2, nx - 1}) {
        const double x = kLeft + (static_cast<double>(k) + 0.5) * cw;
        os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + kHeight + 16) << "\" text-anchor=\"middle\">"
           << fmt_label(xs[k].to_double()) << "</text>\n";
    }
    for (std::size_t k : {std::size_t{0}, ny / 2, ny - 1}) {
        const double y = kTop + kHeight - (static_cast<double>(k) + 0.5) * ch;
        os << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\">"
           << fmt_label(ys[k].to_double()) << "</text>\n";
    }
    os << "<text x=\"" << fmt(kLeft + kWidth / 2) << "\" y=\"" << fmt(kTop + kHeight + 40)
       << "\" text-anchor=\"middle\">" << escape(options.x_label) << "</text>\n";
    os << "<text x=\"20\" y=\"" << fmt(kTop + kHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << fmt(kTop + kHeight / 2) << ")\">" << escape(options.y_label) << "</text>\n";

    os << "<g class=\"legend\">\n";
    double ly = kTop + 10.0;
    os << "<text x=\"" << fmt(kLegendX) << "\" y=\"" << fmt(ly) << "\">smallest unstable n</text>\n";
    for (int n : legend) {
        ly += 18.0;
        os << "<g class=\"legend-entry\" data-n=\"" << n << "\"><rect x=\"" << fmt(kLegendX) << "\" y=\""
           << fmt(ly - 10) << "\" width=\"12\" height=\"12\" fill=\"" << colour(n) << "\"/><text x=\""
           << fmt(kLegendX + 18) << "\" y=\"" << fmt(ly) << "\">n = " << n << "</text></g>\n";
    }
    if (options.overlay) {
        ly += 26.0;
        os << "<text x=\"" << fmt(kLegendX) << "\" y=\"" << fmt(ly) << "\">candidate boundaries</text>\n";
        ly += 18.0;
        os << "<line x1=\"" << fmt(kLegendX) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << fmt(kLegendX + 14)
           << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"red\"/><text x=\"" << fmt(kLegendX + 18) << "\" y=\""
           << fmt(ly) << "\">root at s = 0</text>\n";
        ly += 18.0;
        os << "<line x1=\"" << fmt(kLegendX) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\"" << fmt(kLegendX + 14)
           << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"blue\"/><text x=\"" << fmt(kLegendX + 18) << "\" y=\""
           << fmt(ly) << "\">root at s = -n^2/4</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace sturmstab
