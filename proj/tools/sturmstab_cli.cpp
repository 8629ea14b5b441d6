#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmstab/plot.hpp"
#include "sturmstab/reduce.hpp"
#include "sturmstab/stability.hpp"
#include "sturmstab/sturm.hpp"
#include "sturmstab/sweep.hpp"

using namespace sturmstab;

namespace {

constexpr int kExitStable = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnstable = 10;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Error text plus the offending input with a caret under the column.
std::string diagnose(const std::string& what, const std::string& option, const std::string& text,
                     std::size_t column) {
    std::ostringstream os;
    os << what << "\n  " << option << " " << text << "\n  " << std::string(option.size() + 1 + column, ' ') << '^';
    return os.str();
}

Rational parse_rational(const std::string& option, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(diagnose(e.what(), option, text, e.column()));
    }
}

DispersionSpec parse_spec(const std::string& text) {
    try {
        return DispersionSpec::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(diagnose(e.what(), "--coeffs", text, e.column()));
    }
}

std::vector<Rational> parse_list(const std::string& option, const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(Rational::parse(item));
        } catch (const ParseError& e) {
            std::size_t lead = 0;
            while (lead < item.size() && item[lead] == ' ')
                ++lead;
            throw UsageError(diagnose(e.what(), option, text, start + lead + e.column()));
        }
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

std::string approx(const Rational& r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", r.to_double());
    return buf;
}

std::string enclosure(const RootEnclosure& e) {
    return "[" + approx(e.lo) + ", " + approx(e.hi) + "]";
}

char sign_char(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_chain_table(std::ostream& os, const std::vector<Polynomial>& chain, const std::vector<int>& at_a,
                       const std::vector<int>& at_b, const Rational& a, const Rational& b) {
    os << "  k  " << ("sign at " + a.str() + "+") << "  " << ("sign at " + b.str() + "-") << "  p_k(s)\n";
    const std::size_t wa = ("sign at " + a.str() + "+").size();
    const std::size_t wb = ("sign at " + b.str() + "-").size();
    for (std::size_t k = 0; k < chain.size(); ++k) {
        os << "  " << k << "  " << sign_char(at_a[k]) << std::string(wa - 1, ' ') << "  " << sign_char(at_b[k])
           << std::string(wb - 1, ' ') << "  " << chain[k].str('s') << '\n';
    }
}

// reduce ---------------------------------------------------------------

struct ReduceArgs {
    std::optional<int> order;
    std::string coeffs;
    bool json = false;
};

int run_reduce(const ReduceArgs& args) {
    if (!args.order && args.coeffs.empty())
        throw UsageError("reduce needs --order and/or --coeffs");
    nlohmann::json j = {{"format", 1}};
    std::ostringstream os;
    if (args.order) {
        const ReductionTriangle triangle(*args.order);
        std::vector<std::string> leaders;
        for (const auto& a : triangle.leaders())
            leaders.push_back(a.get_str());
        j["order"] = *args.order;
        j["leaders"] = leaders;
        os << "Reduction of (mu+n)^" << *args.order << " - mu^" << *args.order << " with s = mu(mu+n):\n"
           << triangle.render() << "leaders:";
        for (const auto& l : leaders)
            os << ' ' << l;
        os << '\n';
    }
    if (!args.coeffs.empty()) {
        const auto spec = parse_spec(args.coeffs);
        const auto q = build_reduced(spec);
        if (args.order)
            os << '\n';
        os << "spec: " << spec.str() << '\n'
           << "V0 = " << bifurcation_speed(spec) << '\n'
           << "q(s,n) = " << q.grouped_str(spec) << '\n'
           << "       = " << q.str() << '\n';
        j["spec"] = spec.str();
        j["v0"] = bifurcation_speed(spec).str();
        j["q"] = q.str();
        j["qGrouped"] = q.grouped_str(spec);
        std::vector<std::string> s_coeffs;
        for (int i = 0; i <= q.degree_in_s(); ++i)
            s_coeffs.push_back(q.s_coeff(i).str('n'));
        j["sCoefficients"] = s_coeffs;
    }
    std::cout << (args.json ? j.dump(2) + "\n" : os.str());
    return kExitStable;
}

// analyze --------------------------------------------------------------

struct AnalyzeArgs {
    std::string coeffs;
    int n_max = 100;
    std::string tol;
    bool json = false;
    std::string out;
    unsigned threads = 0;
};

std::string analyze_text(const StabilityReport& report) {
    std::ostringstream os;
    const auto q = build_reduced(report.spec);
    os << "spec: " << report.spec.str() << '\n'
       << "V0 = " << report.v0 << '\n'
       << "q(s,n) = " << q.grouped_str(report.spec) << "\n\n";
    for (const auto& v : report.verdicts) {
        os << "n = " << v.n << ", interval (" << v.lower << ", " << v.upper << ")\n";
        print_chain_table(os, v.chain, v.signs_at_lower, v.signs_at_upper, v.lower, v.upper);
        os << "  variations " << v.variations_lower << " - " << v.variations_upper << " = " << v.root_count
           << (v.root_count == 1 ? " root\n" : " roots\n");
        for (std::size_t k = 0; k < v.roots.size(); ++k) {
            const auto& f = v.floquet[k];
            os << "  s in " << enclosure(v.roots[k]) << "  mu- in " << enclosure(f.minus) << "  mu+ in "
               << enclosure(f.plus) << '\n';
        }
        os << '\n';
    }
    const auto unstable = report.unstable_modes();
    if (unstable.empty()) {
        os << "stable up to n=" << report.n_max << '\n';
    } else {
        os << "possibly unstable for n =";
        for (int n : unstable)
            os << ' ' << n;
        os << '\n';
    }
    return os.str();
}

int run_analyze(const AnalyzeArgs& args) {
    const auto spec = parse_spec(args.coeffs);
    const Rational tol = args.tol.empty() ? default_tolerance() : parse_rational("--tol", args.tol);
    if (tol.sign() <= 0)
        throw UsageError("--tol must be positive");
    if (args.n_max < 1)
        throw UsageError("--n-max must be >= 1");
    const auto report = analyze(spec, args.n_max, tol, args.threads);
    write_output(args.out, args.json ? to_json(report).dump(2) + "\n" : analyze_text(report));
    return report.stable() ? kExitStable : kExitUnstable;
}

// sturm ----------------------------------------------------------------

struct SturmArgs {
    std::string coeffs;
    std::optional<int> n;
    std::string poly;
    std::string a;
    std::string b;
    std::string tol;
    bool json = false;
};

int run_sturm(const SturmArgs& args) {
    Polynomial p;
    Rational a;
    Rational b;
    if (!args.poly.empty()) {
        if (args.n || !args.coeffs.empty())
            throw UsageError("use either --poly or --coeffs with --n");
        p = Polynomial(parse_list("--poly", args.poly));
        if (args.a.empty() || args.b.empty())
            throw UsageError("--poly needs --a and --b");
    } else {
        if (args.coeffs.empty() || !args.n)
            throw UsageError("sturm needs --poly, or --coeffs with --n");
        if (*args.n < 1)
            throw UsageError("--n must be >= 1");
        p = instantiate(build_reduced(parse_spec(args.coeffs)), *args.n);
        a = -Rational(static_cast<long>(*args.n) * *args.n, 4);
        b = Rational(0);
    }
    if (!args.a.empty())
        a = parse_rational("--a", args.a);
    if (!args.b.empty())
        b = parse_rational("--b", args.b);
    if (!(a < b))
        throw UsageError("interval needs a < b");
    if (p.is_zero())
        throw UsageError("the polynomial is identically zero");
    const Rational tol = args.tol.empty() ? default_tolerance() : parse_rational("--tol", args.tol);
    if (tol.sign() <= 0)
        throw UsageError("--tol must be positive");

    const SturmChain chain(p);
    const auto at_a = chain.signs(a, Side::from_right);
    const auto at_b = chain.signs(b, Side::from_left);
    const int va = count_variations(at_a);
    const int vb = count_variations(at_b);
    const auto roots = isolate_and_refine(chain, a, b, tol);

    if (args.json) {
        nlohmann::json chain_json = nlohmann::json::array();
        for (const auto& g : chain.polys())
            chain_json.push_back(g.str('s'));
        nlohmann::json roots_json = nlohmann::json::array();
        for (const auto& r : roots)
            roots_json.push_back({r.lo.str(), r.hi.str()});
        const nlohmann::json j = {{"format", 1},          {"poly", p.str('s')},   {"interval", {a.str(), b.str()}},
                                  {"chain", chain_json},  {"deflated", chain.deflated()},
                                  {"signsAtA", at_a},     {"signsAtB", at_b},     {"variationsAtA", va},
                                  {"variationsAtB", vb},  {"rootCount", va - vb}, {"roots", roots_json}};
        std::cout << j.dump(2) << '\n';
        return kExitStable;
    }
    std::cout << "p(s) = " << p.str('s') << '\n';
    if (chain.deflated())
        std::cout << "repeated roots divided out\n";
    print_chain_table(std::cout, chain.polys(), at_a, at_b, a, b);
    std::cout << "distinct roots in (" << a << ", " << b << "): " << va << " - " << vb << " = " << va - vb << '\n';
    for (const auto& r : roots)
        std::cout << "  " << enclosure(r) << "  exact [" << r.lo << ", " << r.hi << "]\n";
    return kExitStable;
}

// sweep ----------------------------------------------------------------

struct SweepArgs {
    std::string coeffs;
    std::vector<std::string> fix;
    std::string x;
    std::string y;
    int n_max = 100;
    bool json = false;
    std::string out;
    unsigned threads = 0;
};

ParameterFamily family_from(const std::string& coeffs, const std::vector<std::string>& fix) {
    ParameterFamily family;
    if (!coeffs.empty())
        family.base = parse_list("--coeffs", coeffs);
    for (const auto& f : fix) {
        const auto eq = f.find('=');
        if (eq != std::string::npos) {
            try {
                Rational::parse(f.substr(eq + 1));
            } catch (const ParseError& e) {
                throw UsageError(diagnose(e.what(), "--fix", f, eq + 1 + e.column()));
            }
        }
        family.fixed.push_back(parse_assignment(f));
    }
    return family;
}

Axis parse_axis(const std::string& option, const std::string& text) {
    try {
        return Axis::parse(text);
    } catch (const ParseError& e) {
        // Column is relative to the field; locate the field by its text.
        const std::size_t first = text.find(':');
        const std::size_t second = first == std::string::npos ? first : text.find(':', first + 1);
        std::size_t offset = first + 1;
        if (second != std::string::npos) {
            try {
                Rational::parse(text.substr(first + 1, second - first - 1));
                offset = second + 1;
            } catch (const ParseError&) {
            }
        }
        throw UsageError(diagnose(e.what(), option, text, offset + e.column()));
    }
}

int run_sweep_cmd(const SweepArgs& args) {
    SweepGrid grid;
    grid.family = family_from(args.coeffs, args.fix);
    grid.x = parse_axis("--x", args.x);
    grid.y = parse_axis("--y", args.y);
    grid.n_max = args.n_max;
    const auto cells = run_sweep(grid, args.threads);
    if (args.json) {
        write_output(args.out, sweep_json(grid, cells).dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_csv(os, cells);
        write_output(args.out, os.str());
    }
    return kExitStable;
}

// plot -----------------------------------------------------------------

struct PlotArgs {
    std::string input;
    std::string out;
    bool overlay = false;
    std::string x_name;
    std::string y_name;
    std::string coeffs;
    std::vector<std::string> fix;
    int n_max = 30;
    std::string title;
};

int run_plot(const PlotArgs& args) {
    std::istringstream in(read_input(args.input));
    const auto cells = read_csv(in);
    PlotOptions options;
    options.title = args.title;
    options.x_label = args.x_name.empty() ? "x" : args.x_name;
    options.y_label = args.y_name.empty() ? "y" : args.y_name;
    if (args.overlay) {
        if (args.x_name.empty() || args.y_name.empty())
            throw UsageError("--overlay-boundaries needs --x-name and --y-name");
        BoundaryOverlay overlay{family_from(args.coeffs, args.fix), args.n_max};
        overlay.family.x_order = parameter_order(args.x_name);
        overlay.family.y_order = parameter_order(args.y_name);
        if (overlay.family.x_order == 0 || overlay.family.y_order == 0)
            throw UsageError("unknown parameter name in --x-name / --y-name");
        if (overlay.family.x_order == overlay.family.y_order)
            throw UsageError("--x-name and --y-name must differ");
        if (args.n_max < 1)
            throw UsageError("--n-max must be >= 1");
        options.overlay = std::move(overlay);
    }
    write_output(args.out, render_svg(cells, options));
    return kExitStable;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral stability classification for odd-order dispersive equations"};
    app.require_subcommand(1);

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "Print the reduction triangle and/or the reduced polynomial q(s,n)");
    reduce->add_option("--order", reduce_args.order, "Odd order N of the monomial (mu+n)^N - mu^N");
    reduce->add_option("--coeffs", reduce_args.coeffs, "Coefficients of orders 3,5,7,... e.g. 1,1/4,0");
    reduce->add_flag("--json", reduce_args.json, "Emit JSON");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Classify stability for n = 1..n-max");
    analyze_cmd->add_option("--coeffs", analyze_args.coeffs, "Coefficients of orders 3,5,7,...")->required();
    analyze_cmd->add_option("--n-max", analyze_args.n_max, "Largest mode difference n")->capture_default_str();
    analyze_cmd->add_option("--tol", analyze_args.tol, "Root enclosure width (default 1/1000000000)");
    analyze_cmd->add_flag("--json", analyze_args.json, "Emit JSON");
    analyze_cmd->add_option("--out", analyze_args.out, "Output file (default stdout)");
    analyze_cmd->add_option("--threads", analyze_args.threads, "Worker threads, 0 = all cores");

    SturmArgs sturm_args;
    auto* sturm = app.add_subcommand("sturm", "Sturm chain and root count for one polynomial");
    sturm->add_option("--coeffs", sturm_args.coeffs, "Spec coefficients; use with --n");
    sturm->add_option("--n", sturm_args.n, "Mode difference: analyse q(s,n) on (-n^2/4, 0)");
    sturm->add_option("--poly", sturm_args.poly, "Polynomial coefficients, constant term first");
    sturm->add_option("--a", sturm_args.a, "Left end of the open interval");
    sturm->add_option("--b", sturm_args.b, "Right end of the open interval");
    sturm->add_option("--tol", sturm_args.tol, "Root enclosure width");
    sturm->add_flag("--json", sturm_args.json, "Emit JSON");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Sweep a two-parameter plane and write CSV");
    sweep->add_option("--coeffs", sweep_args.coeffs, "Base coefficients of orders 3,5,7,...");
    sweep->add_option("--fix", sweep_args.fix, "Fixed parameter name=value (repeatable)");
    sweep->add_option("--x", sweep_args.x, "x axis name:lo:hi:count")->required();
    sweep->add_option("--y", sweep_args.y, "y axis name:lo:hi:count")->required();
    sweep->add_option("--n-max", sweep_args.n_max, "Largest mode difference n")->capture_default_str();
    sweep->add_flag("--json", sweep_args.json, "Emit JSON instead of CSV");
    sweep->add_option("--out", sweep_args.out, "Output file (default stdout)");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads, 0 = all cores");

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "Render a sweep CSV as an SVG region plot");
    plot->add_option("input", plot_args.input, "Sweep CSV")->required();
    plot->add_option("--out", plot_args.out, "SVG output file")->required();
    plot->add_flag("--overlay-boundaries", plot_args.overlay, "Draw zero contours of q(0,n) and q(-n^2/4,n)");
    plot->add_option("--x-name", plot_args.x_name, "Parameter on the x axis");
    plot->add_option("--y-name", plot_args.y_name, "Parameter on the y axis");
    plot->add_option("--coeffs", plot_args.coeffs, "Base coefficients for the overlay");
    plot->add_option("--fix", plot_args.fix, "Fixed parameter name=value for the overlay (repeatable)");
    plot->add_option("--n-max", plot_args.n_max, "Largest n in the overlay")->capture_default_str();
    plot->add_option("--title", plot_args.title, "Plot title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*reduce)
            return run_reduce(reduce_args);
        if (*analyze_cmd)
            return run_analyze(analyze_args);
        if (*sturm)
            return run_sturm(sturm_args);
        if (*sweep)
            return run_sweep_cmd(sweep_args);
        return run_plot(plot_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SweepFormatError& e) {
        std::cerr << "error: " << plot_args.input << ": " << e.what() << '\n';
        return kExitFailure;
    } catch (const ResonantDegeneracy& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
