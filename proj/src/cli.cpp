#include "frb/cli.hpp"

#include "frb/oracle.hpp"
#include "frb/report.hpp"
#include "frb/reproduce.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace frb {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "csv";
    int threads = 1;
    std::string output;
    long long node_limit = 200000;
};

Curve load_curve(const std::string& source)
{
    if (source == "f8" || source == "f27")
        return Curve::make(preset_config(source));
    return Curve::make(load_curve_config(source));
}

// "3", "1,4,9", "25..31", "1..4,9" -> sorted indices.
IndexList parse_index_list(const std::string& text)
{
    IndexList out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty())
            continue;
        try {
            std::size_t used = 0;
            if (auto dots = piece.find(".."); dots != std::string::npos) {
                const int a = std::stoi(piece.substr(0, dots), &used);
                const int b = std::stoi(piece.substr(dots + 2));
                for (int x = a; x <= b; ++x)
                    out.push_back(x);
            } else {
                out.push_back(std::stoi(piece, &used));
                if (used != piece.size())
                    throw std::invalid_argument(piece);
            }
        } catch (const std::logic_error&) {
            throw UsageError("bad index list '" + text + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names)
{
    if (names.empty())
        return all_methods();
    std::vector<Method> out;
    for (const auto& s : names) {
        try {
            out.push_back(parse_method(s));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

VPolicy parse_v(const std::string& text)
{
    if (text == "auto")
        return VPolicy::automatic_policy();
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v >= 0)
            return VPolicy::constant(v);
    } catch (const std::logic_error&) {
    }
    throw UsageError("--v expects 'auto' or a non-negative integer");
}

BoundOptions bound_options(const Common& c)
{
    BoundOptions o;
    o.threads = std::max(1, c.threads);
    o.search.node_limit = c.node_limit;
    return o;
}

std::string emit(const Common& c, const BoundReport& r)
{
    return c.format == "json" ? to_json(r) : to_csv(r);
}

std::string join(const IndexList& v, const char* sep)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

std::string grid(const Curve& c, const std::function<std::string(const Monomial&)>& cell)
{
    int max_x = 0, max_y = 0;
    for (const auto& m : c.footprint()) {
        max_x = std::max(max_x, m.x);
        max_y = std::max(max_y, m.y);
    }
    std::vector<std::vector<std::string>> cells(max_y + 1, std::vector<std::string>(max_x + 1));
    std::size_t width = 1;
    for (const auto& m : c.footprint()) {
        cells[m.y][m.x] = cell(m);
        width = std::max(width, cells[m.y][m.x].size());
    }
    std::ostringstream out;
    for (int y = max_y; y >= 0; --y) {
        for (int x = 0; x <= max_x; ++x)
            out << (x ? " " : "") << std::setw(int(width)) << cells[y][x];
        out << '\n';
    }
    return out.str();
}

std::string cmd_curve_info(const Common& c, const std::string& source, bool as_grid)
{
    const auto curve = load_curve(source);
    const auto& f = *curve.field();
    if (c.format == "json") {
        ojson fp = ojson::array();
        for (int i = 1; i <= curve.n(); ++i) {
            const auto& m = curve.monomial(i);
            fp.push_back({{"index", i}, {"monomial", m.to_string()}, {"x", m.x}, {"y", m.y}, {"weight", curve.weight(i)}});
        }
        ojson doc = {{"curve", curve.name()}, {"q", f.size()}, {"n", curve.n()},
                     {"equation", curve.equation().to_string(curve.order())}, {"footprint", fp}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# curve=" << curve.name() << "\n# q=" << f.size() << "\n# n=" << curve.n()
        << "\n# equation=" << curve.equation().to_string(curve.order()) << '\n';
    if (as_grid) {
        out << "# monomials\n" << grid(curve, [](const Monomial& m) { return m.to_string(); });
        out << "# weights\n"
            << grid(curve, [&](const Monomial& m) { return std::to_string(curve.order().weight(m)); });
        out << "# indices\n" << grid(curve, [&](const Monomial& m) { return std::to_string(curve.index_of(m)); });
        return out.str();
    }
    out << "index,monomial,x,y,weight\n";
    for (int i = 1; i <= curve.n(); ++i) {
        const auto& m = curve.monomial(i);
        out << i << ',' << m.to_string() << ',' << m.x << ',' << m.y << ',' << curve.weight(i) << '\n';
    }
    return out.str();
}

std::string cmd_rho_table(const Common& c, const std::string& source, bool as_grid, bool generic)
{
    const auto curve = load_curve(source);
    const auto t = generic ? rho_table_generic(BasisTriple::from_curve(curve), std::max(1, c.threads))
                           : rho_table_algebraic(curve);
    const int n = t.n();
    if (c.format == "json") {
        ojson rows = ojson::array();
        for (int i = 1; i <= n; ++i) {
            ojson row = ojson::array();
            for (int j = 1; j <= n; ++j)
                row.push_back(t(i, j));
            rows.push_back(row);
        }
        ojson doc = {{"curve", curve.name()}, {"n", n}, {"rho", rows}};
        return doc.dump() + "\n";
    }
    std::ostringstream out;
    out << "# curve=" << curve.name() << "\n# n=" << n << '\n';
    if (as_grid) {
        const int width = int(std::to_string(n).size());
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j)
                out << (j > 1 ? " " : "") << std::setw(width) << t(i, j);
            out << '\n';
        }
        return out.str();
    }
    out << "i,j,rho\n";
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out << i << ',' << j << ',' << t(i, j) << '\n';
    return out.str();
}

std::string cmd_bound(const Common& c, const std::string& source, int l, const std::vector<Method>& methods,
                      const std::string& v_text)
{
    const auto curve = load_curve(source);
    const auto t = rho_table_algebraic(curve);
    if (l < 1 || l > t.n())
        throw UsageError("--l must lie in 1.." + std::to_string(t.n()));
    auto opts = bound_options(c);
    opts.v = parse_v(v_text);

    BoundReport r;
    r.add_meta("curve", curve.name());
    r.add_meta("l", std::to_string(l));
    r.add_meta("v", std::to_string(opts.v.v(t, l)));
    const std::string target = "l=" + std::to_string(l);
    for (auto m : methods)
        r.add(target, m, per_l_bound(t, l, m, opts));
    return emit(c, r);
}

CodeSpec code_from(const RhoTable& t, const std::optional<int>& s, const std::string& parity)
{
    if (s && !parity.empty())
        throw UsageError("--s and --parity are mutually exclusive");
    try {
        if (s)
            return standard_code(t.n(), *s);
        return make_code(t.n(), parse_index_list(parity));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void add_code_rows(BoundReport& r, const RhoTable& t, const CodeSpec& code, const IndexList& ts,
                   const std::vector<Method>& methods, const BoundOptions& opts)
{
    for (int tw : ts) {
        if (tw < 1 || tw > code.dimension())
            throw UsageError("t = " + std::to_string(tw) + " outside 1..k = " + std::to_string(code.dimension()));
        for (auto m : methods)
            r.add("d" + std::to_string(tw), m, code_bound(t, code, m, tw, opts));
    }
}

std::string cmd_code(const Common& c, const std::string& source, const std::optional<int>& s,
                     const std::string& parity, const std::string& t_list, const std::vector<Method>& methods)
{
    const auto curve = load_curve(source);
    const auto t = rho_table_algebraic(curve);
    const auto code = code_from(t, s, parity);
    BoundReport r;
    r.add_meta("curve", curve.name());
    r.add_meta("n", std::to_string(code.n));
    r.add_meta("k", std::to_string(code.dimension()));
    r.add_meta("parity", join(code.parity, " "));
    if (code.dimension() > 0)
        add_code_rows(r, t, code, parse_index_list(t_list), methods, bound_options(c));
    return emit(c, r);
}

std::string cmd_improved(const Common& c, const std::string& source, int delta, Method method, int t_max)
{
    if (method != Method::Advisory && method != Method::Fim)
        throw UsageError("--method must be adv or fim");
    if (delta < 1)
        throw UsageError("--delta must be at least 1");
    const auto curve = load_curve(source);
    const auto t = rho_table_algebraic(curve);
    const auto opts = bound_options(c);
    const auto code = improved_code(t, delta, method, opts);
    BoundReport r;
    r.add_meta("curve", curve.name());
    r.add_meta("delta", std::to_string(delta));
    r.add_meta("method", to_string(method));
    r.add_meta("n", std::to_string(code.n));
    r.add_meta("k", std::to_string(code.dimension()));
    r.add_meta("parity", join(code.parity, " "));
    IndexList ts;
    for (int tw = 1; tw <= std::min(t_max, code.dimension()); ++tw)
        ts.push_back(tw);
    add_code_rows(r, t, code, ts, {method}, opts);
    return emit(c, r);
}

std::string cmd_reproduce(const Common& c, const std::string& target, bool& passed)
{
    const auto opts = bound_options(c);
    std::vector<std::string> targets;
    if (target == "all")
        targets = reproduction_targets();
    else
        targets = {target};
    std::vector<Reproduction> results;
    for (const auto& name : targets) {
        try {
            results.push_back(reproduce(name, opts));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    passed = std::all_of(results.begin(), results.end(), [](const Reproduction& r) { return r.passed(); });
    std::ostringstream out;
    if (c.format == "json") {
        ojson doc = ojson::object();
        for (const auto& r : results) {
            ojson checks = ojson::array();
            for (const auto& ch : r.checks)
                checks.push_back({{"item", ch.item},
                                  {"expected", ch.expected},
                                  {"computed", ch.computed},
                                  {"pass", ch.pass},
                                  {"note", ch.note}});
            doc[r.name] = {{"passed", r.passed()}, {"checks", checks}};
        }
        out << doc.dump(2) << '\n';
    } else {
        for (std::size_t k = 0; k < results.size(); ++k) {
            if (k)
                out << '\n';
            print_reproduction(out, results[k]);
        }
    }
    return out.str();
}

std::string cmd_verify(const Common& c, const std::string& source, const std::string& s_range, int tw,
                       const std::vector<Method>& methods, bool& sound)
{
    const auto curve = load_curve(source);
    const auto t = rho_table_algebraic(curve);
    const auto triple = BasisTriple::from_curve(curve);
    const auto opts = bound_options(c);
    sound = true;
    ojson rows = ojson::array();
    std::vector<std::string> notices;
    for (int s : parse_index_list(s_range)) {
        if (s < 0 || s > t.n())
            throw UsageError("s = " + std::to_string(s) + " outside 0..n");
        const auto code = standard_code(t.n(), s);
        if (tw < 1 || tw > code.dimension()) {
            notices.push_back("skip s=" + std::to_string(s) + ": t outside 1..k");
            continue;
        }
        int truth = 0;
        try {
            truth = tw == 1 ? true_min_distance(triple, code) : true_ghw(triple, code, tw);
        } catch (const OracleCapExceeded& e) {
            notices.push_back("skip s=" + std::to_string(s) + ": " + e.what());
            continue;
        }
        for (auto m : methods) {
            const int b = code_bound(t, code, m, tw, opts).value;
            sound = sound && b <= truth;
            rows.push_back({{"s", s}, {"k", code.dimension()}, {"t", tw}, {"true", truth},
                            {"method", to_string(m)}, {"bound", b}, {"sound", b <= truth}});
        }
    }
    std::ostringstream out;
    if (c.format == "json") {
        ojson doc = {{"curve", curve.name()}, {"notices", notices}, {"checks", rows}, {"sound", sound}};
        out << doc.dump(2) << '\n';
        return out.str();
    }
    out << "# curve=" << curve.name() << '\n';
    for (const auto& n : notices)
        out << "# " << n << '\n';
    out << "s,k,t,true,method,bound,sound\n";
    for (const auto& r : rows)
        out << r["s"] << ',' << r["k"] << ',' << r["t"] << ',' << r["true"] << ',' << r["method"].get<std::string>()
            << ',' << r["bound"] << ',' << (r["sound"].get<bool>() ? "yes" : "NO") << '\n';
    out << "# checks=" << rows.size() << " sound=" << (sound ? "yes" : "no") << '\n';
    return out.str();
}

std::string cmd_sweep(const Common& c, const std::string& source, const std::string& s_range, int t_max,
                      const std::vector<Method>& methods)
{
    const auto curve = load_curve(source);
    const auto t = rho_table_algebraic(curve);
    const auto opts = bound_options(c);
    IndexList ss;
    if (s_range.empty())
        for (int s = 0; s < t.n(); ++s)
            ss.push_back(s);
    else
        ss = parse_index_list(s_range);
    BoundReport r;
    r.add_meta("curve", curve.name());
    for (int s : ss) {
        if (s < 0 || s >= t.n())
            throw UsageError("s = " + std::to_string(s) + " outside 0..n-1");
        const auto code = standard_code(t.n(), s);
        for (int tw = 1; tw <= std::min(t_max, code.dimension()); ++tw)
            for (auto m : methods)
                r.add("s=" + std::to_string(s) + " k=" + std::to_string(code.dimension()) + " d" +
                          std::to_string(tw),
                      m, code_bound(t, code, m, tw, opts));
    }
    return emit(c, r);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lower bounds on minimum distance and generalized Hamming weights of dual affine variety codes",
                 "frbound"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--output,-o", common.output, "Write to this file instead of standard output");
    app.add_option("--node-limit", common.node_limit, "Search node budget per maximization (0: unlimited)");

    std::string curve_src;
    bool as_grid = false, generic = false;
    int l = 0, delta = 0, t_max = 6, tw = 1;
    std::optional<int> s;
    std::string parity, t_list = "1", v_text = "auto", s_range, target, method_name = "fim";
    std::vector<std::string> method_names;

    auto* info = app.add_subcommand("curve-info", "Footprint, weights and indices of a curve");
    info->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    info->add_flag("--grid", as_grid, "Print monomial, weight and index grids");

    auto* rho = app.add_subcommand("rho-table", "The rho table as i,j,rho rows");
    rho->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    rho->add_flag("--grid", as_grid, "Print as an n x n matrix");
    rho->add_flag("--generic", generic, "Compute by linear algebra instead of normal forms");

    auto* bound = app.add_subcommand("bound", "Per-l bounds on the weight of words with m(c) = l");
    bound->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    bound->add_option("--l", l, "Target index")->required();
    bound->add_option("--methods", method_names, "wb, wwb, owb, adv, fim")->delimiter(',');
    bound->add_option("--v", v_text, "Case window for fim: auto or a number");

    auto* code = app.add_subcommand("code", "Bounds on d_t of a dual code");
    code->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    code->add_option("--s", s, "Use C(s): parity checks w_1..w_s");
    code->add_option("--parity", parity, "Explicit parity indices, e.g. 1..10,12");
    code->add_option("--t", t_list, "Weights to bound, e.g. 1,2");
    code->add_option("--methods", method_names, "wb, wwb, owb, adv, fim")->delimiter(',');

    auto* improved = app.add_subcommand("improved", "Improved code for a designed distance");
    improved->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    improved->add_option("--delta", delta, "Designed distance")->required();
    improved->add_option("--method", method_name, "adv or fim");
    improved->add_option("--t-max", t_max, "Largest t to bound");

    auto* repro = app.add_subcommand("reproduce", "Compare against the reference tables");
    repro->add_option("target", target, "sec42, table1, table2, table3, props or all")->required();

    auto* verify = app.add_subcommand("verify", "Compare bounds with brute-force weights of small codes");
    verify->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    verify->add_option("--s", s_range, "Range of s, e.g. 25..31")->required();
    verify->add_option("--t", tw, "Generalized weight index");
    verify->add_option("--methods", method_names, "wb, wwb, owb, adv, fim")->delimiter(',');

    auto* sweep = app.add_subcommand("sweep", "d_1..d_tmax of every C(s) under every method");
    sweep->add_option("curve", curve_src, "Preset (f8, f27) or JSON config")->required();
    sweep->add_option("--s", s_range, "Range of s (default: all)");
    sweep->add_option("--t-max", t_max, "Largest t");
    sweep->add_option("--methods", method_names, "wb, wwb, owb, adv, fim")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    int code_ok = 0;
    std::string text;
    try {
        const auto methods = parse_methods(method_names);
        if (info->parsed()) {
            text = cmd_curve_info(common, curve_src, as_grid);
        } else if (rho->parsed()) {
            text = cmd_rho_table(common, curve_src, as_grid, generic);
        } else if (bound->parsed()) {
            text = cmd_bound(common, curve_src, l, methods, v_text);
        } else if (code->parsed()) {
            text = cmd_code(common, curve_src, s, parity, t_list, methods);
        } else if (improved->parsed()) {
            Method m;
            try {
                m = parse_method(method_name);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            text = cmd_improved(common, curve_src, delta, m, t_max);
        } else if (repro->parsed()) {
            bool passed = false;
            text = cmd_reproduce(common, target, passed);
            code_ok = passed ? 0 : 1;
        } else if (verify->parsed()) {
            bool sound = false;
            text = cmd_verify(common, curve_src, s_range, tw, methods, sound);
            code_ok = sound ? 0 : 1;
        } else if (sweep->parsed()) {
            text = cmd_sweep(common, curve_src, s_range, t_max, methods);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (common.output.empty()) {
        out << text;
    } else {
        std::ofstream f(common.output, std::ios::binary);
        if (!(f << text)) {
            err << "error: cannot write " << common.output << '\n';
            return 2;
        }
    }
    return code_ok;
}

} // namespace frb
