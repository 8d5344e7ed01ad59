#include "frb/reproduce.hpp"

#include "frb/oracle.hpp"

#include <algorithm>
#include <climits>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

namespace frb {

namespace {

struct Preset {
    Curve curve;
    RhoTable table;
};

const Preset& f8()
{
    static const Preset p = [] {
        auto c = Curve::f8();
        auto t = rho_table_algebraic(c);
        return Preset{std::move(c), std::move(t)};
    }();
    return p;
}

const Preset& f27()
{
    static const Preset p = [] {
        auto c = Curve::f27();
        auto t = rho_table_algebraic(c);
        return Preset{std::move(c), std::move(t)};
    }();
    return p;
}

bool is_feng_rao(Method m)
{
    return m == Method::FrWb || m == Method::FrWwb || m == Method::FrOwb;
}

// Unlimited search over each case, when every universe fits the cap.
std::optional<int> exact_value(const RhoTable& t, const BoundValue& b, const BoundOptions& opts)
{
    SearchOptions so;
    so.node_limit = 0;
    so.universe_cap = opts.exact_cap;
    int best = INT_MAX;
    try {
        for (const auto& c : b.cases) {
            const std::vector<IndexList> seeds{c.witness};
            best = std::min(best, int(max_clause_set(t, c.clauses, seeds, so).set.size()));
        }
    } catch (const SearchCapExceeded&) {
        return std::nullopt;
    }
    return best;
}

void add_exact(Reproduction& r, std::string item, long long expected, long long computed)
{
    r.checks.push_back({std::move(item), std::to_string(expected), std::to_string(computed), expected == computed,
                        expected == computed ? "equal" : "differs"});
}

void add_flag(Reproduction& r, std::string item, bool ok, std::string detail = {})
{
    r.checks.push_back({std::move(item), "holds", ok ? "holds" : "violated", ok, std::move(detail)});
}

void add_bound(Reproduction& r, std::string item, const RhoTable& t, Method m, const BoundValue& b, int expected,
               const BoundOptions& opts, bool try_exact = false)
{
    const bool cert = verify_certificate(t, b, m);
    Check c{std::move(item), std::to_string(expected), std::to_string(b.value), false, {}};
    if (is_feng_rao(m)) {
        c.pass = cert && b.value == expected;
        c.note = b.value == expected ? "equal" : "differs";
    } else {
        c.pass = cert && b.value >= expected;
        c.note = b.value == expected ? "equal" : b.value > expected ? "above reference" : "below reference";
        if (b.exhaustive)
            c.note += ", search exhaustive";
        if (try_exact) {
            if (auto e = exact_value(t, b, opts))
                c.note += ", exact maximum " + std::to_string(*e);
            else
                c.note += ", universe above exact cap";
        }
    }
    if (!cert)
        c.note += ", certificate rejected";
    r.checks.push_back(std::move(c));
}

void code_rows(Reproduction& r, const RhoTable& t, const std::string& name, const CodeSpec& code, int tw,
               const std::vector<int>& expected, const BoundOptions& opts)
{
    const auto methods = all_methods();
    for (std::size_t k = 0; k < methods.size(); ++k)
        add_bound(r, name + " d" + std::to_string(tw) + " " + to_string(methods[k]), t, methods[k],
                  code_bound(t, code, methods[k], tw, opts), expected[k], opts);
}

// ---- property suites ------------------------------------------------------

void prop_chain(Reproduction& r, const std::string& name, const RhoTable& t, const BoundOptions& opts)
{
    const StatusTable s(t);
    const auto wb = per_l_bounds(t, Method::FrWb, opts);
    const auto wwb = per_l_bounds(t, Method::FrWwb, opts);
    const auto owb = per_l_bounds(t, Method::FrOwb, opts);
    const auto adv = per_l_bounds(t, Method::Advisory, opts);
    const auto fim = per_l_bounds(t, Method::Fim, opts);
    int bad_fr = 0, bad_adv = 0, bad_fim = 0, bad_cert = 0, bad_v0 = 0;
    for (int l = 1; l <= t.n(); ++l) {
        const int target[1] = {l};
        const auto k = std::size_t(l - 1);
        bad_fr += !(wb[k].value <= wwb[k].value && wwb[k].value <= owb[k].value);
        bad_adv += adv[k].value < int(harvest(s, t, target, PairStatus::Owb).size());
        bad_fim += fim[k].value < adv[k].value;
        bad_cert += !verify_certificate(t, adv[k], Method::Advisory) || !verify_certificate(t, fim[k], Method::Fim);
        bad_v0 += fim_bound(t, l, {}, 0, opts).value != adv[k].value;
    }
    const auto n = std::to_string(t.n());
    add_flag(r, name + ": wb <= wwb <= owb for every l", bad_fr == 0, std::to_string(bad_fr) + " of " + n + " fail");
    add_flag(r, name + ": adv >= owb harvest for every l", bad_adv == 0,
             std::to_string(bad_adv) + " of " + n + " fail");
    add_flag(r, name + ": fim >= adv for every l", bad_fim == 0, std::to_string(bad_fim) + " of " + n + " fail");
    add_flag(r, name + ": adv and fim certificates verify", bad_cert == 0,
             std::to_string(bad_cert) + " of " + n + " fail");
    add_flag(r, name + ": fim with v=0 equals adv for every l", bad_v0 == 0,
             std::to_string(bad_v0) + " of " + n + " fail");
}

void prop_downward_closure(Reproduction& r, const RhoTable& t, const BoundOptions& opts)
{
    std::mt19937 rng(20240611);
    const int n = t.n();
    int tested = 0, violations = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int l = std::uniform_int_distribution<int>(1, n - 1)(rng);
        const int g = std::uniform_int_distribution<int>(0, std::min(3, n - l))(rng);
        ClauseSet clauses;
        switch (trial % 3) {
        case 0: {
            const int targets[2] = {l, std::min(n, l + g)};
            clauses = mu_clauses(std::span<const int>(targets, g ? 2 : 1));
            break;
        }
        case 1:
            clauses = exception_clauses(l, g);
            break;
        default:
            clauses = relaxed_clauses(l, std::min(n, l + std::max(g, 1)));
        }
        // A feasible superset: the search result, or a random set that happens to work.
        IndexList big;
        if (trial % 2 == 0) {
            big = max_clause_set(t, clauses, {}, opts.search).set;
        } else {
            for (int i = 1; i <= n; ++i)
                if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
                    big.push_back(i);
            if (!satisfies(t, big, clauses))
                big = max_clause_set(t, clauses, {}, opts.search).set;
        }
        IndexList small;
        for (int i : big)
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                small.push_back(i);
        ++tested;
        violations += !satisfies(t, small, clauses);
    }
    add_flag(r, "f8: subsets of feasible sets stay feasible (" + std::to_string(tested) + " pairs)",
             violations == 0, std::to_string(violations) + " violations");
}

RhoTable random_table(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> d(1, n);
    std::vector<int> v(std::size_t(n) * n);
    for (auto& x : v)
        x = d(rng);
    return RhoTable(n, std::move(v));
}

IndexList random_targets(std::mt19937& rng, int n)
{
    const int count = std::uniform_int_distribution<int>(1, 3)(rng);
    IndexList ts;
    while (int(ts.size()) < count) {
        const int l = std::uniform_int_distribution<int>(1, n)(rng);
        if (std::find(ts.begin(), ts.end(), l) == ts.end())
            ts.push_back(l);
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

void prop_exact_vs_exhaustive(Reproduction& r, const BoundOptions& opts)
{
    std::mt19937 rng(7);
    int mismatches = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = random_table(rng, 10);
        const auto targets = random_targets(rng, 10);
        mismatches += max_mu_set(t, targets, SearchMode::Exact, opts).size != max_mu_exhaustive(t, targets);
    }
    add_flag(r, "exact search equals exhaustive maximum on 100 random 10x10 tables", mismatches == 0,
             std::to_string(mismatches) + " mismatches");
}

void prop_oracle(Reproduction& r, const BoundOptions& opts)
{
    const auto& p = f8();
    const auto triple = BasisTriple::from_curve(p.curve);
    for (int s = 25; s <= 31; ++s) {
        const auto code = standard_code(p.table.n(), s);
        const int d1 = true_min_distance(triple, code);
        int worst = 0;
        for (auto m : all_methods())
            worst = std::max(worst, code_bound(p.table, code, m, 1, opts).value);
        add_flag(r, "f8 C(" + std::to_string(s) + "): true d1 >= every bound", d1 >= worst,
                 "d1 = " + std::to_string(d1) + ", best bound " + std::to_string(worst));
    }
    for (int s = 28; s <= 31; ++s) {
        const auto code = standard_code(p.table.n(), s);
        if (code.dimension() < 2) {
            add_flag(r, "f8 C(" + std::to_string(s) + "): true d2 >= every bound", true, "k < 2, no d2");
            continue;
        }
        const int d2 = true_ghw(triple, code, 2);
        int worst = 0;
        for (auto m : all_methods())
            worst = std::max(worst, code_bound(p.table, code, m, 2, opts).value);
        add_flag(r, "f8 C(" + std::to_string(s) + "): true d2 >= every bound", d2 >= worst,
                 "d2 = " + std::to_string(d2) + ", best bound " + std::to_string(worst));
    }
}

void prop_m_values(Reproduction& r)
{
    const auto& p = f8();
    const auto triple = BasisTriple::from_curve(p.curve);
    const auto& field = p.curve.field();
    const int n = p.table.n();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> elem(0, field->size() - 1);

    int bad = 0, tried = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = 1 + trial % 3;
        FieldMatrix b(field, dim, n);
        for (int row = 0; row < dim; ++row)
            for (int c = 0; c < n; ++c)
                b(row, c) = Elem(elem(rng));
        if (rank(b) != dim)
            continue;
        ++tried;
        bad += int(m_of_subspace(triple, Subspace(b)).size()) != dim;
    }
    add_flag(r, "f8: #m(D) = dim D on " + std::to_string(tried) + " random subspaces", bad == 0,
             std::to_string(bad) + " failures");

    bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int k = 1 + trial % 3;
        IndexList all(n);
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        const auto code = make_code(n, IndexList(all.begin(), all.begin() + (n - k)));
        bad += m_of_subspace(triple, Subspace(generator_matrix(triple, code))) != code.m_values();
    }
    add_flag(r, "f8: m(C) equals the complement of the parity set on 20 random codes", bad == 0,
             std::to_string(bad) + " failures");
}

void prop_morphism(Reproduction& r, const std::string& name, const Curve& c)
{
    const int n = c.n();
    std::vector<std::vector<Elem>> ev(n + 1);
    for (int i = 1; i <= n; ++i)
        ev[i] = c.evaluate(c.monomial(i));
    int bad = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            bad += c.evaluate(c.normal_form(c.monomial(i) * c.monomial(j))) != star(*c.field(), ev[i], ev[j]);
    add_flag(r, name + ": ev(NF(M_i M_j)) = ev(M_i) * ev(M_j) for all pairs", bad == 0,
             std::to_string(bad) + " failures");
}

} // namespace

bool Reproduction::passed() const
{
    return failures() == 0;
}

int Reproduction::failures() const
{
    return int(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::vector<std::string> reproduction_targets()
{
    return {"sec42", "table1", "table2", "table3", "props"};
}

Reproduction reproduce(const std::string& target, const BoundOptions& opts)
{
    if (target == "sec42") {
        auto r = reproduce_per_l(opts);
        auto d6 = reproduce_d6(opts);
        r.checks.insert(r.checks.end(), d6.checks.begin(), d6.checks.end());
        return r;
    }
    if (target == "table1")
        return reproduce_table1(opts);
    if (target == "table2")
        return reproduce_table2(opts);
    if (target == "table3")
        return reproduce_table3(opts);
    if (target == "props")
        return reproduce_props(opts);
    throw std::invalid_argument("unknown reproduction target '" + target + "'");
}

Reproduction reproduce_per_l(const BoundOptions& opts)
{
    Reproduction r{"sec42", {}};
    const auto& t = f8().table;
    struct Row {
        int l;
        std::vector<int> values; // wb, wwb, owb, adv, fim
    };
    const Row rows[] = {{17, {7, 7, 8, 9, 10}}, {21, {8, 8, 10, 12, 13}}};
    const auto methods = all_methods();
    for (const auto& row : rows)
        for (std::size_t k = 0; k < methods.size(); ++k)
            add_bound(r, "l=" + std::to_string(row.l) + " " + to_string(methods[k]), t, methods[k],
                      per_l_bound(t, row.l, methods[k], opts), row.values[k], opts, true);
    add_bound(r, "l=28 wb", t, Method::FrWb, per_l_bound(t, 28, Method::FrWb, opts), 21, opts);
    add_bound(r, "l=28 wwb", t, Method::FrWwb, per_l_bound(t, 28, Method::FrWwb, opts), 22, opts);
    add_bound(r, "l=30 wb", t, Method::FrWb, per_l_bound(t, 30, Method::FrWb, opts), 24, opts);
    add_bound(r, "l=30 wwb", t, Method::FrWwb, per_l_bound(t, 30, Method::FrWwb, opts), 26, opts);
    return r;
}

Reproduction reproduce_d6(const BoundOptions& opts)
{
    // The reference is printed in the column of w_{s+1}, so column 4 is C(3).
    Reproduction r{"d6", {}};
    const auto& t = f8().table;
    const auto code = standard_code(t.n(), 3);
    add_bound(r, "C(3) d6 wb", t, Method::FrWb, code_bound(t, code, Method::FrWb, 6, opts), 8, opts);
    add_bound(r, "C(3) d6 wwb", t, Method::FrWwb, code_bound(t, code, Method::FrWwb, 6, opts), 8, opts);
    for (auto m : {Method::FrOwb, Method::Advisory, Method::Fim})
        add_bound(r, std::string("C(3) d6 ") + to_string(m), t, m, code_bound(t, code, m, 6, opts), 9, opts);

    int improved_at = 0, where = -1;
    for (int s = 0; s + 6 <= t.n(); ++s) {
        const auto c = standard_code(t.n(), s);
        if (code_bound(t, c, Method::Advisory, 6, opts).value > code_bound(t, c, Method::FrWwb, 6, opts).value) {
            ++improved_at;
            where = s;
        }
    }
    add_flag(r, "d6: adv beats wwb for exactly one C(s)", improved_at == 1 && where == 3,
             std::to_string(improved_at) + " codes, last s = " + std::to_string(where));
    return r;
}

Reproduction reproduce_table1(const BoundOptions& opts)
{
    Reproduction r{"table1", {}};
    const auto& t = f8().table;
    const auto code = standard_code(t.n(), 16);
    code_rows(r, t, "C(16)", code, 1, {7, 7, 8, 9, 10}, opts);
    code_rows(r, t, "C(16)", code, 2, {8, 8, 10, 12, 13}, opts);
    return r;
}

Reproduction reproduce_table2(const BoundOptions& opts)
{
    Reproduction r{"table2", {}};
    const auto& t = f8().table;
    struct Row {
        Method method;
        int delta;
        int k;
        std::vector<int> ghw; // d2..d6
    };
    const Row rows[] = {
        {Method::Advisory, 10, 16, {12, 14, 15, 16, 20}},
        {Method::Fim, 10, 17, {12, 13, 14, 15, 16}},
        {Method::Advisory, 13, 11, {16, 20, 22, 24, 26}},
        {Method::Fim, 13, 12, {15, 16, 21, 22, 24}},
    };
    for (const auto& row : rows) {
        const auto code = improved_code(t, row.delta, row.method, opts);
        const std::string name = std::string("improved ") + to_string(row.method) + "(" + std::to_string(row.delta) + ")";
        add_exact(r, name + " k", row.k, code.dimension());
        for (int tw = 2; tw <= 6; ++tw)
            add_bound(r, name + " d" + std::to_string(tw), t, row.method, code_bound(t, code, row.method, tw, opts),
                      row.ghw[tw - 2], opts);
    }
    return r;
}

Reproduction reproduce_table3(const BoundOptions& opts)
{
    Reproduction r{"table3", {}};
    const auto& t = f27().table;
    struct Row {
        int s;
        int k;
        std::vector<int> d1, d2;
    };
    const Row rows[] = {
        {75, 168, {15, 15, 21, 29, 33}, {16, 16, 24, 34, 38}},
        {76, 167, {15, 15, 21, 33, 36}, {16, 16, 24, 38, 39}},
        {83, 160, {16, 16, 24, 34, 38}, {17, 17, 27, 39, 41}},
    };
    for (const auto& row : rows) {
        const auto code = standard_code(t.n(), row.s);
        const std::string name = "C(" + std::to_string(row.s) + ")";
        add_exact(r, name + " k", row.k, code.dimension());
        code_rows(r, t, name, code, 1, row.d1, opts);
        code_rows(r, t, name, code, 2, row.d2, opts);
    }
    return r;
}

Reproduction reproduce_props(const BoundOptions& opts)
{
    Reproduction r{"props", {}};
    prop_chain(r, "f8", f8().table, opts);
    prop_chain(r, "f27", f27().table, opts);
    prop_downward_closure(r, f8().table, opts);
    prop_exact_vs_exhaustive(r, opts);
    prop_oracle(r, opts);
    prop_m_values(r);
    prop_morphism(r, "f8", f8().curve);
    prop_morphism(r, "f27", f27().curve);
    return r;
}

void print_reproduction(std::ostream& out, const Reproduction& r)
{
    std::size_t w_item = 4, w_exp = 8, w_comp = 8;
    for (const auto& c : r.checks) {
        w_item = std::max(w_item, c.item.size());
        w_exp = std::max(w_exp, c.expected.size());
        w_comp = std::max(w_comp, c.computed.size());
    }
    out << std::left << std::setw(6) << "result" << "  " << std::setw(int(w_item)) << "item" << "  "
        << std::setw(int(w_exp)) << "expected" << "  " << std::setw(int(w_comp)) << "computed" << "  note\n";
    for (const auto& c : r.checks)
        out << std::setw(6) << (c.pass ? "pass" : "FAIL") << "  " << std::setw(int(w_item)) << c.item << "  "
            << std::setw(int(w_exp)) << c.expected << "  " << std::setw(int(w_comp)) << c.computed << "  " << c.note
            << '\n';
    out << r.name << ": " << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks pass\n";
}

} // namespace frb
