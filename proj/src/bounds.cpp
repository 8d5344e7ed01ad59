#include "frb/bounds.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace frb {

namespace {

PairStatus flavor_of(Method m)
{
    switch (m) {
    case Method::FrWb:
        return PairStatus::Wb;
    case Method::FrWwb:
        return PairStatus::Wwb;
    case Method::FrOwb:
        return PairStatus::Owb;
    default:
        throw std::invalid_argument("not a Feng-Rao flavor");
    }
}

bool is_feng_rao(Method m)
{
    return m == Method::FrWb || m == Method::FrWwb || m == Method::FrOwb;
}

// Runs fn(0..count-1) on up to `threads` workers; fn must only write its own slot.
void parallel_for(int count, int threads, const std::function<void(int)>& fn)
{
    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int k = 0; k < count; ++k)
            fn(k);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int k = w; k < count; k += workers)
                    fn(k);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::string join(const IndexList& v, const char* sep = ",")
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            s += sep;
        s += std::to_string(v[k]);
    }
    return s;
}

IndexList sorted_unique(std::span<const int> v)
{
    IndexList s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void check_targets(const RhoTable& t, std::span<const int> targets)
{
    if (targets.empty())
        throw std::invalid_argument("target set must be nonempty");
    for (int l : targets)
        if (l < 1 || l > t.n())
            throw std::invalid_argument("target " + std::to_string(l) + " outside 1..n");
}

SearchOptions heuristic_options(const BoundOptions& opts, int stop_at = INT_MAX)
{
    SearchOptions s = opts.search;
    s.stop_at = stop_at;
    s.universe_cap = 0;
    return s;
}

// The minimum over t-subsets of mc of eval(subset, incumbent). single(l) must
// be a lower bound for every subset containing l, so subsets are visited by
// their weakest member and the sweep ends once that lower bound reaches the
// incumbent. eval returns a value < incumbent only when it improves it.
struct SubsetMin {
    int best = INT_MAX;
    IndexList best_subset;
};

SubsetMin min_over_subsets(std::span<const int> mc, int tw, const std::function<int(int)>& single,
                           const std::function<int(const IndexList&, int)>& eval)
{
    IndexList order(mc.begin(), mc.end());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return single(a) < single(b); });
    const int k = int(order.size());
    const int floor = single(order[tw - 1]);

    SubsetMin res;
    std::vector<int> pick(tw - 1);
    for (int p = tw - 1; p < k; ++p) {
        if (single(order[p]) >= res.best)
            break;
        // Lexicographic (tw-1)-combinations of order[0..p-1].
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            IndexList subset;
            subset.reserve(tw);
            for (int x : pick)
                subset.push_back(order[x]);
            subset.push_back(order[p]);
            std::sort(subset.begin(), subset.end());
            const int v = eval(subset, res.best);
            if (v < res.best) {
                res.best = v;
                res.best_subset = subset;
                if (res.best <= floor)
                    return res;
            }
            int r = tw - 2;
            while (r >= 0 && pick[r] == p - (tw - 1) + r)
                --r;
            if (r < 0)
                break;
            ++pick[r];
            for (int s = r + 1; s < tw - 1; ++s)
                pick[s] = pick[s - 1] + 1;
        }
    }
    return res;
}

IndexList known_zeros_for(int l, int v, std::span<const int> known_zero)
{
    IndexList kz;
    for (int x : known_zero)
        if (x > l && x <= l + v)
            kz.push_back(x);
    return kz;
}

} // namespace

const char* to_string(Method m)
{
    switch (m) {
    case Method::FrWb:
        return "wb";
    case Method::FrWwb:
        return "wwb";
    case Method::FrOwb:
        return "owb";
    case Method::Advisory:
        return "adv";
    case Method::Fim:
        return "fim";
    }
    return "?";
}

Method parse_method(const std::string& s)
{
    for (Method m : all_methods())
        if (s == to_string(m))
            return m;
    throw std::invalid_argument("unknown method '" + s + "' (expected wb, wwb, owb, adv or fim)");
}

std::vector<Method> all_methods()
{
    return {Method::FrWb, Method::FrWwb, Method::FrOwb, Method::Advisory, Method::Fim};
}

int VPolicy::v(const RhoTable& t, int l) const
{
    int v = 0;
    if (auto it = overrides.find(l); it != overrides.end()) {
        v = it->second;
    } else if (!automatic) {
        v = fixed;
    } else if (t.has_weights()) {
        for (int x = l + 1; x <= t.n(); ++x)
            v += t.weight(x) == t.weight(l);
    }
    return std::clamp(v, 0, t.n() - l);
}

int feng_rao(const RhoTable& t, const StatusTable& s, int l, PairStatus flavor)
{
    if (l < 1 || l > t.n())
        throw std::invalid_argument("l outside 1..n");
    int count = 0;
    for (int i = 1; i <= t.n(); ++i)
        for (int j : t.columns_hitting(i, l))
            count += s(i, j) >= flavor;
    return count;
}

int feng_rao(const RhoTable& t, int l, PairStatus flavor)
{
    return feng_rao(t, StatusTable(t), l, flavor);
}

MaxSetResult max_mu_set(const RhoTable& t, std::span<const int> targets, SearchMode mode, const BoundOptions& opts)
{
    check_targets(t, targets);
    const auto clauses = mu_clauses(targets);
    const std::vector<IndexList> seeds{harvest(StatusTable(t), t, targets, PairStatus::Owb)};
    SearchOptions so = heuristic_options(opts);
    if (mode == SearchMode::Exact) {
        so.node_limit = 0;
        so.universe_cap = opts.exact_cap;
    }
    const auto r = max_clause_set(t, clauses, seeds, so);
    return {int(r.set.size()), r.set, r.optimal};
}

BoundValue advisory_bound(const RhoTable& t, int l, const BoundOptions& opts)
{
    const int targets[1] = {l};
    const auto r = max_mu_set(t, targets, SearchMode::Heuristic, opts);
    BoundValue b;
    b.value = r.size;
    b.targets = {l};
    b.cases.push_back({"mu-property w.r.t. " + std::to_string(l), mu_clauses(targets), r.witness, r.optimal});
    b.exhaustive = r.optimal;
    return b;
}

std::vector<std::pair<std::string, ClauseSet>> fim_cases(int l, int v, std::span<const int> known_zeros)
{
    std::vector<std::pair<std::string, ClauseSet>> cases;
    cases.emplace_back("l=" + std::to_string(l) + " case 0, exception " + std::to_string(l + 1) + ".." +
                           std::to_string(l + v),
                       exception_clauses(l, v));
    int z = 0;
    for (int x = l + 1; x <= l + v; ++x) {
        if (std::find(known_zeros.begin(), known_zeros.end(), x) != known_zeros.end())
            continue;
        ++z;
        cases.emplace_back("l=" + std::to_string(l) + " case " + std::to_string(z) + ", relaxed w.r.t. (" +
                               std::to_string(l) + "," + std::to_string(x) + ")",
                           relaxed_clauses(l, x));
    }
    return cases;
}

BoundValue fim_bound(const RhoTable& t, int l, std::span<const int> known_zeros, int v, const BoundOptions& opts)
{
    if (l < 1 || v < 0 || l + v > t.n())
        throw std::invalid_argument("fim_bound: need 1 <= l and l + v <= n");
    for (int x : known_zeros)
        if (x <= l || x > l + v)
            throw std::invalid_argument("fim_bound: known zeros must lie in l+1..l+v");

    const auto adv = advisory_bound(t, l, opts);
    const std::vector<IndexList> seeds{adv.cases.front().witness};
    BoundValue b;
    b.value = INT_MAX;
    b.targets = {l};
    for (auto& [label, clauses] : fim_cases(l, v, known_zeros)) {
        const auto r = max_clause_set(t, clauses, seeds, heuristic_options(opts));
        b.value = std::min(b.value, int(r.set.size()));
        b.exhaustive = b.exhaustive && r.optimal;
        b.cases.push_back({std::move(label), std::move(clauses), r.set, r.optimal});
    }
    return b;
}

BoundValue ghw_bound(const RhoTable& t, std::span<const int> mc_in, int tw, Method method, const BoundOptions& opts)
{
    if (method == Method::Fim)
        return fim_ghw_bound(t, mc_in, tw, {}, opts);
    const auto mc = sorted_unique(mc_in);
    if (tw < 1 || tw > int(mc.size()))
        throw std::invalid_argument("t must lie in 1..#m(C)");
    const StatusTable status(t);

    if (is_feng_rao(method)) {
        const auto flavor = flavor_of(method);
        const int n = t.n();
        std::vector<std::vector<bool>> sets(n + 1);
        std::vector<int> sizes(n + 1, 0);
        for (int l : mc) {
            const int target[1] = {l};
            sets[l].assign(n + 1, false);
            for (int i : harvest(status, t, target, flavor))
                sets[l][i] = true;
            sizes[l] = int(std::count(sets[l].begin(), sets[l].end(), true));
        }
        auto eval = [&](const IndexList& subset, int) {
            int c = 0;
            for (int i = 1; i <= n; ++i)
                for (int l : subset)
                    if (sets[l][i]) {
                        ++c;
                        break;
                    }
            return c;
        };
        const auto res = min_over_subsets(mc, tw, [&](int l) { return sizes[l]; }, eval);
        BoundValue b;
        b.value = res.best;
        b.targets = res.best_subset;
        b.cases.push_back({"harvest w.r.t. {" + join(b.targets) + "}", mu_clauses(b.targets),
                           harvest(status, t, b.targets, flavor), true});
        return b;
    }

    // Advisory: every single-target set stays feasible for a larger target set.
    const int n = t.n();
    std::vector<BoundValue> singles(n + 1);
    parallel_for(int(mc.size()), opts.threads, [&](int k) { singles[mc[k]] = advisory_bound(t, mc[k], opts); });

    bool exhaustive = true;
    IndexList best_witness;
    bool best_optimal = true;
    auto eval = [&](const IndexList& subset, int incumbent) {
        if (subset.size() == 1) {
            const auto& s = singles[subset.front()];
            if (s.value < incumbent) {
                best_witness = s.cases.front().witness;
                best_optimal = s.exhaustive;
                exhaustive = exhaustive && s.exhaustive;
            }
            return s.value;
        }
        std::vector<IndexList> seeds{harvest(status, t, subset, PairStatus::Owb)};
        for (int l : subset)
            seeds.push_back(singles[l].cases.front().witness);
        const auto r = max_clause_set(t, mu_clauses(subset), seeds, heuristic_options(opts, incumbent));
        const int v = int(r.set.size());
        if (v < incumbent) {
            best_witness = r.set;
            best_optimal = r.optimal;
            exhaustive = exhaustive && r.optimal;
        }
        return v;
    };
    const auto res = min_over_subsets(mc, tw, [&](int l) { return singles[l].value; }, eval);
    BoundValue b;
    b.value = res.best;
    b.targets = res.best_subset;
    b.cases.push_back({"mu-property w.r.t. {" + join(b.targets) + "}", mu_clauses(b.targets), best_witness,
                       best_optimal});
    b.exhaustive = exhaustive;
    return b;
}

BoundValue fim_ghw_bound(const RhoTable& t, std::span<const int> mc_in, int tw, std::span<const int> known_zero,
                         const BoundOptions& opts)
{
    const auto mc = sorted_unique(mc_in);
    if (tw < 1 || tw > int(mc.size()))
        throw std::invalid_argument("t must lie in 1..#m(C)");
    const int n = t.n();

    // Per-target case lists and the best set found for each single case.
    std::vector<std::vector<std::pair<std::string, ClauseSet>>> cases(n + 1);
    std::vector<std::vector<CaseResult>> single_cases(n + 1);
    std::vector<int> single_value(n + 1, 0);
    parallel_for(int(mc.size()), opts.threads, [&](int k) {
        const int l = mc[k];
        const int v = opts.v.v(t, l);
        const auto kz = known_zeros_for(l, v, known_zero);
        const auto b = fim_bound(t, l, kz, v, opts);
        cases[l] = fim_cases(l, v, kz);
        single_cases[l] = b.cases;
        single_value[l] = b.value;
    });

    bool exhaustive = true;
    CaseResult best_case;
    auto eval = [&](const IndexList& subset, int incumbent) {
        long long tuples = 1;
        for (int l : subset)
            tuples *= static_cast<long long>(cases[l].size());
        if (tuples > opts.case_cap)
            throw std::runtime_error("case tuples for {" + join(subset) + "} exceed the cap of " +
                                     std::to_string(opts.case_cap));
        int best = INT_MAX;
        std::vector<int> z(subset.size(), 0);
        for (;;) {
            int lb = 0;
            for (std::size_t r = 0; r < subset.size(); ++r)
                lb = std::max(lb, int(single_cases[subset[r]][z[r]].witness.size()));
            const int bar = std::min(best, incumbent);
            if (lb < bar) {
                ClauseSet clauses;
                std::vector<IndexList> seeds;
                std::string label;
                for (std::size_t r = 0; r < subset.size(); ++r) {
                    const auto& [lab, cl] = cases[subset[r]][z[r]];
                    clauses.insert(clauses.end(), cl.begin(), cl.end());
                    seeds.push_back(single_cases[subset[r]][z[r]].witness);
                    label += (r ? "; " : "") + lab;
                }
                CaseResult cr;
                if (subset.size() == 1) {
                    cr = single_cases[subset.front()][z.front()];
                } else {
                    const auto res = max_clause_set(t, clauses, seeds, heuristic_options(opts, bar));
                    cr = {label, clauses, res.set, res.optimal};
                }
                const int v = int(cr.witness.size());
                if (v < bar) {
                    best = v;
                    exhaustive = exhaustive && cr.optimal;
                    if (v < incumbent)
                        best_case = cr;
                }
            }
            std::size_t r = 0;
            while (r < subset.size() && ++z[r] == int(cases[subset[r]].size()))
                z[r++] = 0;
            if (r == subset.size())
                break;
        }
        return best;
    };
    const auto res = min_over_subsets(mc, tw, [&](int l) { return single_value[l]; }, eval);
    BoundValue b;
    b.value = res.best;
    b.targets = res.best_subset;
    b.cases.push_back(best_case);
    b.exhaustive = exhaustive;
    return b;
}

IndexList CodeSpec::m_values() const
{
    IndexList out;
    std::size_t k = 0;
    for (int l = 1; l <= n; ++l) {
        while (k < parity.size() && parity[k] < l)
            ++k;
        if (k == parity.size() || parity[k] != l)
            out.push_back(l);
    }
    return out;
}

CodeSpec make_code(int n, IndexList parity)
{
    if (n < 1)
        throw std::invalid_argument("code length must be positive");
    std::sort(parity.begin(), parity.end());
    if (std::adjacent_find(parity.begin(), parity.end()) != parity.end())
        throw std::invalid_argument("parity set has repeated indices");
    for (int l : parity)
        if (l < 1 || l > n)
            throw std::invalid_argument("parity index outside 1..n");
    return {n, std::move(parity)};
}

CodeSpec standard_code(int n, int s)
{
    if (s < 0 || s > n)
        throw std::invalid_argument("s must lie in 0..n");
    IndexList parity(s);
    std::iota(parity.begin(), parity.end(), 1);
    return {n, std::move(parity)};
}

BoundValue code_bound(const RhoTable& t, const CodeSpec& code, Method method, int tw, const BoundOptions& opts)
{
    if (code.n != t.n())
        throw std::invalid_argument("code length differs from the table size");
    const auto mc = code.m_values();
    if (mc.empty())
        throw std::invalid_argument("the zero code has no weights to bound");
    if (tw < 1 || tw > int(mc.size()))
        throw std::invalid_argument("t must lie in 1..k");

    if (tw > 1) {
        if (method == Method::Fim)
            return fim_ghw_bound(t, mc, tw, code.parity, opts);
        return ghw_bound(t, mc, tw, method, opts);
    }

    std::vector<BoundValue> per(mc.size());
    parallel_for(int(mc.size()), is_feng_rao(method) ? 1 : opts.threads, [&](int k) {
        const int l = mc[k];
        if (method == Method::Fim) {
            const int v = opts.v.v(t, l);
            per[k] = fim_bound(t, l, known_zeros_for(l, v, code.parity), v, opts);
        } else {
            per[k] = per_l_bound(t, l, method, opts);
        }
    });
    auto it = std::min_element(per.begin(), per.end(),
                               [](const BoundValue& a, const BoundValue& b) { return a.value < b.value; });
    BoundValue b = *it;
    for (const auto& p : per)
        b.exhaustive = b.exhaustive && p.exhaustive;
    return b;
}

BoundValue per_l_bound(const RhoTable& t, int l, Method method, const BoundOptions& opts)
{
    if (l < 1 || l > t.n())
        throw std::invalid_argument("l outside 1..n");
    if (method == Method::Advisory)
        return advisory_bound(t, l, opts);
    if (method == Method::Fim)
        return fim_bound(t, l, {}, opts.v.v(t, l), opts);
    const StatusTable status(t);
    const auto flavor = flavor_of(method);
    const int target[1] = {l};
    BoundValue b;
    b.value = feng_rao(t, status, l, flavor);
    b.targets = {l};
    b.cases.push_back({"harvest w.r.t. " + std::to_string(l), mu_clauses(target), harvest(status, t, target, flavor),
                       true});
    return b;
}

std::vector<BoundValue> per_l_bounds(const RhoTable& t, Method method, const BoundOptions& opts)
{
    const int n = t.n();
    std::vector<BoundValue> out(n);
    parallel_for(n, is_feng_rao(method) ? 1 : opts.threads,
                 [&](int k) { out[k] = per_l_bound(t, k + 1, method, opts); });
    return out;
}

CodeSpec improved_code(const RhoTable& t, int delta, Method method, const BoundOptions& opts)
{
    if (delta < 1)
        throw std::invalid_argument("designed distance must be at least 1");
    const int n = t.n();
    auto below = [&](const std::vector<BoundValue>& values) {
        IndexList parity;
        for (int l = 1; l <= n; ++l)
            if (values[l - 1].value < delta)
                parity.push_back(l);
        return parity;
    };
    if (method != Method::Fim)
        return make_code(n, below(per_l_bounds(t, method, opts)));

    IndexList parity = below(per_l_bounds(t, Method::Advisory, opts));
    constexpr int max_rounds = 10;
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<BoundValue> values(n);
        parallel_for(n, opts.threads, [&](int k) {
            const int l = k + 1;
            const int v = opts.v.v(t, l);
            values[k] = fim_bound(t, l, known_zeros_for(l, v, parity), v, opts);
        });
        auto next = below(values);
        if (next == parity)
            return make_code(n, std::move(parity));
        parity = std::move(next);
    }
    throw std::runtime_error("improved code: parity set did not reach a fixed point");
}

bool verify_certificate(const RhoTable& t, const BoundValue& b, Method method)
{
    if (b.cases.empty() || b.targets.empty())
        return false;
    if (is_feng_rao(method)) {
        const StatusTable status(t);
        const auto flavor = flavor_of(method);
        const auto set = harvest(status, t, b.targets, flavor);
        if (set != b.cases.front().witness || !check_mu(t, set, b.targets))
            return false;
        if (b.targets.size() == 1)
            return b.value == feng_rao(t, status, b.targets.front(), flavor);
        return b.value == int(set.size());
    }
    bool attained = false;
    for (const auto& c : b.cases) {
        if (!satisfies(t, c.witness, c.clauses))
            return false;
        const int size = int(c.witness.size());
        if (size < b.value)
            return false;
        attained = attained || size == b.value;
    }
    return attained;
}

} // namespace frb
