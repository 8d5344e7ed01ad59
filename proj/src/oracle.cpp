#include "frb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <set>

namespace frb {

namespace {

using Mask = std::vector<std::uint64_t>;

Mask support_mask(std::span<const Elem> v)
{
    Mask m((v.size() + 63) / 64, 0);
    for (std::size_t c = 0; c < v.size(); ++c)
        if (v[c])
            m[c >> 6] |= std::uint64_t(1) << (c & 63);
    return m;
}

// q^e, or -1 once it passes cap.
long long power_capped(int q, int e, long long cap)
{
    long long r = 1;
    for (int k = 0; k < e; ++k) {
        if (r > cap / q)
            return -1;
        r *= q;
    }
    return r;
}

// Visits every vector of `digits` field elements (codes 0..q-1) as an
// odometer, keeping acc = sum digit_r * rows[r] up to date.
void sweep(const FieldSpec& f, const std::vector<std::span<const Elem>>& rows, std::vector<Elem> acc,
           const std::function<void(const std::vector<Elem>&, const std::vector<Elem>&)>& visit)
{
    const int q = f.size();
    const int k = int(rows.size());
    std::vector<Elem> digit(k, 0);
    for (;;) {
        visit(digit, acc);
        int r = 0;
        while (r < k) {
            const Elem old = digit[r];
            const Elem next = old + 1 == q ? 0 : Elem(old + 1);
            const Elem diff = f.sub(next, old);
            for (std::size_t c = 0; c < acc.size(); ++c)
                acc[c] = f.add(acc[c], f.mul(diff, rows[r][c]));
            digit[r] = next;
            if (next != 0)
                break;
            ++r;
        }
        if (r == k)
            return;
    }
}

} // namespace

Subspace::Subspace(FieldMatrix basis) : basis_(std::move(basis))
{
    if (basis_.rows() == 0 || rank(basis_) != basis_.rows())
        throw std::invalid_argument("subspace basis must be nonempty and linearly independent");
}

int support_size(const Subspace& d)
{
    int count = 0;
    for (int c = 0; c < d.length(); ++c)
        for (int r = 0; r < d.dim(); ++r)
            if (d.basis()(r, c)) {
                ++count;
                break;
            }
    return count;
}

IndexList m_of_subspace(const BasisTriple& t, const Subspace& d, long long cap)
{
    const auto& f = *d.basis().field();
    if (power_capped(f.size(), d.dim(), cap) < 0)
        throw OracleCapExceeded("q^t exceeds the enumeration cap");
    std::vector<std::span<const Elem>> rows;
    for (int r = 0; r < d.dim(); ++r)
        rows.push_back(d.basis().row(r));
    std::set<int> ms;
    sweep(f, rows, std::vector<Elem>(d.length(), 0), [&](const std::vector<Elem>&, const std::vector<Elem>& v) {
        if (std::any_of(v.begin(), v.end(), [](Elem e) { return e != 0; }))
            ms.insert(m_of_vector(t, v));
    });
    return {ms.begin(), ms.end()};
}

FieldMatrix parity_matrix(const BasisTriple& t, const CodeSpec& code)
{
    FieldMatrix h(t.w.field(), int(code.parity.size()), t.n());
    for (std::size_t r = 0; r < code.parity.size(); ++r) {
        auto src = t.w.row(code.parity[r] - 1);
        std::copy(src.begin(), src.end(), h.row(int(r)).begin());
    }
    return h;
}

FieldMatrix generator_matrix(const BasisTriple& t, const CodeSpec& code)
{
    if (code.n != t.n())
        throw std::invalid_argument("code length differs from the basis size");
    if (code.parity.empty())
        return FieldMatrix::identity(t.w.field(), t.n());
    return null_space(parity_matrix(t, code));
}

int true_min_distance(const BasisTriple& t, const CodeSpec& code, long long cap)
{
    const auto g = generator_matrix(t, code);
    const auto& f = *g.field();
    if (g.rows() == 0)
        throw std::invalid_argument("the zero code has no minimum distance");
    if (power_capped(f.size(), g.rows(), cap) < 0)
        throw OracleCapExceeded("q^k exceeds the enumeration cap");
    std::vector<std::span<const Elem>> rows;
    for (int r = 0; r < g.rows(); ++r)
        rows.push_back(g.row(r));
    int best = INT_MAX;
    sweep(f, rows, std::vector<Elem>(g.cols(), 0), [&](const std::vector<Elem>&, const std::vector<Elem>& v) {
        const int w = hamming_weight(v);
        if (w > 0)
            best = std::min(best, w);
    });
    return best;
}

long long gaussian_binomial(int q, int k, int tw)
{
    if (tw < 0 || tw > k)
        return 0;
    // prod_{r<tw} (q^{k-r} - 1) / (q^{r+1} - 1), exact at every step.
    __int128 num = 1;
    for (int r = 0; r < tw; ++r) {
        __int128 a = 1, b = 1;
        for (int e = 0; e < k - r; ++e)
            a *= q;
        for (int e = 0; e < r + 1; ++e)
            b *= q;
        num = num * (a - 1) / (b - 1);
        if (num > LLONG_MAX)
            return LLONG_MAX;
    }
    return static_cast<long long>(num);
}

int true_ghw(const BasisTriple& t, const CodeSpec& code, int tw, long long cap)
{
    const auto g = generator_matrix(t, code);
    const auto& f = *g.field();
    const int k = g.rows();
    if (tw < 1 || tw > k)
        throw std::invalid_argument("t must lie in 1..k");
    const long long expected = gaussian_binomial(f.size(), k, tw);
    if (expected > cap)
        throw OracleCapExceeded("number of subspaces exceeds the enumeration cap");

    int best = INT_MAX;
    long long visited = 0;
    std::vector<int> piv(tw);
    for (int r = 0; r < tw; ++r)
        piv[r] = r;
    for (;;) {
        // Each echelon row is g[piv_r] plus free multiples of the non-pivot
        // rows after it; rows vary independently, so collect their supports.
        std::vector<std::vector<Mask>> options(tw);
        for (int r = 0; r < tw; ++r) {
            std::vector<std::span<const Elem>> free_rows;
            for (int c = piv[r] + 1; c < k; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end())
                    free_rows.push_back(g.row(c));
            auto base = g.row(piv[r]);
            sweep(f, free_rows, std::vector<Elem>(base.begin(), base.end()),
                  [&](const std::vector<Elem>&, const std::vector<Elem>& v) { options[r].push_back(support_mask(v)); });
        }
        std::vector<std::size_t> pick(tw, 0);
        for (;;) {
            int w = 0;
            for (std::size_t word = 0; word < options[0][0].size(); ++word) {
                std::uint64_t acc = 0;
                for (int r = 0; r < tw; ++r)
                    acc |= options[r][pick[r]][word];
                w += std::popcount(acc);
            }
            best = std::min(best, w);
            ++visited;
            int r = 0;
            while (r < tw && ++pick[r] == options[r].size())
                pick[r++] = 0;
            if (r == tw)
                break;
        }
        int r = tw - 1;
        while (r >= 0 && piv[r] == k - tw + r)
            --r;
        if (r < 0)
            break;
        ++piv[r];
        for (int s = r + 1; s < tw; ++s)
            piv[s] = piv[s - 1] + 1;
    }
    if (visited != expected)
        throw std::logic_error("subspace enumeration count disagrees with the Gaussian binomial");
    return best;
}

int max_mu_exhaustive(const RhoTable& t, std::span<const int> targets, int universe_cap)
{
    if (targets.empty())
        throw std::invalid_argument("target set must be nonempty");
    const int n = t.n();
    std::vector<bool> is_target(n + 1, false);
    for (int l : targets) {
        if (l < 1 || l > n)
            throw std::invalid_argument("target outside 1..n");
        is_target[l] = true;
    }
    IndexList universe;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (is_target[t(i, j)]) {
                universe.push_back(i);
                break;
            }
    if (int(universe.size()) > universe_cap)
        throw OracleCapExceeded("candidate universe of " + std::to_string(universe.size()) + " exceeds " +
                                std::to_string(universe_cap));

    // i may join a set of smaller members iff some target-hitting column of i
    // is strictly dominated by i in every member's row.
    auto admissible = [&](const IndexList& members, int i) {
        for (int j = 1; j <= n; ++j) {
            const int r = t(i, j);
            if (!is_target[r])
                continue;
            bool ok = true;
            for (int m : members)
                if (t(m, j) >= r) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        }
        return false;
    };

    int best = 0;
    IndexList members;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        best = std::max(best, int(members.size()));
        for (std::size_t k = from; k < universe.size(); ++k) {
            if (int(members.size() + universe.size() - k) <= best)
                return;
            if (!admissible(members, universe[k]))
                continue;
            members.push_back(universe[k]);
            grow(k + 1);
            members.pop_back();
        }
    };
    grow(0);
    return best;
}

} // namespace frb
