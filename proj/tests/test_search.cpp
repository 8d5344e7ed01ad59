#include "frb/bounds.hpp"
#include "frb/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace frb;

namespace {

// Symmetric, roughly increasing along rows and columns like a real table,
// with noise so that plenty of pairs fail to be well-behaving.
RhoTable rho_like(std::mt19937& rng, int n)
{
    std::vector<int> v(std::size_t(n) * n);
    std::uniform_int_distribution<int> noise(-3, 3);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const int x = std::clamp(5 * (i + j) / 6 + noise(rng), 1, n);
            v[std::size_t(i - 1) * n + (j - 1)] = x;
            v[std::size_t(j - 1) * n + (i - 1)] = x;
        }
    return RhoTable(n, std::move(v));
}

RhoTable uniform_table(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> d(1, n);
    std::vector<int> v(std::size_t(n) * n);
    for (auto& x : v)
        x = d(rng);
    return RhoTable(n, std::move(v));
}

IndexList some_targets(std::mt19937& rng, int n)
{
    IndexList ts{1 + int(rng() % n)};
    if (rng() % 2) {
        const int l = 1 + int(rng() % n);
        if (l != ts[0])
            ts.push_back(l);
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

} // namespace

TEST_CASE("exact search agrees with exhaustive enumeration on 10x10 tables")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = trial % 2 ? uniform_table(rng, 10) : rho_like(rng, 10);
        const auto ts = some_targets(rng, 10);
        const auto r = max_mu_set(t, ts, SearchMode::Exact);
        CHECK(r.optimal);
        CHECK(check_mu(t, r.witness, ts));
        REQUIRE(r.size == max_mu_exhaustive(t, ts));
    }
}

TEST_CASE("heuristic search quality on 12x12 tables")
{
    std::mt19937 rng(23);
    BoundOptions tight;
    tight.search.node_limit = 50;
    int equal = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        const auto t = trial % 2 ? uniform_table(rng, 12) : rho_like(rng, 12);
        const auto ts = some_targets(rng, 12);
        const auto h = max_mu_set(t, ts, SearchMode::Heuristic, tight);
        const auto e = max_mu_set(t, ts, SearchMode::Exact);
        REQUIRE(h.size <= e.size);
        CHECK(check_mu(t, h.witness, ts));
        equal += h.size == e.size;
    }
    CHECK(equal * 100 >= 95 * trials);
}

TEST_CASE("generic clause sets against brute force")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = uniform_table(rng, 9);
        const int l = 1 + int(rng() % 7);
        const ClauseSet cs = trial % 2 ? exception_clauses(l, 1) : relaxed_clauses(l, l + 2);
        SearchOptions so;
        so.node_limit = 0;
        const auto r = max_clause_set(t, cs, {}, so);
        CHECK(satisfies(t, r.set, cs));
        int best = 0;
        for (int mask = 0; mask < (1 << 9); ++mask) {
            IndexList s;
            for (int i = 0; i < 9; ++i)
                if (mask >> i & 1)
                    s.push_back(i + 1);
            if (int(s.size()) > best && satisfies(t, s, cs))
                best = int(s.size());
        }
        REQUIRE(int(r.set.size()) == best);
    }
}

TEST_CASE("seeds, caps and early stop")
{
    const auto t = rho_table_algebraic(Curve::f8());
    const auto cs = mu_clauses(IndexList{21});
    const std::vector<IndexList> bad_seed{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}};
    const auto r = max_clause_set(t, cs, bad_seed);
    CHECK(r.set.size() == 12);
    CHECK(r.optimal);

    SearchOptions capped;
    capped.universe_cap = 5;
    CHECK_THROWS_AS(max_clause_set(t, cs, {}, capped), SearchCapExceeded);

    SearchOptions early;
    early.stop_at = 3;
    const auto e = max_clause_set(t, cs, {}, early);
    CHECK(e.set.size() >= 3);
    CHECK_FALSE(e.optimal);

    CHECK(candidate_universe(t, cs).size() >= 12);
}

TEST_CASE("exact mode respects the universe cap")
{
    const auto t = rho_table_algebraic(Curve::f8());
    BoundOptions o;
    o.exact_cap = 4;
    CHECK_THROWS_AS(max_mu_set(t, IndexList{30}, SearchMode::Exact, o), SearchCapExceeded);
    CHECK_THROWS_AS(max_mu_set(t, IndexList{}, SearchMode::Exact), std::invalid_argument);
}
