#include "frb/mu.hpp"

#include <doctest.h>

#include <random>

using namespace frb;

namespace {

const RhoTable& f8()
{
    static const RhoTable t = rho_table_algebraic(Curve::f8());
    return t;
}

} // namespace

TEST_CASE("status table matches the direct definition")
{
    const auto& t = f8();
    const StatusTable s(t);
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j <= t.n(); ++j)
            REQUIRE(s(i, j) == pair_status(t, i, j));
}

TEST_CASE("pair labels on a hand-made table")
{
    const RhoTable t(3, {1, 2, 3, 2, 3, 3, 3, 3, 3});
    CHECK(pair_status(t, 1, 1) == PairStatus::Wb);
    CHECK(pair_status(t, 2, 2) == PairStatus::Wb);
    CHECK(pair_status(t, 3, 3) == PairStatus::None);
    CHECK(pair_status(t, 1, 3) == PairStatus::Wb);
    CHECK(pair_status(t, 2, 3) == PairStatus::None);
    CHECK(std::string(to_string(PairStatus::Wwb)) == "WWB");
}

TEST_CASE("harvest sets satisfy the mu-property")
{
    const auto& t = f8();
    const StatusTable s(t);
    for (int l = 1; l <= t.n(); ++l) {
        const int target[1] = {l};
        for (auto flavor : {PairStatus::Wb, PairStatus::Wwb, PairStatus::Owb})
            CHECK(check_mu(t, harvest(s, t, target, flavor), target));
    }
}

TEST_CASE("hand-picked sets for l = 17 and l = 21")
{
    const auto& t = f8();
    const int l21[1] = {21};
    const IndexList adv21{1, 2, 4, 6, 9, 13, 17, 21, 3, 5, 12, 16};
    CHECK(check_mu(t, adv21, l21));
    const IndexList case0{1, 2, 4, 6, 9, 13, 17, 21, 3, 7, 12, 5, 10, 16};
    const IndexList case1{1, 2, 4, 6, 9, 13, 17, 21, 3, 5, 8, 11, 15};
    CHECK(check_mu_exception(t, case0, 21, 1));
    CHECK(check_relaxed_mu(t, case1, 21, 22));
    CHECK_FALSE(check_mu(t, case0, l21));

    const int l17[1] = {17};
    CHECK(check_mu(t, IndexList{1, 2, 3, 4, 7, 9, 12, 13, 17}, l17));
}

TEST_CASE("owb with respect to a subset")
{
    const auto& t = f8();
    const IndexList iprime{1, 2, 4, 6, 9, 13, 17};
    CHECK(owb_wrt(t, 17, 1, iprime));
    CHECK_THROWS_AS(owb_wrt(t, 3, 1, iprime), std::invalid_argument);
}

TEST_CASE("predicate argument checks")
{
    const auto& t = f8();
    CHECK_THROWS(check_mu(t, IndexList{1, 1}, IndexList{17}));
    CHECK_THROWS(check_mu(t, IndexList{0}, IndexList{17}));
    CHECK_THROWS(check_mu_exception(t, IndexList{1}, 31, 2));
    CHECK_THROWS(check_relaxed_mu(t, IndexList{1}, 17, 17));
    CHECK(check_mu(t, IndexList{}, IndexList{17}));
}

TEST_CASE("exception with g = 0 is the plain mu-property")
{
    const auto& t = f8();
    std::mt19937 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        IndexList s;
        for (int i = 1; i <= t.n(); ++i)
            if (rng() % 5 == 0)
                s.push_back(i);
        const int l = 1 + int(rng() % 32);
        const int target[1] = {l};
        CHECK(check_mu(t, s, target) == check_mu_exception(t, s, l, 0));
    }
}

TEST_CASE("feasibility is closed under taking subsets")
{
    const auto& t = f8();
    std::mt19937 rng(4);
    int nontrivial = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        IndexList big;
        for (int i = 1; i <= t.n(); ++i)
            if (rng() % 3 == 0)
                big.push_back(i);
        const int l = 1 + int(rng() % 31);
        const ClauseSet variants[] = {mu_clauses(IndexList{l}), exception_clauses(l, 1),
                                      relaxed_clauses(l, l + 1)};
        for (const auto& cs : variants) {
            // Shrink big until it is feasible, then test random subsets.
            IndexList s = big;
            while (!satisfies(t, s, cs))
                s.pop_back();
            nontrivial += s.size() > 3;
            IndexList sub;
            for (int i : s)
                if (rng() % 2)
                    sub.push_back(i);
            REQUIRE(satisfies(t, sub, cs));
        }
    }
    CHECK(nontrivial > 100);
}

TEST_CASE("witness columns")
{
    const auto& t = f8();
    const IndexList s{1, 2, 3, 4, 7, 9, 12, 13, 17};
    const auto cs = mu_clauses(IndexList{17});
    for (int i : s) {
        const int j = witness(t, i, s, cs);
        REQUIRE(j > 0);
        CHECK(t(i, j) == 17);
        CHECK(owb_wrt(t, i, j, s));
    }
}
