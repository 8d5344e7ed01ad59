#include "frb/bounds.hpp"

#include <doctest.h>

using namespace frb;

namespace {

const RhoTable& f8()
{
    static const RhoTable t = rho_table_algebraic(Curve::f8());
    return t;
}

std::vector<int> row(const RhoTable& t, const CodeSpec& code, int tw)
{
    std::vector<int> out;
    for (auto m : all_methods())
        out.push_back(code_bound(t, code, m, tw).value);
    return out;
}

} // namespace

TEST_CASE("method names")
{
    for (auto m : all_methods())
        CHECK(parse_method(to_string(m)) == m);
    CHECK_THROWS_AS(parse_method("xyz"), std::invalid_argument);
}

TEST_CASE("per-l values at l = 17 and l = 21")
{
    const auto& t = f8();
    CHECK(feng_rao(t, 17, PairStatus::Wb) == 7);
    CHECK(feng_rao(t, 17, PairStatus::Wwb) == 7);
    CHECK(feng_rao(t, 17, PairStatus::Owb) == 8);
    CHECK(advisory_bound(t, 17).value == 9);
    CHECK(feng_rao(t, 21, PairStatus::Wb) == 8);
    CHECK(feng_rao(t, 21, PairStatus::Owb) == 10);
    CHECK(advisory_bound(t, 21).value == 12);
    CHECK(feng_rao(t, 28, PairStatus::Wb) == 21);
    CHECK(feng_rao(t, 28, PairStatus::Wwb) == 22);
    CHECK(feng_rao(t, 30, PairStatus::Wb) == 24);
    CHECK(feng_rao(t, 30, PairStatus::Wwb) == 26);

    const auto b17 = fim_bound(t, 17, {}, 1);
    CHECK(b17.value == 10);
    REQUIRE(b17.cases.size() == 2);
    CHECK(b17.cases[0].witness.size() >= 10);
    CHECK(b17.cases[1].witness.size() >= 10);
    CHECK(verify_certificate(t, b17, Method::Fim));

    const auto b21 = fim_bound(t, 21, {}, 1);
    CHECK(b21.value == 13);
    CHECK(b21.cases[0].witness.size() >= 14);
    CHECK(verify_certificate(t, b21, Method::Fim));
}

TEST_CASE("automatic v counts later footprint monomials of equal weight")
{
    const auto& t = f8();
    const auto v = VPolicy::automatic_policy();
    CHECK(v.v(t, 17) == 1);
    CHECK(v.v(t, 21) == 1);
    CHECK(v.v(t, 32) == 0);
    CHECK(VPolicy::constant(3).v(t, 31) == 1);
    VPolicy o;
    o.overrides[17] = 0;
    CHECK(o.v(t, 17) == 0);
    CHECK(VPolicy::constant(2).v(RhoTable(2, {1, 2, 2, 2}), 1) == 1);
}

TEST_CASE("known zeros remove cases")
{
    const auto& t = f8();
    const int kz[1] = {18};
    const auto b = fim_bound(t, 17, kz, 1);
    CHECK(b.cases.size() == 1);
    // only the exception case survives; it is the binding one at l = 17
    const auto full = fim_bound(t, 17, {}, 1);
    CHECK(full.cases.size() == 2);
    CHECK(b.value == int(full.cases[0].witness.size()));
    CHECK(b.value == 10);
    CHECK(fim_cases(17, 2, kz).size() == 2);
    CHECK_THROWS(fim_bound(t, 17, IndexList{20}, 1));
    CHECK_THROWS(fim_bound(t, 31, {}, 2));
}

TEST_CASE("v = 0 reduces the improved bound to the advisory bound")
{
    const auto& t = f8();
    for (int l = 1; l <= t.n(); ++l)
        CHECK(fim_bound(t, l, {}, 0).value == advisory_bound(t, l).value);
}

TEST_CASE("C(16), first and second weights")
{
    const auto& t = f8();
    const auto code = standard_code(32, 16);
    CHECK(code.dimension() == 16);
    CHECK(row(t, code, 1) == std::vector<int>{7, 7, 8, 9, 10});
    CHECK(row(t, code, 2) == std::vector<int>{8, 8, 10, 12, 13});
}

TEST_CASE("degenerate codes")
{
    const auto& t = f8();
    CHECK(row(t, standard_code(32, 0), 1) == std::vector<int>{1, 1, 1, 1, 1});
    const auto last = standard_code(32, 31);
    CHECK(last.m_values() == IndexList{32});
    for (auto m : all_methods())
        CHECK(code_bound(t, last, m, 1).value == per_l_bound(t, 32, m).value);
    CHECK_THROWS(code_bound(t, standard_code(32, 32), Method::Advisory, 1));
    CHECK_THROWS(code_bound(t, standard_code(32, 30), Method::Advisory, 3));
    CHECK_THROWS(standard_code(32, 33));
    CHECK_THROWS(make_code(32, {3, 3}));
    CHECK_THROWS(make_code(32, {0}));
}

TEST_CASE("t = 1 generalized weight is the minimum of the per-l values")
{
    const auto& t = f8();
    const auto code = standard_code(32, 12);
    const auto mc = code.m_values();
    for (auto m : {Method::FrWb, Method::FrOwb, Method::Advisory}) {
        int best = 1 << 30;
        for (int l : mc)
            best = std::min(best, per_l_bound(t, l, m).value);
        CHECK(ghw_bound(t, mc, 1, m).value == best);
    }
}

TEST_CASE("with v = 0 everywhere the improved GHW bound is the advisory one")
{
    const auto& t = f8();
    BoundOptions o;
    o.v = VPolicy::constant(0);
    for (int s : {10, 16, 22})
        for (int tw : {2, 3}) {
            const auto mc = standard_code(32, s).m_values();
            CHECK(fim_ghw_bound(t, mc, tw, {}, o).value == ghw_bound(t, mc, tw, Method::Advisory, o).value);
        }
}

TEST_CASE("improved codes")
{
    const auto& t = f8();
    CHECK(improved_code(t, 10, Method::Advisory).dimension() == 16);
    CHECK(improved_code(t, 10, Method::Fim).dimension() == 17);
    CHECK(improved_code(t, 13, Method::Advisory).dimension() == 11);
    CHECK(improved_code(t, 13, Method::Fim).dimension() == 12);
    CHECK(improved_code(t, 1, Method::Fim).parity.empty());
    CHECK_THROWS(improved_code(t, 0, Method::Advisory));
    for (int delta : {5, 10, 13, 20})
        for (auto m : {Method::Advisory, Method::Fim}) {
            const auto code = improved_code(t, delta, m);
            if (code.dimension() > 0)
                CHECK(code_bound(t, code, m, 1).value >= delta);
        }
}

TEST_CASE("generalized weights of the improved codes")
{
    const auto& t = f8();
    struct Row {
        Method m;
        int delta;
        std::vector<int> d;
    };
    const Row rows[] = {{Method::Advisory, 10, {12, 14, 15, 16, 20}},
                        {Method::Fim, 10, {12, 13, 14, 15, 16}},
                        {Method::Advisory, 13, {16, 20, 22, 24, 26}},
                        {Method::Fim, 13, {15, 16, 21, 22, 24}}};
    for (const auto& r : rows) {
        const auto code = improved_code(t, r.delta, r.m);
        for (int tw = 2; tw <= 6; ++tw) {
            const auto b = code_bound(t, code, r.m, tw);
            CHECK(b.value == r.d[tw - 2]);
            CHECK(verify_certificate(t, b, r.m));
        }
    }
}

TEST_CASE("sixth weight of C(3)")
{
    const auto& t = f8();
    CHECK(row(t, standard_code(32, 3), 6) == std::vector<int>{8, 8, 9, 9, 9});
}

TEST_CASE("monotone chain for every l")
{
    const auto& t = f8();
    const StatusTable s(t);
    for (int l = 1; l <= t.n(); ++l) {
        const int target[1] = {l};
        const int wb = feng_rao(t, s, l, PairStatus::Wb);
        const int wwb = feng_rao(t, s, l, PairStatus::Wwb);
        const int owb = feng_rao(t, s, l, PairStatus::Owb);
        CHECK(wb <= wwb);
        CHECK(wwb <= owb);
        CHECK(owb == int(harvest(s, t, target, PairStatus::Owb).size()));
        const auto adv = advisory_bound(t, l);
        CHECK(adv.value >= owb);
        CHECK(fim_bound(t, l, {}, VPolicy{}.v(t, l)).value >= adv.value);
    }
}

TEST_CASE("certificates are checked")
{
    const auto& t = f8();
    auto b = advisory_bound(t, 21);
    CHECK(verify_certificate(t, b, Method::Advisory));
    auto inflated = b;
    inflated.value += 1;
    CHECK_FALSE(verify_certificate(t, inflated, Method::Advisory));
    auto tampered = b;
    tampered.cases[0].witness.push_back(32);
    tampered.value = int(tampered.cases[0].witness.size());
    CHECK_FALSE(verify_certificate(t, tampered, Method::Advisory));

    auto fr = per_l_bound(t, 21, Method::FrOwb);
    CHECK(verify_certificate(t, fr, Method::FrOwb));
    fr.value = 11;
    CHECK_FALSE(verify_certificate(t, fr, Method::FrOwb));
    CHECK_FALSE(verify_certificate(t, BoundValue{}, Method::Fim));
}

TEST_CASE("results do not depend on the thread count")
{
    const auto& t = f8();
    BoundOptions one, four;
    four.threads = 4;
    for (auto m : all_methods()) {
        const auto a = per_l_bounds(t, m, one);
        const auto b = per_l_bounds(t, m, four);
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].value == b[k].value);
            CHECK(a[k].cases.front().witness == b[k].cases.front().witness);
        }
        const auto code = standard_code(32, 14);
        CHECK(code_bound(t, code, m, 2, one).cases.front().witness ==
              code_bound(t, code, m, 2, four).cases.front().witness);
    }
}

TEST_CASE("case explosion guard")
{
    const auto& t = f8();
    BoundOptions o;
    o.case_cap = 1;
    const auto mc = standard_code(32, 16).m_values();
    CHECK_THROWS_AS(fim_ghw_bound(t, mc, 2, {}, o), std::runtime_error);
}
