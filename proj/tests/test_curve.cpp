#include "frb/curve.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace frb;

TEST_CASE("weighted order")
{
    const MonomialOrder o{3, 2};
    CHECK(o.less({0, 6}, {4, 0}));
    CHECK(o.compare({1, 2}, {1, 2}) == std::strong_ordering::equal);
    CHECK(o.less({0, 0}, {0, 1}));
    CHECK(o.less({0, 1}, {1, 0}));
}

TEST_CASE("order is compatible with multiplication")
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(0, 12);
    for (const MonomialOrder o : {MonomialOrder{3, 2}, MonomialOrder{4, 3}}) {
        for (int k = 0; k < 2000; ++k) {
            const Monomial a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
            if (o.less(a, b))
                REQUIRE(o.less(a * c, b * c));
        }
    }
}

TEST_CASE("F8 curve structure")
{
    const auto c = Curve::f8();
    REQUIRE(c.n() == 32);
    CHECK(c.points().size() == 32);
    CHECK(c.monomial(17) == Monomial{0, 6});
    CHECK(c.weight(17) == 12);
    CHECK(c.monomial(12) == Monomial{3, 0});
    CHECK(c.weight(12) == 9);
    CHECK(c.monomial(18) == Monomial{2, 3});
    CHECK(c.weight(18) == 12);
    CHECK(c.monomial(21) == Monomial{0, 7});
    CHECK(c.weight(21) == 14);
    CHECK(c.index_of({4, 0}) == 0);
    for (int i = 2; i <= c.n(); ++i)
        CHECK(c.order().less(c.monomial(i - 1), c.monomial(i)));
}

TEST_CASE("F27 curve structure")
{
    const auto c = Curve::f27();
    CHECK(c.n() == 243);
    CHECK(c.points().size() == 243);
    CHECK(c.equation().leading(c.order()) == Monomial{9, 0});
}

TEST_CASE("normal forms on F8")
{
    const auto c = Curve::f8();
    const auto& f = c.field();
    Polynomial expected(f);
    for (Monomial m : {Monomial{0, 6}, Monomial{0, 5}, Monomial{2, 0}, Monomial{0, 3}, Monomial{1, 0}})
        expected.add_term(m, 1);
    CHECK(c.normal_form(Monomial{4, 0}) == expected);
    CHECK(c.normal_form(Monomial{4, 0}).leading(c.order()) == Monomial{0, 6});
    CHECK(c.normal_form(Monomial{0, 8}) == Polynomial::monomial(f, {0, 1}));
    for (const auto& m : c.footprint())
        CHECK(c.normal_form(m) == Polynomial::monomial(f, m));
}

TEST_CASE("normal form is idempotent, lands in the footprint and preserves values")
{
    for (const auto& c : {Curve::f8(), Curve::f27()}) {
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> e(0, 30), coef(1, c.field()->size() - 1);
        for (int k = 0; k < 40; ++k) {
            Polynomial p(c.field());
            for (int t = 0; t < 4; ++t)
                p.add_term({e(rng), e(rng)}, Elem(coef(rng)));
            const auto nf = c.normal_form(p);
            CHECK(c.normal_form(nf) == nf);
            for (const auto& [m, v] : nf.terms())
                CHECK(c.in_footprint(m));
            CHECK(c.evaluate(nf) == c.evaluate(p));
        }
    }
}

TEST_CASE("curve config parsing")
{
    std::istringstream good(R"({"name": "tiny", "p": 2, "m": 2, "modulus": [1, 1, 1],
                               "G": [0, 1, 1], "H": [0, 1, 0, 1], "weights": [3, 2]})");
    const auto cfg = parse_curve_config(good);
    CHECK(cfg.name == "tiny");
    CHECK(cfg.wx == 3);

    std::istringstream bad_json("{\"p\": 2,");
    CHECK_THROWS_AS(parse_curve_config(bad_json), CurveError);
    std::istringstream missing(R"({"p": 2, "m": 3})");
    CHECK_THROWS_AS(parse_curve_config(missing), CurveError);
    std::istringstream bad_weights(R"({"p": 2, "m": 3, "modulus": [1,1,0,1], "G": [0,1,1,0,1],
                                      "H": [0,0,0,1,0,1,1], "weights": [0, 2]})");
    CHECK_THROWS_AS(parse_curve_config(bad_weights), CurveError);
    CHECK_THROWS_AS(load_curve_config("/nonexistent/curve.json"), CurveError);
    CHECK_THROWS_AS(preset_config("f9"), CurveError);
}

TEST_CASE("curves whose leading term is not X^deg G are rejected")
{
    auto cfg = preset_config("f8");
    cfg.wx = 1; // now Y^6 dominates X^4
    CHECK_THROWS_AS(Curve::make(cfg), CurveError);
}

TEST_CASE("modulus swap keeps the footprint and the point count")
{
    auto cfg = preset_config("f8");
    cfg.modulus = {1, 0, 1, 1};
    const auto c = Curve::make(cfg);
    CHECK(c.n() == 32);
    CHECK(c.footprint() == Curve::f8().footprint());
}
