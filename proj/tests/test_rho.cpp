#include "frb/rho.hpp"

#include <doctest.h>

using namespace frb;

TEST_CASE("F8 rho spot checks")
{
    const auto t = rho_table_algebraic(Curve::f8());
    REQUIRE(t.n() == 32);
    CHECK(t(3, 12) == 17);
    CHECK(t(3, 11) == 18);
    CHECK(t(1, 1) == 1);
    CHECK(t(2, 21) == 2); // Y * Y^7 = Y^8 reduces to Y
    for (int i = 1; i <= 32; ++i)
        for (int j = 1; j <= 32; ++j)
            REQUIRE(t(i, j) == t(j, i));
}

TEST_CASE("generic and algebraic tables agree on F8")
{
    const auto c = Curve::f8();
    const auto triple = BasisTriple::from_curve(c);
    CHECK_NOTHROW(triple.validate());
    CHECK(rho_table_generic(triple) == rho_table_algebraic(c));
    CHECK(rho_table_generic(triple, 3) == rho_table_algebraic(c));
}

TEST_CASE("changing the field modulus leaves the table unchanged")
{
    auto cfg = preset_config("f8");
    cfg.modulus = {1, 0, 1, 1};
    const auto swapped = Curve::make(cfg);
    CHECK(rho_table_algebraic(swapped) == rho_table_algebraic(Curve::f8()));
    CHECK(rho_table_generic(BasisTriple::from_curve(swapped)) == rho_table_algebraic(Curve::f8()));
}

TEST_CASE("rho and m of vectors")
{
    const auto c = Curve::f8();
    const auto triple = BasisTriple::from_curve(c);
    std::vector<Elem> zero(32, 0);
    CHECK(rho_of_vector(triple, zero) == 0);
    CHECK_THROWS(m_of_vector(triple, zero));
    for (int l : {1, 5, 17, 32}) {
        auto w = triple.w.row(l - 1);
        CHECK(rho_of_vector(triple, w) == l);
    }
    // m(c) = l for a nonzero vector orthogonal to w_1..w_{l-1}: c = the l-th
    // column of W^{-1}.
    const auto inv = inverse(triple.w);
    for (int l : {1, 9, 32}) {
        std::vector<Elem> col(32);
        for (int r = 0; r < 32; ++r)
            col[r] = inv(r, l - 1);
        CHECK(m_of_vector(triple, col) == l);
    }
}

TEST_CASE("table validation")
{
    CHECK_THROWS(RhoTable(2, {1, 2, 3, 1}));
    CHECK_THROWS(RhoTable(2, {1, 2, 1}));
    const RhoTable t(2, {1, 2, 2, 2});
    CHECK(t.columns_hitting(2, 2).size() == 2);
    CHECK(t.columns_hitting(1, 1).size() == 1);
    CHECK_FALSE(t.has_weights());
}

TEST_CASE("a zero star product is reported")
{
    const auto f = FieldSpec::gf8();
    const auto id = FieldMatrix::identity(f, 3);
    const BasisTriple triple{id, id, id};
    CHECK_THROWS_AS(rho_table_generic(triple), FieldError);
    const BasisTriple bad{id, id, FieldMatrix(f, 3, 3)};
    CHECK_THROWS_AS(bad.validate(), FieldError);
}
