#include "doctest.h"

#include "icl/bourbaki/bourbaki.hpp"
#include "icl/error.hpp"

using namespace icl;

namespace {

RingContext qxy()
{
    return RingContext::parse("x,y/Q");
}

Ideal I(const char* gens, const RingContext& r)
{
    return Ideal::parse(gens, r);
}

FModule sum(std::initializer_list<const char*> ideals)
{
    auto R = qxy();
    std::vector<Ideal> parts;
    for (const char* g : ideals)
        parts.push_back(I(g, R));
    return FModule::direct_sum(parts);
}

Column col(std::initializer_list<const char*> entries, const RingContext& r)
{
    Column c;
    for (const char* s : entries)
        c.push_back(parse_polynomial(s, r));
    return c;
}

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Unsupported;
}

} // namespace

TEST_CASE("syzygies and module membership")
{
    auto R = qxy();
    auto syz = syzygies(R, {col({"x"}, R), col({"y"}, R)}, 1);
    REQUIRE(syz.size() == 1);
    CHECK(module_member(col({"y", "-x"}, R), syz, R));
    CHECK_FALSE(module_member(col({"1", "0"}, R), syz, R));

    std::vector<Column> gens{col({"x", "0"}, R), col({"y", "x"}, R)};
    CHECK(module_member(col({"x*y", "x^2"}, R), gens, R));
    CHECK_FALSE(module_member(col({"0", "1"}, R), gens, R));
    CHECK(determinant({col({"x", "0"}, R), col({"y", "x"}, R)}) == parse_polynomial("x^2", R));
    CHECK(generic_rank(R, gens, 2) == 2);
    CHECK(generic_rank(R, {col({"x", "y"}, R), col({"x^2", "x*y"}, R)}, 2) == 1);
}

TEST_CASE("Fitting ideals")
{
    auto R = qxy();
    auto E = FModule::parse({{"x", "0"}, {"y", "0"}, {"0", "1"}}, R);
    CHECK(ideal_equal(fitting_ideal(E, 2), I("x, y", R)));
    CHECK(fitting_ideal(E, 3).is_unit());
    CHECK(fitting_ideal(E, 1).is_zero());
    CHECK(fitting_ideal(FModule::free(R, 3), 3).is_unit());
    CHECK(ideal_equal(fitting_ideal(sum({"x, y"}), 1), I("x, y", R)));

    // Fitt_e(E) = Fitt_0(R^e / E) = maximal minors of the generators
    std::vector<FModule> suite{sum({"x, y", "1"}),          sum({"x, y", "x, y"}), sum({"x^2, x*y, y^2", "1"}),
                               sum({"x^2, y^3", "x, y^2"}), FModule::free(R, 2),  E};
    suite.push_back(FModule::parse({{"x", "y"}, {"y^2", "0"}, {"0", "x^2"}}, R));
    for (const auto& M : suite)
        CHECK(ideal_equal(fitting_ideal(M, static_cast<long>(M.rank())),
                          ideal_of_minors(R, M.columns(), M.rank(), static_cast<long>(M.rank()))));
}

TEST_CASE("embedding through the double dual")
{
    auto R = qxy();
    auto m = embed_into_free(R, 2, {col({"y", "-x"}, R)});
    REQUIRE(m.rank() == 1);
    CHECK(ideal_equal(Ideal(R, {m.columns()[0][0], m.columns()[1][0]}), I("x, y", R)));

    auto mm = embed_into_free(R, 4, {col({"y", "-x", "0", "0"}, R), col({"0", "0", "y", "-x"}, R)});
    CHECK(mm.rank() == 2);
    CHECK(ideal_equal(fitting_ideal(mm, 2), I("x^2, x*y, y^2", R)));

    auto F = embed_into_free(R, 2, {});
    CHECK(F.rank() == 2);
    CHECK(fitting_ideal(F, 2).is_unit());

    CHECK(kind_of([&] { embed_into_free(R, 1, {col({"x"}, R)}); }) == ErrorKind::NotTorsionfree);
    CHECK(kind_of([&] { embed_into_free(R, 2, {col({"0", "x"}, R)}); }) == ErrorKind::NotTorsionfree);
    CHECK(kind_of([&] { FModule::parse({{"x", "y"}, {"x^2", "x*y"}}, R); }) == ErrorKind::NotTorsionfree);
}

TEST_CASE("order, generators and contractedness of modules")
{
    auto R = qxy();
    CHECK(order_module(sum({"x, y", "1"})) == 1);
    CHECK(order_module(FModule::free(R, 2)) == 0);
    CHECK(order_module(sum({"x^2, x*y, y^2", "1"})) == 2);

    CHECK(nu_module(sum({"x, y", "1"})) == 3);
    CHECK(is_contracted_module(sum({"x, y", "1"})));
    CHECK(nu_module(sum({"x^2, x*y, y^2", "1"})) == 4);
    CHECK(is_contracted_module(sum({"x^2, x*y, y^2", "1"})));
    CHECK(nu_module(FModule::free(R, 3)) == 3);
    CHECK(is_contracted_module(FModule::free(R, 3)));
    CHECK_FALSE(is_contracted_module(sum({"x^2, y^2", "1"})));
    CHECK(nu_module(FModule::parse({{"x", "0"}, {"y", "0"}, {"x", "0"}, {"0", "1"}}, R)) == 3);
}

TEST_CASE("generic Bourbaki ideals")
{
    auto R = qxy();
    auto a = generic_bourbaki_ideal(sum({"x, y", "1"}));
    auto inv = ideal_invariants(a.ideal);
    CHECK(inv.order == 1);
    CHECK(inv.nu == 2);
    CHECK(inv.closed);
    CHECK(ideal_equal(a.ideal, I("x, y", R)));
    CHECK(a.z.size() == 1);
    CHECK(a.z[0].size() == 3);

    CHECK(generic_bourbaki_ideal(FModule::free(R, 2)).ideal.is_unit());

    auto mm = generic_bourbaki_ideal(sum({"x, y", "x, y"}));
    CHECK(order_local(mm.ideal) == 2);
    CHECK(nu_local(mm.ideal) == 3);
    CHECK(is_contracted(mm.ideal));

    BourbakiOptions shortcut;
    shortcut.path = BourbakiPath::FittingShortcut;
    for (const auto& M : {sum({"x, y", "1"}), sum({"x, y", "x, y"}), sum({"x^3, x^2*y, y^2", "x, y"}),
                          FModule::parse({{"x", "y"}, {"y^2", "0"}, {"0", "x^2"}, {"x*y", "0"}}, R)}) {
        if (!is_contracted_module(M))
            continue;
        auto s = bourbaki_ideal(M, shortcut);
        auto q = bourbaki_ideal(M);
        CHECK(ideal_equal(s.ideal, q.ideal));
        // the corollary: Fitt_e is itself a generic Bourbaki ideal
        CHECK(ideal_equal(s.ideal, fitting_ideal(M, static_cast<long>(M.rank()))));
    }
    CHECK(kind_of([&] { bourbaki_ideal(sum({"x^2, y^2", "1"}), shortcut); }) == ErrorKind::NotContracted);

    BourbakiOptions symbolic;
    symbolic.symbolic = true;
    auto sym = bourbaki_ideal(sum({"x, y", "1"}), symbolic);
    CHECK(sym.ring.nvars() == 5);
    // z3 is a unit of the local ring R''
    CHECK(ideal_equal(saturate(sym.ideal, Polynomial::variable(sym.ring, "z3")), I("x, y", sym.ring)));
    CHECK(kind_of([&] { bourbaki_ideal(FModule::free(R, 4), symbolic); }) == ErrorKind::Unsupported);
}

TEST_CASE("integrally closed modules")
{
    auto R = qxy();
    CHECK(is_integrally_closed_module(sum({"x, y", "x, y"})));
    CHECK_FALSE(is_integrally_closed_module(FModule::parse({{"x^2", "0"}, {"y^2", "0"}, {"0", "1"}}, R)));
    CHECK(is_integrally_closed_module(FModule::free(R, 2)));
    CHECK(is_integrally_closed_module(sum({"x^3, x^2*y, y^2", "x^2, x*y, y^2"})));
    CHECK_FALSE(is_integrally_closed_module(sum({"x^3, y^2", "x, y"})));
    CHECK(is_integrally_closed_module(sum({"x^2, x*y, y^2"})));
}

TEST_CASE("transforms of modules and their Bourbaki ideals")
{
    auto R = qxy();
    auto chart = make_chart(R, QuadraticChart::Kind::Finite, 0);
    auto T = module_transform(sum({"x, y", "1"}), chart);
    CHECK(T.columns()[1][0] == parse_polynomial("x*t", chart.ring));
    CHECK(is_contracted_module(FModule::free(chart.ring, 2)));
    // xS + S is free, so only the embedding sees x
    CHECK(fitting_ideal(T, 2).is_unit());
    CHECK(ideal_equal(ideal_of_minors(chart.ring, T.columns(), 2, 2), I("x", chart.ring)));

    for (const auto& M : {sum({"x^3, x^2*y, y^2", "1"}), sum({"x^2, x*y, y^2", "1"}), sum({"x^2, y^3", "x, y"})}) {
        auto c3 = make_chart(R, QuadraticChart::Kind::Finite, 3);
        Ideal B = bourbaki_ideal(M).ideal;
        Ideal BT = bourbaki_ideal(module_transform(M, c3)).ideal;
        CHECK(ideal_equal(localize_at_origin(BT), localize_at_origin(quadratic_transform(B, c3))));
    }
}
