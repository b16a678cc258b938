#include "doctest.h"

#include "icl/error.hpp"
#include "icl/groebner/buchberger.hpp"
#include "icl/groebner/ideal.hpp"
#include "../support/generators.hpp"

using namespace icl;

namespace {

Ideal I(const char* gens, const RingContext& r)
{
    return Ideal::parse(gens, r);
}

Polynomial P(const char* s, const RingContext& r)
{
    return parse_polynomial(s, r);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(p.to_string());
    return out;
}

const MonomialOrder kOrders[] = {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elimination(1)};

} // namespace

TEST_CASE("reduced bases of small ideals")
{
    auto R = RingContext::parse("x,y/Q").with_order(MonomialOrder::lex());
    CHECK(strings(I("x^2 - y, y^2", R).groebner_basis()) == std::vector<std::string>{"y^2", "x^2 - y"});

    auto S = RingContext(std::vector<std::string>{"y", "x"}, Field::rationals(), MonomialOrder::lex());
    CHECK(strings(I("x^2 - y, y^2", S).groebner_basis()) == std::vector<std::string>{"x^4", "y - x^2"});

    CHECK(strings(I("1, x", R).groebner_basis()) == std::vector<std::string>{"1"});
    for (const auto& o : kOrders)
        CHECK(strings(I("x, y", R).groebner_basis(o)) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("normal form and membership")
{
    auto R = RingContext::parse("x,y/Q");
    CHECK(normal_form(P("x^2", R), I("x", R)).is_zero());
    auto L = R.with_order(MonomialOrder::lex());
    CHECK(normal_form(P("x + y", L), I("x - y", L)) == P("2*y", L));
    CHECK(normal_form(P("1", R), I("x, y", R)) == P("1", R));

    CHECK(ideal_member(P("x*y", R), I("x^2, x*y, y^2", R)));
    CHECK_FALSE(ideal_member(P("x*y", R), I("x^2, y^2", R)));
    CHECK(ideal_member(Polynomial(R), I("x^3 + y", R)));
}

TEST_CASE("intersection")
{
    auto R = RingContext::parse("x,y/Q");
    CHECK(ideal_equal(ideal_intersect(I("x", R), I("y", R)), I("x*y", R)));
    CHECK(ideal_equal(ideal_intersect(I("x^2, y", R), I("x", R)), I("x^2, x*y", R)));
    auto J = I("x^2 + y^3, x*y - 1", R);
    CHECK(ideal_equal(ideal_intersect(J, J), J));
}

TEST_CASE("quotient")
{
    auto R = RingContext::parse("x,y,t/Q");
    CHECK(ideal_equal(ideal_quotient(I("x^2", R), I("x", R)), I("x", R)));
    CHECK(ideal_quotient(I("x^2*t^2, x^2", R), I("x^2", R)).is_unit());
    CHECK(ideal_equal(ideal_quotient(I("x*y, y^2", R), I("y", R)), I("x, y", R)));
    CHECK(ideal_equal(saturate(I("x^3*y, x^2*y^2", R), P("x", R)), I("y", R)));
}

TEST_CASE("elimination")
{
    auto R = RingContext::parse("x,y,t/Q");
    CHECK(eliminate(I("y - x*t", R), {"t"}).is_zero());
    auto e = eliminate(I("y - x*t, t^2", R), {"t"});
    CHECK(e.ring().variables() == std::vector<std::string>{"x", "y"});
    CHECK(ideal_equal(e, I("y^2", e.ring())));
    CHECK(eliminate(I("1", R), {"t"}).is_unit());

    auto basis = buchberger(I("y - x*t", R).generators());
    CHECK_THROWS_AS(eliminate_with_basis(basis, {"t"}), Error);
    try {
        eliminate_with_basis(basis, {"t"});
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::OrderMismatch);
    }
}

TEST_CASE("dimension and colength")
{
    auto R = RingContext::parse("x,y/Q");
    CHECK(krull_dim(I("x, y", R)) == 0);
    CHECK(krull_dim(I("x", R)) == 1);
    CHECK(krull_dim(I("x^2, x*y", R)) == 1);
    CHECK(ideal_height(I("x^2, x*y", R)) == 1);
    try {
        krull_dim(I("1, x", R));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::UnitIdeal);
    }

    CHECK(colength_0dim(I("x, y", R)) == 1);
    CHECK(colength_0dim(I("x^2, y^2", R)) == 4);
    CHECK(colength_0dim(I("x^2, x*y, y^2", R)) == 3);
    CHECK(colength_0dim(I("x^2 - y, y^2", R)) == 4);
    try {
        colength_0dim(I("x^2", R));
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotZeroDimensional);
    }
}

TEST_CASE("sums, products and powers")
{
    auto R = RingContext::parse("x,y/Q");
    CHECK(ideal_equal(ideal_product(I("x", R), I("y", R)), I("x*y", R)));
    CHECK(ideal_equal(ideal_power(I("x, y", R), 2), I("x^2, x*y, y^2", R)));
    CHECK(ideal_power(I("x, y", R), 0).is_unit());
    auto J = I("x^3 - y, x*y", R);
    CHECK(ideal_equal(ideal_sum(J, Ideal(R)), J));
}

TEST_CASE("gcd and lcm of polynomials")
{
    auto R = RingContext::parse("x,y/Q");
    CHECK(polynomial_gcd(P("x^2 - y^2", R), P("x^2 + 2*x*y + y^2", R)) == P("x + y", R));
    CHECK(polynomial_lcm(P("x*y", R), P("x^2", R)) == P("x^2*y", R));
    CHECK(polynomial_gcd(P("x + 1", R), P("y", R)) == P("1", R));
}

TEST_CASE("over a prime field")
{
    auto R = RingContext::parse("x,y/Fp:7");
    CHECK(ideal_member(P("x^7 - x", R), I("x^7 - x, y", R)));
    CHECK(colength_0dim(I("x^2 + 3*y, y^2", R)) == 4);
}

TEST_CASE("budget is honored")
{
    auto R = RingContext::parse("x,y,z/Q");
    StepBudget budget(3);
    CHECK_THROWS_AS(buchberger(I("x + y + z, x*y + y*z + z*x, x*y*z - 1", R).generators()), Error);
}

TEST_CASE("properties on random ideals")
{
    Rng rng(20260101);
    for (int trial = 0; trial < 60; ++trial) {
        bool prime = trial % 2 == 1;
        auto base = RingContext::parse(prime ? "x,y,z/Fp:32003" : "x,y,z/Q");
        int terms = prime ? 3 : 2;
        std::vector<Polynomial> a, b;
        for (int i = 0; i < 2; ++i) {
            a.push_back(testing::random_nonzero_polynomial(base, rng, terms, 2));
            b.push_back(testing::random_nonzero_polynomial(base, rng, terms, 2));
        }
        Ideal IA(base, a), IB(base, b);
        auto f = testing::random_polynomial(base, rng, 3, 2);
        Polynomial in_a = f * a[0] + a[1];

        bool member = ideal_member(f, IA);
        for (const auto& o : kOrders) {
            const auto& gb = IA.groebner_basis(o);
            CHECK(is_groebner_basis(gb));
            for (const auto& g : a)
                CHECK(reduce(g.with_ring(gb.front().ring()), gb).is_zero());
            CHECK(reduce(in_a.with_ring(gb.front().ring()), gb).is_zero());
            CHECK(reduce(f.with_ring(gb.front().ring()), gb).is_zero() == member);
        }

        Ideal meet = ideal_intersect(IA, IB);
        CHECK(ideal_contains(IA, meet));
        CHECK(ideal_contains(IB, meet));
        CHECK(ideal_contains(meet, ideal_product(IA, IB)));

        Ideal q = ideal_quotient(IA, IB);
        CHECK(ideal_contains(IA, ideal_product(q, IB)));
    }
}
