#include "doctest.h"

#include "icl/error.hpp"
#include "icl/monomial/monomial_ideal.hpp"
#include "icl/rees/rees.hpp"
#include "icl/rlr2/rlr2.hpp"
#include "icl/rlr2/univariate.hpp"
#include "../support/generators.hpp"
#include "../support/monomial_oracle.hpp"

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

UPoly U(const Field& k, std::vector<long> c)
{
    std::vector<Rational> q;
    for (long v : c)
        q.push_back(Rational(v));
    return UPoly(k, std::move(q));
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

TEST_CASE("rational roots by lifting")
{
    Field Q = Field::rationals();
    // (2t - 3)(t + 5)(t^2 + 1) t^2
    UPoly f = UPoly(Q, {Rational(-3), Rational(2)}) * U(Q, {5, 1}) * U(Q, {1, 0, 1}) * U(Q, {0, 0, 1});
    auto split = field_roots(f);
    REQUIRE(split.roots.size() == 3);
    CHECK(split.roots[0] == -5);
    CHECK(split.roots[1] == 0);
    CHECK(split.roots[2] == Rational(3, 2));
    CHECK(split.rest.degree() == 2);

    // large coefficients: (7919 t + 104729)(t - 1/3)
    UPoly g = UPoly(Q, {Rational(104729), Rational(7919)}) * UPoly(Q, {Rational(-1, 3), Rational(1)});
    auto sg = field_roots(g);
    REQUIRE(sg.roots.size() == 2);
    CHECK(sg.roots[0] == Rational(-104729, 7919));
    CHECK(sg.roots[1] == Rational(1, 3));
    CHECK(field_roots(U(Q, {-2, 0, 1})).roots.empty());
    CHECK(kind_of([&] { field_roots(UPoly(Q)); }) == ErrorKind::ZeroPolynomial);
}

TEST_CASE("roots over prime fields")
{
    Field F7 = Field::prime(7);
    auto s = field_roots(U(F7, {-2, 0, 1})); // t^2 - 2 = (t - 3)(t - 4)
    CHECK(s.roots == std::vector<Rational>{Rational(3), Rational(4)});
    CHECK(field_roots(U(F7, {1, 0, 1})).rest.degree() == 2);

    Field F = Field::prime(65537);
    UPoly f = U(F, {-10, 1}) * U(F, {-200, 1}) * U(F, {-3000, 1}) * U(F, {3, 0, 1}) * U(F, {-10, 1});
    auto sf = field_roots(f);
    CHECK(sf.roots == std::vector<Rational>{Rational(10), Rational(200), Rational(3000)});
    CHECK(sf.rest.degree() == (field_roots(U(F, {3, 0, 1})).roots.empty() ? 2 : 0));
}

TEST_CASE("order, generators and contractedness")
{
    auto R = qxy();
    CHECK(order_local(I("x^2 + y^5, y^3", R)) == 2);
    CHECK(order_local(I("x^2, y^3", R)) == 2);
    CHECK(order_local(maximal_ideal_power(R, 4)) == 4);
    CHECK(kind_of([&] { order_local(Ideal(R)); }) == ErrorKind::ZeroIdeal);

    CHECK(nu_local(I("x, y", R)) == 2);
    CHECK(nu_local(I("x^2, x*y, y^2", R)) == 3);
    CHECK(nu_local(I("x^2, y^2", R)) == 2);
    CHECK(kind_of([&] { nu_local(I("x^2", R)); }) == ErrorKind::NotMPrimary);

    CHECK(is_contracted(maximal_ideal_power(R, 2)));
    CHECK_FALSE(is_contracted(I("x^2, y^2", R)));
    CHECK(is_contracted(I("x, y", R)));
    CHECK(certify_local(I("x^2, y^3", R)).certified_power >= 3);
    CHECK(kind_of([&] { certify_local(I("x", RingContext::parse("x/Q"))); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("quadratic transforms and contraction")
{
    auto R = qxy();
    auto fx = make_chart(R, QuadraticChart::Kind::Finite, 0);
    auto fy = make_chart(R, QuadraticChart::Kind::Infinity, 0);
    CHECK(fx.ring.variables() == std::vector<std::string>{"x", "t"});
    CHECK(fy.ring.variables() == std::vector<std::string>{"y", "s"});

    CHECK(quadratic_transform(maximal_ideal_power(R, 2), fx).is_unit());
    CHECK(quadratic_transform(I("x^2, y^2", R), fx).is_unit());
    CHECK(quadratic_transform(I("x^2, y^3", R), fx).is_unit());
    CHECK(ideal_equal(quadratic_transform(I("x^2, y^3", R), fy), I("s^2, y", fy.ring)));
    CHECK(ideal_equal(quadratic_transform(I("x^3, y^2", R), fx), I("x, t^2", fx.ring)));

    CHECK(ideal_equal(contract_back(I("x^2", fx.ring), fx), maximal_ideal_power(R, 2)));
    CHECK(contract_back(Ideal::unit(fx.ring), fx).is_unit());
    CHECK(ideal_equal(contract_back(I("x", fx.ring), fx), I("x, y", R)));

    // I = contract_back(a^o * transform) exactly when I is contracted
    const char* suite[] = {"x^2, x*y, y^2", "x^2, y^2", "x^3, x^2*y, y^2", "x^2 + y^3, x*y^2, y^4", "x, y^3"};
    for (const char* g : suite) {
        Ideal J = I(g, R);
        auto chart = make_chart(R, QuadraticChart::Kind::Finite, 3);
        Polynomial a2 = Polynomial::variable(chart.ring, 0).pow(order_local(J));
        Ideal back = contract_back(ideal_product(Ideal(chart.ring, {a2}), quadratic_transform(J, chart)), chart);
        CHECK(ideal_contains(back, J));
        CHECK(ideal_equal(back, J) == is_contracted(J));
    }
}

TEST_CASE("base points")
{
    auto R = qxy();
    CHECK(base_points(maximal_ideal_power(R, 2)).empty());

    auto p = base_points(I("x^2, y^3", R));
    REQUIRE(p.size() == 1);
    CHECK(p[0].chart.kind == QuadraticChart::Kind::Infinity);
    CHECK(ideal_equal(p[0].transform, I("s^2, y", p[0].chart.ring)));

    auto q = base_points(I("x^3, y^2", R));
    REQUIRE(q.size() == 1);
    CHECK(q[0].chart.kind == QuadraticChart::Kind::Finite);
    CHECK(q[0].chart.point == 0);
    CHECK(ideal_equal(q[0].transform, I("x, t^2", q[0].chart.ring)));

    // (y - x)(y + 2x) cuts two tangent directions t = 1 and t = -2
    auto two = base_points(I("y^2 + x*y - 2*x^2, x^3, y^3", R));
    REQUIRE(two.size() == 2);
    CHECK(two[0].chart.point == -2);
    CHECK(two[1].chart.point == 1);
    for (const auto& b : two)
        CHECK(colength_0dim(b.local) == 1);

    CHECK(kind_of([&] { base_points(I("y^2 - 2*x^2, x^3, y^3", R)); }) == ErrorKind::NonRationalBasePoint);
    auto F7 = RingContext::parse("x,y/Fp:7");
    CHECK(base_points(I("y^2 - 2*x^2, x^3, y^3", F7)).size() == 2);
    CHECK(kind_of([&] { base_points(I("x^2", R)); }) == ErrorKind::NotMPrimary);
}

TEST_CASE("closure and closedness on small examples")
{
    auto R = qxy();
    CHECK(ideal_equal(integral_closure_2d(I("x^2, y^2", R)), I("x^2, x*y, y^2", R)));
    CHECK(ideal_equal(integral_closure_2d(I("x^3, y^2", R)), I("x^3, x^2*y, y^2", R)));
    CHECK(ideal_equal(integral_closure_2d(maximal_ideal_power(R, 3)), maximal_ideal_power(R, 3)));

    CHECK(is_integrally_closed_2d(maximal_ideal_power(R, 2)));
    CHECK_FALSE(is_integrally_closed_2d(I("x^2, y^2", R)));
    CHECK(is_integrally_closed_2d(I("x^3, x^2*y, y^2", R)));

    ClosureOptions traced;
    traced.trace = true;
    auto report = integral_closure_2d_report(I("x^5, y^3", R), traced);
    CHECK(report.tree.multiplicity == 15);
    REQUIRE_FALSE(report.tree.children.empty());
    CHECK(report.tree.children[0].multiplicity < 15);
    CHECK(ideal_equal(report.closure, monomial_closure_power(MonomialIdeal::from_ideal(I("x^5, y^3", R)), 1).to_ideal()));
}

TEST_CASE("non-monomial closures are integral over the input")
{
    auto R = qxy();
    const char* suite[] = {"x^2 - y^3, x*y^2, y^5", "y^2 + x^3, x^4, x*y^2", "x^3 - x*y^2, x^2*y^2, x^5, y^5",
                           "x^2 + 2*x*y + y^2, y^4"};
    for (const char* g : suite) {
        Ideal J = I(g, R);
        Ideal cl = integral_closure_2d(J);
        CHECK(ideal_contains(cl, J));
        CHECK(order_local(cl) == order_local(J));
        CHECK(is_integrally_closed_2d(cl));
        CHECK(ideal_equal(integral_closure_2d(cl), cl));
        for (const auto& f : cl.generators())
            CHECK(is_integral_element(f, J, 4).integral);
    }
}

TEST_CASE("monomial ideals agree with the Newton polyhedron")
{
    auto R = qxy();
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        auto gens = testing::random_exponents(rng, 2, 3, 5);
        gens.push_back({static_cast<int>(rng.uniform(1, 6)), 0});
        gens.push_back({0, static_cast<int>(rng.uniform(1, 6))});
        MonomialIdeal M(R, gens);
        if (M.is_unit())
            continue;
        Ideal J = M.to_ideal();
        testing::PowerOracle oracle(M.gens(), 1);
        MonomialIdeal expected(R, oracle.closure(12));
        ClosureOptions opt;
        opt.seed = static_cast<std::uint64_t>(trial) + 1;
        CHECK(ideal_equal(integral_closure_2d(J, opt), expected.to_ideal()));
        CHECK(is_integrally_closed_2d(J, opt) == (expected == M));
    }
}

TEST_CASE("products of closed ideals are closed")
{
    auto R = qxy();
    Ideal A = integral_closure_2d(I("x^3, y^2", R));
    Ideal B = integral_closure_2d(I("x^2 - y^3, x*y^2, y^5", R));
    CHECK(is_integrally_closed_2d(ideal_product(A, B)));
}
