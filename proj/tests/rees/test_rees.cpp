#include "doctest.h"

#include "icl/error.hpp"
#include "icl/monomial/monomial_ideal.hpp"
#include "icl/rees/rees.hpp"
#include "../support/generators.hpp"

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

Polynomial P(const char* s, const RingContext& r)
{
    return parse_polynomial(s, r);
}

/* Substitute T_i -> a_i * t into a relation and check it vanishes. */
bool vanishes_on_rees(const Polynomial& rel, const Ideal& I)
{
    const RingContext& pres = rel.ring();
    std::vector<std::string> vars = I.ring().variables();
    vars.push_back("t");
    RingContext target(vars, I.ring().field());
    Polynomial t = Polynomial::variable(target, vars.size() - 1);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < pres.nvars(); ++i) {
        if (i < I.ring().nvars())
            images.push_back(Polynomial::variable(target, i));
        else
            images.push_back(embed_by_name(I.generators()[i - I.ring().nvars()], target) * t);
    }
    return ring_map_apply(rel, images, target).is_zero();
}

} // namespace

TEST_CASE("Rees presentations")
{
    auto R = qxy();
    auto m = I("x, y", R);
    auto K = rees_presentation(m);
    CHECK(K.ring().variables() == std::vector<std::string>{"x", "y", "T1", "T2"});
    CHECK(ideal_equal(K, I("y*T1 - x*T2", K.ring())));

    CHECK(rees_presentation(I("x", R)).is_zero());

    auto sq = I("x^2, x*y, y^2", R);
    auto K2 = rees_presentation(sq);
    CHECK(ideal_member(P("T1*T3 - T2^2", K2.ring()), K2));
    for (const auto& g : K2.generators())
        CHECK(vanishes_on_rees(g, sq));
}

TEST_CASE("reductions")
{
    auto R = qxy();
    auto r = is_reduction(I("x^2, y^2", R), I("x^2, x*y, y^2", R));
    CHECK(r.found);
    CHECK(r.n == 1);
    CHECK(r.to_string() == "Yes(1)");
    CHECK(is_reduction(I("x^2, y", R), I("x^2, y", R)).n == 0);
    auto no = is_reduction(I("x^2", R), I("x^2, y^2", R), 4);
    CHECK_FALSE(no.found);
    CHECK(no.to_string() == "NoUpTo(4)");
    try {
        is_reduction(I("x", R), I("x^2, y", R));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSubideal);
    }
}

TEST_CASE("integral dependence certificates")
{
    auto R = qxy();
    auto a = is_integral_element(P("x*y", R), I("x^2, y^2", R));
    CHECK(a.integral);
    CHECK(a.n == 1);
    CHECK(is_integral_element(P("x^2 + y^2", R), I("x^2, y^2", R)).n == 0);
    auto b = is_integral_element(P("x", R), I("x^2, y^2", R), 3);
    CHECK_FALSE(b.integral);
    CHECK(b.to_string() == "UnknownUpTo(3)");
    // modulo y: x^2 is integral over (x^3) + (y)? no; x^3 is.
    CHECK(is_integral_element(P("x^3 + y", R), I("x^3", R), I("y", R), 2).integral);
}

TEST_CASE("multiplicity of m-primary ideals")
{
    auto R = qxy();
    CHECK(multiplicity_2d(I("x, y", R), 3, 1) == 1);
    CHECK(multiplicity_2d(I("x^2, y^2", R), 3, 1) == 4);
    CHECK(multiplicity_2d(I("x^2, x*y, y^2", R), 3, 1) == 4);
    CHECK(multiplicity_2d(I("x^3, y^2", R), 3, 1) == 6);
    CHECK(multiplicity_2d(I("x^2 - y^3, x*y", R), 3, 1) == 5);
    try {
        multiplicity_2d(I("x^2", R), 3, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMPrimary);
    }
    try {
        multiplicity_2d(I("x - 1, y", R), 3, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMPrimary);
    }
}

TEST_CASE("local length ignores points away from the origin")
{
    auto R = qxy();
    // V = {(0,0), (1,0)}: only the origin counts.
    CHECK(local_length_at_origin(I("x^2 - x, y", R), 10) == 1);
    CHECK(local_length_at_origin(I("x^3 - x^2, y", R), 10) == 2);
    CHECK_FALSE(local_length_at_origin(I("x*y", R), 10).has_value());
}

TEST_CASE("generic elements")
{
    auto R = qxy();
    auto s = generic_element(I("x^2, y^2", R), GenericExtension::Mode::Symbolic, 0);
    CHECK(s.ring.variables() == std::vector<std::string>{"x", "y", "z1", "z2"});
    CHECK(s.element == P("z1*x^2 + z2*y^2", s.ring));

    auto s3 = generic_element(I("x, y, z", RingContext::parse("x,y,z/Q")), GenericExtension::Mode::Symbolic, 0);
    CHECK(s3.ring.nvars() == 6);
    CHECK(s3.element.to_string() == "x*z1 + y*z2 + z*z3");

    auto r1 = generic_element(I("x^2, y^2", R), GenericExtension::Mode::Random, 5);
    auto r2 = generic_element(I("x^2, y^2", R), GenericExtension::Mode::Random, 5);
    CHECK(r1.element == r2.element);
    CHECK(r1.draws.size() == 2);
    CHECK(r1.element == P("x^2", R).scale(r1.draws[0]) + P("y^2", R).scale(r1.draws[1]));
    CHECK_THROWS_AS(generic_element(Ideal(R), GenericExtension::Mode::Random, 1), Error);
}

TEST_CASE("integral certificates are sound for monomial data")
{
    auto R = qxy();
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        MonomialIdeal M(R, testing::random_exponents(rng, 2, 3, 4));
        if (M.is_unit())
            continue;
        auto closure = monomial_closure_power(M, 1);
        Ideal J = M.to_ideal();
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                ExpVec v{a, b};
                auto res = is_integral_element(Polynomial::monomial(R, Monomial(std::span<const int>(v))), J, 3);
                if (res.integral)
                    CHECK(closure.contains(v));
            }
    }
}

TEST_CASE("multiplicity is seed independent and reductions persist")
{
    auto R = qxy();
    const char* suite[] = {"x^2, y^3", "x^3, x*y, y^4", "x^2 + y^3, y^2", "x^4, x^2*y, y^2", "x, y^5"};
    for (const char* g : suite) {
        auto J = I(g, R);
        long e = multiplicity_2d(J, 3, 1);
        CHECK(multiplicity_2d(J, 3, 2) == e);
        CHECK(multiplicity_2d(J, 3, 3) == e);
    }
    auto U = I("x^2, y^2", R), M = I("x^2, x*y, y^2", R), K = I("x, y^2", R);
    CHECK(is_reduction(ideal_product(U, K), ideal_product(M, K)).found);
}
