#include "doctest.h"

#include "icl/error.hpp"
#include "icl/poly/polynomial.hpp"
#include "../support/generators.hpp"

using namespace icl;

namespace {

RingContext qxy()
{
    return RingContext::parse("x,y/Q");
}

Polynomial P(const char* s, const RingContext& r)
{
    return parse_polynomial(s, r);
}

std::vector<int> exps(const Term& t)
{
    return t.mono.exponents();
}

} // namespace

TEST_CASE("parse reads terms, coefficients and the zero polynomial")
{
    auto R = qxy();
    auto f = P("x^2 + y^2", R);
    REQUIRE(f.size() == 2);
    CHECK(exps(f.terms()[0]) == std::vector<int>{2, 0});
    CHECK(exps(f.terms()[1]) == std::vector<int>{0, 2});
    CHECK(f.terms()[0].coeff == 1);

    CHECK(P("0", R).is_zero());

    auto g = P("3/2*x*y - x*y", R);
    REQUIRE(g.size() == 1);
    CHECK(exps(g.terms()[0]) == std::vector<int>{1, 1});
    CHECK(g.terms()[0].coeff == Rational(1, 2));

    CHECK(P("x y", R) == P("x*y", R));
    CHECK(P(" - 2 x ^ 3 +y", R).to_string() == "-2*x^3 + y");
}

TEST_CASE("parse errors carry their kind")
{
    auto R = qxy();
    auto kind_of = [&](const char* s) {
        try {
            (void)P(s, R);
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("no error for " << s);
        return ErrorKind::Unsupported;
    };
    CHECK(kind_of("x + z") == ErrorKind::UnknownVariable);
    CHECK(kind_of("x +") == ErrorKind::SyntaxError);
    CHECK(kind_of("x^") == ErrorKind::SyntaxError);
    CHECK(kind_of("1/0*x") == ErrorKind::BadCoefficient);
    CHECK(kind_of("(x+y)") == ErrorKind::SyntaxError);
}

TEST_CASE("printing is descending in the ring order")
{
    auto R = qxy();
    CHECK(P("y + x^2 + 1 + x*y", R).to_string() == "x^2 + x*y + y + 1");
    auto L = RingContext(std::vector<std::string>{"x", "y"}, Field::rationals(), MonomialOrder::lex());
    CHECK(P("y^5 + x", L).to_string() == "x + y^5");
}

TEST_CASE("prime field coefficients")
{
    auto R = RingContext::parse("x,y/Fp:7");
    auto f = P("8*x + 1/2*y", R);
    CHECK(f.to_string() == "x + 4*y");
    CHECK((f * P("2", R)).to_string() == "2*x + y");
    CHECK_THROWS_AS(RingContext::parse("x/Fp:8"), Error);
}

TEST_CASE("lowest_degree_form")
{
    auto R = qxy();
    auto [o1, f1] = lowest_degree_form(P("x^2 + y^3", R));
    CHECK(o1 == 2);
    CHECK(f1 == P("x^2", R));
    auto [o2, f2] = lowest_degree_form(P("x + y + x^2*y", R));
    CHECK(o2 == 1);
    CHECK(f2 == P("x + y", R));
    auto [o3, f3] = lowest_degree_form(P("x + y", R).pow(2));
    CHECK(o3 == 2);
    CHECK(f3 == P("x^2 + 2*x*y + y^2", R));
    CHECK_THROWS_AS(lowest_degree_form(P("0", R)), Error);
}

TEST_CASE("ring_map_apply")
{
    auto R = qxy();
    auto S = RingContext::parse("x,t/Q");
    std::map<std::string, Polynomial> chart{{"x", P("x", S)}, {"y", P("x*t", S)}};
    CHECK(ring_map_apply(P("y^2", R), chart, S) == P("x^2*t^2", S));

    std::map<std::string, Polynomial> id{{"x", P("x", R)}, {"y", P("y", R)}};
    CHECK(ring_map_apply(P("x^2+y^2", R), id, R) == P("x^2+y^2", R));

    auto Z = RingContext::parse("x,y,z1,z2/Q");
    std::map<std::string, Polynomial> images{
        {"x", P("x", R)}, {"y", P("y", R)}, {"z1", P("1", R)}, {"z2", P("-1", R)}};
    CHECK(ring_map_apply(P("z1*x^2 + z2*y^2", Z), images, R) == P("x^2 - y^2", R));

    std::map<std::string, Polynomial> partial{{"x", P("x", R)}};
    CHECK_THROWS_AS(ring_map_apply(P("x", R), partial, R), Error);
}

TEST_CASE("exact_divide")
{
    auto S = RingContext::parse("x,t/Q");
    auto q = exact_divide(P("x^2*t^2", S), P("x^2", S));
    REQUIRE(q);
    CHECK(*q == P("t^2", S));
    CHECK_FALSE(exact_divide(P("x^2 + t^2", S), P("x", S)));
    auto z = exact_divide(P("0", S), P("x", S));
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_THROWS_AS(exact_divide(P("x", S), P("0", S)), Error);
    auto big = P("x^3 - t^3", S);
    auto d = exact_divide(big, P("x - t", S));
    REQUIRE(d);
    CHECK(*d == P("x^2 + x*t + t^2", S));
}

TEST_CASE("arithmetic laws on random polynomials")
{
    auto R = RingContext::parse("x,y,z/Q");
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        auto f = testing::random_polynomial(R, rng);
        auto g = testing::random_polynomial(R, rng);
        auto h = testing::random_polynomial(R, rng);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * Polynomial::constant(R, 1) == f);
        CHECK(f - f == Polynomial(R));
        CHECK(parse_polynomial(f.to_string(), R) == f);
    }
}

TEST_CASE("order is additive under products")
{
    auto R = RingContext::parse("x,y/Q");
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        auto f = testing::random_nonzero_polynomial(R, rng);
        auto g = testing::random_nonzero_polynomial(R, rng);
        CHECK(lowest_degree_form(f * g).first == lowest_degree_form(f).first + lowest_degree_form(g).first);
    }
}

TEST_CASE("ring maps compose")
{
    auto R = RingContext::parse("x,y/Q");
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        std::vector<Polynomial> sigma{testing::random_polynomial(R, rng, 3, 2), testing::random_polynomial(R, rng, 3, 2)};
        std::vector<Polynomial> tau{testing::random_polynomial(R, rng, 3, 2), testing::random_polynomial(R, rng, 3, 2)};
        auto f = testing::random_polynomial(R, rng, 3, 2);
        std::vector<Polynomial> composed{ring_map_apply(sigma[0], tau, R), ring_map_apply(sigma[1], tau, R)};
        CHECK(ring_map_apply(ring_map_apply(f, sigma, R), tau, R) == ring_map_apply(f, composed, R));
    }
}
