#include "doctest.h"

#include <set>

#include "icl/error.hpp"
#include "icl/monomial/monomial_ideal.hpp"
#include "icl/rlr2/rlr2.hpp"
#include "icl/verify/verify.hpp"
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

bool has_note(const VerificationReport& r, const std::string& needle)
{
    for (const auto& n : r.notes)
        if (n.find(needle) != std::string::npos)
            return true;
    return false;
}

// closure(I^{n+1}) ∩ I^n against closure(I) I^n for I = (x^a, y^b), as
// monomial sets in a box, straight from the definitions
bool itoh_by_counting(int a, int b, int n)
{
    const int box = (n + 2) * std::max(a, b) + 2;
    auto in_power = [&](int i, int j, int k) { return i / a + j / b >= k; };
    auto in_closure = [&](int i, int j, int k) { return i * b + j * a >= k * a * b; };
    std::set<std::pair<int, int>> left, right;
    for (int i = 0; i <= box; ++i)
        for (int j = 0; j <= box; ++j)
            if (in_closure(i, j, n + 1) && in_power(i, j, n))
                left.insert({i, j});
    for (int i = 0; i <= box; ++i)
        for (int j = 0; j <= box; ++j)
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q)
                    if (in_closure(p, q, 1) && in_power(i - p, j - q, n)) {
                        right.insert({i, j});
                        p = i;
                        break;
                    }
    return left == right;
}

} // namespace

TEST_CASE("Itoh-Huneke on monomial complete intersections")
{
    for (auto [a, b, n] : {std::tuple{2, 2, 3}, std::tuple{2, 3, 4}, std::tuple{1, 4, 2}, std::tuple{3, 5, 2}})
        CHECK(itoh_by_counting(a, b, n));

    auto r = verify_itoh({2, 2}, 3);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.notes.size() == 4);
    CHECK(r.caps.at("n_max") == 3);
    CHECK(verify_itoh({2, 3}, 4).verdict == Verdict::Pass);
    CHECK(verify_itoh({1}, 2).verdict == Verdict::Pass);
    CHECK(verify_itoh({1, 2, 2}, 1).verdict == Verdict::Pass);
    // n = 0 compares closure(I) with itself
    CHECK(verify_itoh({3, 4}, 0).notes.front().starts_with("n=0: equal"));
    CHECK_THROWS_AS(verify_itoh({}, 1), Error);
}

TEST_CASE("specialization by a generic element")
{
    auto R = qxy();
    for (const char* gens : {"x^2, y^2", "x, y", "x^2, x*y, y^2", "x^2, y^3"}) {
        auto r = verify_specialization(I(gens, R), default_seeds(1));
        CHECK_MESSAGE(r.verdict == Verdict::Pass, gens);
        CHECK(r.seeds.size() == 2);
        CHECK(r.caps.at("reduction_cap") == 6);
        CHECK(has_note(r, "none certified"));
    }
    auto r = verify_specialization(I("x^2, y^2", R), default_seeds(5));
    CHECK(r.caps.at("degree_bound") == 8);
    CHECK(has_note(r, "closure(I) = (y^2, x*y, x^2)"));

    // deformed, closure from base points
    auto d = verify_specialization(I("x^2 + y^3, y^2", R), {3});
    CHECK(d.verdict == Verdict::Pass);

    auto T = RingContext::parse("x,y,z/Q");
    CHECK(verify_specialization(I("x^2, y^2, z^3", T), {1}).verdict == Verdict::Pass);

    try {
        verify_specialization(I("x^2, x*y", R), {1});
        FAIL("height one accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HeightTooSmall);
    }
}

TEST_CASE("radical of a generic element")
{
    auto R = qxy();
    auto r = verify_radical(I("x^2, x*y, y^2", R), 7);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(has_note(r, "trivial"));
    CHECK(verify_radical(I("x, y", R), 2).verdict == Verdict::Pass);

    // z = (1, 2, 1) gives x = (x + y)^2, which is special
    auto e = verify_radical(I("x^2, x*y, y^2", R), 0, {}, std::vector<Rational>{1, 2, 1});
    CHECK(e.verdict == Verdict::Inconclusive);
    CHECK(has_note(e, "sqrt((x)) = (x + y)"));
    CHECK(has_note(e, "non-generic"));
    CHECK(e.seeds.empty());

}

TEST_CASE("products of closed ideals")
{
    auto R = qxy();
    // closure(x^2, y^2) closure(x^3, y^2) against the integer criterion
    Ideal A = integral_closure_2d(I("x^2, y^2", R));
    Ideal B = integral_closure_2d(I("x^3, y^2", R));
    Ideal P = ideal_product(A, B);
    CHECK(is_integrally_closed_2d(P));
    std::vector<std::vector<int>> gens;
    for (const auto& g : P.groebner_basis())
        gens.push_back(g.leading_monomial().exponents());
    testing::PowerOracle oracle(gens, 1);
    auto closed = oracle.closure(8);
    CHECK(MonomialIdeal(R, closed) == MonomialIdeal::from_ideal(P));
    CHECK(is_integrally_closed_2d(ideal_product(maximal_ideal_power(R, 2), maximal_ideal_power(R, 3))));

    for (std::size_t i = 0; i < 12; ++i) {
        Ideal J = sample_product_ideal(R, 9, i);
        CHECK_NOTHROW(certify_local(J));
    }
    auto r = verify_product_closure(6, 4, 2);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.notes.size() == 6);
    CHECK(r == verify_product_closure(6, 4, 1));
}

TEST_CASE("reports round-trip through JSON")
{
    auto r = verify_specialization(I("x^2, y^3", qxy()), default_seeds(2));
    r.seconds = 1.5;
    auto text = r.to_json().dump();
    CHECK(text.find("seconds") == std::string::npos);
    auto back = VerificationReport::from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(back.seconds == 0);
    CHECK(VerificationReport::from_json(nlohmann::json::parse(r.to_json(true).dump())).seconds == 1.5);

    VerificationReport f;
    f.theorem = "itoh-huneke";
    f.instance = "made up";
    f.verdict = Verdict::Fail;
    f.witness = Witness{"x*y", {"x*y in A", "x*y not in B"}};
    f.caps["n_max"] = 2;
    f.seeds = {18446744073709551615ull};
    CHECK(VerificationReport::from_json(nlohmann::json::parse(f.to_json().dump())) == f);

    auto error_at = [](nlohmann::json j) {
        try {
            VerificationReport::from_json(j);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SchemaError);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    auto j = nlohmann::json::parse(f.to_json().dump());
    auto missing = j;
    missing.erase("verdict");
    CHECK(error_at(missing).find("/verdict") != std::string::npos);
    auto bad_cap = j;
    bad_cap["caps"]["n_max"] = "two";
    CHECK(error_at(bad_cap).find("/caps/n_max") != std::string::npos);
    auto no_witness = j;
    no_witness["witness"] = nullptr;
    CHECK(error_at(no_witness).find("/witness") != std::string::npos);
}

TEST_CASE("campaigns keep task order and exit codes")
{
    std::vector<std::function<VerificationReport()>> tasks;
    for (int i = 0; i < 9; ++i)
        tasks.push_back([i] { return verify_itoh({1 + i % 3, 2}, 1); });
    auto reports = run_campaign(tasks, 4);
    REQUIRE(reports.size() == 9);
    for (int i = 0; i < 9; ++i)
        CHECK(reports[static_cast<std::size_t>(i)] == verify_itoh({1 + i % 3, 2}, 1));
    CHECK(exit_code(reports) == 0);

    reports[3].verdict = Verdict::Inconclusive;
    CHECK(exit_code(reports) == 2);
    reports[5].verdict = Verdict::Fail;
    CHECK(exit_code(reports) == 1);

    tasks.push_back([]() -> VerificationReport { raise(ErrorKind::HeightTooSmall, "boom"); });
    CHECK_THROWS_AS(run_campaign(tasks, 3), Error);
}
