#include "icl/verify/verify.hpp"

#include <chrono>

#include "icl/error.hpp"
#include "icl/monomial/monomial_ideal.hpp"
#include "icl/rlr2/rlr2.hpp"
#include "icl/util/rng.hpp"

namespace icl {

namespace {

class Stopwatch {
  public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

RingContext itoh_ring(std::size_t g)
{
    static const char* names[] = {"x", "y", "z"};
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < g; ++i)
        vars.push_back(g <= 3 ? names[i] : "x" + std::to_string(i + 1));
    return RingContext(vars, Field::rationals());
}

std::string ideal_text(const Ideal& I)
{
    std::string s = "(";
    for (std::size_t i = 0; i < I.generators().size(); ++i)
        s += (i ? ", " : "") + I.generators()[i].to_string();
    return s + ")";
}

/* A generator of A outside B, if any. */
std::optional<Polynomial> escapee(const Ideal& A, const Ideal& B)
{
    for (const auto& g : A.groebner_basis())
        if (!ideal_member(g.with_ring(B.ring()), B))
            return g.with_ring(B.ring());
    return std::nullopt;
}

void require_height_two(const Ideal& I)
{
    if (I.is_unit())
        raise(ErrorKind::UnitIdeal, "the unit ideal has no proper generic element");
    int h = ideal_height(I);
    if (h < 2)
        raise(ErrorKind::HeightTooSmall, ideal_text(I) + " has height " + std::to_string(h));
}

unsigned ideal_order(const Ideal& I)
{
    unsigned o = ~0u;
    for (const auto& g : I.generators())
        o = std::min(o, lowest_degree_form(g).first);
    return o;
}

Ideal closure_of(const Ideal& I, std::uint64_t seed)
{
    std::optional<MonomialIdeal> mono;
    try {
        mono = MonomialIdeal::from_ideal(I);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported)
            throw;
    }
    if (mono)
        return monomial_closure_power(*mono, 1).to_ideal();
    if (I.ring().nvars() != 2)
        raise(ErrorKind::Unsupported, "closures are available for monomial ideals and ideals of k[x,y]");
    ClosureOptions opt;
    opt.seed = seed;
    return integral_closure_2d(I, opt);
}

void for_each_monomial(std::size_t nvars, long max_degree, const std::function<void(const Monomial&)>& fn)
{
    std::vector<int> e(nvars, 0);
    for (long d = 0; d <= max_degree; ++d) {
        std::function<void(std::size_t, long)> place = [&](std::size_t i, long left) {
            if (i + 1 == nvars) {
                e[i] = static_cast<int>(left);
                fn(Monomial(std::span<const int>(e)));
                return;
            }
            for (long k = left; k >= 0; --k) {
                e[i] = static_cast<int>(k);
                place(i + 1, left - k);
            }
        };
        if (nvars == 0) {
            if (d == 0)
                fn(Monomial(std::size_t{0}));
            continue;
        }
        place(0, d);
    }
}

struct SeedOutcome {
    explicit SeedOutcome(Polynomial element) : x(std::move(element)) {}

    Polynomial x;
    std::uint64_t seed = 0;
    std::optional<Polynomial> uncertified; // closure generator without certificate
    std::optional<Polynomial> certified_outside;
    unsigned certificate_n = 0;
    std::size_t candidates = 0;
    unsigned max_n = 0;
};

} // namespace

std::vector<std::uint64_t> default_seeds(std::uint64_t seed)
{
    return {seed, Rng(seed).split().next()};
}

VerificationReport verify_itoh(const std::vector<int>& exponents, unsigned n_max)
{
    Stopwatch clock;
    if (exponents.empty())
        raise(ErrorKind::ArityMismatch, "a complete intersection needs at least one exponent");
    RingContext ring = itoh_ring(exponents.size());
    std::vector<ExpVec> gens;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 1)
            raise(ErrorKind::ArityMismatch, "exponents must be positive");
        ExpVec v(exponents.size(), 0);
        v[i] = exponents[i];
        gens.push_back(v);
    }
    MonomialIdeal I(ring, gens);

    VerificationReport r;
    r.theorem = "itoh-huneke";
    r.instance = "I = " + ideal_text(I.to_ideal());
    r.caps["n_max"] = n_max;

    Ideal bar = monomial_closure_power(I, 1).to_ideal();
    for (unsigned n = 0; n <= n_max; ++n) {
        Ideal In = n == 0 ? Ideal::unit(ring) : monomial_power(I, n).to_ideal();
        Ideal lhs = ideal_intersect(monomial_closure_power(I, n + 1).to_ideal(), In);
        Ideal rhs = ideal_product(bar, In);
        std::string tag = "n=" + std::to_string(n);
        if (auto f = escapee(lhs, rhs)) {
            r.verdict = Verdict::Fail;
            r.witness = Witness{f->to_string(),
                                {f->to_string() + " in closure(I^" + std::to_string(n + 1) + ") ∩ I^" +
                                     std::to_string(n),
                                 f->to_string() + " not in closure(I) I^" + std::to_string(n)}};
            r.notes.push_back(tag + ": left side not contained in right side");
            break;
        }
        if (auto f = escapee(rhs, lhs)) {
            r.verdict = Verdict::Fail;
            r.witness = Witness{f->to_string(),
                                {f->to_string() + " in closure(I) I^" + std::to_string(n),
                                 f->to_string() + " not in closure(I^" + std::to_string(n + 1) + ") ∩ I^" +
                                     std::to_string(n)}};
            r.notes.push_back(tag + ": right side not contained in left side");
            break;
        }
        r.notes.push_back(tag + ": equal, " + std::to_string(lhs.groebner_basis().size()) + " generators");
    }
    r.seconds = clock.seconds();
    return r;
}

VerificationReport verify_specialization(const Ideal& I, const std::vector<std::uint64_t>& seeds,
                                         const VerifyCaps& caps)
{
    Stopwatch clock;
    require_height_two(I);
    if (seeds.empty())
        raise(ErrorKind::ArityMismatch, "at least one seed is needed");
    const RingContext& ring = I.ring();
    Ideal bar = closure_of(I, seeds.front());
    long D = caps.degree_bound >= 0 ? caps.degree_bound : static_cast<long>(ideal_order(bar)) + kDegreeSlack;

    VerificationReport r;
    r.theorem = "specialization";
    r.instance = "I = " + ideal_text(I) + " in " + ring.to_string();
    r.caps["reduction_cap"] = caps.reduction_cap;
    r.caps["degree_bound"] = D;
    r.seeds = seeds;
    r.notes.push_back("closure(I) = " + ideal_text(Ideal(ring, bar.groebner_basis())));

    std::vector<SeedOutcome> outcomes;
    for (std::uint64_t seed : seeds) {
        GenericExtension ext = generic_element(I, GenericExtension::Mode::Random, seed);
        SeedOutcome o(ext.element);
        o.seed = seed;
        Ideal modulo(ring, {ext.element});
        for (const auto& g : bar.groebner_basis()) {
            Polynomial f = g.with_ring(ring);
            IntegralityResult cert = is_integral_element(f, I, modulo, caps.reduction_cap);
            if (!cert.integral) {
                o.uncertified = f;
                break;
            }
            o.max_n = std::max(o.max_n, cert.n);
        }
        Ideal outside = ideal_sum(bar.with_ring(ring), modulo);
        for_each_monomial(ring.nvars(), D, [&](const Monomial& m) {
            if (o.certified_outside)
                return;
            Polynomial f = Polynomial::monomial(ring, m);
            if (ideal_member(f, outside))
                return;
            ++o.candidates;
            IntegralityResult cert = is_integral_element(f, I, modulo, caps.reduction_cap);
            if (cert.integral) {
                o.certified_outside = f;
                o.certificate_n = cert.n;
            }
        });
        outcomes.push_back(std::move(o));
    }

    bool any_outside = false, all_outside = true;
    for (const auto& o : outcomes) {
        any_outside = any_outside || o.certified_outside.has_value();
        all_outside = all_outside && o.certified_outside.has_value();
    }
    if (any_outside && !all_outside)
        raise(ErrorKind::GenericityFailure, "seeds disagree on an integrality certificate outside closure(I) + (x) for " +
                                                ideal_text(I));

    for (const auto& o : outcomes) {
        std::string tag = "seed " + std::to_string(o.seed) + ": ";
        r.notes.push_back(tag + "x = " + o.x.to_string());
        if (o.uncertified)
            r.notes.push_back(tag + "no certificate for closure generator " + o.uncertified->to_string() +
                              " within the reduction cap");
        else
            r.notes.push_back(tag + "all closure generators certified modulo (x), reduction number <= " +
                              std::to_string(o.max_n));
        if (o.certified_outside)
            r.notes.push_back(tag + o.certified_outside->to_string() + " certified with n = " +
                              std::to_string(o.certificate_n));
        else
            r.notes.push_back(tag + std::to_string(o.candidates) + " candidates outside closure(I) + (x), none certified");
    }

    if (all_outside) {
        const auto& o = outcomes.front();
        r.verdict = Verdict::Fail;
        r.witness = Witness{o.certified_outside->to_string(),
                            {o.certified_outside->to_string() + " not in closure(I) + (x) for x = " + o.x.to_string(),
                             o.certified_outside->to_string() + " integral over I modulo (x) with n = " +
                                 std::to_string(o.certificate_n)}};
    } else {
        for (const auto& o : outcomes)
            if (o.uncertified)
                r.verdict = Verdict::Inconclusive;
    }
    r.seconds = clock.seconds();
    return r;
}

VerificationReport verify_radical(const Ideal& I, std::uint64_t seed, const VerifyCaps& caps,
                                  const std::optional<std::vector<Rational>>& draws)
{
    Stopwatch clock;
    require_height_two(I);
    const RingContext& ring = I.ring();
    Polynomial x(ring);
    std::vector<Rational> z;
    if (draws) {
        if (draws->size() != I.generators().size())
            raise(ErrorKind::ArityMismatch, "one draw per generator is needed");
        z = *draws;
        for (std::size_t i = 0; i < z.size(); ++i)
            x += I.generators()[i].scale(ring.field().normalize(z[i]));
        if (x.is_zero())
            raise(ErrorKind::ZeroPolynomial, "the draws give x = 0");
    } else {
        GenericExtension ext = generic_element(I, GenericExtension::Mode::Random, seed);
        x = ext.element;
        z = ext.draws;
    }

    VerificationReport r;
    r.theorem = "radical";
    r.instance = "I = " + ideal_text(I) + " in " + ring.to_string();
    r.caps["reduction_cap"] = caps.reduction_cap;
    if (!draws)
        r.seeds = {seed};
    std::string zs;
    for (std::size_t i = 0; i < z.size(); ++i)
        zs += (i ? ", " : "") + format_rational(z[i]);
    r.notes.push_back(std::string(draws ? "given" : "drawn") + " z = (" + zs + "), x = " + x.to_string());

    Polynomial g = x;
    for (std::size_t v = 0; v < ring.nvars() && !g.is_constant(); ++v)
        g = polynomial_gcd(g, x.derivative(v));
    if (g.is_constant()) {
        r.notes.push_back("trivial: x is squarefree, so sqrt((x)) = (x) lies in I");
        r.seconds = clock.seconds();
        return r;
    }
    Polynomial root = *exact_divide(x, g);
    if (root.is_constant())
        raise(ErrorKind::Unsupported, "x is a p-th power; its radical is not found by derivatives");
    r.notes.push_back("repeated part " + g.to_string() + ", sqrt((x)) = (" + root.to_string() + ")");
    IntegralityResult cert = is_integral_element(root, I, caps.reduction_cap);
    if (cert.integral) {
        r.notes.push_back(root.to_string() + " integral over I with n = " + std::to_string(cert.n));
    } else {
        r.verdict = Verdict::Inconclusive;
        r.notes.push_back("no certificate for " + root.to_string() + " within the reduction cap");
        r.notes.push_back("non-generic instance: these z are special for I, not a counterexample");
    }
    r.seconds = clock.seconds();
    return r;
}

Ideal sample_product_ideal(const RingContext& ring, std::uint64_t seed, std::size_t index)
{
    Rng rng(seed);
    for (std::size_t i = 0; i < index; ++i)
        rng = rng.split();
    int a = static_cast<int>(rng.uniform(1, 4));
    int b = static_cast<int>(rng.uniform(1, 4));
    std::vector<ExpVec> gens{{a, 0}, {0, b}};
    long mixed = rng.uniform(0, 2);
    for (long k = 0; k < mixed && a > 1 && b > 1; ++k)
        gens.push_back({static_cast<int>(rng.uniform(1, a - 1)), static_cast<int>(rng.uniform(1, b - 1))});
    Ideal I = MonomialIdeal(ring, gens).to_ideal();
    if (rng.uniform(0, 1) == 0)
        return I;
    // x -> x + c y^k keeps the base points rational
    long c = rng.nonzero(3);
    unsigned k = static_cast<unsigned>(rng.uniform(1, 2));
    Polynomial y = Polynomial::variable(ring, 1);
    std::vector<Polynomial> images{Polynomial::variable(ring, 0) + y.pow(k).scale(Rational(c)), y};
    std::vector<Polynomial> moved;
    for (const auto& f : I.generators())
        moved.push_back(ring_map_apply(f, images, ring));
    return Ideal(ring, std::move(moved));
}

VerificationReport verify_product_closure(std::size_t count, std::uint64_t seed, unsigned threads)
{
    Stopwatch clock;
    RingContext ring = RingContext::parse("x,y/Q");
    VerificationReport r;
    r.theorem = "product-closure";
    r.instance = std::to_string(count) + " pairs of m-primary ideals of " + ring.to_string();
    r.caps["count"] = static_cast<long>(count);
    r.seeds = {seed};

    ClosureOptions opt;
    opt.seed = seed;
    std::vector<std::function<VerificationReport()>> tasks;
    for (std::size_t i = 0; i < count; ++i)
        tasks.push_back([&, i] {
            Ideal I = sample_product_ideal(ring, seed, 2 * i);
            Ideal J = sample_product_ideal(ring, seed, 2 * i + 1);
            Ideal P = ideal_product(integral_closure_2d(I, opt), integral_closure_2d(J, opt));
            VerificationReport one;
            one.instance = "I = " + ideal_text(I) + ", J = " + ideal_text(J);
            if (is_integrally_closed_2d(P, opt)) {
                one.notes.push_back(one.instance + ": product closed");
                return one;
            }
            Ideal Pbar = integral_closure_2d(P, opt);
            Polynomial f = *escapee(Pbar, P);
            one.verdict = Verdict::Fail;
            one.witness = Witness{f.to_string(),
                                  {f.to_string() + " in the closure of closure(I) closure(J)",
                                   f.to_string() + " not in closure(I) closure(J)", one.instance}};
            one.notes.push_back(one.instance + ": product not closed");
            return one;
        });
    for (auto& one : run_campaign(tasks, threads)) {
        r.notes.push_back(one.notes.front());
        if (one.verdict == Verdict::Fail && r.verdict != Verdict::Fail) {
            r.verdict = Verdict::Fail;
            r.witness = one.witness;
        }
    }
    r.seconds = clock.seconds();
    return r;
}

} // namespace icl
