#include "icl/rees/rees.hpp"

#include <algorithm>
#include <limits>

#include "icl/error.hpp"
#include "icl/util/rng.hpp"

namespace icl {

namespace {

/* Same ideal, generated by its reduced basis; keeps repeated products small. */
Ideal compact(const Ideal& I)
{
    const auto& gb = I.groebner_basis();
    if (gb.size() >= I.generators().size())
        return I;
    return Ideal(I.ring(), gb);
}

Ideal maximal_ideal(const RingContext& ring)
{
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars));
}

} // namespace

std::vector<std::string> fresh_names(const RingContext& ring, const std::string& stem, std::size_t n)
{
    std::string base = stem;
    for (;;) {
        std::vector<std::string> out;
        bool clash = false;
        for (std::size_t i = 1; i <= n; ++i) {
            out.push_back(base + std::to_string(i));
            clash = clash || ring.index_of(out.back()).has_value();
        }
        if (!clash)
            return out;
        base += "_";
    }
}

Ideal rees_presentation(const Ideal& I)
{
    const RingContext& ring = I.ring();
    const std::size_t n = I.generators().size();
    auto T = fresh_names(ring, "T", n);
    std::vector<std::string> vars = ring.variables();
    vars.insert(vars.end(), T.begin(), T.end());
    RingContext target(vars, ring.field());
    vars.push_back("@t");
    RingContext big(vars, ring.field());

    Polynomial t = Polynomial::variable(big, big.nvars() - 1);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(big, ring.nvars() + i) - embed_by_name(I.generators()[i], big) * t);
    Ideal kernel = eliminate(Ideal(big, std::move(gens)), {"@t"});
    std::vector<Polynomial> out;
    for (const auto& g : kernel.generators())
        out.push_back(embed_by_name(g, target));
    return Ideal(target, std::move(out));
}

std::string ReductionResult::to_string() const
{
    return found ? "Yes(" + std::to_string(n) + ")" : "NoUpTo(" + std::to_string(cap) + ")";
}

std::string IntegralityResult::to_string() const
{
    return integral ? "Integral(" + std::to_string(n) + ")" : "UnknownUpTo(" + std::to_string(cap) + ")";
}

ReductionResult is_reduction(const Ideal& U, const Ideal& I, unsigned cap)
{
    if (!ideal_contains(I, U))
        raise(ErrorKind::NotSubideal, U.to_string() + " is not contained in " + I.to_string());
    Ideal Uc = U.with_ring(I.ring());
    Ideal power = Ideal::unit(I.ring());
    for (unsigned n = 0; n <= cap; ++n) {
        Ideal next = compact(ideal_product(power, I));
        if (ideal_contains(ideal_product(Uc, power), next))
            return ReductionResult{true, n, cap};
        power = next;
    }
    return ReductionResult{false, 0, cap};
}

IntegralityResult is_integral_element(const Polynomial& f, const Ideal& I, unsigned cap)
{
    return is_integral_element(f, I, Ideal(I.ring()), cap);
}

IntegralityResult is_integral_element(const Polynomial& f, const Ideal& I, const Ideal& modulo, unsigned cap)
{
    const RingContext& ring = I.ring();
    Polynomial g = f.with_ring(ring);
    if (g.is_zero())
        return IntegralityResult{true, 0, cap};
    Ideal extended = ideal_sum(I, Ideal(ring, {g}));
    Ideal power = Ideal::unit(ring);
    Polynomial gpow = g;
    for (unsigned n = 0; n <= cap; ++n) {
        Ideal target = ideal_sum(ideal_product(I, power), modulo.with_ring(ring));
        if (ideal_member(gpow, target))
            return IntegralityResult{true, n, cap};
        power = compact(ideal_product(power, extended));
        gpow *= g;
    }
    return IntegralityResult{false, 0, cap};
}

std::optional<long> local_length_at_origin(const Ideal& J, long cap)
{
    const RingContext& ring = J.ring();
    Ideal m = maximal_ideal(ring);
    Ideal mpow = m;
    long previous = -1;
    for (;;) {
        long length = colength_0dim(ideal_sum(J, mpow));
        if (length == previous)
            return length;
        if (length > cap)
            return std::nullopt;
        previous = length;
        mpow = ideal_product(mpow, m);
    }
}

long certify_m_primary(const Ideal& I)
{
    long N = 0;
    try {
        N = colength_0dim(I);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotZeroDimensional)
            throw;
        raise(ErrorKind::NotMPrimary, I.to_string() + " is not zero-dimensional");
    }
    if (N == 0)
        raise(ErrorKind::NotMPrimary, "the unit ideal is not primary to the maximal ideal");
    const RingContext& ring = I.ring();
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        if (!ideal_member(Polynomial::variable(ring, i).pow(static_cast<unsigned>(N)), I))
            raise(ErrorKind::NotMPrimary, I.to_string() + " has zeros away from the origin");
    return N;
}

long multiplicity_2d(const Ideal& I, int trials, std::uint64_t seed)
{
    const long N = certify_m_primary(I);
    const RingContext& ring = I.ring();
    const std::size_t d = ring.nvars();
    // e(I) <= e(m^N) = N^d bounds any useful pair.
    long cap = 1;
    for (std::size_t i = 0; i < d; ++i)
        cap *= N;
    Rng rng(seed);
    long best = std::numeric_limits<long>::max();
    for (int trial = 0; trial < std::max(trials, 1); ++trial) {
        std::vector<Polynomial> combos;
        for (std::size_t k = 0; k < d; ++k) {
            Polynomial c(ring);
            for (const auto& a : I.generators())
                c += a.scale(ring.field().from_int(rng.uniform(-100, 100)));
            combos.push_back(std::move(c));
        }
        auto len = local_length_at_origin(Ideal(ring, std::move(combos)), cap);
        if (len)
            best = std::min(best, *len);
    }
    if (best == std::numeric_limits<long>::max())
        raise(ErrorKind::GenericityFailure, "no trial produced a parameter ideal for " + I.to_string());
    return best;
}

GenericExtension generic_element(const Ideal& I, GenericExtension::Mode mode, std::uint64_t seed, long bound)
{
    if (I.is_zero())
        raise(ErrorKind::ZeroIdeal, "generic element of the zero ideal");
    GenericExtension ext;
    ext.base_ring = I.ring();
    ext.z_count = I.generators().size();
    ext.mode = mode;
    ext.seed = seed;
    ext.bound = bound;
    const Field& k = I.ring().field();
    if (mode == GenericExtension::Mode::Symbolic) {
        auto z = fresh_names(I.ring(), "z", ext.z_count);
        std::vector<std::string> vars = I.ring().variables();
        vars.insert(vars.end(), z.begin(), z.end());
        ext.ring = RingContext(vars, k, I.ring().order());
        Polynomial x(ext.ring);
        for (std::size_t i = 0; i < ext.z_count; ++i)
            x += Polynomial::variable(ext.ring, I.ring().nvars() + i) * embed_by_name(I.generators()[i], ext.ring);
        ext.element = std::move(x);
        return ext;
    }
    ext.ring = I.ring();
    Rng rng(seed);
    for (;;) {
        ext.draws.clear();
        Polynomial x(ext.ring);
        for (const auto& a : I.generators()) {
            ext.draws.push_back(k.from_int(rng.uniform(-bound, bound)));
            x += a.scale(ext.draws.back());
        }
        if (!x.is_zero()) {
            ext.element = std::move(x);
            return ext;
        }
    }
}

} // namespace icl
