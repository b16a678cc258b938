#include "icl/rlr2/rlr2.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "icl/error.hpp"
#include "icl/rees/rees.hpp"
#include "icl/rlr2/univariate.hpp"
#include "icl/util/rng.hpp"

namespace icl {

namespace {

constexpr int kPivotAttempts = 16;

void require_plane(const RingContext& ring)
{
    if (ring.nvars() != 2)
        raise(ErrorKind::ArityMismatch, "expected a ring in two variables, got " + ring.to_string());
}

Ideal maximal_ideal(const RingContext& ring)
{
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars));
}

/* Reduced basis, largest lead first. */
Ideal tidy(const Ideal& I)
{
    std::vector<Polynomial> gens = I.groebner_basis();
    std::reverse(gens.begin(), gens.end());
    return Ideal(I.ring(), std::move(gens));
}

std::string chart_variable(const std::string& pivot, const char* stem)
{
    std::string name = stem;
    while (name == pivot)
        name += "_";
    return name;
}

/* Substitute the exceptional coordinate w -> w + delta. */
Ideal translate(const Ideal& J, const Rational& delta)
{
    if (delta == 0)
        return J;
    const RingContext& S = J.ring();
    std::vector<Polynomial> images{Polynomial::variable(S, 0),
                                   Polynomial::variable(S, 1) + Polynomial::constant(S, delta)};
    std::vector<Polynomial> out;
    for (const auto& g : J.generators())
        out.push_back(ring_map_apply(g, images, S));
    return Ideal(S, std::move(out));
}

/* Point of the chart ring lies on every generator. */
bool vanishes_at_origin(const Ideal& J)
{
    if (J.is_unit())
        return false;
    Monomial one(J.ring().nvars());
    for (const auto& g : J.generators())
        if (g.coefficient(one) != 0)
            return false;
    return true;
}

Polynomial pivot_form(const RingContext& R, const Rational& shift)
{
    return Polynomial::variable(R, 0) + Polynomial::variable(R, 1).scale(shift);
}

/* Local component at the chart origin of a zero-dimensional transform. */
Ideal local_component(const Ideal& transform)
{
    const RingContext& S = transform.ring();
    long K = colength_0dim(transform);
    Polynomial wK = Polynomial::variable(S, 1).pow(static_cast<unsigned>(K));
    return tidy(ideal_sum(transform, Ideal(S, {wK})));
}

std::optional<Rational> choose_shift(const Ideal& I, Rng& rng, long bound, bool need_contraction)
{
    const RingContext& R = I.ring();
    std::optional<Ideal> colon_m;
    for (int attempt = 0; attempt < kPivotAttempts; ++attempt) {
        Rational c = R.field().from_int(rng.nonzero(bound));
        if (c == 0 || has_base_point_at_infinity(I, c))
            continue;
        if (need_contraction) {
            if (!colon_m)
                colon_m = ideal_quotient(I, maximal_ideal(R));
            if (!ideal_equal(ideal_quotient(I, pivot_form(R, c)), *colon_m))
                continue;
        }
        return c;
    }
    return std::nullopt;
}

struct Walker {
    const ClosureOptions& options;
    Rng rng;

    void annotate(const Ideal& I, unsigned r, BasePointTree& node)
    {
        node.order = r;
        node.ideal = I.to_string();
        if (options.trace && r > 0)
            node.multiplicity = multiplicity_2d(I, 3, rng.next());
    }

    void check_drop(const BasePointTree& parent, const BasePointTree& child) const
    {
        if (options.trace && child.multiplicity >= parent.multiplicity)
            raise(ErrorKind::GenericityFailure, "multiplicity did not drop from " + parent.ideal + " to " +
                                                    child.ideal);
    }

    BasePointTree child_node(const BasePoint& p) const
    {
        BasePointTree child;
        child.chart = p.chart.kind == QuadraticChart::Kind::Finite ? "finite" : "infinity";
        child.point = p.chart.point;
        return child;
    }

    /*
     * The closure of the transform is the intersection of the closures of
     * its local components, each primary to its own point; lifting by a^r
     * and contracting gives the closure of I for a pivot transversal to I.
     */
    Ideal closure(const Ideal& I, BasePointTree& node)
    {
        const RingContext& R = I.ring();
        unsigned r = order_local(I);
        annotate(I, r, node);
        if (r == 0)
            return Ideal::unit(R);
        auto c = choose_shift(I, rng, options.pivot_bound, false);
        if (!c)
            raise(ErrorKind::OrderDrop, "no pivot transversal to " + I.to_string());
        node.shift = *c;
        auto points = base_points(I, *c);
        if (points.empty())
            return maximal_ideal_power(R, r);
        std::optional<Ideal> acc;
        for (const auto& p : points) {
            BasePointTree child = child_node(p);
            Ideal cl = translate(closure(p.local, child), -p.chart.point);
            check_drop(node, child);
            node.children.push_back(std::move(child));
            acc = acc ? ideal_intersect(*acc, cl) : cl;
        }
        QuadraticChart chart = make_chart(R, QuadraticChart::Kind::Finite, *c);
        Polynomial ar = Polynomial::variable(chart.ring, 0).pow(r);
        return tidy(contract_back(ideal_product(Ideal(chart.ring, {ar}), *acc), chart));
    }

    bool closed(const Ideal& I, BasePointTree& node)
    {
        unsigned r = order_local(I);
        annotate(I, r, node);
        if (r == 0)
            return true;
        if (!is_contracted(I))
            return false;
        auto c = choose_shift(I, rng, options.pivot_bound, true);
        if (!c)
            raise(ErrorKind::OrderDrop, "no transversal pivot from which " + I.to_string() + " is contracted");
        node.shift = *c;
        for (const auto& p : base_points(I, *c)) {
            BasePointTree child = child_node(p);
            bool ok = closed(p.local, child);
            check_drop(node, child);
            node.children.push_back(std::move(child));
            if (!ok)
                return false;
        }
        return true;
    }
};

bool retryable(const Error& e)
{
    return e.kind() == ErrorKind::OrderDrop;
}

} // namespace

LocalIdeal2D certify_local(const Ideal& I)
{
    require_plane(I.ring());
    return LocalIdeal2D{I, certify_m_primary(I)};
}

unsigned order_local(const Ideal& I)
{
    if (I.is_zero())
        raise(ErrorKind::ZeroIdeal, "order of the zero ideal");
    unsigned r = ~0u;
    for (const auto& g : I.generators())
        r = std::min(r, lowest_degree_form(g).first);
    return r;
}

long nu_local(const Ideal& I)
{
    certify_m_primary(I);
    return colength_0dim(ideal_product(maximal_ideal(I.ring()), I)) - colength_0dim(I);
}

bool is_contracted(const Ideal& I)
{
    return nu_local(I) == static_cast<long>(order_local(I)) + 1;
}

Ideal maximal_ideal_power(const RingContext& ring, unsigned r)
{
    return tidy(ideal_power(maximal_ideal(ring), r));
}

std::string QuadraticChart::to_string() const
{
    std::string u = source.variables()[0] + " + " + format_rational(shift) + "*" + source.variables()[1];
    return std::string(kind == Kind::Finite ? "finite" : "infinity") + " chart of pivot " + u + " at " +
           ring.variables()[1] + " = " + format_rational(point);
}

QuadraticChart make_chart(const RingContext& source, QuadraticChart::Kind kind, const Rational& shift)
{
    require_plane(source);
    std::string pivot = source.variables()[kind == QuadraticChart::Kind::Finite ? 0 : 1];
    std::string w = chart_variable(pivot, kind == QuadraticChart::Kind::Finite ? "t" : "s");
    QuadraticChart chart{kind, source.field().normalize(shift), Rational(0), source,
                         RingContext(std::vector<std::string>{pivot, w}, source.field())};
    return chart;
}

Polynomial chart_substitute(const Polynomial& f, const QuadraticChart& chart)
{
    const RingContext& S = chart.ring;
    Polynomial a = Polynomial::variable(S, 0);
    Polynomial w = Polynomial::variable(S, 1) + Polynomial::constant(S, chart.point);
    std::vector<Polynomial> images;
    if (chart.kind == QuadraticChart::Kind::Finite)
        images = {a - (a * w).scale(chart.shift), a * w};
    else
        images = {a * w - a.scale(chart.shift), a};
    return ring_map_apply(f.with_ring(chart.source), images, S);
}

Ideal quadratic_transform(const Ideal& I, const QuadraticChart& chart)
{
    const RingContext& S = chart.ring;
    const Field& k = S.field();
    const unsigned r = order_local(I);
    // x -> a*U(w), y -> a*V(w), so x^i y^j / a^r = a^(i+j-r) U^i V^j
    const Rational p = chart.point;
    UPoly U(k), V(k);
    if (chart.kind == QuadraticChart::Kind::Finite) {
        U = UPoly(k, {k.sub(Rational(1), k.mul(chart.shift, p)), k.neg(chart.shift)});
        V = UPoly(k, {p, Rational(1)});
    } else {
        U = UPoly(k, {k.sub(p, chart.shift), Rational(1)});
        V = UPoly(k, {Rational(1)});
    }
    std::vector<UPoly> Upow{UPoly(k, {Rational(1)})}, Vpow{UPoly(k, {Rational(1)})};
    auto power = [](std::vector<UPoly>& cache, const UPoly& base, std::size_t e) -> const UPoly& {
        while (cache.size() <= e)
            cache.push_back(cache.back() * base);
        return cache[e];
    };
    Ideal source = I.with_ring(chart.source);
    std::vector<Polynomial> out;
    for (const auto& g : source.generators()) {
        std::map<std::pair<unsigned, std::size_t>, Rational> acc;
        for (const auto& term : g.terms()) {
            unsigned i = term.mono[0], j = term.mono[1];
            UPoly f = power(Upow, U, i) * power(Vpow, V, j);
            for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
                if (f.coeffs()[e] == 0)
                    continue;
                Rational& slot = acc[{i + j - r, e}];
                slot = k.add(slot, k.mul(term.coeff, f.coeffs()[e]));
            }
        }
        std::vector<Term> terms;
        for (const auto& [exp, c] : acc) {
            if (c == 0)
                continue;
            int ev[2] = {static_cast<int>(exp.first), static_cast<int>(exp.second)};
            terms.push_back(Term{Monomial(std::span<const int>(ev)), c});
        }
        out.push_back(Polynomial::from_terms(S, std::move(terms)));
    }
    return Ideal(S, std::move(out));
}

Ideal contract_back(const Ideal& J, const QuadraticChart& chart)
{
    const RingContext& R = chart.source;
    Ideal centered = translate(J.with_ring(chart.ring), -chart.point);
    RingContext big(std::vector<std::string>{"@w", "@u", "@v"}, R.field());
    Polynomial w = Polynomial::variable(big, 0);
    Polynomial u = Polynomial::variable(big, 1);
    Polynomial v = Polynomial::variable(big, 2);
    bool finite = chart.kind == QuadraticChart::Kind::Finite;
    // finite: a = u, t = v/u; infinity: a = v, s = u/v
    std::vector<Polynomial> images = finite ? std::vector<Polynomial>{u, w} : std::vector<Polynomial>{v, w};
    std::vector<Polynomial> gens;
    for (const auto& g : centered.generators())
        gens.push_back(ring_map_apply(g, images, big));
    gens.push_back(finite ? v - u * w : u - v * w);
    Ideal K = eliminate(Ideal(big, std::move(gens)), {"@w"});

    Polynomial x = Polynomial::variable(R, 0);
    Polynomial y = Polynomial::variable(R, 1);
    std::vector<Polynomial> back{x + y.scale(chart.shift), y};
    std::vector<Polynomial> out;
    for (const auto& g : K.generators())
        out.push_back(ring_map_apply(g, back, R));
    return tidy(Ideal(R, std::move(out)));
}

bool has_base_point_at_infinity(const Ideal& I, const Rational& shift)
{
    // every lowest form of order o(I) vanishes in the direction (-shift, 1)
    const Field& k = I.ring().field();
    const unsigned r = order_local(I);
    const Rational x = k.neg(k.normalize(shift));
    for (const auto& g : I.generators()) {
        Rational value = 0;
        for (const auto& term : g.terms()) {
            if (term.mono[0] + term.mono[1] != r)
                continue;
            Rational m = term.coeff;
            for (unsigned e = 0; e < term.mono[0]; ++e)
                m = k.mul(m, x);
            value = k.add(value, m);
        }
        if (value != 0)
            return false;
    }
    return true;
}

std::vector<BasePoint> base_points(const Ideal& I, const Rational& shift)
{
    certify_local(I);
    std::vector<BasePoint> out;
    QuadraticChart finite = make_chart(I.ring(), QuadraticChart::Kind::Finite, shift);
    Ideal T = quadratic_transform(I, finite);
    if (!T.is_unit()) {
        const RingContext& S = finite.ring;
        std::vector<Polynomial> on_line{Polynomial(S), Polynomial::variable(S, 1)};
        UPoly g(S.field());
        for (const auto& f : T.generators())
            g = upoly_gcd(g, UPoly::from_polynomial(ring_map_apply(f, on_line, S), 1));
        if (g.is_zero())
            raise(ErrorKind::NotMPrimary, "transform of " + I.to_string() + " contains the exceptional line");
        RootSplit split = field_roots(g);
        if (split.rest.degree() > 0)
            raise(ErrorKind::NonRationalBasePoint,
                  "base points of " + I.to_string() + " at the roots of " + split.rest.to_string(S.variables()[1]) +
                      " are not rational; try a prime field");
        for (const auto& c0 : split.roots) {
            BasePoint p{finite, Ideal(S), Ideal(S)};
            p.chart.point = c0;
            p.transform = translate(T, c0);
            p.local = local_component(p.transform);
            out.push_back(std::move(p));
        }
    }
    QuadraticChart inf = make_chart(I.ring(), QuadraticChart::Kind::Infinity, shift);
    Ideal Ti = quadratic_transform(I, inf);
    if (vanishes_at_origin(Ti))
        out.push_back(BasePoint{inf, Ti, local_component(Ti)});
    return out;
}

ClosureReport integral_closure_2d_report(const Ideal& I, const ClosureOptions& options)
{
    certify_local(I);
    Rng master(options.seed);
    Error last(ErrorKind::GenericityFailure, "no attempts made");
    const int attempts = std::max(options.retries, 1);
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        Walker first{options, master.split()};
        Walker second{options, master.split()};
        try {
            BasePointTree tree, other;
            Ideal A = first.closure(I, tree);
            Ideal B = second.closure(I, other);
            if (ideal_equal(A, B))
                return ClosureReport{A, std::move(tree), attempt};
            last = Error(ErrorKind::GenericityFailure,
                         "closures from independent pivots disagree: " + A.to_string() + " vs " + B.to_string());
        } catch (const Error& e) {
            if (!retryable(e))
                throw;
            last = e;
        }
    }
    raise(ErrorKind::GenericityFailure, std::string("after ") + std::to_string(attempts) + " attempts: " + last.what());
}

Ideal integral_closure_2d(const Ideal& I, const ClosureOptions& options)
{
    return integral_closure_2d_report(I, options).closure;
}

ClosednessReport is_integrally_closed_2d_report(const Ideal& I, const ClosureOptions& options)
{
    certify_local(I);
    Rng master(options.seed);
    Error last(ErrorKind::GenericityFailure, "no attempts made");
    const int attempts = std::max(options.retries, 1);
    for (int attempt = 1; attempt <= attempts; ++attempt) {
        Walker first{options, master.split()};
        Walker second{options, master.split()};
        try {
            BasePointTree tree, other;
            bool a = first.closed(I, tree);
            bool b = second.closed(I, other);
            if (a == b)
                return ClosednessReport{a, is_contracted(I), std::move(tree), attempt};
            last = Error(ErrorKind::GenericityFailure, "closedness verdicts from independent pivots disagree");
        } catch (const Error& e) {
            if (!retryable(e))
                throw;
            last = e;
        }
    }
    raise(ErrorKind::GenericityFailure, std::string("after ") + std::to_string(attempts) + " attempts: " + last.what());
}

bool is_integrally_closed_2d(const Ideal& I, const ClosureOptions& options)
{
    return is_integrally_closed_2d_report(I, options).closed;
}

} // namespace icl
