#include "icl/bourbaki/bourbaki.hpp"

#include "icl/error.hpp"
#include "icl/rees/rees.hpp"
#include "icl/util/rng.hpp"

namespace icl {

namespace {

constexpr std::size_t kMaxSymbolicSteps = 2;

/* Divide out the common factor of the generators. */
Ideal grade_normalize(const RingContext& ring, std::vector<Polynomial> gens)
{
    std::erase_if(gens, [](const Polynomial& f) { return f.is_zero(); });
    if (gens.empty())
        return Ideal(ring);
    Polynomial g = gens.front();
    for (std::size_t i = 1; i < gens.size() && !g.is_constant(); ++i)
        g = polynomial_gcd(g, gens[i]);
    if (!g.is_constant())
        for (auto& f : gens)
            f = *exact_divide(f, g);
    Ideal I(ring, std::move(gens));
    const auto& gb = I.groebner_basis();
    return gb.size() < I.generators().size() ? Ideal(ring, gb) : I;
}

Column lift(const Column& c, const RingContext& ring)
{
    Column out;
    for (const auto& f : c)
        out.push_back(embed_by_name(f, ring));
    return out;
}

std::uint64_t second_seed(std::uint64_t seed)
{
    return Rng(seed).split().next();
}

} // namespace

Ideal localize_at_origin(const Ideal& I)
{
    const RingContext& ring = I.ring();
    bool zero = true;
    for (const auto& f : I.generators()) {
        if (f.is_zero())
            continue;
        zero = false;
        if (lowest_degree_form(f).first == 0)
            return Ideal::unit(ring);
    }
    if (zero)
        return I;
    // I + m^K is the component at the origin once it stops shrinking in K
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        vars.push_back(Polynomial::variable(ring, i));
    Ideal m(ring, vars);
    unsigned K = 1;
    Ideal J = ideal_sum(I, m);
    long length = colength_0dim(J);
    for (;;) {
        Ideal next = ideal_sum(I, ideal_power(m, K + 1));
        long next_length = colength_0dim(next);
        if (next_length == length)
            return Ideal(ring, J.groebner_basis());
        J = std::move(next);
        length = next_length;
        ++K;
    }
}

unsigned order_module(const FModule& M)
{
    Ideal F = fitting_ideal(M, static_cast<long>(M.rank()));
    if (F.is_unit())
        return 0;
    return order_local(F);
}

long nu_module(const FModule& M)
{
    return static_cast<long>(minimal_generators(M).size());
}

bool is_contracted_module(const FModule& M)
{
    return nu_module(M) == static_cast<long>(order_module(M) + M.rank());
}

FModule module_transform(const FModule& M, const QuadraticChart& chart)
{
    std::vector<Column> cols;
    for (const auto& c : M.columns()) {
        Column image;
        for (const auto& f : c)
            image.push_back(chart_substitute(f, chart));
        cols.push_back(std::move(image));
    }
    return FModule(chart.ring, M.rank(), std::move(cols));
}

std::string to_string(BourbakiPath path)
{
    return path == BourbakiPath::FittingShortcut ? "fitting-shortcut" : "iterated-quotient";
}

BourbakiResult bourbaki_ideal(const FModule& M, const BourbakiOptions& options)
{
    const RingContext& base = M.ring();
    const Field& k = base.field();
    const std::size_t e = M.rank();
    const std::size_t n = M.ngens();
    const std::size_t steps = e - 1;
    BourbakiResult out{Ideal(base), base, {}, {}, options.path, options.seed};

    if (e == 1) {
        std::vector<Polynomial> gens;
        for (const auto& c : M.columns())
            gens.push_back(c[0]);
        out.ideal = localize_at_origin(grade_normalize(base, std::move(gens)));
        return out;
    }
    if (options.path == BourbakiPath::FittingShortcut) {
        if (options.reduction)
            raise(ErrorKind::Unsupported, "the Fitting shortcut takes the module itself as the reduction");
        if (!is_contracted_module(M))
            raise(ErrorKind::NotContracted, M.to_string() + " is not contracted; use the iterated quotient path");
    }
    const std::vector<Column>& U = options.reduction ? options.reduction->columns() : M.columns();
    const std::size_t nu = U.size();

    // z[j][i] multiplies generator i in x_j
    RingContext ring = base;
    std::vector<std::vector<Polynomial>> zp(steps);
    if (options.symbolic) {
        if (steps > kMaxSymbolicSteps)
            raise(ErrorKind::Unsupported, "symbolic Bourbaki ideals are limited to rank " +
                                              std::to_string(kMaxSymbolicSteps + 1));
        out.z_names = fresh_names(base, "z", steps * nu);
        std::vector<std::string> vars = base.variables();
        vars.insert(vars.end(), out.z_names.begin(), out.z_names.end());
        ring = RingContext(vars, k);
        for (std::size_t j = 0; j < steps; ++j)
            for (std::size_t i = 0; i < nu; ++i)
                zp[j].push_back(Polynomial::variable(ring, base.nvars() + j * nu + i));
    } else {
        Rng rng(options.seed);
        out.z.assign(steps, {});
        for (std::size_t j = 0; j < steps; ++j)
            for (std::size_t i = 0; i < nu; ++i) {
                out.z[j].push_back(k.from_int(rng.uniform(-options.bound, options.bound)));
                zp[j].push_back(Polynomial::constant(ring, out.z[j].back()));
            }
    }
    out.ring = ring;

    if (options.path == BourbakiPath::FittingShortcut) {
        std::vector<Column> psi;
        for (std::size_t j = 0; j < steps; ++j)
            psi.push_back(zp[j]);
        for (const auto& c : M.presentation())
            psi.push_back(lift(c, ring));
        out.ideal = ideal_of_minors(ring, psi, n, static_cast<long>(n - e + 1));
        if (!options.symbolic)
            out.ideal = localize_at_origin(out.ideal);
        return out;
    }

    std::vector<Column> x(steps, Column(e, Polynomial(ring)));
    for (std::size_t j = 0; j < steps; ++j)
        for (std::size_t i = 0; i < nu; ++i) {
            Column a = lift(U[i], ring);
            for (std::size_t r = 0; r < e; ++r)
                x[j][r] += zp[j][i] * a[r];
        }
    std::vector<Polynomial> images;
    for (const auto& a : M.columns()) {
        std::vector<Column> square = x;
        square.push_back(lift(a, ring));
        images.push_back(determinant(square));
    }
    out.ideal = grade_normalize(ring, std::move(images));
    if (!options.symbolic)
        out.ideal = localize_at_origin(out.ideal);
    return out;
}

std::string IdealInvariants::to_string() const
{
    return "(o=" + std::to_string(order) + ", nu=" + std::to_string(nu) + ", e=" + std::to_string(multiplicity) +
           ", closed=" + (closed ? "true" : "false") + ")";
}

IdealInvariants ideal_invariants(const Ideal& I, std::uint64_t seed, bool with_closedness)
{
    if (I.is_unit())
        return IdealInvariants{};
    IdealInvariants inv;
    inv.order = order_local(I);
    inv.nu = nu_local(I);
    inv.multiplicity = multiplicity_2d(I, 3, seed);
    if (with_closedness) {
        ClosureOptions opt;
        opt.seed = seed;
        inv.closed = is_integrally_closed_2d(I, opt);
    }
    return inv;
}

BourbakiResult generic_bourbaki_ideal(const FModule& M, const BourbakiOptions& options)
{
    BourbakiResult first = bourbaki_ideal(M, options);
    if (options.symbolic || M.rank() == 1)
        return first;
    BourbakiOptions other = options;
    other.seed = second_seed(options.seed);
    BourbakiResult second = bourbaki_ideal(M, other);
    auto a = ideal_invariants(first.ideal, options.seed, false);
    auto b = ideal_invariants(second.ideal, options.seed, false);
    if (!(a == b))
        raise(ErrorKind::GenericityFailure, "Bourbaki ideals from two seeds differ: " + a.to_string() + " vs " +
                                                b.to_string());
    return first;
}

bool is_integrally_closed_module(const FModule& M, std::uint64_t seed)
{
    ClosureOptions closure;
    closure.seed = seed;
    auto closed = [&](const Ideal& I) { return I.is_unit() || is_integrally_closed_2d(I, closure); };
    BourbakiOptions options;
    options.seed = seed;
    if (M.rank() == 1)
        return closed(bourbaki_ideal(M, options).ideal);
    bool a = closed(generic_bourbaki_ideal(M, options).ideal);
    options.seed = second_seed(seed) + 1;
    bool b = closed(generic_bourbaki_ideal(M, options).ideal);
    if (a != b)
        raise(ErrorKind::GenericityFailure, "closedness of Bourbaki ideals of " + M.to_string() +
                                                " depends on the seed");
    return a;
}

} // namespace icl
