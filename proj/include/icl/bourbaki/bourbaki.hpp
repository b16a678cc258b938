#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icl/bourbaki/module.hpp"
#include "icl/rlr2/rlr2.hpp"

namespace icl {

/* The component at the origin: I + m^K for the least K with
 * I + m^K = I + m^{K+1}. The unit ideal when I has no zero at the origin. */
Ideal localize_at_origin(const Ideal& I);

/* o(Fitt_e(M)); 0 when Fitt_e is the unit ideal. */
unsigned order_module(const FModule& M);
long nu_module(const FModule& M);
/* nu = o + e. */
bool is_contracted_module(const FModule& M);

/* Columns mapped into the chart ring; no pivot power is divided out. */
FModule module_transform(const FModule& M, const QuadraticChart& chart);

enum class BourbakiPath { FittingShortcut, IteratedQuotient };
std::string to_string(BourbakiPath path);

struct BourbakiOptions {
    BourbakiPath path = BourbakiPath::IteratedQuotient;
    bool symbolic = false; // adjoin indeterminates instead of drawing values
    std::uint64_t seed = 1;
    long bound = 1000;
    /* Generators of a reduction U of M, used for the x_j (iterated path). */
    std::optional<FModule> reduction;
};

/*
 * I with I isomorphic to M''/F, F spanned by x_j = sum_i z_ij a_i for
 * j < e. FittingShortcut: I_{n-e+1}[Z | presentation], valid for contracted
 * M. IteratedQuotient: the functional v -> det[x_1 .. x_{e-1} v] maps M''/F
 * into R''; its image divided by the gcd of its generators. With drawn
 * values the ideal is replaced by its component at the origin, which is
 * what the local ring sees; symbolic results stay global in R[Z].
 */
struct BourbakiResult {
    Ideal ideal;
    RingContext ring;                     // base ring, or the ring with the z adjoined
    std::vector<std::vector<Rational>> z; // z[j][i]; empty in symbolic mode
    std::vector<std::string> z_names;     // symbolic mode
    BourbakiPath path = BourbakiPath::IteratedQuotient;
    std::uint64_t seed = 0;
};

/* Throws NotContracted (shortcut on a non-contracted module), Unsupported
 * (symbolic mode beyond two steps). */
BourbakiResult bourbaki_ideal(const FModule& M, const BourbakiOptions& options = {});

struct IdealInvariants {
    unsigned order = 0;
    long nu = 1;
    long multiplicity = 0;
    bool closed = true;

    std::string to_string() const;
    friend bool operator==(const IdealInvariants&, const IdealInvariants&) = default;
};

/* For the unit ideal or an m-primary ideal in two variables. */
IdealInvariants ideal_invariants(const Ideal& I, std::uint64_t seed = 1, bool with_closedness = true);

/* Random mode, run under two seeds; throws GenericityFailure when the
 * (o, nu, e) of the two results differ. */
BourbakiResult generic_bourbaki_ideal(const FModule& M, const BourbakiOptions& options = {});

/* Rank one goes straight to the ideal test. */
bool is_integrally_closed_module(const FModule& M, std::uint64_t seed = 1);

} // namespace icl
