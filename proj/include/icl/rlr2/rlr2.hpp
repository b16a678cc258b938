#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icl/groebner/ideal.hpp"

namespace icl {

/*
 * Ideals primary to (x, y) in k[x, y], standing in for ideals of the local
 * ring at the origin. All lengths and orders computed on the polynomial
 * ring agree with the local ones for such ideals.
 */
struct LocalIdeal2D {
    Ideal ideal;
    long certified_power; // x^N and y^N lie in the ideal
};

/* Throws NotMPrimary (or ArityMismatch for a ring without two variables). */
LocalIdeal2D certify_local(const Ideal& I);

/* Largest r with I inside m^r. Throws ZeroIdeal. */
unsigned order_local(const Ideal& I);
/* Minimal number of generators, colength(mI) - colength(I). */
long nu_local(const Ideal& I);
/* nu = order + 1. */
bool is_contracted(const Ideal& I);

/*
 * First quadratic transform along the pivot u = x + shift*y. The Finite
 * chart has coordinates (a, t) with x = a - shift*a*t, y = a*t; the Infinity
 * chart has (a, s) with x = a*s - shift*a, y = a. `point` is the coordinate
 * on the exceptional line moved to the origin.
 */
struct QuadraticChart {
    enum class Kind { Finite, Infinity };
    Kind kind = Kind::Finite;
    Rational shift;
    Rational point;
    RingContext source;
    RingContext ring;

    std::string to_string() const;
};

QuadraticChart make_chart(const RingContext& source, QuadraticChart::Kind kind, const Rational& shift);

/* Image of f in the chart ring (translated), without dividing by the pivot. */
Polynomial chart_substitute(const Polynomial& f, const QuadraticChart& chart);
/* The transform with IS = a^o(I) * transform, translated by chart.point. */
Ideal quadratic_transform(const Ideal& I, const QuadraticChart& chart);
/* J (in the translated chart coordinates) intersected with R. */
Ideal contract_back(const Ideal& J, const QuadraticChart& chart);

struct BasePoint {
    QuadraticChart chart; // chart.point locates the point
    Ideal transform;      // translated transform, all components
    Ideal local;          // component primary to the origin of the chart
};

/* Finite-chart points sorted by coordinate, then the Infinity-chart origin.
 * Throws NonRationalBasePoint. */
std::vector<BasePoint> base_points(const Ideal& I, const Rational& shift = 0);
bool has_base_point_at_infinity(const Ideal& I, const Rational& shift);

struct BasePointTree {
    std::string chart = "root";
    Rational point;
    Rational shift;
    unsigned order = 0;
    long multiplicity = -1; // filled when tracing
    std::string ideal;
    std::vector<BasePointTree> children;
};

struct ClosureOptions {
    std::uint64_t seed = 1;
    int retries = 3;
    long pivot_bound = 50;
    bool trace = false; // also checks that multiplicity drops along the tree
};

struct ClosureReport {
    Ideal closure;
    BasePointTree tree;
    int attempts = 0;
};

Ideal integral_closure_2d(const Ideal& I, const ClosureOptions& options = {});
ClosureReport integral_closure_2d_report(const Ideal& I, const ClosureOptions& options = {});

struct ClosednessReport {
    bool closed = false;
    bool contracted = false;
    BasePointTree tree;
    int attempts = 0;
};

bool is_integrally_closed_2d(const Ideal& I, const ClosureOptions& options = {});
ClosednessReport is_integrally_closed_2d_report(const Ideal& I, const ClosureOptions& options = {});

/* (x, y)^r in the ring of I. */
Ideal maximal_ideal_power(const RingContext& ring, unsigned r);

} // namespace icl
