#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uniratio/trig_kernel.hpp"

namespace uniratio {

/// Disjoint closed subintervals of [0, pi] (half-period canonical form).
/// The full-circle set {t in [0, 2pi] : D(t) >= 0} is this set united with
/// its reflection about pi, so the full-circle measure is twice measure().
struct IntervalSet {
    std::vector<std::pair<double, double>> intervals;  // sorted, disjoint

    double measure() const;
    int count() const { return static_cast<int>(intervals.size()); }

    /// Number of maximal intervals of the reflected set on [0, 2pi]
    /// (the interval count r that scales the Erdos-Turan bound).
    int full_circle_count() const;
};

enum class RatioMethod { exact, riemann };

struct LimitRatioResult {
    double lc = 0.0;                 // in [0, 1]; measure(above)/pi for exact
    IntervalSet above;               // where |f2| >= |E|
    std::vector<double> crossings;   // solutions of |E| = |f2| in [0, pi]
    RatioMethod method = RatioMethod::exact;
    std::vector<double> residuals;   // |D| at each crossing (coefficient-normalized)
};

/// A crossing pair (f2, E) plus its sampling convention: spec-derived pairs
/// live on the full period t in (0, 2pi]; bivariate-family pairs live on
/// u in (0, 1] with theta = pi*u. Exact results agree in theta-space either
/// way; the convention only fixes Riemann sample placement.
struct EnvelopePair {
    TrigWave f2;
    TrigWave env;
    bool unit_domain = false;  // true: sample u in (0,1]; false: t in (0,2pi]

    static EnvelopePair from_spec(const FamilySpec& spec);
};

/// All angles theta = arccos(w) for real roots w in [-1, 1] of d, each
/// refined so the coefficient-normalized residual is < 1e-12; tangency
/// points are included multiplicity-collapsed. Roots come from the balanced
/// colleague matrix of the Chebyshev-basis polynomial with Newton polish in
/// theta. Throws DegenerateEnvelopeError when d is identically zero
/// (coefficient norm <= 1e-14).
std::vector<double> find_crossings(const ChebPoly& d);

/// Partition [0, pi] at the crossings, keep the pieces where D >= 0 at the
/// midpoint, merge adjacent same-sign pieces (tangencies produce no interval
/// endpoint), drop zero-length pieces.
IntervalSet classify_intervals(const CosineSeries& D, const std::vector<double>& crossings);

/// The exact limit ratio: lc = measure{t : |f2(t)| >= |E(t)|} / (2pi) over
/// the full circle, computed as half-period measure over pi.
LimitRatioResult limit_ratio_exact(const FamilySpec& spec);
LimitRatioResult limit_ratio_exact(const EnvelopePair& pair);

/// Riemann indicator sampler: s/p where s counts sample points with
/// |f2| >= |E|; deterministic, samples at j/p across the pair's domain.
double limit_ratio_riemann(const EnvelopePair& pair, long long p);

/// Limit Mahler measure exp( int_U log((|f2| + sqrt(f2^2 - E^2)) / |E|) du )
/// over U = {u : |f2| >= |E|}, by adaptive bisection quadrature on each
/// above-set interval with additional splits at zeros of E (the logarithmic
/// endpoint singularity is integrable; floor cell width 1e-14).
double mahler_limit(const EnvelopePair& pair);

}  // namespace uniratio
