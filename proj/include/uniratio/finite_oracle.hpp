#pragma once

#include <string>
#include <vector>

#include "uniratio/family_spec.hpp"
#include "uniratio/limit_solver.hpp"

namespace uniratio {

enum class CensusMethod { modulus, signchange };

/// Counts of roots inside / on / outside the unit circle, with multiplicity.
struct RootCensus {
    long long inside = 0;     // I(P)
    long long on_circle = 0;  // U(P)
    long long outside = 0;    // E(P)
    long long degree = 0;
    double tolerance = 0.0;
    CensusMethod method = CensusMethod::modulus;
};

struct ConvergenceRow {
    int n = 0;
    long long degree = 0;
    double c_ratio = 0.0;
    double abs_err = 0.0;
    double et_bound = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    int r = 0;        // full-circle interval count from the exact solver
    double D = 0.0;   // coefficient constant of the Erdos-Turan bound
    double lc = 0.0;
};

/// Classifies all complex roots (balanced companion eigenvalues with Newton
/// polish) by modulus against the band [1-tau, 1+tau]. Verifies the census
/// invariants I+U+E = d and, for reciprocal P, I = E; throws NumericError
/// ("classification-unstable") on violation or when an off-circle root sits
/// suspiciously close to the band edge (within 2*tau).
RootCensus count_roots_modulus(const IntPolynomial& poly, double tau = 1e-7);

/// Counts unimodular roots of P_{2n+2l} as zeros of
/// F(t) = cos((n+l/2)t) E(t) - f2(t) on [0, 2pi), by sign changes on a
/// 16(n+l)+1 point grid with subgrid refinement and bisection confirmation.
/// Requires palindromic b and 2n > k.
long long count_unimodular_signchange(const FamilySpec& spec, int n);

/// C(P) = (d - U)/d with d = 2n+2l. Palindromic specs use the sign-change
/// counter; general specs fall back to the modulus census.
double c_ratio(const FamilySpec& spec, int n);
double c_ratio(const IntPolynomial& poly);

/// D = sqrt(log((2*sum|b_j| + |a0| + 2*sum_{j>=1}|a_j|) / sqrt(|b0*bl|))).
double erdos_turan_constant(const FamilySpec& spec);

/// Generic Theorem-1 coefficient functional for an arbitrary polynomial:
/// sqrt(log(sum|c_i| / sqrt(|c_0 c_d|))).
double erdos_turan_constant(const IntPolynomial& poly);

/// 16 r D / sqrt(2n+2l).
double erdos_turan_bound(const FamilySpec& spec, int n, int r);

/// Per-n rows of (C, |C - lc|, bound); r is taken from the exact solver.
ConvergenceReport convergence_report(const FamilySpec& spec, const std::vector<int>& n_list,
                                     double lc);

/// M(P) = |lead| * prod max(1, |root|) from the numeric root set.
double mahler_univariate(const IntPolynomial& poly);

}  // namespace uniratio
