#pragma once

#include <string>
#include <utility>

#include "uniratio/family_spec.hpp"
#include "uniratio/limit_solver.hpp"

namespace uniratio {

/// Parameters of a named family: P/Q/R/S carry (a, b) and (S only) epsilon;
/// H and T carry m.
struct FamilyParams {
    std::string name;  // "P", "Q", "R", "S", "H", "T"
    int a = 0;
    int b = 0;
    int epsilon = 0;  // +1 or -1, S only
    int m = 0;        // H, T only
};

/// The bivariate-table crossing pair (f2, E) on u in [0, 1] for P/Q/R/S.
/// H and T are spec-backed families and are routed to their own constructors
/// (throws SpecError).
EnvelopePair table1_pair(const FamilyParams& params);

/// Builds the bivariate family polynomial and substitutes y = x^N, returning
/// the expanded integer polynomial for oracle cross-checks.
IntPolynomial specialize_bivariate(const FamilyParams& params, int N);

/// (k=0, l=m-1, a=(1), b = all-ones of length m); requires m >= 2.
FamilySpec h_family_spec(int m);

/// Analytic bounds on lc of the H family:
///   lower = 2/(pi(2m+1)) * sin((m-1)pi/2m)/sin(pi/2m)
///   upper = 2/(6m-pi)    * (same factor).
std::pair<double, double> hbounds(int m);

/// Coefficients (b1, b2) of the Salem polynomial of gamma^m, where gamma is
/// the Salem number of x^4 - x^3 - x^2 - x + 1. b1 = -p_m by the integer
/// Newton recurrence p_m = p_{m-1} + p_{m-2} + p_{m-3} - p_{m-4}; b2 is the
/// m-th power sum of the pairwise root products, computed in extended
/// precision and rounded with integrality asserted to 1e-6 (NumericError on
/// failure).
std::pair<long long, long long> salem_power_coeffs(int m);

/// (k=0, l=4, a=(2), b=(1, b1, b2, b1, 1)); palindromic by construction.
FamilySpec t_family_spec(int m);

}  // namespace uniratio
