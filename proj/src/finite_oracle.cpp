#include "uniratio/finite_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyroots.hpp"
#include "uniratio/trig_kernel.hpp"

namespace uniratio {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::complex<double>> roots_of(const IntPolynomial& poly) {
    std::vector<double> c;
    c.reserve(poly.coeffs.size());
    for (long long v : poly.coeffs) c.push_back(static_cast<double>(v));
    return detail::polynomial_roots(c);
}

}  // namespace

RootCensus count_roots_modulus(const IntPolynomial& poly, double tau) {
    if (poly.is_zero()) throw SpecError("census of the zero polynomial");
    if (!(tau > 0.0 && tau < 0.1)) throw SpecError("tau must lie in (0, 0.1)");

    IntPolynomial p = poly;
    const int at_origin = p.normalize_trailing();

    RootCensus census;
    census.degree = poly.degree();
    census.tolerance = tau;
    census.method = CensusMethod::modulus;
    census.inside = at_origin;

    // Polished eigenvalues place simple roots to ~1e-12, so a clean census
    // has every on-circle modulus within kCleanBand of 1 and every off-circle
    // modulus beyond 2*tau. Anything between is undecidable at double
    // precision (a genuine near-circle pair and a noise-split multiple
    // unimodular root look identical there); refusing beats misclassifying.
    constexpr double kCleanBand = 1e-9;
    for (const auto& z : roots_of(p)) {
        const double m = std::abs(z);
        const double gap = std::abs(m - 1.0);
        if (m < 1.0 - tau) {
            ++census.inside;
        } else if (m > 1.0 + tau) {
            ++census.outside;
        } else {
            ++census.on_circle;
        }
        if (gap > kCleanBand && gap < 2.0 * tau)
            throw NumericError(
                "classification-unstable: root modulus " + std::to_string(gap) +
                " from the unit circle, between the clean band and 2*tau; "
                "retry with signchange or larger n");
    }

    if (census.inside + census.on_circle + census.outside != census.degree)
        throw NumericError("classification-unstable: census does not sum to the degree");
    if (poly.is_reciprocal() && census.inside != census.outside)
        throw NumericError("classification-unstable: reciprocal polynomial with I != E (I = " +
                           std::to_string(census.inside) + ", E = " +
                           std::to_string(census.outside) + ")");
    return census;
}

namespace {

// F(t) = cos((n + l/2) t) E(t) - f2(t); its real zeros are the arguments of
// the unimodular roots of P_{2n+2l}.
struct UnimodularCounter {
    CosineSeries env;
    CosineSeries f2;
    double half_freq;  // n + l/2

    double operator()(double t) const {
        return std::cos(half_freq * t) * env.eval(t) - f2.eval(t);
    }
};

double bisect_root(const UnimodularCounter& F, double a, double b, double fa) {
    for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = F(m);
        if (fa * fm <= 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

long long count_unimodular_signchange(const FamilySpec& spec, int n) {
    if (!spec.palindromic())
        throw SpecError("sign-change census requires a palindromic spec");
    if (2 * n <= spec.k) throw SpecError("sign-change census requires 2n > k");

    UnimodularCounter F{envelope_series(spec), f2_series(spec),
                        static_cast<double>(n) + 0.5 * static_cast<double>(spec.l)};

    const int cells = 16 * (n + spec.l) + 1;
    const double step = 2.0 * kPi / cells;

    double scale = std::abs(spec.a[0]);
    for (int j = 1; j <= spec.k; ++j) scale += 2.0 * std::abs(static_cast<double>(spec.a[j]));
    for (long long bj : spec.b) scale += 2.0 * std::abs(static_cast<double>(bj));
    const double zero_tol = 1e-11 * scale;

    std::vector<double> roots;
    double t0 = 0.0, v0 = F(0.0);
    for (int i = 1; i <= cells; ++i) {
        const double t1 = step * i;
        const double v1 = F(t1);
        if (std::abs(v0) <= zero_tol) {
            roots.push_back(t0);
        } else if (v0 * v1 < 0.0) {
            roots.push_back(bisect_root(F, t0, t1, v0));
        } else {
            // same-sign cell: scan a subgrid for a dipping pair that the
            // coarse grid cannot see
            double s0 = t0, w0 = v0;
            for (int q = 1; q <= 8; ++q) {
                const double s1 = t0 + step * q / 8.0;
                const double w1 = (q == 8) ? v1 : F(s1);
                if (w0 * w1 < 0.0) roots.push_back(bisect_root(F, s0, s1, w0));
                s0 = s1;
                w0 = w1;
            }
        }
        t0 = t1;
        v0 = v1;
    }

    std::sort(roots.begin(), roots.end());
    long long count = 0;
    double prev = -1.0;
    const double dedupe = 0.25 * step / 8.0;
    for (double r : roots) {
        if (r >= 2.0 * kPi - dedupe) continue;  // belongs to the next period
        if (count == 0 || r - prev > dedupe) {
            ++count;
            prev = r;
        }
    }
    return count;
}

double c_ratio(const FamilySpec& spec, int n) {
    const long long d = 2LL * n + 2LL * spec.l;
    long long u;
    if (spec.palindromic()) {
        u = count_unimodular_signchange(spec, n);
    } else {
        u = count_roots_modulus(expand_polynomial(spec, n)).on_circle;
    }
    return static_cast<double>(d - u) / static_cast<double>(d);
}

double c_ratio(const IntPolynomial& poly) {
    const RootCensus census = count_roots_modulus(poly);
    return static_cast<double>(census.degree - census.on_circle) /
           static_cast<double>(census.degree);
}

double erdos_turan_constant(const FamilySpec& spec) {
    double num = std::abs(static_cast<double>(spec.a[0]));
    for (int j = 1; j <= spec.k; ++j) num += 2.0 * std::abs(static_cast<double>(spec.a[j]));
    for (long long bj : spec.b) num += 2.0 * std::abs(static_cast<double>(bj));
    const double den = std::sqrt(std::abs(static_cast<double>(spec.b.front()) *
                                          static_cast<double>(spec.b.back())));
    return std::sqrt(std::log(num / den));
}

double erdos_turan_constant(const IntPolynomial& poly) {
    if (poly.is_zero()) throw SpecError("coefficient functional of the zero polynomial");
    IntPolynomial p = poly;
    p.normalize_trailing();  // the functional needs a nonzero constant term
    double num = 0.0;
    for (long long c : p.coeffs) num += std::abs(static_cast<double>(c));
    const double den = std::sqrt(std::abs(static_cast<double>(p.coeffs.front()) *
                                          static_cast<double>(p.leading())));
    return std::sqrt(std::log(num / den));
}

double erdos_turan_bound(const FamilySpec& spec, int n, int r) {
    return 16.0 * r * erdos_turan_constant(spec) / std::sqrt(2.0 * n + 2.0 * spec.l);
}

ConvergenceReport convergence_report(const FamilySpec& spec, const std::vector<int>& n_list,
                                     double lc) {
    if (!spec.palindromic())
        throw SpecError("convergence report requires a palindromic spec");
    ConvergenceReport report;
    report.lc = lc;
    report.D = erdos_turan_constant(spec);
    report.r = limit_ratio_exact(spec).above.full_circle_count();
    for (int n : n_list) {
        ConvergenceRow row;
        row.n = n;
        row.degree = 2LL * n + 2LL * spec.l;
        row.c_ratio = c_ratio(spec, n);
        row.abs_err = std::abs(row.c_ratio - lc);
        row.et_bound = erdos_turan_bound(spec, n, report.r);
        report.rows.push_back(row);
    }
    return report;
}

double mahler_univariate(const IntPolynomial& poly) {
    if (poly.is_zero()) throw SpecError("Mahler measure of the zero polynomial");
    IntPolynomial p = poly;
    p.normalize_trailing();  // roots at the origin contribute max(1, 0) = 1
    double m = std::abs(static_cast<double>(p.leading()));
    for (const auto& z : roots_of(p)) m *= std::max(1.0, std::abs(z));
    return m;
}

}  // namespace uniratio
