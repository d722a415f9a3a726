#include "uniratio/limit_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polyroots.hpp"

namespace uniratio {

namespace {

constexpr double kPi = std::numbers::pi;

// Eigenvalues of the colleague matrix of sum a_k T_k; the real ones in
// [-1, 1] are the roots we want.
std::vector<std::complex<double>> colleague_eigenvalues(const std::vector<double>& a) {
    const int m = static_cast<int>(a.size()) - 1;  // degree, a[m] != 0
    if (m <= 0) return {};
    if (m == 1) return {std::complex<double>(-a[0] / a[1], 0.0)};
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    A(0, 1) = 1.0;
    for (int j = 1; j < m - 1; ++j) {
        A(j, j - 1) = 0.5;
        A(j, j + 1) = 0.5;
    }
    A(m - 1, m - 2) += 0.5;
    for (int j = 0; j < m; ++j) A(m - 1, j) -= a[static_cast<std::size_t>(j)] / (2.0 * a[static_cast<std::size_t>(m)]);
    detail::balance(A);
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
    return out;
}

struct NormalizedSeries {
    CosineSeries series;  // scaled so the max |coefficient| is 1
    double residual_tol = 0.0;
};

NormalizedSeries normalize_series(const CosineSeries& D) {
    const double norm = D.max_abs_coeff();
    if (norm <= 1e-14)
        throw DegenerateEnvelopeError(
            "degenerate-envelope: |f2| == |E| identically; the limit ratio is "
            "undefined along the exact path, use the finite oracle");
    NormalizedSeries ns;
    // scale by a power of two: exact on every coefficient, so the scaled
    // series is the same function (a 1/max scaling would perturb wide-range
    // coefficients by ~eps*max, visibly moving steep crossing angles)
    ns.series = D.scaled(std::exp2(-std::ceil(std::log2(norm))));
    double l1 = 0.0;
    for (const auto& [nu, c] : ns.series.terms()) {
        (void)nu;
        l1 += std::abs(c);
    }
    ns.residual_tol = 1e-12 * std::max(1.0, l1);
    return ns;
}

// Newton polish of a crossing angle, clamped to [0, pi]; residuals evaluate
// in extended precision so wide-range coefficient series still localize
// steep crossings to ~1e-12. Falls back to the best seen point when the
// iteration stops improving |D|.
double polish_angle(const CosineSeries& D, double theta) {
    double best = std::clamp(theta, 0.0, kPi);
    double best_val = std::abs(static_cast<double>(D.eval_precise(best)));
    double t = best;
    for (int it = 0; it < 60; ++it) {
        const double f = static_cast<double>(D.eval_precise(t));
        const double g = D.deriv_eval(t);
        if (g == 0.0) break;
        double t2 = std::clamp(t - f / g, 0.0, kPi);
        const double v2 = std::abs(static_cast<double>(D.eval_precise(t2)));
        if (v2 < best_val) {
            best_val = v2;
            best = t2;
        }
        if (std::abs(t2 - t) < 1e-16) break;
        t = t2;
    }
    return best;
}

}  // namespace

double IntervalSet::measure() const {
    double m = 0.0;
    for (const auto& [a, b] : intervals) m += b - a;
    return m;
}

int IntervalSet::full_circle_count() const {
    if (intervals.empty()) return 0;
    // Reflection about pi glues only at pi itself; [0, b] reflects to
    // [2pi-b, 2pi], which stays a separate interval of the segment [0, 2pi].
    int r = 2 * count();
    if (std::abs(intervals.back().second - kPi) < 1e-12) r -= 1;
    return r;
}

EnvelopePair EnvelopePair::from_spec(const FamilySpec& spec) {
    EnvelopePair p;
    p.f2 = TrigWave::cosine(f2_series(spec));
    p.env = TrigWave::cosine(envelope_series(spec));
    p.unit_domain = false;
    return p;
}

std::vector<double> find_crossings(const ChebPoly& d) {
    // Rebuild the series view; Chebyshev coefficients of an
    // integer-frequency series are its cosine coefficients.
    CosineSeries series;
    const auto& coeffs = d.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) series.add_term(2 * static_cast<int>(k), coeffs[k]);

    const NormalizedSeries ns = normalize_series(series);

    std::vector<double> cheb;
    cheb.reserve(coeffs.size());
    const double scale = std::exp2(-std::ceil(std::log2(series.max_abs_coeff())));
    for (double c : coeffs) cheb.push_back(c * scale);
    // trim numerically-zero leading coefficients before forming the matrix
    while (cheb.size() > 1 && std::abs(cheb.back()) < 1e-14) cheb.pop_back();

    std::vector<double> roots;
    for (const auto& lambda : colleague_eigenvalues(cheb)) {
        if (std::abs(lambda.imag()) > 1e-4 * (1.0 + std::abs(lambda.real()))) continue;
        const double w = lambda.real();
        if (w < -1.0 - 1e-7 || w > 1.0 + 1e-7) continue;
        const double theta = std::acos(std::clamp(w, -1.0, 1.0));
        const double polished = polish_angle(ns.series, theta);
        if (std::abs(ns.series.eval(polished)) <= ns.residual_tol) roots.push_back(polished);
    }
    // endpoint roots can ride just outside the eigenvalue filter
    for (double theta : {0.0, kPi}) {
        if (std::abs(ns.series.eval(theta)) <= ns.residual_tol) roots.push_back(theta);
    }
    std::sort(roots.begin(), roots.end());

    // Even-multiplicity roots come back as candidate clusters spread across
    // the flat |D| <= tol basin (width ~ sqrt(eps)). Two candidates are the
    // same root exactly when D has no resolvable excursion between them;
    // genuinely close simple crossings (narrow above-set dips) always have
    // a resolvable bump in the gap and stay distinct.
    double l1 = 0.0;
    for (const auto& [nu, c] : ns.series.terms()) {
        (void)nu;
        l1 += std::abs(c);
    }
    const long double gap_noise = 16.0L * 1.1e-19L * static_cast<long double>(l1);
    std::vector<double> unique;
    for (double r : roots) {
        if (unique.empty()) {
            unique.push_back(r);
            continue;
        }
        const double gap = r - unique.back();
        if (gap <= 1e-9) continue;
        if (gap < 1e-3 &&
            fabsl(ns.series.eval_precise(0.5 * (r + unique.back()))) <= gap_noise) {
            // same tangency basin: keep the representative with smaller |D|
            if (std::abs(static_cast<double>(ns.series.eval_precise(r))) <
                std::abs(static_cast<double>(ns.series.eval_precise(unique.back()))))
                unique.back() = r;
            continue;
        }
        unique.push_back(r);
    }
    return unique;
}

IntervalSet classify_intervals(const CosineSeries& D, const std::vector<double>& crossings) {
    std::vector<double> pts;
    pts.push_back(0.0);
    for (double c : crossings)
        if (c > 1e-13 && c < kPi - 1e-13) pts.push_back(c);
    pts.push_back(kPi);

    // Series evaluation cannot resolve |D| below cancellation noise; decide
    // midpoint signs in extended precision and treat sub-noise pieces as
    // tangency slivers, not genuine above-set intervals.
    double l1 = 0.0;
    for (const auto& [nu, c] : D.terms()) {
        (void)nu;
        l1 += std::abs(c);
    }
    const long double noise = 4.0L * 1.1e-19L * static_cast<long double>(l1);

    IntervalSet set;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        if (hi - lo < 1e-13) continue;
        const long double mid = D.eval_precise(0.5 * (lo + hi));
        if (mid >= 0.0L && mid > noise) {
            if (!set.intervals.empty() && std::abs(set.intervals.back().second - lo) < 1e-12) {
                set.intervals.back().second = hi;  // tangency inside a kept region
            } else {
                set.intervals.emplace_back(lo, hi);
            }
        }
    }
    return set;
}

namespace {

LimitRatioResult solve_difference(const CosineSeries& D) {
    const ChebPoly cheb = to_chebyshev(D);
    LimitRatioResult res;
    res.method = RatioMethod::exact;
    res.crossings = find_crossings(cheb);
    res.above = classify_intervals(D, res.crossings);
    res.lc = res.above.measure() / kPi;

    const double norm = D.max_abs_coeff();
    res.residuals.reserve(res.crossings.size());
    for (double c : res.crossings) res.residuals.push_back(std::abs(D.eval(c)) / norm);
    return res;
}

}  // namespace

LimitRatioResult limit_ratio_exact(const FamilySpec& spec) {
    if (!spec.palindromic())
        throw SpecError("exact limit ratio requires a palindromic spec; use the finite oracle");
    return solve_difference(squared_difference(f2_series(spec), envelope_series(spec)));
}

LimitRatioResult limit_ratio_exact(const EnvelopePair& pair) {
    return solve_difference(squared_difference(pair.f2, pair.env));
}

double limit_ratio_riemann(const EnvelopePair& pair, long long p) {
    if (p < 1) throw SpecError("riemann sampler requires p >= 1");
    const double span = pair.unit_domain ? kPi : 2.0 * kPi;
    long long s = 0;
    for (long long j = 1; j <= p; ++j) {
        const double t = span * static_cast<double>(j) / static_cast<double>(p);
        if (std::abs(pair.f2.eval(t)) >= std::abs(pair.env.eval(t))) ++s;
    }
    return static_cast<double>(s) / static_cast<double>(p);
}

namespace {

// Adaptive Simpson with bisection fallback: non-finite node values (the
// integrable log singularity at zeros of E) force recursion down to the
// floor cell width, below which the cell contributes its midpoint value.
constexpr double kFloorWidth = 1e-14;

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    if (b - a < kFloorWidth || depth > 64) {
        if (std::isfinite(fm)) return (b - a) * fm;
        return 0.0;
    }
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const bool finite = std::isfinite(fa) && std::isfinite(fm) && std::isfinite(fb) &&
                        std::isfinite(flm) && std::isfinite(frm);
    if (finite) {
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if (std::abs(left + right - whole) <= 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth + 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol) {
    if (b - a < kFloorWidth) return 0.0;
    const double m = 0.5 * (a + b);
    return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 0);
}

// Zeros of E strictly inside (lo, hi): dense bracketing plus bisection.
// These only guide quadrature splitting, so bracketing accuracy is enough.
std::vector<double> env_zeros_between(const TrigWave& env, double lo, double hi) {
    int maxnu = 0;
    for (const auto& [nu, c] : env.terms) {
        (void)c;
        maxnu = std::max(maxnu, nu);
    }
    const int cells = std::max(64, 16 * maxnu);
    std::vector<double> zeros;
    double prev_t = lo, prev_v = env.eval(lo);
    for (int i = 1; i <= cells; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / cells;
        const double v = env.eval(t);
        if (prev_v == 0.0 && prev_t > lo) zeros.push_back(prev_t);
        if (prev_v * v < 0.0) {
            double x0 = prev_t, x1 = t, v0 = prev_v;
            for (int it = 0; it < 80; ++it) {
                const double xm = 0.5 * (x0 + x1);
                const double vm = env.eval(xm);
                if (v0 * vm <= 0.0) {
                    x1 = xm;
                } else {
                    x0 = xm;
                    v0 = vm;
                }
            }
            zeros.push_back(0.5 * (x0 + x1));
        }
        prev_t = t;
        prev_v = v;
    }
    return zeros;
}

}  // namespace

double mahler_limit(const EnvelopePair& pair) {
    const LimitRatioResult exact = limit_ratio_exact(pair);

    const auto integrand = [&](double t) {
        const double f = std::abs(pair.f2.eval(t));
        const double e = std::abs(pair.env.eval(t));
        const double s2 = std::max(f * f - e * e, 0.0);
        return std::log((f + std::sqrt(s2)) / e);
    };

    double total = 0.0;
    for (const auto& [lo, hi] : exact.above.intervals) {
        std::vector<double> pts{lo};
        for (double z : env_zeros_between(pair.env, lo, hi))
            if (z > lo + 1e-13 && z < hi - 1e-13) pts.push_back(z);
        pts.push_back(hi);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            total += integrate(integrand, pts[i], pts[i + 1], 1e-11);
    }
    return std::exp(total / kPi);
}

}  // namespace uniratio
