#include "uniratio/named_families.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace uniratio {

namespace {

constexpr double kPi = std::numbers::pi;

// dense product/accumulate helpers for the bivariate specializations
using Poly = std::vector<long long>;

void add_shifted(Poly& dst, const Poly& src, int shift, long long scale = 1) {
    if (dst.size() < src.size() + static_cast<std::size_t>(shift))
        dst.resize(src.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < src.size(); ++i)
        dst[i + static_cast<std::size_t>(shift)] += scale * src[i];
}

Poly mul(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return {};
    Poly out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

Poly cyclotomic_quotient(int A) {  // (x^A - 1)/(x - 1) = 1 + x + ... + x^{A-1}
    return Poly(static_cast<std::size_t>(A), 1);
}

Poly one_plus_power(int A) {  // 1 + x^A
    Poly p(static_cast<std::size_t>(A) + 1, 0);
    p.front() = 1;
    p.back() += 1;
    return p;
}

IntPolynomial trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return IntPolynomial{std::move(p)};
}

}  // namespace

EnvelopePair table1_pair(const FamilyParams& params) {
    if (params.name == "H" || params.name == "T")
        throw SpecError("families H and T are spec-backed; use h_family_spec / t_family_spec");
    if (params.a < 1 || params.b < 1) throw SpecError("table families require a, b >= 1");

    EnvelopePair pair;
    pair.unit_domain = true;
    // components as functions of theta = pi*u; frequency q/2 in theta has
    // doubled-frequency key q, so integer a and b map directly
    if (params.name == "P") {
        pair.f2 = TrigWave::sine_term(params.b, 1.0);
        pair.env = TrigWave::sine_term(params.a, 2.0);
    } else if (params.name == "Q") {
        CosineSeries f2;
        f2.add_term(params.b, 1.0);
        CosineSeries env;
        env.add_term(params.a, 2.0);
        pair.f2 = TrigWave::cosine(f2);
        pair.env = TrigWave::cosine(env);
    } else if (params.name == "R") {
        pair.f2 = TrigWave::sine_term(params.b, 1.0);
        CosineSeries env;
        env.add_term(params.a, 2.0);
        pair.env = TrigWave::cosine(env);
    } else if (params.name == "S") {
        if (params.epsilon != 1 && params.epsilon != -1)
            throw SpecError("family S requires epsilon = +1 or -1");
        CosineSeries f2;
        f2.add_term(params.a + params.b, 1.0);
        f2.add_term(params.b - params.a, static_cast<double>(params.epsilon));
        pair.f2 = TrigWave::cosine(f2);
        pair.env = TrigWave::cosine(CosineSeries::constant(1.0));
    } else {
        throw SpecError("unknown family '" + params.name + "'");
    }
    return pair;
}

IntPolynomial specialize_bivariate(const FamilyParams& params, int N) {
    if (N < 1) throw SpecError("specialization requires N >= 1");
    const int a = params.a, b = params.b;
    if (a < 1 || b < 1) throw SpecError("table families require a, b >= 1");
    const int pre = std::max(a - b, 0);

    Poly out;
    if (params.name == "P") {
        const Poly pa = cyclotomic_quotient(a), pb = cyclotomic_quotient(b);
        add_shifted(out, pa, pre);
        add_shifted(out, pb, pre + N);
        add_shifted(out, pa, pre + (b - a) + 2 * N);
    } else if (params.name == "Q") {
        const Poly ua = one_plus_power(a), ub = one_plus_power(b);
        add_shifted(out, ua, pre);
        add_shifted(out, ub, pre + N);
        add_shifted(out, ua, pre + (b - a) + 2 * N);
    } else if (params.name == "R") {
        const Poly ua = one_plus_power(a);
        add_shifted(out, ua, pre);
        // (1 - x^b) y
        add_shifted(out, Poly{1}, pre + N);
        add_shifted(out, Poly{1}, pre + b + N, -1);
        add_shifted(out, ua, pre + (b - a) + 2 * N, -1);
    } else if (params.name == "S") {
        if (params.epsilon != 1 && params.epsilon != -1)
            throw SpecError("family S requires epsilon = +1 or -1");
        const long long e = params.epsilon;
        Poly xa(static_cast<std::size_t>(a) + 1, 0), xb(static_cast<std::size_t>(b) + 1, 0);
        xa.front() = e;
        xa.back() += 1;
        xb.front() = e;
        xb.back() += 1;
        add_shifted(out, Poly{1}, 0);
        add_shifted(out, mul(xa, xb), N);
        add_shifted(out, Poly{1}, a + b + 2 * N);
    } else {
        throw SpecError("no bivariate form for family '" + params.name + "'");
    }
    return trim(std::move(out));
}

FamilySpec h_family_spec(int m) {
    if (m < 2) throw SpecError("H family requires m >= 2");
    return validate_spec(0, m - 1, {1}, std::vector<long long>(static_cast<std::size_t>(m), 1));
}

std::pair<double, double> hbounds(int m) {
    if (m < 2) throw SpecError("hbounds requires m >= 2");
    const double factor = std::sin((m - 1) * kPi / (2.0 * m)) / std::sin(kPi / (2.0 * m));
    return {2.0 / (kPi * (2.0 * m + 1.0)) * factor, 2.0 / (6.0 * m - kPi) * factor};
}

std::pair<long long, long long> salem_power_coeffs(int m) {
    if (m < 1) throw SpecError("salem power coefficients require m >= 1");
    // b1 = -p_m, integer Newton recurrence on the power sums of
    // x^4 - x^3 - x^2 - x + 1
    long long p1 = 1, p2 = 3, p3 = 7, p4 = 7;
    long long p[4] = {p1, p2, p3, p4};
    long long b1;
    if (m <= 4) {
        b1 = -p[m - 1];
    } else {
        for (int i = 5; i <= m; ++i) {
            const long long next = p[3] + p[2] + p[1] - p[0];
            p[0] = p[1];
            p[1] = p[2];
            p[2] = p[3];
            p[3] = next;
        }
        b1 = -p[3];
    }

    // b2 = sum over the six pairwise root products of their m-th powers
    //    = 2 + (gamma^m + gamma^-m)(theta^m + conj(theta)^m),
    // with gamma + 1/gamma and theta + conj(theta) the roots of z^2 - z - 3.
    const long double s13 = sqrtl(13.0L);
    const long double z1 = (1.0L + s13) / 2.0L;
    const long double z2 = (1.0L - s13) / 2.0L;
    long double u0 = 2.0L, u1 = z1, v0 = 2.0L, v1 = z2;
    for (int i = 1; i < m; ++i) {
        const long double un = z1 * u1 - u0;
        const long double vn = z2 * v1 - v0;
        u0 = u1;
        u1 = un;
        v0 = v1;
        v1 = vn;
    }
    const long double b2_real = 2.0L + u1 * v1;
    const long double rounded = roundl(b2_real);
    if (fabsl(b2_real - rounded) > 1e-6L)
        throw NumericError("integrality assertion failed for b2 at m = " + std::to_string(m) +
                           " (residual " + std::to_string(static_cast<double>(b2_real - rounded)) +
                           ")");
    return {b1, static_cast<long long>(rounded)};
}

FamilySpec t_family_spec(int m) {
    const auto [b1, b2] = salem_power_coeffs(m);
    return validate_spec(0, 4, {2}, {1, b1, b2, b1, 1});
}

}  // namespace uniratio
