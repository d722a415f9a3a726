#include "uniratio/trig_kernel.hpp"

#include <cmath>
#include <cstdlib>

namespace uniratio {

CosineSeries CosineSeries::constant(double c) {
    CosineSeries s;
    s.add_term(0, c);
    return s;
}

void CosineSeries::add_term(int doubled_freq, double coeff) {
    if (doubled_freq < 0) doubled_freq = -doubled_freq;
    double& slot = terms_[doubled_freq];
    slot += coeff;
    if (slot == 0.0) terms_.erase(doubled_freq);
}

double CosineSeries::eval(double t) const {
    double s = 0.0;
    for (const auto& [nu, c] : terms_) s += c * std::cos(0.5 * nu * t);
    return s;
}

double CosineSeries::deriv_eval(double t) const {
    double s = 0.0;
    for (const auto& [nu, c] : terms_) s -= c * (0.5 * nu) * std::sin(0.5 * nu * t);
    return s;
}

long double CosineSeries::eval_precise(double t) const {
    long double s = 0.0L;
    const long double tl = t;
    for (const auto& [nu, c] : terms_) s += static_cast<long double>(c) * cosl(0.5L * nu * tl);
    return s;
}

bool CosineSeries::integer_frequencies() const {
    for (const auto& [nu, c] : terms_) {
        (void)c;
        if (nu % 2 != 0) return false;
    }
    return true;
}

int CosineSeries::max_doubled_frequency() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

double CosineSeries::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [nu, c] : terms_) {
        (void)nu;
        m = std::max(m, std::abs(c));
    }
    return m;
}

bool CosineSeries::is_zero(double eps) const {
    return max_abs_coeff() <= eps;
}

CosineSeries CosineSeries::squared() const {
    // cos(A)cos(B) = (cos(A+B) + cos(A-B)) / 2; doubled frequencies add and
    // subtract exactly as integers.
    CosineSeries out;
    for (const auto& [n1, c1] : terms_) {
        for (const auto& [n2, c2] : terms_) {
            const double h = 0.5 * c1 * c2;
            out.add_term(n1 + n2, h);
            out.add_term(std::abs(n1 - n2), h);
        }
    }
    return out;
}

CosineSeries CosineSeries::operator-(const CosineSeries& rhs) const {
    CosineSeries out = *this;
    for (const auto& [nu, c] : rhs.terms_) out.add_term(nu, -c);
    return out;
}

CosineSeries CosineSeries::scaled(double c) const {
    CosineSeries out;
    for (const auto& [nu, v] : terms_) out.add_term(nu, c * v);
    return out;
}

TrigWave TrigWave::cosine(const CosineSeries& s) {
    TrigWave w;
    w.is_sine = false;
    w.terms = s.terms();
    return w;
}

TrigWave TrigWave::sine_term(int doubled_freq, double coeff) {
    TrigWave w;
    w.is_sine = true;
    w.terms[doubled_freq] = coeff;
    return w;
}

double TrigWave::eval(double t) const {
    double s = 0.0;
    if (is_sine) {
        for (const auto& [nu, c] : terms) s += c * std::sin(0.5 * nu * t);
    } else {
        for (const auto& [nu, c] : terms) s += c * std::cos(0.5 * nu * t);
    }
    return s;
}

CosineSeries TrigWave::squared() const {
    CosineSeries out;
    if (is_sine) {
        // sin(A)sin(B) = (cos(A-B) - cos(A+B)) / 2
        for (const auto& [n1, c1] : terms) {
            for (const auto& [n2, c2] : terms) {
                const double h = 0.5 * c1 * c2;
                out.add_term(std::abs(n1 - n2), h);
                out.add_term(n1 + n2, -h);
            }
        }
        return out;
    }
    CosineSeries c;
    for (const auto& [nu, v] : terms) c.add_term(nu, v);
    return c.squared();
}

ChebPoly::ChebPoly(std::vector<double> cheb_coeffs) : c_(std::move(cheb_coeffs)) {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double ChebPoly::evaluate(double w) const {
    // Clenshaw recurrence.
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = c_.size(); i-- > 1;) {
        const double b0 = 2.0 * w * b1 - b2 + c_[i];
        b2 = b1;
        b1 = b0;
    }
    return c_.empty() ? 0.0 : w * b1 - b2 + c_[0];
}

std::vector<double> ChebPoly::monomial_coefficients() const {
    if (c_.empty()) return {};
    const std::size_t n = c_.size();
    std::vector<double> out(n, 0.0);
    std::vector<double> tm1{1.0};       // T_0
    std::vector<double> tm{0.0, 1.0};   // T_1
    out[0] += c_[0];
    if (n > 1) out[1] += c_[1];
    for (std::size_t m = 2; m < n; ++m) {
        std::vector<double> t(m + 1, 0.0);
        for (std::size_t i = 0; i < tm.size(); ++i) t[i + 1] += 2.0 * tm[i];
        for (std::size_t i = 0; i < tm1.size(); ++i) t[i] -= tm1[i];
        for (std::size_t i = 0; i <= m; ++i) out[i] += c_[m] * t[i];
        tm1 = std::move(tm);
        tm = std::move(t);
    }
    return out;
}

CosineSeries envelope_series(const FamilySpec& spec) {
    if (!spec.palindromic())
        throw SpecError("envelope requires palindromic b (b_j = b_{l-j})");
    CosineSeries e;
    const int l = spec.l;
    if (l % 2 == 0) {
        for (int j = 0; j < l / 2; ++j) e.add_term(l - 2 * j, 2.0 * static_cast<double>(spec.b[j]));
        e.add_term(0, static_cast<double>(spec.b[l / 2]));
    } else {
        for (int j = 0; j <= (l - 1) / 2; ++j)
            e.add_term(l - 2 * j, 2.0 * static_cast<double>(spec.b[j]));
    }
    return e;
}

CosineSeries f2_series(const FamilySpec& spec) {
    CosineSeries f;
    f.add_term(0, -0.5 * static_cast<double>(spec.a[0]));
    for (int j = 1; j <= spec.k; ++j) f.add_term(2 * j, -static_cast<double>(spec.a[j]));
    return f;
}

double closed_form_envelope_eval(int l, double t) {
    const double s = std::sin(0.5 * t);
    if (std::abs(s) < 1e-9) {
        // removable singularity at t = 0 mod 2pi; L'Hopital gives
        // (l+1) cos((l+1)t/2) / cos(t/2), which is l+1 at t = 0
        return (l + 1) * std::cos(0.5 * (l + 1) * t) / std::cos(0.5 * t);
    }
    return std::sin(0.5 * (l + 1) * t) / s;
}

CosineSeries squared_difference(const CosineSeries& f2, const CosineSeries& env) {
    return f2.squared() - env.squared();
}

CosineSeries squared_difference(const TrigWave& f2, const TrigWave& env) {
    return f2.squared() - env.squared();
}

ChebPoly to_chebyshev(const CosineSeries& s) {
    if (!s.integer_frequencies())
        throw SpecError("Chebyshev conversion requires integer frequencies");
    std::vector<double> c(static_cast<std::size_t>(s.max_doubled_frequency() / 2) + 1, 0.0);
    for (const auto& [nu, v] : s.terms()) c[static_cast<std::size_t>(nu / 2)] = v;
    return ChebPoly(std::move(c));
}

}  // namespace uniratio
