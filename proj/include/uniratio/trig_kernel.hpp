#pragma once

#include <map>
#include <vector>

#include "uniratio/family_spec.hpp"

namespace uniratio {

/// Finite cosine expansion with half-integer frequencies:
///
///   S(t) = sum_v c_v cos((v/2) t),   v = doubled frequency, a nonnegative int.
///
/// Frequencies are stored doubled so the l-odd envelope's half-integer
/// frequencies have exact integer keys and merge exactly under
/// product-to-sum expansion.
class CosineSeries {
  public:
    CosineSeries() = default;
    static CosineSeries constant(double c);

    void add_term(int doubled_freq, double coeff);

    double eval(double t) const;
    double deriv_eval(double t) const;  // d/dt

    /// Extended-precision evaluation; resolves signs down to ~1e-19 * |c|_1,
    /// below the double-precision cancellation floor of wide-range series.
    long double eval_precise(double t) const;

    /// True when every stored frequency is an integer (all keys even).
    bool integer_frequencies() const;
    int max_doubled_frequency() const;
    double max_abs_coeff() const;
    bool is_zero(double eps = 0.0) const;

    CosineSeries squared() const;
    CosineSeries operator-(const CosineSeries& rhs) const;
    CosineSeries scaled(double c) const;

    const std::map<int, double>& terms() const { return terms_; }

  private:
    std::map<int, double> terms_;  // doubled frequency -> coefficient
};

/// One component of a crossing pair: a pure sine or pure cosine sum with
/// half-integer frequencies (sine components arise only from the bivariate
/// family table; spec-derived components are cosines).
struct TrigWave {
    bool is_sine = false;
    std::map<int, double> terms;  // doubled frequency -> coefficient

    static TrigWave cosine(const CosineSeries& s);
    static TrigWave sine_term(int doubled_freq, double coeff);

    double eval(double t) const;
    CosineSeries squared() const;
};

/// Real polynomial on [-1, 1] stored in the Chebyshev basis,
/// d(w) = sum_k c_k T_k(w); the basis coefficients of a series with integer
/// frequencies are exactly its cosine coefficients (cos(kt) = T_k(cos t)).
/// Evaluation uses Clenshaw recurrence, stable at any degree.
class ChebPoly {
  public:
    ChebPoly() = default;
    explicit ChebPoly(std::vector<double> cheb_coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coefficients() const { return c_; }

    double evaluate(double w) const;

    /// Conversion to monomial coefficients via T_{m+1} = 2wT_m - T_{m-1}.
    /// Well-conditioned only at small degree; used by test-side Sturm checks.
    std::vector<double> monomial_coefficients() const;

  private:
    std::vector<double> c_;
};

/// E(t) per the l-even / l-odd envelope formulas. Requires palindromic b
/// (throws SpecError).
CosineSeries envelope_series(const FamilySpec& spec);

/// f2(t) = -a0/2 - sum_{j>=1} a_j cos(jt).
CosineSeries f2_series(const FamilySpec& spec);

/// sin((l+1)t/2)/sin(t/2) with the removable singularity at t = 0 mod 2pi
/// evaluated as l+1. Test oracle for the all-ones envelope.
double closed_form_envelope_eval(int l, double t);

/// D = f2^2 - E^2 expanded by product-to-sum; always has integer frequencies
/// and satisfies D(t) = D(2pi - t).
CosineSeries squared_difference(const CosineSeries& f2, const CosineSeries& env);
CosineSeries squared_difference(const TrigWave& f2, const TrigWave& env);

/// Chebyshev-basis view of an integer-frequency series; throws SpecError if a
/// half-integer frequency is present.
ChebPoly to_chebyshev(const CosineSeries& s);

}  // namespace uniratio
