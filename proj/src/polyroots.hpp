#pragma once

// Internal numerics shared by the solver and the oracle: Parlett-Reinsch
// balancing and companion-matrix polynomial roots. Eigen's EigenSolver does
// not balance, which loses accuracy badly on matrices with wide entry
// ranges (colleague matrices of Salem-power envelopes reach ~1e13).

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <vector>

namespace uniratio::detail {

inline void balance(Eigen::MatrixXd& A) {
    const int n = static_cast<int>(A.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(A(j, i));
                r += std::abs(A(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double f = 1.0;
            const double s = c + r;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if ((c + r) < 0.95 * s) {
                converged = false;
                A.col(i) *= f;
                A.row(i) /= f;
            }
        }
    }
}

inline std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> v(0.0, 0.0);
    for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
    return v;
}

/// All complex roots of sum c_i x^i (c ascending, leading nonzero), from the
/// balanced companion matrix followed by a few Newton steps on the
/// polynomial itself.
inline std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d <= 0) return {};
    std::vector<double> monic(coeffs);
    const double lead = monic.back();
    for (double& v : monic) v /= lead;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) A(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) A(i, d - 1) = -monic[static_cast<std::size_t>(i)];
    balance(A);
    Eigen::EigenSolver<Eigen::MatrixXd> es(A, /*computeEigenvectors=*/false);

    std::vector<double> deriv(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        deriv[static_cast<std::size_t>(i - 1)] = static_cast<double>(i) * monic[static_cast<std::size_t>(i)];

    std::vector<std::complex<double>> roots(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::complex<double> z = es.eigenvalues()(i);
        std::complex<double> best = z;
        double best_abs = std::abs(horner(monic, z));
        for (int it = 0; it < 4; ++it) {
            const std::complex<double> p = horner(monic, z);
            const std::complex<double> g = horner(deriv, z);
            if (g == std::complex<double>(0.0, 0.0)) break;
            z -= p / g;
            const double v = std::abs(horner(monic, z));
            if (v < best_abs) {
                best_abs = v;
                best = z;
            }
        }
        roots[static_cast<std::size_t>(i)] = best;
    }
    return roots;
}

}  // namespace uniratio::detail
