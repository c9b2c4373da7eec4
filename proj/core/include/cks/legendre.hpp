#pragma once

#include <vector>

namespace cks {

/// Legendre polynomial P_n and derivatives at a point, by upward recurrence.
struct LegendreEval {
    double p;   ///< P_n(x)
    double dp;  ///< P_n'(x)
    double d2p; ///< P_n''(x)
};
LegendreEval legendre_eval(int n, double x);

/// Gauss-Lobatto-Legendre collocation set: x_0 = -1, x_N = +1, interior
/// points at the roots of P_N'.
struct CollocationSet {
    int order;                 ///< N
    std::vector<double> x;     ///< N+1 abscissae, strictly increasing
    std::vector<double> pn;    ///< P_N(x_j), used by cardinal functions
    std::vector<double> w;     ///< quadrature weights for [-1, 1]
};

/// Finds the collocation points for order N (N >= 2). Interior roots are
/// polished to |P_N'(x_j)| residuals at machine level.
CollocationSet legendre_collocation(int N);

/// First-derivative matrix D with D[i][j] = g_j'(x_i), cardinal basis.
/// Row-major (N+1) x (N+1), flattened.
std::vector<double> cardinal_derivative_matrix(const CollocationSet& c);

/// Evaluates the interpolating polynomial through (x_j, f_j) at point x
/// using the second-form barycentric formula for the Lobatto set.
double barycentric_eval(const CollocationSet& c,
                        const std::vector<double>& f, double x);

/// Barycentric weights for the collocation set.
std::vector<double> barycentric_weights(const CollocationSet& c);

} // namespace cks
