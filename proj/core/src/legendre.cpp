#include "cks/legendre.hpp"

#include <cmath>
#include <string>

#include "cks/errors.hpp"

namespace cks {

LegendreEval legendre_eval(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    // (1-x^2) P_n' = n (P_{n-1} - x P_n)
    double omx2 = 1.0 - x * x;
    double dp, d2p;
    if (std::abs(omx2) > 1e-14) {
        dp = n * (p0 - x * p1) / omx2;
        // (1-x^2) P_n'' = 2 x P_n' - n(n+1) P_n
        d2p = (2.0 * x * dp - n * (n + 1) * p1) / omx2;
    } else {
        double s = (x > 0) ? 1.0 : ((n % 2 == 0) ? -1.0 : 1.0);
        dp = s * n * (n + 1) / 2.0;
        d2p = s * (n - 1) * n * (n + 1) * (n + 2) / 8.0;
    }
    return {p1, dp, d2p};
}

CollocationSet legendre_collocation(int N) {
    if (N < 2) throw GridError("legendre_collocation: order must be >= 2, got " + std::to_string(N));
    CollocationSet c;
    c.order = N;
    c.x.resize(N + 1);
    c.pn.resize(N + 1);
    c.x[0] = -1.0;
    c.x[N] = 1.0;
    // Interior points: roots of P_N'. Chebyshev-Lobatto abscissae are good
    // starting guesses; Newton on P_N' with the Legendre ODE for P_N''.
    for (int j = 1; j < N; ++j) {
        double x = -std::cos(M_PI * j / N);
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            LegendreEval e = legendre_eval(N, x);
            double dx = e.dp / e.d2p;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                converged = true;
                break;
            }
        }
        LegendreEval e = legendre_eval(N, x);
        if (!converged || std::abs(e.dp) > 1e-12) {
            throw GridError("legendre_collocation: Newton failed for N=" + std::to_string(N) +
                            " near x=" + std::to_string(-std::cos(M_PI * j / N)));
        }
        c.x[j] = x;
    }
    for (int j = 1; j < N; ++j) {
        if (c.x[j] <= c.x[j - 1]) {
            throw GridError("legendre_collocation: non-increasing nodes for N=" + std::to_string(N));
        }
    }
    c.w.resize(N + 1);
    for (int j = 0; j <= N; ++j) {
        c.pn[j] = legendre_eval(N, c.x[j]).p;
        c.w[j] = 2.0 / (N * (N + 1) * c.pn[j] * c.pn[j]);
    }
    return c;
}

std::vector<double> cardinal_derivative_matrix(const CollocationSet& c) {
    const int N = c.order;
    std::vector<double> d((N + 1) * (N + 1), 0.0);
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= N; ++j) {
            if (i == j) continue;
            d[i * (N + 1) + j] = c.pn[i] / (c.pn[j] * (c.x[i] - c.x[j]));
        }
    }
    d[0] = -N * (N + 1) / 4.0;
    d[N * (N + 1) + N] = N * (N + 1) / 4.0;
    return d;
}

std::vector<double> barycentric_weights(const CollocationSet& c) {
    // Nodes are the roots of (1-x^2) P_N'(x); differentiating that nodal
    // polynomial and using the Legendre ODE gives weights 1/P_N(x_j) up to
    // a common constant, which cancels in the barycentric ratio.
    const int N = c.order;
    std::vector<double> bw(N + 1);
    for (int j = 0; j <= N; ++j) bw[j] = 1.0 / c.pn[j];
    return bw;
}

double barycentric_eval(const CollocationSet& c, const std::vector<double>& f, double x) {
    static thread_local std::vector<double> bw_cache;
    static thread_local int bw_order = -1;
    if (bw_order != c.order) {
        bw_cache = barycentric_weights(c);
        bw_order = c.order;
    }
    const int N = c.order;
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= N; ++j) {
        double dx = x - c.x[j];
        if (dx == 0.0) return f[j];
        double t = bw_cache[j] / dx;
        num += t * f[j];
        den += t;
    }
    return num / den;
}

} // namespace cks
