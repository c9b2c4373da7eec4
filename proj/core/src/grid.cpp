#include "cks/grid.hpp"

#include <cmath>
#include <string>

#include "cks/errors.hpp"

namespace cks {

GaussRule gauss_legendre(int q) {
    GaussRule g;
    g.x.resize(q);
    g.w.resize(q);
    for (int i = 0; i < q; ++i) {
        // Tricomi-style initial guess, then Newton on P_q.
        double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
        for (int it = 0; it < 100; ++it) {
            LegendreEval e = legendre_eval(q, x);
            double dx = e.p / e.dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        LegendreEval e = legendre_eval(q, x);
        g.x[q - 1 - i] = x;
        g.w[q - 1 - i] = 2.0 / ((1.0 - x * x) * e.dp * e.dp);
    }
    return g;
}

namespace {

struct MapEval {
    double r;
    double rp;
};

MapEval apply_map(const Mapping& m, double rc, double x) {
    if (m.kind == Mapping::Kind::Affine) {
        return {rc * (1.0 + x) / 2.0, rc / 2.0};
    }
    // r = L (1+x) / (1 - x + 2L/rc), which reaches rc exactly at x = +1 and
    // clusters nodes near the origin on the scale L.
    if (m.alpha_scale <= 0.0) {
        throw GridError("algebraic mapping requires a positive clustering parameter");
    }
    const double L = m.alpha_scale * rc;
    const double beta = 2.0 * L / rc;
    const double den = 1.0 - x + beta;
    return {L * (1.0 + x) / den, L * (2.0 + beta) / (den * den)};
}

} // namespace

RadialGrid::RadialGrid(int N, double r_c, const Mapping& mapping)
    : map_(mapping), rc_(r_c), colloc_(legendre_collocation(N)) {
    if (N < 2) throw GridError("RadialGrid: order must be >= 2");
    if (r_c <= 0.0) throw GridError("RadialGrid: r_c must be positive");

    r_.resize(N + 1);
    rp_.resize(N + 1);
    w_.resize(N + 1);
    for (int j = 0; j <= N; ++j) {
        MapEval me = apply_map(map_, rc_, colloc_.x[j]);
        r_[j] = me.r;
        rp_[j] = me.rp;
        w_[j] = colloc_.w[j] * me.rp;
        if (me.rp <= 0.0) throw GridError("RadialGrid: mapping Jacobian not positive");
    }
    r_[0] = 0.0;
    r_[N] = rc_;
    for (int j = 1; j <= N; ++j) {
        if (r_[j] <= r_[j - 1]) throw GridError("RadialGrid: mapped radii not increasing");
    }

    dx_ = cardinal_derivative_matrix(colloc_);

    // Cumulative integration matrix over the reference interval: integrate
    // the cardinal basis exactly with a per-interval Gauss rule of degree
    // at least N.
    const int q = N / 2 + 2;
    GaussRule gr = gauss_legendre(q);
    std::vector<double> bw = barycentric_weights(colloc_);
    cumx_.assign((N + 1) * (N + 1), 0.0);
    std::vector<double> seg(N + 1);
    std::vector<double> row_prev(N + 1, 0.0);
    for (int i = 1; i <= N; ++i) {
        const double a = colloc_.x[i - 1];
        const double b = colloc_.x[i];
        std::fill(seg.begin(), seg.end(), 0.0);
        for (int qq = 0; qq < q; ++qq) {
            const double t = 0.5 * (a + b) + 0.5 * (b - a) * gr.x[qq];
            const double wt = 0.5 * (b - a) * gr.w[qq];
            // Cardinal values at t via the barycentric identity.
            double s = 0.0;
            for (int j = 0; j <= N; ++j) s += bw[j] / (t - colloc_.x[j]);
            for (int j = 0; j <= N; ++j) {
                seg[j] += wt * (bw[j] / (t - colloc_.x[j])) / s;
            }
        }
        for (int j = 0; j <= N; ++j) {
            cumx_[i * (N + 1) + j] = row_prev[j] + seg[j];
            row_prev[j] = cumx_[i * (N + 1) + j];
        }
    }
}

double RadialGrid::integrate(const std::vector<double>& f) const {
    double s = 0.0;
    for (size_t j = 0; j < f.size(); ++j) s += w_[j] * f[j];
    return s;
}

std::vector<double> RadialGrid::cumulative_integral(const std::vector<double>& f) const {
    const int N = colloc_.order;
    std::vector<double> g(N + 1), out(N + 1, 0.0);
    for (int j = 0; j <= N; ++j) g[j] = f[j] * rp_[j];
    for (int i = 1; i <= N; ++i) {
        double s = 0.0;
        const double* row = &cumx_[i * (N + 1)];
        for (int j = 0; j <= N; ++j) s += row[j] * g[j];
        out[i] = s;
    }
    return out;
}

std::vector<double> RadialGrid::derivative(const std::vector<double>& f) const {
    const int N = colloc_.order;
    std::vector<double> out(N + 1, 0.0);
    for (int i = 0; i <= N; ++i) {
        double s = 0.0;
        const double* row = &dx_[i * (N + 1)];
        for (int j = 0; j <= N; ++j) s += row[j] * f[j];
        out[i] = s / rp_[i];
    }
    return out;
}

std::vector<double> RadialGrid::second_derivative(const std::vector<double>& f) const {
    return derivative(derivative(f));
}

double RadialGrid::x_of_r(double rr) const {
    if (map_.kind == Mapping::Kind::Affine) return 2.0 * rr / rc_ - 1.0;
    const double L = map_.alpha_scale * rc_;
    const double beta = 2.0 * L / rc_;
    // Invert r = L(1+x)/(1-x+beta).
    return (rr * (1.0 + beta) - L) / (rr + L);
}

double RadialGrid::interpolate(const std::vector<double>& f, double rr) const {
    return barycentric_eval(colloc_, f, x_of_r(rr));
}

ChannelOperator::ChannelOperator(GridPtr grid, int l) : grid_(std::move(grid)), l_(l) {
    if (l < 0) throw GridError("ChannelOperator: l must be >= 0, got " + std::to_string(l));
    const RadialGrid& g = *grid_;
    const int N = g.order();
    const auto& D = g.deriv_matrix_x();
    const auto& wx = g.weights_x();
    const auto& rp = g.jacobian();
    const auto& w = g.weights();
    const auto& r = g.r();

    // Weak-form kinetic matrix over interior nodes: symmetric by
    // construction, Dirichlet via omission of the boundary basis.
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N - 1, N - 1);
    for (int i = 0; i <= N; ++i) {
        const double c = 0.5 * wx[i] / rp[i];
        const double* row = &D[i * (N + 1)];
        for (int a = 1; a < N; ++a) {
            const double da = row[a];
            if (da == 0.0) continue;
            for (int b = a; b < N; ++b) {
                K(a - 1, b - 1) += c * da * row[b];
            }
        }
    }
    for (int a = 0; a < N - 1; ++a)
        for (int b = 0; b < a; ++b) K(a, b) = K(b, a);

    // Diagonal mass matrix (the r-space quadrature weights); fold in its
    // inverse square root so the eigenproblem is standard symmetric.
    h0_ = Eigen::MatrixXd(N - 1, N - 1);
    for (int a = 1; a < N; ++a) {
        for (int b = 1; b < N; ++b) {
            h0_(a - 1, b - 1) = K(a - 1, b - 1) / std::sqrt(w[a] * w[b]);
        }
        h0_(a - 1, a - 1) += 0.5 * l_ * (l_ + 1) / (r[a] * r[a]);
    }
}

Eigen::MatrixXd ChannelOperator::hamiltonian(const std::vector<double>& v_interior) const {
    const int n = static_cast<int>(h0_.rows());
    if (static_cast<int>(v_interior.size()) != n) {
        throw GridError("ChannelOperator::hamiltonian: potential size mismatch");
    }
    Eigen::MatrixXd h = h0_;
    for (int a = 0; a < n; ++a) h(a, a) += v_interior[a];
    return h;
}

ChannelOperator channel_operator(GridPtr grid, int l) {
    return ChannelOperator(std::move(grid), l);
}

} // namespace cks
