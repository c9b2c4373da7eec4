#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "cks/legendre.hpp"

namespace cks {

/// Nonlinear map from the reference interval [-1, 1] onto [0, r_c].
struct Mapping {
    enum class Kind { Affine, Algebraic };
    Kind kind = Kind::Algebraic;
    /// Clustering length for the algebraic map, as a fraction of r_c.
    double alpha_scale = 0.35;
};

/// Gauss-Legendre rule with q points on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
GaussRule gauss_legendre(int q);

/// Radial collocation grid on [0, r_c] with Dirichlet endpoints.
///
/// Immutable after construction; shared by reference between orbitals,
/// densities and potential fields.
class RadialGrid {
public:
    RadialGrid(int N, double r_c, const Mapping& mapping);

    int order() const { return colloc_.order; }
    double r_c() const { return rc_; }
    const Mapping& mapping() const { return map_; }
    const CollocationSet& collocation() const { return colloc_; }

    /// Mapped radii r_j, j = 0..N, with r_0 = 0 and r_N = r_c exactly.
    const std::vector<double>& r() const { return r_; }
    /// Jacobian r'(x_j).
    const std::vector<double>& jacobian() const { return rp_; }
    /// Quadrature weights for integrals dr over [0, r_c].
    const std::vector<double>& weights() const { return w_; }
    /// Reference-interval LGL weights.
    const std::vector<double>& weights_x() const { return colloc_.w; }

    /// integral_0^{r_c} f dr from nodal samples.
    double integrate(const std::vector<double>& f) const;
    /// F_i = integral_0^{r_i} f dr for every node, spectrally accurate.
    std::vector<double> cumulative_integral(const std::vector<double>& f) const;
    /// df/dr at every node from nodal samples.
    std::vector<double> derivative(const std::vector<double>& f) const;
    /// d2f/dr2 at every node.
    std::vector<double> second_derivative(const std::vector<double>& f) const;

    /// Interpolates nodal samples at an arbitrary radius in [0, r_c].
    double interpolate(const std::vector<double>& f, double r) const;

    /// Cardinal derivative matrix in x, (N+1) x (N+1) row-major.
    const std::vector<double>& deriv_matrix_x() const { return dx_; }

private:
    Mapping map_;
    double rc_;
    CollocationSet colloc_;
    std::vector<double> r_, rp_, w_;
    std::vector<double> dx_;
    /// Cx[i][j] = integral_{-1}^{x_i} g_j(x) dx, row-major.
    std::vector<double> cumx_;
    double x_of_r(double r) const;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Symmetric discrete operator -(1/2) d2/dr2 + l(l+1)/(2 r^2) over the
/// interior nodes, Dirichlet boundary rows/columns removed.
class ChannelOperator {
public:
    ChannelOperator(GridPtr grid, int l);

    int l() const { return l_; }
    const GridPtr& grid() const { return grid_; }
    /// Kinetic-plus-centrifugal part, size (N-1) x (N-1).
    const Eigen::MatrixXd& base_matrix() const { return h0_; }
    /// Full channel Hamiltonian for a potential sampled at interior nodes.
    Eigen::MatrixXd hamiltonian(const std::vector<double>& v_interior) const;

private:
    GridPtr grid_;
    int l_;
    Eigen::MatrixXd h0_;
};

ChannelOperator channel_operator(GridPtr grid, int l);

} // namespace cks
