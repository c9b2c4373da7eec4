#pragma once

#include <vector>

#include "cks/grid.hpp"

namespace cks {

/// One radial Kohn-Sham orbital. u(r) = r R(r) is stored at every node,
/// with the Dirichlet zeros at r = 0 and r = r_c included, and normalized
/// so that sum_j w_j u_j^2 = 1.
struct Orbital {
    int n = 0;
    int l = 0;
    double eigenvalue = 0.0;
    std::vector<double> u;

    /// Radial factor R(r_j) = u_j / r_j, with the r = 0 limit filled in
    /// (u'(0) for s orbitals, 0 otherwise).
    std::vector<double> radial_values(const RadialGrid& grid) const;

    /// Sign changes of u strictly inside (0, r_c).
    int node_count() const;
};

} // namespace cks
