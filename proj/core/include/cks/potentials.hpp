#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cks/configuration.hpp"
#include "cks/grid.hpp"
#include "cks/orbital.hpp"

namespace cks {

enum class NormTag { Unit, NElectron };

/// Spherically averaged total electron density on the radial grid.
struct RadialDensity {
    GridPtr grid;
    std::vector<double> values; ///< rho(r_j), all N+1 nodes
    NormTag tag = NormTag::NElectron;
    double n_electrons = 2.0;

    /// 4 pi integral rho r^2 dr.
    double norm() const;
    /// Throws unless the norm matches the tag to the given tolerance.
    void check_norm(double tol = 1e-8) const;
    RadialDensity to_unit() const;
    RadialDensity to_n_electron() const;
};

enum class PotentialKind { Nuclear, Hartree, Exchange, Correlation, Effective };

struct PotentialField {
    GridPtr grid;
    std::vector<double> values; ///< v(r_j), all N+1 nodes
    PotentialKind kind = PotentialKind::Effective;
};

/// Radial exchange field of the Fermi hole plus the enclosed hole charge
/// as a function of the electron position.
struct FermiHoleField {
    GridPtr grid;
    std::vector<double> field;       ///< E_x(r_j), interior meaningful
    std::vector<double> hole_charge; ///< q_x(r_j); -1 everywhere by the sum rule
};

/// Parameters of the correlation functionals, loaded from the versioned
/// constants file (overridable through CONFINED_KS_CONSTANTS).
struct CorrelationConstants {
    double wigner_a = 0.0;
    double wigner_b = 0.0;
    double lyp_a = 0.0;
    double lyp_b = 0.0;
    double lyp_c = 0.0;
    double lyp_d = 0.0;

    static CorrelationConstants load(const std::string& path);
    /// Resolves CONFINED_KS_CONSTANTS, then the build-tree data file.
    static CorrelationConstants load_default();
};

enum class SpinTreatment { Compensated, Polarized };

struct CorrelationResult {
    PotentialField potential;
    double energy = 0.0;
};

/// Classical Coulomb repulsion of the N-electron density by nodewise
/// cumulative quadrature. The density must carry the NElectron tag.
PotentialField hartree_potential(const RadialDensity& density);

/// Radial exchange field generated by the m-averaged Fermi hole of the
/// configuration's occupied orbitals, reduced to multipole radial sums.
FermiHoleField fermi_hole_exchange_field(const std::vector<Orbital>& orbitals,
                                         const Configuration& config,
                                         const RadialDensity& density);

/// Work-function exchange potential: inward line integral of the exchange
/// field, anchored at v_x(r_c) = -1/r_c.
PotentialField work_function_exchange(const FermiHoleField& field);

/// Exchange interaction energy of the density with its Fermi hole.
double exchange_energy(const std::vector<Orbital>& orbitals,
                       const Configuration& config,
                       const RadialDensity& density);

/// Local Wigner-type correlation potential and energy.
CorrelationResult wigner_correlation(const RadialDensity& density,
                                     const CorrelationConstants& c);

/// Lee-Yang-Parr correlation in its Laplacian-containing form. Density
/// derivatives are evaluated pseudospectrally on the grid. The fully
/// spin-polarized treatment yields identically zero correlation.
CorrelationResult lyp_correlation(const RadialDensity& density,
                                  const CorrelationConstants& c,
                                  SpinTreatment spin);

/// v_eff = -Z/r + v_H + v_x (+ v_c). All fields must share one grid.
PotentialField assemble_effective_potential(double Z,
                                            const PotentialField& hartree,
                                            const PotentialField& exchange,
                                            const PotentialField* correlation);

} // namespace cks
