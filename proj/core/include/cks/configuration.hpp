#pragma once

#include <string>
#include <vector>

namespace cks {

/// One occupied shell of a two-electron configuration.
struct Shell {
    int n;          ///< principal quantum number
    int l;          ///< angular momentum
    double occ;     ///< electrons in the shell
    bool paired;    ///< true when the shell holds both spins (closed 1s2)
};

/// Electronic configuration of an in-scope state, e.g. "1s2 1S" or
/// "1s3d 3D". The supported set is the closed-shell ground state plus the
/// singly excited triplets 1sns (n=2-4), 1snp (n=2-3) and 1s3d.
struct Configuration {
    std::vector<Shell> shells;
    std::string term;    ///< canonical label, e.g. "1s2s 3S"
    double n_electrons = 2.0;

    bool closed_shell() const { return shells.size() == 1; }
    /// Angular momentum of the excited electron (0 for the ground state).
    int excited_l() const { return closed_shell() ? 0 : shells.back().l; }
    int excited_n() const { return closed_shell() ? 1 : shells.back().n; }

    /// Parses a term label. Accepted forms: "1s2 1S", "1s2s 3S",
    /// "1s3p 3P", "1s3d 3D" (case-insensitive in the letters).
    static Configuration from_term(const std::string& label);

    /// All seven in-scope configurations.
    static std::vector<Configuration> in_scope();
};

} // namespace cks
