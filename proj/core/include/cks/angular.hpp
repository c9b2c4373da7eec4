#pragma once

namespace cks {

/// Wigner 3j symbol (l1 l2 l3; 0 0 0), Racah closed form. Zero when the
/// triangle rule fails or l1+l2+l3 is odd.
double wigner3j_000(int l1, int l2, int l3);

/// Multipole weight of the k-pole in the m-averaged self term of a shell
/// with angular momentum l. Equals 1 at k = 0 for any l, so the exchange
/// hole keeps its full monopole charge.
double shell_self_multipole(int l, int k);

/// Multipole weight of the k-pole in the m-averaged cross term between two
/// distinct shells l1, l2 (per ordered pair).
double shell_cross_multipole(int l1, int l2, int k);

} // namespace cks
