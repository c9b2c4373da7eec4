#include "cks/angular.hpp"

#include <cmath>

namespace cks {

double wigner3j_000(int l1, int l2, int l3) {
    if (l1 < 0 || l2 < 0 || l3 < 0) return 0.0;
    if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;
    const int J = l1 + l2 + l3;
    if (J % 2 != 0) return 0.0;
    const int s = J / 2;
    auto lf = [](int k) { return std::lgamma(k + 1.0); };
    double logdelta = lf(J - 2 * l1) + lf(J - 2 * l2) + lf(J - 2 * l3) - lf(J + 1);
    double logfac = lf(s) - lf(s - l1) - lf(s - l2) - lf(s - l3);
    double v = std::exp(0.5 * logdelta + logfac);
    return ((s % 2) ? -v : v);
}

double shell_self_multipole(int l, int k) {
    double tj = wigner3j_000(l, k, l);
    return (2.0 * l + 1.0) * tj * tj / (2.0 * k + 1.0);
}

double shell_cross_multipole(int l1, int l2, int k) {
    double tj = wigner3j_000(l1, l2, k);
    return tj * tj;
}

} // namespace cks
