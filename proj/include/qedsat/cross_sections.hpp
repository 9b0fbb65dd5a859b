// Closed-form spin-averaged squared matrix elements (units of e^4) for the
// four tree-level processes, written directly from the standard Mandelstam
// expressions. These are the reference values the amplitude construction is
// validated against; they share no code with the spinor evaluation.

#pragma once

#include "qedsat/kinematics.hpp"

namespace qedsat {

// (1/4) sum over all 16 helicity configurations, massive electrons.
inline double moller_msq(double s, double t, double u, double m2) {
    const double sm = s - 2 * m2, tm = t - 2 * m2, um = u - 2 * m2;
    return 2.0 / (t * t) * (sm * sm + um * um + 4 * m2 * t) +
           2.0 / (u * u) * (sm * sm + tm * tm + 4 * m2 * u) +
           4.0 / (t * u) * (s - 2 * m2) * (s - 6 * m2);
}

// Crossing s <-> u of the Moller expression.
inline double bhabha_msq(double s, double t, double u, double m2) {
    const double sm = s - 2 * m2, tm = t - 2 * m2, um = u - 2 * m2;
    return 2.0 / (t * t) * (um * um + sm * sm + 4 * m2 * t) +
           2.0 / (s * s) * (um * um + tm * tm + 4 * m2 * s) +
           4.0 / (s * t) * (u - 2 * m2) * (u - 6 * m2);
}

// e- e+ -> gamma gamma in terms of the photon-leg invariants p1.k3, p1.k4.
inline double annihilation_msq(double pk3, double pk4, double m2) {
    const double inv_sum = 1.0 / pk3 + 1.0 / pk4;
    return 2.0 * (pk4 / pk3 + pk3 / pk4 + 2 * m2 * inv_sum - m2 * m2 * inv_sum * inv_sum);
}

// Compton in terms of p1.k2 (incoming photon) and p1.k4 (outgoing photon).
inline double compton_msq(double pk_in, double pk_out, double m2) {
    const double inv_diff = 1.0 / pk_in - 1.0 / pk_out;
    return 2.0 * (pk_out / pk_in + pk_in / pk_out + 2 * m2 * inv_diff +
                  m2 * m2 * inv_diff * inv_diff);
}

// Dispatch on a constructed kinematic point.
inline double reference_msq(const Kinematics& kin) {
    const double m2 = kin.mass * kin.mass;
    const double s = minkowski_norm2(FourVector(kin.p[0] + kin.p[1]));
    const double t = minkowski_norm2(FourVector(kin.p[0] - kin.p[2]));
    const double u = minkowski_norm2(FourVector(kin.p[0] - kin.p[3]));
    switch (kin.process) {
        case ProcessKind::Bhabha: return bhabha_msq(s, t, u, m2);
        case ProcessKind::Moller: return moller_msq(s, t, u, m2);
        case ProcessKind::Annihilation:
            return annihilation_msq(minkowski_dot(kin.p[0], kin.p[2]),
                                    minkowski_dot(kin.p[0], kin.p[3]), m2);
        case ProcessKind::Compton:
            return compton_msq(minkowski_dot(kin.p[0], kin.p[1]),
                               minkowski_dot(kin.p[0], kin.p[3]), m2);
    }
    return 0.0;
}

}  // namespace qedsat
