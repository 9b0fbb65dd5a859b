// Center-of-mass kinematics for the four tree-level processes. Incoming
// particles travel along +/-z; outgoing particles are rotated by the
// scattering angle theta in the x-z plane. All legs are exactly on shell
// by construction.

#pragma once

#include <array>

#include "qedsat/types.hpp"

namespace qedsat {

struct Kinematics {
    ProcessKind process;
    double mu;     // |p|/m of the incoming fermion(s)
    double theta;  // scattering angle, radians
    double mass;   // fermion mass, natural units

    // Legs 0,1 incoming; legs 2,3 outgoing.
    std::array<FourVector, 4> p;

    // Planar angle of each leg in the x-z plane: {0, pi, theta, theta+pi}.
    // Spinor and polarization phase conventions are functions of this
    // angle, so it is kept explicit rather than recovered via atan2 (which
    // would wrap at +/-pi and change phases discontinuously).
    std::array<double, 4> leg_angle;

    // true where the leg is a photon (massless)
    std::array<bool, 4> is_photon;

    double s() const { return minkowski_norm2(FourVector(p[0] + p[1])); }
};

// Throws NonPositiveMu / NonPositiveMass / AngleOutOfRange on bad input;
// theta must lie strictly inside (0, 2*pi).
Kinematics com_kinematics(ProcessKind process, double mu, double theta, double mass = 1.0);

}  // namespace qedsat
