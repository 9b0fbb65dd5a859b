#include "qedsat/kinematics.hpp"

#include <cmath>

#include "qedsat/errors.hpp"

namespace qedsat {

const char* process_name(ProcessKind p) {
    switch (p) {
        case ProcessKind::Bhabha: return "bhabha";
        case ProcessKind::Moller: return "moller";
        case ProcessKind::Annihilation: return "annihilation";
        case ProcessKind::Compton: return "compton";
    }
    return "?";
}

const char* pair_name(int index) {
    static const char* names[4] = {"RR", "RL", "LR", "LL"};
    return names[index & 3];
}

double Regime::mu() const {
    if (ur_) throw Error("Regime::mu(): regime is ultrarelativistic");
    return mu_;
}

std::string Regime::label() const { return ur_ ? "ur" : std::to_string(mu_); }

namespace {

FourVector leg(double energy, double pmag, double angle) {
    return FourVector(energy, pmag * std::sin(angle), 0.0, pmag * std::cos(angle));
}

}  // namespace

Kinematics com_kinematics(ProcessKind process, double mu, double theta, double mass) {
    if (!(mu > 0.0)) throw NonPositiveMu("mu must be positive, got " + std::to_string(mu));
    if (!(mass > 0.0)) throw NonPositiveMass("mass must be positive, got " + std::to_string(mass));
    const double two_pi = 2.0 * M_PI;
    if (!(theta > 0.0 && theta < two_pi))
        throw AngleOutOfRange("theta must lie in (0, 2*pi), got " + std::to_string(theta));

    Kinematics kin;
    kin.process = process;
    kin.mu = mu;
    kin.theta = theta;
    kin.mass = mass;
    kin.leg_angle = {0.0, M_PI, theta, theta + M_PI};

    const double pmag = mass * mu;
    const double efer = mass * std::sqrt(1.0 + mu * mu);

    switch (process) {
        case ProcessKind::Bhabha:
        case ProcessKind::Moller:
            kin.is_photon = {false, false, false, false};
            kin.p[0] = leg(efer, pmag, kin.leg_angle[0]);
            kin.p[1] = leg(efer, pmag, kin.leg_angle[1]);
            kin.p[2] = leg(efer, pmag, kin.leg_angle[2]);
            kin.p[3] = leg(efer, pmag, kin.leg_angle[3]);
            break;
        case ProcessKind::Annihilation:
            // e- e+ -> gamma gamma: each photon carries the fermion energy.
            kin.is_photon = {false, false, true, true};
            kin.p[0] = leg(efer, pmag, kin.leg_angle[0]);
            kin.p[1] = leg(efer, pmag, kin.leg_angle[1]);
            kin.p[2] = leg(efer, efer, kin.leg_angle[2]);
            kin.p[3] = leg(efer, efer, kin.leg_angle[3]);
            break;
        case ProcessKind::Compton:
            // e- gamma -> e- gamma, elastic in the COM frame.
            kin.is_photon = {false, true, false, true};
            kin.p[0] = leg(efer, pmag, kin.leg_angle[0]);
            kin.p[1] = leg(pmag, pmag, kin.leg_angle[1]);
            kin.p[2] = leg(efer, pmag, kin.leg_angle[2]);
            kin.p[3] = leg(pmag, pmag, kin.leg_angle[3]);
            break;
    }
    return kin;
}

}  // namespace qedsat
