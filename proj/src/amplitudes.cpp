#include "qedsat/amplitudes.hpp"

#include <cmath>

#include "qedsat/dirac.hpp"
#include "qedsat/errors.hpp"

namespace qedsat {

namespace {

// gamma-current bar_a gamma^mu b as a complex four-vector
Eigen::Vector4cd current(const Eigen::RowVector4cd& bar_a, const Vector4c& b) {
    Eigen::Vector4cd j;
    for (int mu = 0; mu < 4; ++mu) j[mu] = bar_a * (gamma_matrix(mu) * b);
    return j;
}

Complex contract(const Eigen::Vector4cd& a, const Eigen::Vector4cd& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

Matrix4c slash_c(const Eigen::Vector4cd& a) {
    return a[0] * gamma_matrix(0) - a[1] * gamma_matrix(1) - a[2] * gamma_matrix(2) -
           a[3] * gamma_matrix(3);
}

void check_pole(double denom, double scale, const char* which) {
    if (std::abs(denom) < 1e-12 * scale)
        throw CollinearPole(std::string("propagator pole in ") + which + " channel");
}

Complex bhabha_amplitude(const Kinematics& kin, HelicityPair in, HelicityPair out) {
    const double m = kin.mass;
    const Vector4c u1 = u_spinor(kin.p[0], kin.leg_angle[0], in.first, m);
    const Vector4c v2 = v_spinor(kin.p[1], kin.leg_angle[1], in.second, m);
    const Vector4c u3 = u_spinor(kin.p[2], kin.leg_angle[2], out.first, m);
    const Vector4c v4 = v_spinor(kin.p[3], kin.leg_angle[3], out.second, m);

    const double s = minkowski_norm2(FourVector(kin.p[0] + kin.p[1]));
    const double t = minkowski_norm2(FourVector(kin.p[0] - kin.p[2]));
    check_pole(t, s, "t");
    check_pole(s, s, "s");

    const Complex mt = contract(current(bar(u3), u1), current(bar(v2), v4)) / t;
    const Complex ms = contract(current(bar(v2), u1), current(bar(u3), v4)) / s;
    return mt - ms;
}

Complex moller_amplitude(const Kinematics& kin, HelicityPair in, HelicityPair out) {
    const double m = kin.mass;
    const Vector4c u1 = u_spinor(kin.p[0], kin.leg_angle[0], in.first, m);
    const Vector4c u2 = u_spinor(kin.p[1], kin.leg_angle[1], in.second, m);
    const Vector4c u3 = u_spinor(kin.p[2], kin.leg_angle[2], out.first, m);
    const Vector4c u4 = u_spinor(kin.p[3], kin.leg_angle[3], out.second, m);

    const double s = minkowski_norm2(FourVector(kin.p[0] + kin.p[1]));
    const double t = minkowski_norm2(FourVector(kin.p[0] - kin.p[2]));
    const double u = minkowski_norm2(FourVector(kin.p[0] - kin.p[3]));
    check_pole(t, s, "t");
    check_pole(u, s, "u");

    const Complex mt = contract(current(bar(u3), u1), current(bar(u4), u2)) / t;
    const Complex mu = contract(current(bar(u4), u1), current(bar(u3), u2)) / u;
    return mt - mu;
}

Complex annihilation_amplitude(const Kinematics& kin, HelicityPair in, HelicityPair out) {
    const double m = kin.mass;
    const Vector4c u1 = u_spinor(kin.p[0], kin.leg_angle[0], in.first, m);
    const Vector4c v2 = v_spinor(kin.p[1], kin.leg_angle[1], in.second, m);
    const Eigen::Vector4cd e3 = photon_polarization(kin.leg_angle[2], out.first).conjugate();
    const Eigen::Vector4cd e4 = photon_polarization(kin.leg_angle[3], out.second).conjugate();

    const double s = minkowski_norm2(FourVector(kin.p[0] + kin.p[1]));
    const double dt = minkowski_norm2(FourVector(kin.p[0] - kin.p[2])) - m * m;
    const double du = minkowski_norm2(FourVector(kin.p[0] - kin.p[3])) - m * m;
    check_pole(dt, s, "t");
    check_pole(du, s, "u");

    const Matrix4c st = slash(FourVector(kin.p[0] - kin.p[2])) + m * Matrix4c::Identity();
    const Matrix4c su = slash(FourVector(kin.p[0] - kin.p[3])) + m * Matrix4c::Identity();

    const Eigen::RowVector4cd vb = bar(v2);
    const Complex d1 = vb * (slash_c(e4) * (st * (slash_c(e3) * u1)));
    const Complex d2 = vb * (slash_c(e3) * (su * (slash_c(e4) * u1)));
    return d1 / dt + d2 / du;
}

Complex compton_amplitude(const Kinematics& kin, HelicityPair in, HelicityPair out) {
    const double m = kin.mass;
    const Vector4c u1 = u_spinor(kin.p[0], kin.leg_angle[0], in.first, m);
    const Eigen::Vector4cd e2 = photon_polarization(kin.leg_angle[1], in.second);
    const Vector4c u3 = u_spinor(kin.p[2], kin.leg_angle[2], out.first, m);
    const Eigen::Vector4cd e4 = photon_polarization(kin.leg_angle[3], out.second).conjugate();

    const double s = minkowski_norm2(FourVector(kin.p[0] + kin.p[1]));
    const double ds = s - m * m;
    const double du = minkowski_norm2(FourVector(kin.p[0] - kin.p[3])) - m * m;
    check_pole(ds, s, "s");
    check_pole(du, s, "u");

    const Matrix4c ss = slash(FourVector(kin.p[0] + kin.p[1])) + m * Matrix4c::Identity();
    const Matrix4c su = slash(FourVector(kin.p[0] - kin.p[3])) + m * Matrix4c::Identity();

    const Eigen::RowVector4cd ub = bar(u3);
    const Complex d1 = ub * (slash_c(e4) * (ss * (slash_c(e2) * u1)));
    const Complex d2 = ub * (slash_c(e2) * (su * (slash_c(e4) * u1)));
    return d1 / ds + d2 / du;
}

// Fixed basis-phase choice: the first-slot fermion's |L> basis state
// carries an extra (-1), applied as a diagonal sign conjugation. This is
// the convention under which the Bhabha matrix takes exactly its published
// sign layout and the photon-process asymptotes come out as stated (see
// docs/conventions.md). The photon-pair basis of the annihilation output
// is left untouched.
struct GaugeSigns {
    std::array<double, 4> out;
    std::array<double, 4> in;
};

GaugeSigns gauge_signs(ProcessKind process) {
    constexpr std::array<double, 4> flip_first{1, 1, -1, -1};
    constexpr std::array<double, 4> keep{1, 1, 1, 1};
    if (process == ProcessKind::Annihilation) return {keep, flip_first};
    return {flip_first, flip_first};
}

}  // namespace

Complex tree_amplitude(ProcessKind process, const Kinematics& kin, HelicityPair in,
                       HelicityPair out) {
    switch (process) {
        case ProcessKind::Bhabha: return bhabha_amplitude(kin, in, out);
        case ProcessKind::Moller: return moller_amplitude(kin, in, out);
        case ProcessKind::Annihilation: return annihilation_amplitude(kin, in, out);
        case ProcessKind::Compton: return compton_amplitude(kin, in, out);
    }
    throw Error("unknown process");
}

ScatteringMatrix amplitude_matrix(ProcessKind process, double mu, double theta, double mass) {
    const Kinematics kin = com_kinematics(process, mu, theta, mass);
    const GaugeSigns g = gauge_signs(process);
    ScatteringMatrix sm;
    sm.basis = Basis::Computational;
    sm.process = process;
    sm.regime = Regime::at_mu(mu);
    sm.theta = theta;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            sm.entries(i, j) = g.out[i] * g.in[j] *
                               tree_amplitude(process, kin, pair_from_index(j), pair_from_index(i));
    return sm;
}

namespace {

Matrix4c bell_block_matrix(double a, double d, double e, double f, double b = 0.0) {
    Matrix4c m;
    m << a, -b, -b, d,
         b,  e,  f, -b,
         b,  f,  e, -b,
         d,  b,  b,  a;
    return m;
}

}  // namespace

ScatteringMatrix ur_amplitude_matrix(ProcessKind process, double theta) {
    const double two_pi = 2.0 * M_PI;
    if (!(theta > 0.0 && theta < two_pi))
        throw AngleOutOfRange("theta must lie in (0, 2*pi), got " + std::to_string(theta));
    const double c = std::cos(theta);

    ScatteringMatrix sm;
    sm.basis = Basis::Computational;
    sm.process = process;
    sm.regime = Regime::ultrarelativistic();
    sm.theta = theta;

    switch (process) {
        case ProcessKind::Bhabha:
            // Bell-basis spectrum (1, 1, 1+cos^2, 2cos) on (Phi+, Phi-, Psi+, Psi-)
            sm.entries = bell_block_matrix(1.0, 0.0, 0.5 * (1.0 + c) * (1.0 + c),
                                           0.5 * (1.0 - c) * (1.0 - c));
            break;
        case ProcessKind::Moller:
            // Bell-basis spectrum (1, 1, 2cos, 1+cos^2)
            sm.entries = bell_block_matrix(1.0, 0.0, 0.5 * (1.0 + c) * (1.0 + c),
                                           -0.5 * (1.0 - c) * (1.0 - c));
            break;
        case ProcessKind::Annihilation: {
            const double half = 0.5 * theta;
            check_pole(std::sin(half), 1.0, "t");
            check_pole(std::cos(half), 1.0, "u");
            const double e = std::cos(half) / std::sin(half);
            const double f = -std::sin(half) / std::cos(half);
            sm.entries = Matrix4c::Zero();
            sm.entries(1, 1) = e; sm.entries(1, 2) = f;
            sm.entries(2, 1) = f; sm.entries(2, 2) = e;
            break;
        }
        case ProcessKind::Compton: {
            // Massless limit: electron chirality and photon helicity both
            // conserved, matrix diagonal. Regular for every theta once the
            // diverging common factor is scaled out.
            const double ch = std::cos(0.5 * theta);
            sm.entries = Matrix4c::Zero();
            sm.entries(0, 0) = 1.0;
            sm.entries(1, 1) = ch * ch;
            sm.entries(2, 2) = ch * ch;
            sm.entries(3, 3) = 1.0;
            break;
        }
    }
    return sm;
}

ScatteringMatrix process_matrix(ProcessKind process, const Regime& regime, double theta,
                                double mass) {
    if (regime.is_ur()) return ur_amplitude_matrix(process, theta);
    return amplitude_matrix(process, regime.mu(), theta, mass);
}

}  // namespace qedsat
