#include "qedsat/dirac.hpp"

#include <cmath>

namespace qedsat {

namespace {

Matrix4c make_gamma(int mu) {
    Matrix4c g = Matrix4c::Zero();
    const Complex i(0.0, 1.0);
    switch (mu) {
        case 0:
            g(0, 0) = 1; g(1, 1) = 1; g(2, 2) = -1; g(3, 3) = -1;
            break;
        case 1:
            g(0, 3) = 1; g(1, 2) = 1; g(2, 1) = -1; g(3, 0) = -1;
            break;
        case 2:
            g(0, 3) = -i; g(1, 2) = i; g(2, 1) = i; g(3, 0) = -i;
            break;
        case 3:
            g(0, 2) = 1; g(1, 3) = -1; g(2, 0) = -1; g(3, 1) = 1;
            break;
    }
    return g;
}

}  // namespace

const Matrix4c& gamma_matrix(int mu) {
    static const Matrix4c g[4] = {make_gamma(0), make_gamma(1), make_gamma(2), make_gamma(3)};
    return g[mu];
}

const Matrix4c& gamma5() {
    static const Matrix4c g5 = [] {
        Matrix4c g = Matrix4c::Zero();
        g(0, 2) = 1; g(1, 3) = 1; g(2, 0) = 1; g(3, 1) = 1;
        return g;
    }();
    return g5;
}

Matrix4c slash(const FourVector& p) {
    return p[0] * gamma_matrix(0) - p[1] * gamma_matrix(1) - p[2] * gamma_matrix(2) -
           p[3] * gamma_matrix(3);
}

Vector2c two_spinor(double planar_angle, Helicity h) {
    const double half = 0.5 * planar_angle;
    Vector2c chi;
    if (h == Helicity::R)
        chi << std::cos(half), std::sin(half);
    else
        chi << -std::sin(half), std::cos(half);
    return chi;
}

Vector4c u_spinor(const FourVector& p, double planar_angle, Helicity h, double mass) {
    const double energy = p[0];
    const double wp = std::sqrt(std::max(energy + mass, 0.0));
    const double wm = std::sqrt(std::max(energy - mass, 0.0));
    const Vector2c chi = two_spinor(planar_angle, h);
    Vector4c u;
    u.head<2>() = wp * chi;
    u.tail<2>() = helicity_sign(h) * wm * chi;
    return u;
}

Vector4c v_spinor(const FourVector& p, double planar_angle, Helicity h, double mass) {
    const double energy = p[0];
    const double wp = std::sqrt(std::max(energy + mass, 0.0));
    const double wm = std::sqrt(std::max(energy - mass, 0.0));
    const Helicity flipped = (h == Helicity::R) ? Helicity::L : Helicity::R;
    const Vector2c chi = two_spinor(planar_angle, flipped);
    Vector4c v;
    v.head<2>() = -helicity_sign(h) * wm * chi;
    v.tail<2>() = wp * chi;
    return v;
}

Eigen::Vector4cd photon_polarization(double planar_angle, Helicity h) {
    // theta_hat = (cos a, 0, -sin a), phi_hat = (0, 1, 0) in the x-z plane
    const double ca = std::cos(planar_angle);
    const double sa = std::sin(planar_angle);
    const Complex i(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::Vector4cd eps;
    if (h == Helicity::R)
        eps << 0.0, -ca * inv_sqrt2, -i * inv_sqrt2, sa * inv_sqrt2;
    else
        eps << 0.0, ca * inv_sqrt2, -i * inv_sqrt2, -sa * inv_sqrt2;
    return eps;
}

Eigen::RowVector4cd bar(const Vector4c& psi) {
    return psi.adjoint() * gamma_matrix(0);
}

}  // namespace qedsat
