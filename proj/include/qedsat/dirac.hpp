// Gamma matrices (Dirac representation), helicity spinors and circular
// photon polarization vectors for legs lying in the x-z reaction plane.
//
// Conventions, fixed once for the whole artifact:
//   metric          (+,-,-,-)
//   gamma^0         diag(1,1,-1,-1); gamma^i = [[0, sigma_i], [-sigma_i, 0]]
//   two-spinors     chi+(a) = (cos a/2, sin a/2), chi-(a) = (-sin a/2, cos a/2)
//                   for a leg at planar angle a (momentum (sin a, 0, cos a))
//   u(p, h)         ( sqrt(E+m) chi_h,  h sqrt(E-m) chi_h )
//   v(p, h)         ( -h sqrt(E-m) chi_{-h},  sqrt(E+m) chi_{-h} )
//   photon eps_R    -(theta_hat + i phi_hat)/sqrt(2), eps_L = +(theta_hat - i phi_hat)/sqrt(2)
//   outgoing photons enter amplitudes through conj(eps)
//
// Legs are always passed with their planar angle so half-angle phases are
// continuous in theta; note chi+(a+pi) = chi-(a) and chi-(a+pi) = -chi+(a).

#pragma once

#include "qedsat/types.hpp"

namespace qedsat {

const Matrix4c& gamma_matrix(int mu);  // mu in 0..3
const Matrix4c& gamma5();

// p-slash = p_mu gamma^mu = p0 g0 - px g1 - py g2 - pz g3
Matrix4c slash(const FourVector& p);

Vector2c two_spinor(double planar_angle, Helicity h);

// energy/mass are taken from the four-vector and the explicit mass; the
// planar angle selects the two-spinor phase convention.
Vector4c u_spinor(const FourVector& p, double planar_angle, Helicity h, double mass);
Vector4c v_spinor(const FourVector& p, double planar_angle, Helicity h, double mass);

// Four-vector (0, eps) for a photon travelling at the given planar angle.
Eigen::Vector4cd photon_polarization(double planar_angle, Helicity h);

// Dirac adjoint as a row vector: psi^dagger gamma^0.
Eigen::RowVector4cd bar(const Vector4c& psi);

}  // namespace qedsat
