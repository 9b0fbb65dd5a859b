// Core scalar/matrix aliases and the small domain enums shared by every
// module. Everything is built on fixed-size Eigen types; matrices of
// helicity amplitudes are 4x4 complex throughout.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qedsat {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

// Four-vector in (E, px, py, pz) layout, metric (+,-,-,-).
using FourVector = Eigen::Vector4d;

inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline double minkowski_norm2(const FourVector& a) { return minkowski_dot(a, a); }

enum class ProcessKind { Bhabha, Moller, Annihilation, Compton };

const char* process_name(ProcessKind p);

// Helicity along the direction of motion. R maps to +1, L to -1.
enum class Helicity : int { R = +1, L = -1 };

inline int helicity_sign(Helicity h) { return static_cast<int>(h); }

// Ordered two-particle helicity pairs (RR, RL, LR, LL) index the
// computational basis; this fixes row/column order for every matrix.
struct HelicityPair {
    Helicity first;
    Helicity second;
};

inline int pair_index(HelicityPair p) {
    return (p.first == Helicity::R ? 0 : 2) + (p.second == Helicity::R ? 0 : 1);
}

inline HelicityPair pair_from_index(int i) {
    return {(i / 2 == 0) ? Helicity::R : Helicity::L,
            (i % 2 == 0) ? Helicity::R : Helicity::L};
}

const char* pair_name(int index);  // "RR", "RL", "LR", "LL"

enum class Basis { Computational, Bell };

// Momentum regime: a finite mu = |p|/m, or the exact ultrarelativistic
// limit handled by a dedicated analytic branch.
class Regime {
  public:
    static Regime ultrarelativistic() { return Regime(true, 0.0); }
    static Regime at_mu(double mu) { return Regime(false, mu); }

    bool is_ur() const { return ur_; }
    double mu() const;
    std::string label() const;

  private:
    Regime(bool ur, double mu) : ur_(ur), mu_(mu) {}
    bool ur_;
    double mu_;
};

}  // namespace qedsat
