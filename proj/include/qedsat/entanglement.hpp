// Pure two-qubit state algebra: normalization, concurrence, Bell-basis
// coordinates and classification against the maximally entangled families
// that appear as asymptotes of the iterated maps.

#pragma once

#include <iosfwd>
#include <string>

#include "qedsat/types.hpp"

namespace qedsat {

// Amplitudes over (RR, RL, LR, LL), unit norm. Global phase carries no
// meaning; comparisons go through fidelity().
class PureTwoQubitState {
  public:
    PureTwoQubitState() : amps_(Vector4c::Zero()) { amps_[0] = 1.0; }

    // Throws ZeroVector if v has no norm to divide by.
    static PureTwoQubitState normalized(const Vector4c& v);

    const Vector4c& amps() const { return amps_; }
    Complex operator[](int i) const { return amps_[i]; }

  private:
    explicit PureTwoQubitState(const Vector4c& a) : amps_(a) {}
    Vector4c amps_;
};

PureTwoQubitState normalize(const Vector4c& v);

// C = 2|ad - bc|, clipped to [0, 1] against rounding.
double concurrence(const PureTwoQubitState& s);
double concurrence_raw(const Vector4c& v);  // no normalization, no clip

// |<a|b>|^2 — phase-insensitive overlap.
double fidelity(const PureTwoQubitState& a, const PureTwoQubitState& b);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

const char* bell_name(BellState b);
PureTwoQubitState bell_state(BellState b);

// Coordinates over (Phi+, Phi-, Psi+, Psi-); the transform is real
// orthogonal, so it is its own inverse transpose.
Vector4c bell_coords(const PureTwoQubitState& s);
Vector4c bell_coords(const Vector4c& v);
Vector4c from_bell_coords(const Vector4c& bell);

// The two maximally entangled one-parameter families the fermionic maps
// select between: cos(xi) Phi- + sin(xi) Psi+ and cos(xi) Phi+ + sin(xi) Psi-.
enum class BellPlane { PhiMinusPsiPlus, PhiPlusPsiMinus };

const char* plane_name(BellPlane p);

struct BellClassification {
    enum class Kind { Bell, PlanarFamily, NotMaximal } kind;
    BellState which = BellState::PhiPlus;  // valid when kind == Bell
    BellPlane plane = BellPlane::PhiMinusPsiPlus;  // valid when kind == PlanarFamily
    double angle = 0.0;                            // xi, valid when kind == PlanarFamily
    double concurrence = 0.0;
    std::string describe() const;
};

// Bell if fidelity with a Bell state >= 1 - tol; PlanarFamily if C >= 1 - tol
// and the support (mod global phase, real coefficients within tol) lies in
// one of the two planes; otherwise NotMaximal carrying the concurrence.
BellClassification classify(const PureTwoQubitState& s, double tol = 1e-9);

}  // namespace qedsat
