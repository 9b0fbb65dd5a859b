// Seeded randomness with reproducible output: the uniform mapping is a
// fixed 53-bit construction on top of mt19937_64 rather than
// std::uniform_real_distribution, whose conversion is implementation
// defined.

#pragma once

#include <cstdint>
#include <random>

#include "qedsat/entanglement.hpp"
#include "qedsat/types.hpp"

namespace qedsat {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return (engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal();

    Complex normal_complex() { return Complex(normal(), normal()); }

    // Haar-distributed 2x2 unitary (QR of a complex Ginibre matrix with the
    // R diagonal phase fixed).
    Matrix2c haar_unitary2();

    // (U (x) V) |Phi+> with independent Haar U, V spans the maximally
    // entangled pure states.
    PureTwoQubitState random_max_entangled();

    // Haar-random pure state on the full two-qubit space.
    PureTwoQubitState random_state();

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qedsat
