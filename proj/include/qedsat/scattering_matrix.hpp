// The 4x4 complex matrix of helicity amplitudes that defines a dynamical
// quantum map. Row index = outgoing helicity pair, column index = incoming
// helicity pair, both ordered (RR, RL, LR, LL), so applying the matrix to a
// state vector performs one scattering-plus-filtering step (up to
// normalization).

#pragma once

#include "qedsat/types.hpp"

namespace qedsat {

struct ScatteringMatrix {
    Matrix4c entries;
    Basis basis = Basis::Computational;
    ProcessKind process = ProcessKind::Bhabha;
    Regime regime = Regime::at_mu(1.0);
    double theta = 0.0;

    Complex operator()(int out, int in) const { return entries(out, in); }
};

}  // namespace qedsat
