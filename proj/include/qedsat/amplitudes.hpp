// Tree-level QED helicity amplitudes for Bhabha, Moller, e-e+ -> gamma gamma
// and Compton scattering, assembled from explicit spinors and polarization
// vectors. Amplitudes are returned in units of e^2 with the global factor
// of i stripped; relative factors and signs between diagrams are exact.

#pragma once

#include "qedsat/kinematics.hpp"
#include "qedsat/scattering_matrix.hpp"

namespace qedsat {

// Single amplitude M_{in -> out}. Throws CollinearPole when a propagator
// denominator falls below 1e-12 * s.
Complex tree_amplitude(ProcessKind process, const Kinematics& kin, HelicityPair in,
                       HelicityPair out);

// Full 4x4 map at finite mu: entry (i, j) = M_{pair j -> pair i}.
ScatteringMatrix amplitude_matrix(ProcessKind process, double mu, double theta,
                                  double mass = 1.0);

// Exact ultrarelativistic branch (closed forms in theta; no catastrophic
// cancellation at large mu). Normalization is arbitrary: maps are invariant
// under global rescaling.
ScatteringMatrix ur_amplitude_matrix(ProcessKind process, double theta);

// Dispatch on the regime: analytic branch for UR, spinor evaluation else.
ScatteringMatrix process_matrix(ProcessKind process, const Regime& regime, double theta,
                                double mass = 1.0);

}  // namespace qedsat
