// Eigen-analysis of the scattering matrices: a residual-checked generic
// 4x4 complex eigensolver, the closed-form Bhabha eigensystem with its
// t >= 0 / t < 0 branches, and asymptotic-state prediction for the
// iterated maps.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qedsat/entanglement.hpp"
#include "qedsat/maps.hpp"

namespace qedsat {

struct EigenPair {
    Complex value;
    PureTwoQubitState vector;
    double residual;  // ||M v - lambda v|| for the unit eigenvector
};

struct EigenSystem {
    std::vector<EigenPair> pairs;   // sorted by descending |value|
    bool degenerate_dominant = false;  // top two |lambda| within 1e-9 |lambda_max|
    double matrix_norm = 0.0;          // Frobenius norm used for the residual bound
};

inline constexpr double kResidualBound = 1e-10;
inline constexpr double kDominanceTie = 1e-9;

// Throws SolverFailure if any residual exceeds 1e-10 * ||M||_F (the failure
// message carries the best residual reached).
EigenSystem eigendecompose(const ScatteringMatrix& m);
EigenSystem eigendecompose(const Matrix4c& m);

// Parameters read off a Bhabha-pattern matrix, with the derived quantities
// of the branch analysis: s1 = A - D + E + F, t = (-A+D+E+F)^2 - 16 B^2,
// s2 = sqrt(|t|), r = sqrt(s1^2 + s2^2), eta = atan2(s2, s1).
struct BhabhaParams {
    Complex a, b, d, e, f;
    Complex s1, t;
    double s2 = 0.0, r = 0.0, eta = 0.0;
    bool params_real = false;  // branch analysis applies only to real A..F

    Matrix4c reconstruct() const;  // the pattern matrix built back from A..F
};

// Throws PatternViolation unless the matrix matches the Bhabha pattern.
BhabhaParams bhabha_params(const ScatteringMatrix& m, double tol = 1e-9);

enum class BhabhaBranch {
    RealEigen,     // t >= 0: four real maximally entangled eigenvectors
    ComplexPair,   // t < 0: conjugate eigenvalue pair, real spanning set
    BlockDiagonal  // B ~ 0: Bell eigenbasis (ultrarelativistic limit)
};

struct BhabhaEigenResult {
    EigenSystem system;        // ordering matches eigendecompose conventions
    BhabhaBranch branch;
    // Real maximally entangled spanning set {Phi+, Psi-, Xi3, Xi4}; on the
    // complex branch Xi4 = Psi+ exactly. Empty on the RealEigen branch,
    // where the eigenvectors themselves serve.
    std::vector<PureTwoQubitState> spanning_set;
    double delta3 = 0.0, delta4 = 0.0;  // eigenvector angles, t >= 0 branch
    double beta = 0.0;                  // Xi3 angle, t < 0 branch
};

// Closed-form eigensystem for a Bhabha-pattern matrix. Eigenvalues are
// lambda1 = A + D, lambda2 = E - F, lambda3,4 = (s1 +- sqrt(t))/2.
// Throws ComplexParams when A..F are materially complex.
BhabhaEigenResult bhabha_analytic_eigensystem(const BhabhaParams& params);

struct AsymptotePrediction {
    enum class Kind { Converges, PlanarLimit, CycleTie } kind;
    PureTwoQubitState state;  // valid for Converges
    std::optional<BellPlane> plane;  // PlanarLimit: set when the plane is one
                                     // of the two named Bell planes
    std::vector<Complex> coefficients;  // expansion of the initial state
    std::vector<Complex> eigenvalues;   // matching order
    std::string detail;
};

// Expand the initial state in the eigenbasis, drop vanishing coefficients,
// and report which eigendirection survives infinite iteration.
AsymptotePrediction predict_asymptote(const ScatteringMatrix& m,
                                      const PureTwoQubitState& initial);

}  // namespace qedsat
