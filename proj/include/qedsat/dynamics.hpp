// Iteration of the quantum maps: per-step filtered trajectories at fixed or
// random angle, the equivalent matrix-power route, the closed forms for the
// ultrarelativistic Bhabha map, and saturation detection.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qedsat/amplitudes.hpp"
#include "qedsat/entanglement.hpp"

namespace qedsat {

struct AngleSchedule {
    enum class Mode { Fixed, Random };
    Mode mode = Mode::Fixed;
    double theta = M_PI / 4;        // Fixed
    std::uint64_t seed = 0;         // Random
    double epsilon = 1e-6;          // Random draws are uniform on (eps, pi - eps)

    static AngleSchedule fixed(double theta) {
        AngleSchedule s;
        s.mode = Mode::Fixed;
        s.theta = theta;
        return s;
    }
    static AngleSchedule random(std::uint64_t seed, double epsilon = 1e-6) {
        AngleSchedule s;
        s.mode = Mode::Random;
        s.seed = seed;
        s.epsilon = epsilon;
        return s;
    }
};

struct TrajectoryStep {
    int n;
    PureTwoQubitState state;
    double concurrence;
    double theta_used;  // angle that produced this state; 0 for the initial row
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;  // n = 0 .. n_steps
    std::vector<double> norm_log;       // log |N_n| per applied step
    std::optional<int> saturation_step;
    // realized angles with multiplicities, in order of first appearance
    std::vector<std::pair<double, int>> realized_angles;

    const TrajectoryStep& final_step() const { return steps.back(); }
};

inline constexpr double kSaturationTol = 1e-6;
inline constexpr int kSaturationWindow = 5;
inline constexpr int kMaxIterations = 10000;

// Smallest n whose concurrence stays >= 1 - tol for `window` consecutive
// recorded steps; absent if that never happens.
std::optional<int> detect_saturation(const Trajectory& trajectory, double tol = kSaturationTol,
                                     int window = kSaturationWindow);

// Applies M(theta_k), normalizes, and records state + concurrence at every
// step. Throws DegenerateMap if the map sends the state below 1e-300.
Trajectory iterate(ProcessKind process, const Regime& regime, const AngleSchedule& schedule,
                   const PureTwoQubitState& initial, int n_steps,
                   double saturation_tol = kSaturationTol,
                   int saturation_window = kSaturationWindow);

// normalize(M^n initial). The power route overflows for large n at natural
// amplitude scales, so n > 30 requires pre-scaling M to unit spectral
// radius; with allow_prescale = false that case throws Overflow instead.
PureTwoQubitState iterate_by_power(ProcessKind process, const Regime& regime, double theta,
                                   const PureTwoQubitState& initial, int n,
                                   bool allow_prescale = true);

// Lightweight fixed-matrix iteration, keeping only the final state.
PureTwoQubitState apply_map_n(const Matrix4c& m, const PureTwoQubitState& initial, long n);

// Normalized state after n ultrarelativistic Bhabha iterations from
// cos(alpha)|RR> + sin(alpha)|RL>: Bell weights cos(alpha) on Phi+ and Phi-,
// sin(alpha) (1+cos^2 theta)^n on Psi+, sin(alpha) (2 cos theta)^n on Psi-.
// Weights are combined in log space, so any n is safe.
PureTwoQubitState closed_form_ur_bhabha(double alpha, double theta, int n);

// Random-angle closed form from |RL>: product weights
// prod (1+cos^2 theta_i)^{k_i} on Psi+ and prod (2 cos theta_i)^{k_i} on
// Psi-, accumulated as log magnitudes.
PureTwoQubitState closed_form_random_product(
    const std::vector<std::pair<double, int>>& angles);

// True when some step loses concurrence by more than tol (the trajectory
// met an entanglophobous state).
bool has_entanglement_decrease(const Trajectory& trajectory, double tol = 1e-12);

}  // namespace qedsat
