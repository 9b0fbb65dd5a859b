#include "qedsat/dynamics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "qedsat/errors.hpp"
#include "qedsat/random.hpp"
#include "qedsat/spectral.hpp"

namespace qedsat {

std::optional<int> detect_saturation(const Trajectory& trajectory, double tol, int window) {
    if (window < 1) throw Error("detect_saturation: window must be >= 1");
    const auto& steps = trajectory.steps;
    int run_start = -1, run_len = 0;
    for (size_t k = 0; k < steps.size(); ++k) {
        if (steps[k].concurrence >= 1.0 - tol) {
            if (run_len == 0) run_start = steps[k].n;
            if (++run_len >= window) return run_start;
        } else {
            run_len = 0;
        }
    }
    return std::nullopt;
}

namespace {

void record_angle(std::vector<std::pair<double, int>>& realized, double theta) {
    for (auto& [angle, count] : realized) {
        if (angle == theta) {
            ++count;
            return;
        }
    }
    realized.emplace_back(theta, 1);
}

}  // namespace

Trajectory iterate(ProcessKind process, const Regime& regime, const AngleSchedule& schedule,
                   const PureTwoQubitState& initial, int n_steps, double saturation_tol,
                   int saturation_window) {
    if (n_steps < 1) throw Error("iterate: n_steps must be >= 1");

    Trajectory traj;
    traj.steps.reserve(n_steps + 1);
    traj.norm_log.reserve(n_steps);
    traj.steps.push_back({0, initial, concurrence(initial), 0.0});

    const bool fixed = schedule.mode == AngleSchedule::Mode::Fixed;
    Rng rng(schedule.seed);
    Matrix4c m;
    if (fixed) m = process_matrix(process, regime, schedule.theta).entries;

    Vector4c state = initial.amps();
    for (int n = 1; n <= n_steps; ++n) {
        double theta = schedule.theta;
        if (!fixed) {
            theta = rng.uniform(schedule.epsilon, M_PI - schedule.epsilon);
            m = process_matrix(process, regime, theta).entries;
        }
        record_angle(traj.realized_angles, theta);
        Vector4c next = m * state;
        const double norm = next.norm();
        if (!(norm > 1e-300))
            throw DegenerateMap("map annihilated the state at step " + std::to_string(n));
        traj.norm_log.push_back(std::log(norm));
        state = next / norm;
        const PureTwoQubitState normalized = normalize(state);
        traj.steps.push_back({n, normalized, concurrence(normalized), theta});
    }
    traj.saturation_step = detect_saturation(traj, saturation_tol, saturation_window);
    return traj;
}

PureTwoQubitState apply_map_n(const Matrix4c& m, const PureTwoQubitState& initial, long n) {
    Vector4c state = initial.amps();
    for (long k = 0; k < n; ++k) {
        state = (m * state).eval();
        const double norm = state.norm();
        if (!(norm > 1e-300))
            throw DegenerateMap("map annihilated the state at step " + std::to_string(k + 1));
        state /= norm;
    }
    return normalize(state);
}

PureTwoQubitState iterate_by_power(ProcessKind process, const Regime& regime, double theta,
                                   const PureTwoQubitState& initial, int n,
                                   bool allow_prescale) {
    Matrix4c m = process_matrix(process, regime, theta).entries;
    if (n > 30) {
        if (!allow_prescale)
            throw Overflow("matrix power with n > 30 requires pre-scaling to unit "
                           "spectral radius");
        const EigenSystem sys = eigendecompose(m);
        const double rho = std::abs(sys.pairs[0].value);
        if (rho > 0.0) m /= rho;
    }
    Matrix4c power = matrix_power(m, n);
    const Vector4c v = power * initial.amps();
    if (!(v.norm() > 1e-300)) throw DegenerateMap("matrix power annihilated the state");
    return normalize(v);
}

namespace {

// Combine Bell-basis weights given as (sign, log magnitude) without overflow.
Vector4c weights_from_logs(const std::array<double, 4>& log_mag,
                           const std::array<double, 4>& sign) {
    double biggest = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i)
        if (sign[i] != 0.0) biggest = std::max(biggest, log_mag[i]);
    Vector4c bell = Vector4c::Zero();
    for (int i = 0; i < 4; ++i)
        if (sign[i] != 0.0) bell[i] = sign[i] * std::exp(log_mag[i] - biggest);
    return bell;
}

}  // namespace

PureTwoQubitState closed_form_ur_bhabha(double alpha, double theta, int n) {
    if (n < 0) throw Error("closed_form_ur_bhabha: n must be >= 0");
    const double c = std::cos(theta);
    const double ca = std::cos(alpha), sa = std::sin(alpha);

    std::array<double, 4> log_mag{}, sign{};
    // Phi+ and Phi- both carry cos(alpha)
    sign[0] = sign[1] = (ca == 0.0) ? 0.0 : (ca > 0 ? 1.0 : -1.0);
    log_mag[0] = log_mag[1] = (ca == 0.0) ? 0.0 : std::log(std::abs(ca));
    // Psi+ : sin(alpha) (1 + cos^2)^n
    sign[2] = (sa == 0.0) ? 0.0 : (sa > 0 ? 1.0 : -1.0);
    log_mag[2] = (sa == 0.0) ? 0.0 : std::log(std::abs(sa)) + n * std::log1p(c * c);
    // Psi- : sin(alpha) (2 cos)^n
    const double two_c = 2.0 * c;
    if (sa == 0.0 || (two_c == 0.0 && n > 0)) {
        sign[3] = 0.0;
    } else {
        const double flip = (two_c < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
        sign[3] = (sa > 0 ? 1.0 : -1.0) * flip;
        log_mag[3] = std::log(std::abs(sa)) + (n > 0 ? n * std::log(std::abs(two_c)) : 0.0);
    }
    return normalize(from_bell_coords(weights_from_logs(log_mag, sign)));
}

PureTwoQubitState closed_form_random_product(
    const std::vector<std::pair<double, int>>& angles) {
    double log_plus = 0.0, log_minus = 0.0, sign_minus = 1.0;
    bool minus_zero = false;
    for (const auto& [theta, count] : angles) {
        if (!(theta > 0.0 && theta < M_PI))
            throw AngleOutOfRange("random-product angles must lie in (0, pi)");
        const double c = std::cos(theta);
        log_plus += count * std::log1p(c * c);
        if (c == 0.0) {
            minus_zero = true;
        } else {
            log_minus += count * std::log(std::abs(2.0 * c));
            if (c < 0.0 && count % 2 == 1) sign_minus = -sign_minus;
        }
    }
    std::array<double, 4> log_mag{0.0, 0.0, log_plus, log_minus};
    std::array<double, 4> sign{0.0, 0.0, 1.0, minus_zero ? 0.0 : sign_minus};
    return normalize(from_bell_coords(weights_from_logs(log_mag, sign)));
}

bool has_entanglement_decrease(const Trajectory& trajectory, double tol) {
    for (size_t k = 1; k < trajectory.steps.size(); ++k)
        if (trajectory.steps[k].concurrence - trajectory.steps[k - 1].concurrence < -tol)
            return true;
    return false;
}

}  // namespace qedsat
