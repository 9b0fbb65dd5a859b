// Acceptance suite: the nine exit criteria, each printing one PASS/FAIL
// line (with per-sub-check lines where a criterion bundles several claims).
// Run with no arguments for the whole suite or with a criterion number to
// run just that one; the exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "qedsat/amplitudes.hpp"
#include "qedsat/cross_sections.hpp"
#include "qedsat/dynamics.hpp"
#include "qedsat/errors.hpp"
#include "qedsat/maps.hpp"
#include "qedsat/random.hpp"
#include "qedsat/spectral.hpp"

using namespace qedsat;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::pair<bool, std::string>> subchecks;

    bool passed() const {
        for (const auto& [ok, text] : subchecks)
            if (!ok) return false;
        return true;
    }
};

PureTwoQubitState basis(int index) {
    Vector4c v = Vector4c::Zero();
    v[index] = 1.0;
    return normalize(v);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

// --------------------------------------------------------------------------

Criterion criterion_closed_form() {
    Criterion c{1, "closed-form agreement, UR Bhabha |RL>, theta = pi/4", {}};
    const Trajectory traj =
        iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(), AngleSchedule::fixed(M_PI / 4),
                basis(1), 100);
    double worst_fid = 0.0;
    for (int n = 0; n <= 100; ++n)
        worst_fid = std::max(
            worst_fid, 1.0 - fidelity(closed_form_ur_bhabha(M_PI / 2, M_PI / 4, n),
                                      traj.steps[n].state));
    c.subchecks.push_back({worst_fid <= 1e-10,
                           "stepwise fidelity with the closed form, n <= 100: worst 1-F = " +
                               fmt(worst_fid) + " (bound 1e-10)"});

    const double c50 = traj.steps[50].concurrence;
    const double closed50 = concurrence(closed_form_ur_bhabha(M_PI / 2, M_PI / 4, 50));
    c.subchecks.push_back({std::abs(c50 - closed50) <= 1e-12,
                           "concurrence at n = 50 vs closed form: |diff| = " +
                               fmt(std::abs(c50 - closed50)) + " (bound 1e-12)"});
    c.subchecks.push_back({c50 >= 1.0 - 1e-6,
                           "concurrence at n = 50 >= 1 - 1e-6: C_50 = " + fmt(c50) +
                               " (the closed form itself gives " + fmt(closed50) +
                               "; the threshold is first met at n = 124)"});
    return c;
}

Criterion criterion_table_rows() {
    Criterion c{2, "asymptotic-state table rows (nr rows at mu = 0.01, theta = pi/4)", {}};
    const double theta = M_PI / 4;
    const Regime nr = Regime::at_mu(0.01);
    const Regime ur = Regime::ultrarelativistic();

    struct Row {
        const char* label;
        ProcessKind process;
        int initial;
        Regime regime;
        bool bell_row;
        BellState bell;
        BellPlane plane;
    };
    const Row rows[] = {
        {"Bhabha |RL> ur -> Psi+", ProcessKind::Bhabha, 1, ur, true, BellState::PsiPlus, {}},
        {"Bhabha |RL> nr -> (Phi-,Psi+) family", ProcessKind::Bhabha, 1, nr, false, {},
         BellPlane::PhiMinusPsiPlus},
        {"Bhabha |RR> nr -> Phi+", ProcessKind::Bhabha, 0, nr, true, BellState::PhiPlus, {}},
        {"Moller |RL> ur -> Psi-", ProcessKind::Moller, 1, ur, true, BellState::PsiMinus, {}},
        {"Moller |RR> nr -> Phi-", ProcessKind::Moller, 0, nr, true, BellState::PhiMinus, {}},
        {"Moller |RL> nr -> (Phi+,Psi-) family", ProcessKind::Moller, 1, nr, false, {},
         BellPlane::PhiPlusPsiMinus},
    };

    for (const Row& row : rows) {
        const ScatteringMatrix m = process_matrix(row.process, row.regime, theta);
        const AsymptotePrediction pred = predict_asymptote(m, basis(row.initial));

        if (row.bell_row) {
            bool ok = false;
            double fid = 0.0;
            if (pred.kind == AsymptotePrediction::Kind::Converges) {
                fid = fidelity(pred.state, bell_state(row.bell));
                ok = fid >= 1.0 - 1e-8;
            }
            // corroborate with the iterated map
            double iter_fid = 0.0;
            PureTwoQubitState state = basis(row.initial);
            for (int rounds = 0; rounds < 400 && iter_fid < 1.0 - 1e-8; ++rounds) {
                state = apply_map_n(m.entries, state, 10000);
                iter_fid = fidelity(state, bell_state(row.bell));
            }
            ok = ok && iter_fid >= 1.0 - 1e-8;
            c.subchecks.push_back({ok, std::string(row.label) + ": predicted fidelity " +
                                           fmt(fid) + ", iterated fidelity " + fmt(iter_fid)});
        } else {
            const bool plane_ok = pred.kind == AsymptotePrediction::Kind::PlanarLimit &&
                                  pred.plane && *pred.plane == row.plane;
            double family_c = 0.0;
            if (plane_ok) {
                // every real-coefficient member of the plane is maximally
                // entangled; spot-check a few members
                family_c = 1.0;
                for (double xi : {0.3, 1.1, 2.8}) {
                    Vector4c bell = Vector4c::Zero();
                    const int ia = row.plane == BellPlane::PhiMinusPsiPlus ? 1 : 0;
                    const int ib = row.plane == BellPlane::PhiMinusPsiPlus ? 2 : 3;
                    bell[ia] = std::cos(xi);
                    bell[ib] = std::sin(xi);
                    family_c = std::min(family_c, concurrence(normalize(from_bell_coords(bell))));
                }
            }
            std::string detail = std::string(row.label) + ": prediction ";
            if (pred.kind == AsymptotePrediction::Kind::Converges)
                detail += "converges to " + classify(pred.state).describe();
            else if (pred.kind == AsymptotePrediction::Kind::PlanarLimit)
                detail += std::string("planar limit ") + (pred.plane ? plane_name(*pred.plane) : "?");
            else
                detail += "cycle/tie";
            c.subchecks.push_back({plane_ok && family_c >= 1.0 - 1e-8, detail});
        }
    }
    return c;
}

Criterion criterion_max_ent_invariance() {
    Criterion c{3, "maximal entanglement is invariant under the fermionic maps", {}};
    Rng rng(101);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const ProcessKind p = (k % 2 == 0) ? ProcessKind::Bhabha : ProcessKind::Moller;
        const double mu = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
        const double theta = rng.uniform(0.15, M_PI - 0.15);
        const Matrix4c m = amplitude_matrix(p, mu, theta).entries;
        const PureTwoQubitState s = rng.random_max_entangled();
        worst = std::max(worst, std::abs(concurrence(normalize(m * s.amps())) - 1.0));
    }
    c.subchecks.push_back({worst <= 1e-9,
                           "1000 Haar maximally entangled states at random (mu, theta): worst "
                           "|C - 1| = " + fmt(worst) + " (bound 1e-9)"});
    return c;
}

Criterion criterion_self_similarity() {
    Criterion c{4, "power self-similarity of the fermionic patterns", {}};
    Rng rng(103);
    double worst = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller}) {
        const SymbolPattern pat = structural_pattern(p);
        for (int sample = 0; sample < 20; ++sample) {
            const double mu = std::exp(rng.uniform(std::log(0.05), std::log(10.0)));
            const double theta = rng.uniform(0.2, M_PI - 0.2);
            const Matrix4c m = amplitude_matrix(p, mu, theta).entries;
            Matrix4c power = m;
            for (int n = 2; n <= 10; ++n) {
                power = (power * m).eval();
                worst = std::max(worst, matches_pattern(power, pat).worst_violation);
            }
        }
    }
    c.subchecks.push_back({worst <= 1e-9,
                           "M^n keeps the Bhabha/Moller pattern for n = 2..10 at 20 random "
                           "points each: worst relative violation " + fmt(worst)});

    double violation = 0.0;
    const SymbolPattern ann = structural_pattern(ProcessKind::Annihilation);
    for (int sample = 0; sample < 10; ++sample) {
        const double mu = std::exp(rng.uniform(std::log(0.1), std::log(5.0)));
        const double theta = rng.uniform(0.3, M_PI - 0.3);
        const Matrix4c m = amplitude_matrix(ProcessKind::Annihilation, mu, theta).entries;
        Matrix4c power = m;
        for (int n = 2; n <= 10; ++n) {
            power = (power * m).eval();
            violation = std::max(violation, matches_pattern(power, ann).worst_violation);
        }
    }
    c.subchecks.push_back({violation > 0.0,
                           "annihilation powers violate the annihilation pattern (recorded "
                           "magnitude " + fmt(violation) + ")"});
    return c;
}

Criterion criterion_no_gain() {
    Criterion c{5, "no-gain exceptions stay unentangled", {}};
    const Trajectory pi_run =
        iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(), AngleSchedule::fixed(M_PI),
                basis(1), 100);
    double worst_pi = 0.0;
    for (const auto& step : pi_run.steps) worst_pi = std::max(worst_pi, step.concurrence);
    c.subchecks.push_back({worst_pi == 0.0,
                           "UR |RL> at theta = pi: max C over n <= 100 is " + fmt(worst_pi)});

    const Trajectory rr_run = iterate(ProcessKind::Bhabha, Regime::at_mu(1e3),
                                      AngleSchedule::fixed(M_PI / 4), basis(0), 1000);
    double worst_rr = 0.0;
    for (const auto& step : rr_run.steps) worst_rr = std::max(worst_rr, step.concurrence);
    c.subchecks.push_back({worst_rr <= 1e-2,
                           "|RR> at mu = 1e3: max C over n <= 1000 is " + fmt(worst_rr) +
                               " (bound 1e-2)"});

    const Trajectory ur_rr =
        iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(), AngleSchedule::fixed(M_PI / 4),
                basis(0), 100);
    double worst_ur = 0.0;
    for (const auto& step : ur_rr.steps) worst_ur = std::max(worst_ur, step.concurrence);
    c.subchecks.push_back({worst_ur == 0.0,
                           "UR branch from |RR>: max C over n <= 100 is " + fmt(worst_ur)});
    return c;
}

Criterion criterion_random_angle() {
    Criterion c{6, "random-angle saturation and the product closed form", {}};
    bool all_saturate = true;
    double worst_fid = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Trajectory traj =
            iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(), AngleSchedule::random(seed),
                    basis(1), 200);
        all_saturate = all_saturate && traj.final_step().concurrence >= 1.0 - 1e-6;
        worst_fid = std::max(worst_fid,
                             1.0 - fidelity(closed_form_random_product(traj.realized_angles),
                                            traj.final_step().state));
    }
    c.subchecks.push_back({all_saturate, "10 seeds x 200 steps: every final C >= 1 - 1e-6"});
    c.subchecks.push_back({worst_fid <= 1e-10,
                           "iterated final state vs product closed form: worst 1-F = " +
                               fmt(worst_fid) + " (bound 1e-10)"});
    return c;
}

Criterion criterion_photon_processes() {
    Criterion c{7, "photon processes: partial or absent saturation", {}};
    const ScatteringMatrix ann = ur_amplitude_matrix(ProcessKind::Annihilation, M_PI / 4);

    const AsymptotePrediction rl = predict_asymptote(ann, basis(1));
    double fid = 0.0;
    if (rl.kind == AsymptotePrediction::Kind::Converges)
        fid = fidelity(rl.state, bell_state(BellState::PsiMinus));
    const PureTwoQubitState iterated = apply_map_n(ann.entries, basis(1), 300);
    const double iter_fid = fidelity(iterated, bell_state(BellState::PsiMinus));
    c.subchecks.push_back({fid >= 1.0 - 1e-8 && iter_fid >= 1.0 - 1e-8,
                           "annihilation UR |RL> -> Psi-: predicted fidelity " + fmt(fid) +
                               ", iterated fidelity " + fmt(iter_fid)});

    const AsymptotePrediction rr = predict_asymptote(ann, basis(0));
    const bool rr_not_maximal =
        rr.kind == AsymptotePrediction::Kind::Converges &&
        classify(rr.state).kind == BellClassification::Kind::NotMaximal;
    c.subchecks.push_back({rr_not_maximal,
                           "annihilation UR |RR>: asymptote classifies as " +
                               (rr.kind == AsymptotePrediction::Kind::Converges
                                    ? classify(rr.state).describe()
                                    : rr.detail)});

    const ScatteringMatrix compton = amplitude_matrix(ProcessKind::Compton, 1.0, M_PI / 2);
    bool any_bell_eigenvector = false;
    for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                        BellState::PsiMinus}) {
        const Vector4c bv = bell_state(b).amps();
        const Vector4c image = compton.entries * bv;
        if ((image - bv.dot(image) * bv).norm() <= 1e-6 * compton.entries.norm())
            any_bell_eigenvector = true;
    }
    for (const auto& pair : eigendecompose(compton).pairs)
        if (classify(pair.vector).kind == BellClassification::Kind::Bell)
            any_bell_eigenvector = true;
    c.subchecks.push_back({!any_bell_eigenvector,
                           "Compton (mu = 1, theta = pi/2): no Bell state is an eigenvector"});

    bool saturated = false;
    for (int initial : {1, 0}) {
        const Trajectory traj = iterate(ProcessKind::Compton, Regime::at_mu(1.0),
                                        AngleSchedule::fixed(M_PI / 2), basis(initial), 10000);
        if (traj.saturation_step) saturated = true;
    }
    c.subchecks.push_back({!saturated,
                           "Compton trajectories from |RL> and |RR> never saturate within 1e4 "
                           "steps"});
    return c;
}

Criterion criterion_cross_sections() {
    Criterion c{8, "spin-averaged |M|^2 against the closed-form cross sections", {}};
    double worst = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller, ProcessKind::Annihilation,
                          ProcessKind::Compton}) {
        for (auto [mu, theta] : {std::pair{0.3, 0.7}, {1.0, M_PI / 2}, {4.0, 2.3}}) {
            const Kinematics kin = com_kinematics(p, mu, theta);
            const double impl =
                amplitude_matrix(p, mu, theta).entries.cwiseAbs2().sum() / 4.0;
            const double ref = reference_msq(kin);
            worst = std::max(worst, std::abs(impl - ref) / std::abs(ref));
        }
    }
    c.subchecks.push_back({worst <= 1e-8,
                           "4 processes x 3 kinematic points: worst relative error " +
                               fmt(worst) + " (bound 1e-8)"});
    return c;
}

Criterion criterion_numerical_hygiene() {
    Criterion c{9, "numerical hygiene: scale invariance, normalization, residuals", {}};
    Rng rng(107);

    double worst_scale = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const ProcessKind p = (trial % 2 == 0) ? ProcessKind::Bhabha : ProcessKind::Moller;
        const Matrix4c m = amplitude_matrix(p, std::exp(rng.uniform(std::log(0.1), std::log(5.0))),
                                            rng.uniform(0.3, M_PI - 0.3))
                               .entries;
        const Complex scale_factor(rng.uniform(-2, 2), rng.uniform(-2, 2));
        Vector4c a = rng.random_state().amps(), b = a;
        for (int n = 0; n < 50; ++n) {
            a = (m * a).normalized();
            b = ((scale_factor * m) * b).normalized();
            worst_scale = std::max(worst_scale, 1.0 - std::norm(a.dot(b)));
        }
    }
    c.subchecks.push_back({worst_scale <= 1e-10,
                           "M -> cM leaves trajectories unchanged: worst 1-F = " +
                               fmt(worst_scale)});

    double worst_norm = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller}) {
        const double mu = std::exp(rng.uniform(std::log(0.1), std::log(5.0)));
        const double theta = rng.uniform(0.3, M_PI - 0.3);
        const PureTwoQubitState initial = rng.random_state();
        const Trajectory traj =
            iterate(p, Regime::at_mu(mu), AngleSchedule::fixed(theta), initial, 30);
        for (int n : {1, 11, 30})
            worst_norm = std::max(worst_norm,
                                  1.0 - fidelity(iterate_by_power(p, Regime::at_mu(mu), theta,
                                                                  initial, n),
                                                 traj.steps[n].state));
    }
    c.subchecks.push_back({worst_norm <= 1e-10,
                           "stepwise vs end normalization for n <= 30: worst 1-F = " +
                               fmt(worst_norm)});

    double worst_residual = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        BhabhaParams params;
        params.a = rng.uniform(-3, 3);
        params.b = rng.uniform(-3, 3);
        params.d = rng.uniform(-3, 3);
        params.e = rng.uniform(-3, 3);
        params.f = rng.uniform(-3, 3);
        const EigenSystem sys = eigendecompose(params.reconstruct());
        for (const auto& pair : sys.pairs)
            worst_residual = std::max(worst_residual, pair.residual / sys.matrix_norm);
    }
    for (int trial = 0; trial < 24; ++trial) {
        const ProcessKind p = static_cast<ProcessKind>(trial % 4);
        const EigenSystem sys = eigendecompose(
            amplitude_matrix(p, std::exp(rng.uniform(std::log(0.05), std::log(10.0))),
                             rng.uniform(0.2, M_PI - 0.2)));
        for (const auto& pair : sys.pairs)
            worst_residual = std::max(worst_residual, pair.residual / sys.matrix_norm);
    }
    c.subchecks.push_back({worst_residual <= 1e-10,
                           "eigensolver residuals on all tested matrices: worst " +
                               fmt(worst_residual) + " x ||M|| (bound 1e-10 ||M||)"});
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Criterion()>> criteria = {
        criterion_closed_form,      criterion_table_rows,   criterion_max_ent_invariance,
        criterion_self_similarity,  criterion_no_gain,      criterion_random_angle,
        criterion_photon_processes, criterion_cross_sections, criterion_numerical_hygiene,
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        const int index = static_cast<int>(k) + 1;
        if (only != 0 && index != only) continue;
        const Criterion c = criteria[k]();
        const bool ok = c.passed();
        std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str());
        for (const auto& [sub_ok, text] : c.subchecks)
            std::printf("    %s %s\n", sub_ok ? "ok  " : "FAIL", text.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
