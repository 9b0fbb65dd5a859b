#include "qedsat/verify.hpp"

#include <cmath>
#include <functional>

#include "qedsat/cross_sections.hpp"
#include "qedsat/dynamics.hpp"
#include "qedsat/errors.hpp"
#include "qedsat/random.hpp"
#include "qedsat/spectral.hpp"

namespace qedsat {

namespace {

constexpr ProcessKind kAllProcesses[4] = {ProcessKind::Bhabha, ProcessKind::Moller,
                                          ProcessKind::Annihilation, ProcessKind::Compton};

struct Runner {
    const VerifyOptions& opt;
    std::vector<CheckResult> results;
    Rng rng;

    explicit Runner(const VerifyOptions& o) : opt(o), rng(o.seed) {}

    bool full() const { return opt.level == VerifyLevel::Full; }

    Matrix4c matrix(ProcessKind p, double mu, double theta) {
        Matrix4c m = amplitude_matrix(p, mu, theta).entries;
        if (opt.corrupt_amplitudes) m(0, 1) += 1e-3 * m.cwiseAbs().maxCoeff();
        return m;
    }

    ScatteringMatrix scattering(ProcessKind p, double mu, double theta) {
        ScatteringMatrix sm = amplitude_matrix(p, mu, theta);
        if (opt.corrupt_amplitudes)
            sm.entries(0, 1) += 1e-3 * sm.entries.cwiseAbs().maxCoeff();
        return sm;
    }

    void check(const std::string& name, double threshold, double observed,
               const std::string& detail) {
        // observed must stay at or below threshold
        results.push_back({name, observed <= threshold, threshold - observed,
                           detail + " (worst " + std::to_string(observed) + ", bound " +
                               std::to_string(threshold) + ")"});
    }

    void check_true(const std::string& name, bool ok, double margin, const std::string& detail) {
        results.push_back({name, ok, margin, detail});
    }

    double random_mu() { return std::exp(rng.uniform(std::log(0.05), std::log(20.0))); }
    double random_theta() { return rng.uniform(0.15, M_PI - 0.15); }
};

void kinematics_checks(Runner& r) {
    double worst = 0.0;
    for (ProcessKind p : kAllProcesses) {
        for (int k = 0; k < (r.full() ? 40 : 8); ++k) {
            const Kinematics kin = com_kinematics(p, r.random_mu(), r.rng.uniform(0.05, 2 * M_PI - 0.05));
            const FourVector balance = kin.p[0] + kin.p[1] - kin.p[2] - kin.p[3];
            worst = std::max(worst, balance.cwiseAbs().maxCoeff() / kin.p[0][0]);
            for (int leg = 0; leg < 4; ++leg) {
                const double target = kin.is_photon[leg] ? 0.0 : kin.mass * kin.mass;
                worst = std::max(worst, std::abs(minkowski_norm2(kin.p[leg]) - target) /
                                            (kin.p[leg][0] * kin.p[leg][0]));
            }
        }
    }
    r.check("kinematics.onshell_conservation", 1e-12, worst,
            "four-momentum conservation and mass shells");
}

void amplitude_checks(Runner& r) {
    // closed-form cross sections
    double worst = 0.0;
    for (ProcessKind p : kAllProcesses) {
        for (double mu : {0.05, 0.7, 3.0}) {
            for (double theta : {0.6, M_PI / 2, 2.4}) {
                const Kinematics kin = com_kinematics(p, mu, theta);
                const Matrix4c m = r.matrix(p, mu, theta);
                const double impl = m.cwiseAbs2().sum() / 4.0;
                const double ref = reference_msq(kin);
                worst = std::max(worst, std::abs(impl - ref) / std::abs(ref));
            }
        }
    }
    r.check("amplitudes.cross_section_oracles", 1e-8, worst,
            "spin-averaged |M|^2 vs closed-form expressions, 4 processes x 9 points");

    // helicity-flip suppression at growing mu
    double prev = 1e300;
    bool monotone = true;
    double last_ratio = 0.0;
    for (double mu : {1e2, 1e3, 1e4}) {
        const Matrix4c m = r.matrix(ProcessKind::Bhabha, mu, M_PI / 4);
        const double ratio = std::abs(m(1, 0)) / std::abs(m(0, 0));
        monotone = monotone && ratio < prev;
        prev = ratio;
        last_ratio = ratio;
    }
    r.check_true("amplitudes.helicity_flip_decay", monotone && last_ratio < 1e-2,
                 1e-2 - last_ratio,
                 "single-flip / no-flip ratio decreases over mu = 1e2, 1e3, 1e4");
}

void pattern_checks(Runner& r) {
    double worst_fermionic = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller}) {
        const SymbolPattern pat = structural_pattern(p);
        for (int k = 0; k < (r.full() ? 20 : 6); ++k) {
            const auto rep = matches_pattern(r.matrix(p, r.random_mu(), r.random_theta()), pat);
            worst_fermionic = std::max(worst_fermionic, rep.worst_violation);
        }
    }
    r.check("maps.fermionic_patterns", 1e-9, worst_fermionic,
            "Bhabha/Moller matrices match their sign patterns");

    // power self-similarity for the fermionic processes
    double worst_power = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller}) {
        const SymbolPattern pat = structural_pattern(p);
        for (int k = 0; k < (r.full() ? 20 : 5); ++k) {
            const Matrix4c m = r.matrix(p, r.random_mu(), r.random_theta());
            Matrix4c power = m;
            for (int n = 2; n <= 10; ++n) {
                power = (power * m).eval();
                worst_power = std::max(worst_power, matches_pattern(power, pat).worst_violation);
            }
        }
    }
    r.check("maps.power_self_similarity", 1e-9, worst_power,
            "M^n keeps the fermionic pattern for n = 2..10");

    // annihilation self-similarity violation is recorded, not enforced
    double violation = 0.0;
    const SymbolPattern ann = structural_pattern(ProcessKind::Annihilation);
    for (int k = 0; k < 6; ++k) {
        const Matrix4c m =
            amplitude_matrix(ProcessKind::Annihilation, r.random_mu(), r.random_theta()).entries;
        Matrix4c power = m;
        for (int n = 2; n <= 4; ++n) {
            power = (power * m).eval();
            violation = std::max(violation, matches_pattern(power, ann).worst_violation);
        }
    }
    r.check_true("maps.annihilation_power_violation_recorded", violation > 1e-9, violation,
                 "annihilation M^n breaks its own pattern (violation " +
                     std::to_string(violation) + ")");

    // Bell transform round trip and spectrum preservation
    double worst_bell = 0.0;
    for (int k = 0; k < 4; ++k) {
        const ScatteringMatrix sm =
            r.scattering(kAllProcesses[k], r.random_mu(), r.random_theta());
        const ScatteringMatrix round = from_bell_basis(to_bell_basis(sm));
        worst_bell = std::max(worst_bell, (round.entries - sm.entries).cwiseAbs().maxCoeff() /
                                              sm.entries.cwiseAbs().maxCoeff());
        auto direct = eigendecompose(sm);
        auto transformed = eigendecompose(to_bell_basis(sm).entries);
        for (int i = 0; i < 4; ++i) {
            double best = 1e300;
            for (int j = 0; j < 4; ++j)
                best = std::min(best,
                                std::abs(direct.pairs[i].value - transformed.pairs[j].value));
            worst_bell = std::max(worst_bell, best / std::abs(direct.pairs[0].value));
        }
    }
    r.check("maps.bell_transform", 1e-12, worst_bell,
            "Bell round trip and spectrum preservation");
}

void entanglement_checks(Runner& r) {
    const int count = r.full() ? 1000 : 100;
    double worst = 0.0;
    for (int k = 0; k < count; ++k) {
        const ProcessKind p = (k % 2 == 0) ? ProcessKind::Bhabha : ProcessKind::Moller;
        const Matrix4c m = r.matrix(p, r.random_mu(), r.random_theta());
        const PureTwoQubitState s = r.rng.random_max_entangled();
        const Vector4c image = m * s.amps();
        worst = std::max(worst, std::abs(concurrence(normalize(image)) - 1.0));
    }
    r.check("entanglement.max_ent_invariance", 1e-9, worst,
            std::to_string(count) + " Haar maximally entangled states stay maximal");

    if (r.full()) {
        const Trajectory nr = iterate(ProcessKind::Bhabha, Regime::at_mu(0.05),
                                      AngleSchedule::fixed(M_PI / 4),
                                      normalize((Vector4c() << 0, 1, 0, 0).finished()), 300);
        r.check_true("entanglement.nonmonotone_nr", has_entanglement_decrease(nr), 1.0,
                     "nonrelativistic Bhabha trajectory from |RL> loses concurrence at least once");
    }
}

void spectral_checks(Runner& r) {
    double worst_residual = 0.0;
    for (ProcessKind p : kAllProcesses)
        for (int k = 0; k < (r.full() ? 20 : 5); ++k) {
            const auto sys = eigendecompose(r.matrix(p, r.random_mu(), r.random_theta()));
            for (const auto& pair : sys.pairs)
                worst_residual = std::max(worst_residual, pair.residual / sys.matrix_norm);
        }
    if (r.full()) {
        for (int k = 0; k < 100; ++k) {
            // random pattern-valid Bhabha matrices
            BhabhaParams p;
            p.a = r.rng.uniform(-3, 3);
            p.b = r.rng.uniform(-3, 3);
            p.d = r.rng.uniform(-3, 3);
            p.e = r.rng.uniform(-3, 3);
            p.f = r.rng.uniform(-3, 3);
            const auto sys = eigendecompose(p.reconstruct());
            for (const auto& pair : sys.pairs)
                worst_residual = std::max(worst_residual, pair.residual / sys.matrix_norm);
        }
    }
    r.check("spectral.residual_bound", 1e-10, worst_residual,
            "eigendecompose residuals relative to ||M||");

    // analytic vs generic on both branches
    double worst_agree = 0.0;
    int seen_real = 0, seen_complex = 0;
    for (int k = 0; k < (r.full() ? 60 : 20); ++k) {
        const ScatteringMatrix sm =
            r.scattering(ProcessKind::Bhabha, r.random_mu(), r.random_theta());
        BhabhaParams params;
        try {
            params = bhabha_params(sm);
        } catch (const PatternViolation&) {
            continue;  // corrupted-amplitude mode lands here
        }
        const auto analytic = bhabha_analytic_eigensystem(params);
        const auto generic = eigendecompose(sm);
        (analytic.branch == BhabhaBranch::ComplexPair ? seen_complex : seen_real)++;
        for (int i = 0; i < 4; ++i) {
            // nearest-eigenvalue match: sorting breaks ties between the
            // conjugate pair arbitrarily
            double best_val = 1e300;
            int best_j = 0;
            for (int j = 0; j < 4; ++j) {
                const double d = std::abs(analytic.system.pairs[i].value - generic.pairs[j].value);
                if (d < best_val) {
                    best_val = d;
                    best_j = j;
                }
            }
            worst_agree = std::max(worst_agree, best_val / std::abs(generic.pairs[0].value));
            worst_agree = std::max(worst_agree, 1.0 - fidelity(analytic.system.pairs[i].vector,
                                                               generic.pairs[best_j].vector));
        }
    }
    if (r.opt.corrupt_amplitudes && seen_real + seen_complex == 0)
        r.check_true("spectral.analytic_vs_generic", false, -1.0,
                     "no pattern-valid matrices available");
    else
        r.check("spectral.analytic_vs_generic", 1e-9, worst_agree,
                "closed-form Bhabha eigensystem vs generic solver (" +
                    std::to_string(seen_real) + " real-branch, " +
                    std::to_string(seen_complex) + " complex-branch samples)");

    // every fermionic eigenvector (or spanning-set member) maximally entangled
    double worst_c = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller})
        for (int k = 0; k < (r.full() ? 20 : 6); ++k) {
            const Matrix4c m = r.matrix(p, r.random_mu(), r.random_theta());
            const auto sys = eigendecompose(m);
            for (const auto& pair : sys.pairs) {
                const double c = concurrence(pair.vector);
                if (std::abs(pair.value.imag()) > kDominanceTie * std::abs(sys.pairs[0].value))
                    continue;  // complex-pair members are covered by the spanning set
                worst_c = std::max(worst_c, 1.0 - c);
            }
        }
    r.check("spectral.fermionic_eigenvectors_maximal", 1e-9, worst_c,
            "real eigenvectors of fermionic maps have concurrence 1");

    if (r.full()) {
        // Compton: no Bell state is an eigenvector, and at generic sample
        // points at least one eigenvector sits clearly below maximal
        // entanglement. (The Compton spectrum is doubly degenerate, so the
        // no-Bell statement is tested directly on the Bell states.)
        bool any_bell = false;
        double min_c = 1.0;
        for (auto [mu, theta] : {std::pair{1.0, M_PI / 2}, {1.0, 1.0}, {0.5, 2.0}, {2.0, 0.7}}) {
            const Matrix4c m = r.matrix(ProcessKind::Compton, mu, theta);
            for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                                BellState::PsiMinus}) {
                const Vector4c bv = bell_state(b).amps();
                const Vector4c image = m * bv;
                const Complex rayleigh = bv.dot(image);
                if ((image - rayleigh * bv).norm() <= 1e-6 * m.norm()) any_bell = true;
            }
            const auto sys = eigendecompose(m);
            double point_min = 1.0;
            for (const auto& pair : sys.pairs) {
                if (classify(pair.vector).kind == BellClassification::Kind::Bell) any_bell = true;
                point_min = std::min(point_min, concurrence(pair.vector));
            }
            if (theta != M_PI / 2)  // degenerate symmetric point excluded from the C bound
                min_c = std::min(min_c, point_min);
        }
        r.check_true("spectral.compton_no_bell_eigenvector", !any_bell && min_c < 1.0 - 1e-3,
                     1.0 - 1e-3 - min_c,
                     "no Bell state is a Compton eigenvector; generic eigenvectors not maximal");

        // predict_asymptote vs long-run iteration
        double worst_pred = 0.0;
        const int instances = 12;
        for (int k = 0; k < instances; ++k) {
            const ProcessKind p = (k % 2 == 0) ? ProcessKind::Bhabha : ProcessKind::Moller;
            const ScatteringMatrix sm = r.scattering(p, r.random_mu(), r.random_theta());
            const PureTwoQubitState initial = r.rng.random_state();
            const auto pred = predict_asymptote(sm, initial);
            PureTwoQubitState state = initial;
            for (int rounds = 0; rounds < 40; ++rounds) {
                state = apply_map_n(sm.entries, state, 2000);
                if (pred.kind == AsymptotePrediction::Kind::Converges &&
                    fidelity(state, pred.state) >= 1.0 - 1e-7)
                    break;
            }
            if (pred.kind == AsymptotePrediction::Kind::Converges)
                worst_pred = std::max(worst_pred, 1.0 - fidelity(state, pred.state));
            else if (pred.kind == AsymptotePrediction::Kind::PlanarLimit) {
                const auto cls = classify(state, 1e-6);
                if (!(cls.kind == BellClassification::Kind::PlanarFamily ||
                      cls.kind == BellClassification::Kind::Bell))
                    worst_pred = std::max(worst_pred, 1.0);
            }
        }
        r.check("spectral.predict_vs_longrun", 1e-6, worst_pred,
                "asymptote prediction matches long-run iteration");
    }
}

void dynamics_checks(Runner& r) {
    // scale invariance: M and c M produce the same trajectory
    double worst_scale = 0.0;
    {
        const Matrix4c m = r.matrix(ProcessKind::Bhabha, 0.8, 1.1);
        const Complex c(-0.37, 1.9);
        PureTwoQubitState s = r.rng.random_state();
        Vector4c a = s.amps(), b = s.amps();
        for (int k = 0; k < 60; ++k) {
            a = (m * a).normalized();
            b = ((c * m) * b).normalized();
            worst_scale =
                std::max(worst_scale, 1.0 - std::norm(a.dot(b)));
        }
    }
    r.check("dynamics.scale_invariance", 1e-12, worst_scale,
            "trajectories of M and c M coincide modulo phase");

    // stepwise normalization equals end normalization
    double worst_power = 0.0;
    for (ProcessKind p : {ProcessKind::Bhabha, ProcessKind::Moller}) {
        const double mu = r.random_mu(), theta = r.random_theta();
        const PureTwoQubitState initial = r.rng.random_state();
        const Trajectory traj =
            iterate(p, Regime::at_mu(mu), AngleSchedule::fixed(theta), initial, 30);
        for (int n : {1, 7, 19, 30}) {
            const PureTwoQubitState direct =
                iterate_by_power(p, Regime::at_mu(mu), theta, initial, n);
            worst_power = std::max(
                worst_power, 1.0 - fidelity(direct, traj.steps[n].state));
        }
    }
    r.check("dynamics.power_vs_step_normalization", 1e-10, worst_power,
            "normalize(M^n s) equals the per-step normalized trajectory");

    // UR closed form, stepwise
    double worst_cf = 0.0;
    {
        const Trajectory traj =
            iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(),
                    AngleSchedule::fixed(M_PI / 4),
                    normalize((Vector4c() << 0, 1, 0, 0).finished()), 100);
        for (int n = 0; n <= 100; ++n) {
            const PureTwoQubitState cf = closed_form_ur_bhabha(M_PI / 2, M_PI / 4, n);
            worst_cf = std::max(worst_cf, 1.0 - fidelity(cf, traj.steps[n].state));
        }
    }
    r.check("dynamics.ur_closed_form_stepwise", 1e-10, worst_cf,
            "iterated UR Bhabha matches the closed form for n <= 100");

    // no-gain cases
    {
        const Trajectory pi_traj =
            iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(), AngleSchedule::fixed(M_PI),
                    normalize((Vector4c() << 0, 1, 0, 0).finished()), 100);
        double worst_c = 0.0;
        for (const auto& step : pi_traj.steps) worst_c = std::max(worst_c, step.concurrence);
        const Trajectory rr_traj =
            iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(),
                    AngleSchedule::fixed(M_PI / 4),
                    normalize((Vector4c() << 1, 0, 0, 0).finished()), 100);
        double worst_rr = 0.0;
        for (const auto& step : rr_traj.steps) worst_rr = std::max(worst_rr, step.concurrence);
        r.check("dynamics.no_gain_exceptions", 1e-12, std::max(worst_c, worst_rr),
                "theta = pi from |RL> and |RR> in the UR limit stay unentangled");
    }

    // long products stay finite in log space
    {
        std::vector<std::pair<double, int>> schedule{{0.9, 400000}, {1.7, 300000}, {2.4, 300000}};
        const PureTwoQubitState s = closed_form_random_product(schedule);
        r.check_true("dynamics.log_space_products", s.amps().allFinite(), 1.0,
                     "closed-form random product finite at n = 10^6");
    }

    if (r.full()) {
        bool all_saturate = true;
        double worst_cf_fid = 0.0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const Trajectory traj = iterate(ProcessKind::Bhabha, Regime::ultrarelativistic(),
                                            AngleSchedule::random(seed),
                                            normalize((Vector4c() << 0, 1, 0, 0).finished()), 200);
            all_saturate = all_saturate && traj.final_step().concurrence >= 1.0 - 1e-6;
            const PureTwoQubitState cf = closed_form_random_product(traj.realized_angles);
            worst_cf_fid = std::max(worst_cf_fid, 1.0 - fidelity(cf, traj.final_step().state));
        }
        r.check_true("dynamics.random_angle_saturation",
                     all_saturate && worst_cf_fid <= 1e-10, 1e-10 - worst_cf_fid,
                     "10 seeded random-angle runs saturate and match the product closed form");
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Runner runner(options);
    kinematics_checks(runner);
    amplitude_checks(runner);
    pattern_checks(runner);
    entanglement_checks(runner);
    spectral_checks(runner);
    dynamics_checks(runner);
    return runner.results;
}

}  // namespace qedsat
