// qedsat: build tree-level QED two-particle helicity amplitude matrices,
// iterate them as dynamical quantum maps under sharp momentum filtering,
// and reproduce the entanglement-saturation experiments as CSV/SVG/JSON.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_util.hpp"
#include "qedsat/amplitudes.hpp"
#include "qedsat/dynamics.hpp"
#include "qedsat/errors.hpp"
#include "qedsat/spectral.hpp"
#include "qedsat/verify.hpp"

using namespace qedsat;
using nlohmann::json;

namespace {

// Option values can come from the command line or a config file; flags win.
struct OptionBag {
    std::map<std::string, std::string> from_flags;
    std::map<std::string, std::string> from_config;

    std::string get(const std::string& key, const std::string& fallback) const {
        if (auto it = from_flags.find(key); it != from_flags.end()) return it->second;
        if (auto it = from_config.find(key); it != from_config.end()) return it->second;
        return fallback;
    }
    bool has(const std::string& key) const {
        return from_flags.count(key) || from_config.count(key);
    }
};

void add_string_option(CLI::App* cmd, OptionBag& bag, const std::string& name) {
    static const std::map<std::string, std::string> help{
        {"process", "bhabha | moller | annihilation | compton"},
        {"mu", "momentum ratio |p|/m, or 'ur' for the exact ultrarelativistic branch"},
        {"initial", "RR | RL | LR | LL, or four comma-separated complex amplitudes"},
        {"theta", "scattering angle in radians; pi fractions like pi/4 are accepted"},
        {"steps", "number of map applications"},
        {"out", "output file path"},
        {"svg", "also write a concurrence-vs-n SVG plot here"},
        {"sat-tol", "saturation tolerance on 1 - C (default 1e-6)"},
        {"sat-window", "consecutive steps required for saturation (default 5)"},
        {"axis", "sweep axis: theta or mu"},
        {"grid-count", "number of interior theta grid points (default 64)"},
        {"grid-values", "explicit comma-separated grid values"},
        {"seed", "random seed"},
        {"schedule-out", "path for the realized-angle sidecar CSV"},
        {"mu-nr", "mu used for the nonrelativistic table rows (default 0.01)"},
        {"max-steps", "iteration budget for corroborating the table rows"},
        {"level", "fast | full"},
    };
    const auto it = help.find(name);
    cmd->add_option_function<std::string>(
        "--" + name, [&bag, name](const std::string& v) { bag.from_flags[name] = v; },
        it == help.end() ? std::string{} : it->second);
}

void load_config(CLI::App* cmd, OptionBag& bag) {
    cmd->add_option_function<std::string>(
        "--config",
        [&bag](const std::string& path) { bag.from_config = cli::read_config_file(path); },
        "key = value config file; flags override its entries");
}

struct CommonRun {
    ProcessKind process;
    Regime regime = Regime::at_mu(1.0);
    PureTwoQubitState initial;
    long steps = 50;
    double saturation_tol = kSaturationTol;
    int saturation_window = kSaturationWindow;
};

CommonRun resolve_common(const OptionBag& bag) {
    CommonRun run;
    run.process = cli::parse_process(bag.get("process", "bhabha"), "process");
    run.regime = cli::parse_regime(bag.get("mu", "ur"), "mu");
    run.initial = cli::parse_initial(bag.get("initial", "RL"), "initial");
    run.steps = cli::parse_integer(bag.get("steps", "50"), "steps");
    if (run.steps < 1) throw ConfigError("steps: must be >= 1");
    if (bag.has("sat-tol"))
        run.saturation_tol = std::stod(bag.get("sat-tol", ""));
    if (bag.has("sat-window"))
        run.saturation_window = static_cast<int>(cli::parse_integer(bag.get("sat-window", ""), "sat-window"));
    return run;
}

int cmd_iterate(const OptionBag& bag) {
    const CommonRun run = resolve_common(bag);
    const double theta = cli::parse_angle(bag.get("theta", "pi/4"), "theta");
    const std::string out = bag.get("out", "trajectory.csv");

    const Trajectory traj = iterate(run.process, run.regime, AngleSchedule::fixed(theta),
                                    run.initial, static_cast<int>(run.steps),
                                    run.saturation_tol, run.saturation_window);
    cli::write_trajectory_csv(out, traj);
    if (bag.has("svg"))
        cli::write_concurrence_svg(bag.get("svg", ""), traj,
                                   std::string(process_name(run.process)) + " iteration, mu=" +
                                       run.regime.label());
    const std::string sat = traj.saturation_step
                                ? "at n=" + std::to_string(*traj.saturation_step)
                                : std::string("not reached");
    std::printf("wrote %s (%zu rows); final concurrence %s; saturation %s\n", out.c_str(),
                traj.steps.size(), cli::format_double(traj.final_step().concurrence).c_str(),
                sat.c_str());
    return 0;
}

int cmd_sweep(const OptionBag& bag) {
    const CommonRun run = resolve_common(bag);
    const std::string axis = bag.get("axis", "theta");
    const std::string out = bag.get("out", "sweep.csv");

    std::vector<double> grid;
    double theta_fixed = cli::parse_angle(bag.get("theta", "pi/4"), "theta");
    if (axis == "theta") {
        if (bag.has("grid-values")) {
            grid = cli::parse_grid_values(bag.get("grid-values", ""), "grid-values");
        } else {
            const long count = cli::parse_integer(bag.get("grid-count", "64"), "grid-count");
            if (count < 1) throw ConfigError("grid-count: must be >= 1");
            for (long k = 1; k <= count; ++k) grid.push_back(M_PI * k / double(count + 1));
        }
        for (double v : grid)
            if (!(v > 0.0 && v < M_PI))
                throw ConfigError("grid-values: theta grid must lie inside (0, pi)");
    } else if (axis == "mu") {
        if (!bag.has("grid-values"))
            throw ConfigError("grid-values: required when axis = mu");
        grid = cli::parse_grid_values(bag.get("grid-values", ""), "grid-values");
        for (double v : grid)
            if (!(v > 0.0)) throw ConfigError("grid-values: mu grid must be positive");
    } else {
        throw ConfigError("axis: expected 'theta' or 'mu', got '" + axis + "'");
    }
    std::sort(grid.begin(), grid.end());

    // one worker per grid point; results merged in axis order
    std::vector<std::future<std::vector<double>>> workers;
    workers.reserve(grid.size());
    for (double value : grid) {
        workers.push_back(std::async(std::launch::async, [&, value] {
            const Regime regime = (axis == "mu") ? Regime::at_mu(value) : run.regime;
            const double theta = (axis == "theta") ? value : theta_fixed;
            const Trajectory traj = iterate(run.process, regime, AngleSchedule::fixed(theta),
                                            run.initial, static_cast<int>(run.steps));
            std::vector<double> conc;
            conc.reserve(traj.steps.size());
            for (const auto& s : traj.steps) conc.push_back(s.concurrence);
            return conc;
        }));
    }

    std::ofstream file(out, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + out + "'");
    file << "axis_value,n,concurrence\n";
    for (size_t g = 0; g < grid.size(); ++g) {
        const std::vector<double> conc = workers[g].get();
        for (size_t n = 0; n < conc.size(); ++n)
            file << cli::format_double(grid[g]) << ',' << n << ','
                 << cli::format_double(conc[n]) << '\n';
    }
    std::printf("wrote %s (%zu grid points x %ld steps)\n", out.c_str(), grid.size(),
                run.steps + 1);
    return 0;
}

int cmd_random_walk(const OptionBag& bag) {
    const CommonRun run = resolve_common(bag);
    const std::uint64_t seed =
        static_cast<std::uint64_t>(cli::parse_integer(bag.get("seed", "42"), "seed"));
    const std::string out = bag.get("out", "random_walk.csv");
    const std::string schedule_out = bag.get("schedule-out", out + ".schedule.csv");

    const Trajectory traj = iterate(run.process, run.regime, AngleSchedule::random(seed),
                                    run.initial, static_cast<int>(run.steps),
                                    run.saturation_tol, run.saturation_window);
    cli::write_trajectory_csv(out, traj);
    cli::write_schedule_csv(schedule_out, traj.realized_angles);
    if (bag.has("svg"))
        cli::write_concurrence_svg(bag.get("svg", ""), traj,
                                   std::string(process_name(run.process)) +
                                       " random-angle iteration, seed=" + std::to_string(seed));
    std::printf("wrote %s and %s; final concurrence %s\n", out.c_str(), schedule_out.c_str(),
                cli::format_double(traj.final_step().concurrence).c_str());

    if (bag.has("check-closed-form") || bag.get("check-closed-form", "") == "true") {
        const PureTwoQubitState closed = closed_form_random_product(traj.realized_angles);
        const double fid = fidelity(closed, traj.final_step().state);
        std::printf("closed-form fidelity: %s\n", cli::format_double(fid).c_str());
    }
    return 0;
}

struct TableRow {
    ProcessKind process;
    const char* initial_name;
    bool ultrarelativistic;
};

int cmd_asymptote_table(const OptionBag& bag) {
    const double theta = cli::parse_angle(bag.get("theta", "pi/4"), "theta");
    const double mu_nr = std::stod(bag.get("mu-nr", "0.01"));
    const long max_steps = cli::parse_integer(bag.get("max-steps", "2000000"), "max-steps");

    const TableRow rows[] = {
        {ProcessKind::Bhabha, "RL", true},  {ProcessKind::Bhabha, "RL", false},
        {ProcessKind::Bhabha, "RR", false}, {ProcessKind::Moller, "RL", true},
        {ProcessKind::Moller, "RR", false}, {ProcessKind::Moller, "RL", false},
        {ProcessKind::Annihilation, "RL", true}, {ProcessKind::Annihilation, "RR", true},
    };

    json table = json::array();
    for (const TableRow& row : rows) {
        const Regime regime =
            row.ultrarelativistic ? Regime::ultrarelativistic() : Regime::at_mu(mu_nr);
        const ScatteringMatrix m = process_matrix(row.process, regime, theta);
        const PureTwoQubitState initial = cli::parse_initial(row.initial_name, "initial");
        const AsymptotePrediction pred = predict_asymptote(m, initial);

        std::string predicted, classification;
        std::optional<double> fid;
        if (pred.kind == AsymptotePrediction::Kind::Converges) {
            const BellClassification cls = classify(pred.state);
            classification = cls.describe();
            predicted = (cls.kind == BellClassification::Kind::Bell) ? bell_name(cls.which)
                        : (cls.kind == BellClassification::Kind::PlanarFamily)
                            ? std::string("planar ") + plane_name(cls.plane)
                            : "not maximal";
            // Corroborate by iterating until the fidelity stops improving.
            // Eigencomponents absent from the initial state are projected
            // back out each chunk, since rounding noise would otherwise
            // re-seed a dominant direction the exact expansion excludes.
            try {
                const EigenSystem sys = eigendecompose(m);
                Matrix4c vmat;
                for (int i = 0; i < 4; ++i) vmat.col(i) = sys.pairs[i].vector.amps();
                const Eigen::FullPivLU<Matrix4c> lu(vmat);
                const Vector4c coeff0 = lu.solve(initial.amps());
                const double coeff_scale = coeff0.cwiseAbs().maxCoeff();

                PureTwoQubitState state = initial;
                double best = 0.0;
                long done = 0;
                int stale = 0;
                while (done < max_steps && best < 1.0 - 1e-12 && stale < 25) {
                    state = apply_map_n(m.entries, state, 10000);
                    done += 10000;
                    Vector4c coeff = lu.solve(state.amps());
                    for (int i = 0; i < 4; ++i)
                        if (std::abs(coeff0[i]) <= 1e-10 * coeff_scale) coeff[i] = 0.0;
                    state = normalize(vmat * coeff);
                    const double f = fidelity(state, pred.state);
                    if (f > best + 1e-12) stale = 0; else ++stale;
                    best = std::max(best, f);
                }
                fid = best;
            } catch (const DegenerateMap&) {
                fid = std::nullopt;  // the map annihilates this state
            }
        } else if (pred.kind == AsymptotePrediction::Kind::PlanarLimit) {
            predicted = pred.plane ? std::string("planar ") + plane_name(*pred.plane)
                                   : "planar (generic)";
            classification = predicted + ", concurrence 1 on the limit set";
            fid = std::nullopt;
        } else {
            predicted = "cycle/tie";
            classification = pred.detail;
            fid = std::nullopt;
        }

        json entry = {
            {"process", process_name(row.process)},
            {"initial", row.initial_name},
            {"regime", row.ultrarelativistic ? "ur" : "nr"},
            {"predicted", predicted},
            {"classification", classification},
        };
        entry["fidelity"] = fid ? json(*fid) : json(nullptr);
        table.push_back(entry);
    }

    const std::string text = table.dump(2) + "\n";
    if (bag.has("out")) {
        std::ofstream file(bag.get("out", ""), std::ios::binary);
        if (!file) throw Error("cannot open output file '" + bag.get("out", "") + "'");
        file << text;
        std::printf("wrote %s (%zu rows)\n", bag.get("out", "").c_str(), table.size());
    } else {
        std::fputs(text.c_str(), stdout);
    }
    return 0;
}

int cmd_verify(const OptionBag& bag) {
    VerifyOptions options;
    const std::string level = bag.get("level", "fast");
    if (level == "fast") options.level = VerifyLevel::Fast;
    else if (level == "full") options.level = VerifyLevel::Full;
    else throw ConfigError("level: expected 'fast' or 'full', got '" + level + "'");
    if (bag.has("seed"))
        options.seed = static_cast<std::uint64_t>(cli::parse_integer(bag.get("seed", ""), "seed"));
    options.corrupt_amplitudes = bag.has("corrupt-amplitudes");

    const auto results = run_verification(options);
    int failures = 0;
    for (const auto& res : results) {
        std::printf("%s  %-48s margin=%+10.3e  %s\n", res.passed ? "PASS" : "FAIL",
                    res.name.c_str(), res.margin, res.detail.c_str());
        if (!res.passed) ++failures;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-level QED helicity maps and entanglement saturation"};
    app.require_subcommand(1);

    OptionBag bag_iterate, bag_sweep, bag_walk, bag_table, bag_verify;

    CLI::App* iterate_cmd =
        app.add_subcommand("iterate", "iterate one map at fixed angle, write a trajectory CSV");
    load_config(iterate_cmd, bag_iterate);
    for (const char* key : {"process", "mu", "initial", "theta", "steps", "out", "svg",
                            "sat-tol", "sat-window"})
        add_string_option(iterate_cmd, bag_iterate, key);

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "trajectories across a theta or mu grid, long CSV");
    load_config(sweep_cmd, bag_sweep);
    for (const char* key : {"process", "mu", "initial", "theta", "steps", "out", "axis",
                            "grid-count", "grid-values"})
        add_string_option(sweep_cmd, bag_sweep, key);

    CLI::App* walk_cmd = app.add_subcommand(
        "random-walk", "iterate with a seeded random angle per step; CSV + schedule sidecar");
    load_config(walk_cmd, bag_walk);
    for (const char* key : {"process", "mu", "initial", "steps", "seed", "out", "schedule-out",
                            "svg"})
        add_string_option(walk_cmd, bag_walk, key);
    walk_cmd->add_flag_callback("--check-closed-form",
                                [&] { bag_walk.from_flags["check-closed-form"] = "true"; },
                                "recompute the final state from the product closed form");

    CLI::App* table_cmd = app.add_subcommand(
        "asymptote-table", "predicted asymptotic states for the reference rows, JSON");
    load_config(table_cmd, bag_table);
    for (const char* key : {"theta", "mu-nr", "out", "max-steps"})
        add_string_option(table_cmd, bag_table, key);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the invariant suite and report pass/fail");
    load_config(verify_cmd, bag_verify);
    for (const char* key : {"level", "seed"}) add_string_option(verify_cmd, bag_verify, key);
    verify_cmd
        ->add_flag_callback("--corrupt-amplitudes",
                            [&] { bag_verify.from_flags["corrupt-amplitudes"] = "true"; },
                            "test hook: perturb amplitudes so checks fail")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
        if (iterate_cmd->parsed()) return cmd_iterate(bag_iterate);
        if (sweep_cmd->parsed()) return cmd_sweep(bag_sweep);
        if (walk_cmd->parsed()) return cmd_random_walk(bag_walk);
        if (table_cmd->parsed()) return cmd_asymptote_table(bag_table);
        if (verify_cmd->parsed()) return cmd_verify(bag_verify);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
