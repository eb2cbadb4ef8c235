#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polar/acceptance.hpp"
#include "polar/json_io.hpp"
#include "polar/parallel.hpp"
#include "polar/potential.hpp"

namespace {

using polar::json;

constexpr const char* kVersion = "0.1.0";

struct Run {
    json output;
    std::vector<std::string> inputs;  // configuration files read by the command
    std::uint64_t seed = 0;
    int exit_code = 0;
    std::vector<std::pair<double, double>> table;
    std::string table_header;
};

int default_workers() {
    if (const char* env = std::getenv("POLAR_WORKERS")) return std::atoi(env);
    return 0;
}

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    return v;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return polar::fnv1a_hex(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"l_p polarization lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    int worker_count = default_workers();
    std::string manifest_path;
    bool table = false;
    app.add_option("--workers", worker_count, "OpenMP worker count (default: $POLAR_WORKERS or runtime default)");
    app.add_option("--manifest", manifest_path, "write a run manifest to this file ('-' for stderr)");
    app.add_flag("--table", table, "two-column plain-text table on stderr");

    Run run;
    std::function<void()> action;

    // potential
    auto* pot = app.add_subcommand("potential", "evaluate or certify the potential of a configuration");
    std::string pot_config, pot_v;
    double pot_p = 2.0, pot_delta = 1e-3;
    bool pot_max = false, pot_flat = false;
    pot->add_option("config", pot_config, "configuration JSON")->required()->check(CLI::ExistingFile);
    pot->add_option("--p", pot_p, "exponent")->required();
    pot->add_option("--v", pot_v, "comma-separated unit vector");
    pot->add_flag("--max", pot_max, "certified maximum over the sphere");
    pot->add_option("--delta", pot_delta, "covering radius of the certificate");
    pot->add_flag("--flat", pot_flat, "certify with a flat net scan instead of branch and bound");
    pot->callback([&] {
        action = [&] {
            const auto cfg = polar::read_configuration(pot_config);
            run.inputs.push_back(pot_config);
            const polar::Exponent p(pot_p);
            json out{{"p", pot_p}, {"n", cfg.size()}, {"dim", cfg.dim()}, {"underdetermined", cfg.underdetermined()}};
            if (!pot_v.empty()) out["value"] = polar::potential(cfg, parse_vector(pot_v), p);
            if (pot_max || pot_v.empty())
                out["certificate"] = pot_flat ? polar::certified_max_flat(cfg, p, pot_delta)
                                              : polar::certified_max(cfg, p, pot_delta);
            run.output = out;
        };
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower bound n mu_{d,p} and the basis-copies construction");
    int b_n = 0, b_d = 0;
    double b_p = 0.0;
    bounds->add_option("--n", b_n)->required();
    bounds->add_option("--d", b_d)->required();
    bounds->add_option("--p", b_p)->required();
    bounds->callback([&] {
        action = [&] { run.output = polar::theorem1_bounds(b_n, b_d, polar::Exponent(b_p)); };
    });

    // frame
    auto* frame = app.add_subcommand("frame", "frame operator tools");
    frame->require_subcommand(1);
    auto* synth = frame->add_subcommand("synth", "synthesize a unit norm tight frame");
    int f_n = 0, f_d = 0;
    std::uint64_t f_seed = 0;
    synth->add_option("--n", f_n)->required();
    synth->add_option("--d", f_d)->required();
    synth->add_option("--seed", f_seed);
    synth->callback([&] {
        action = [&] {
            run.seed = f_seed;
            run.output = polar::synthesize_untf(f_n, f_d, f_seed);
        };
    });
    auto* check = frame->add_subcommand("check", "frame operator, p=2 polarization and isotropy");
    std::string f_config;
    check->add_option("config", f_config)->required()->check(CLI::ExistingFile);
    check->callback([&] {
        action = [&] {
            const auto cfg = polar::read_configuration(f_config);
            run.inputs.push_back(f_config);
            const auto p2 = polar::polarization_p2(cfg);
            run.output = {{"frame_operator", polar::frame_operator(cfg)},
                          {"polarization_p2", {{"value", p2.value}, {"witness", p2.witness}}},
                          {"frame_potential", polar::frame_potential(cfg)},
                          {"frame_potential_bound", static_cast<double>(cfg.size() * cfg.size()) / cfg.dim()},
                          {"isotropy", polar::low_dim_isotropy_check(cfg)}};
        };
    });

    // signsum
    auto* ss = app.add_subcommand("signsum", "maximal signed sums");
    ss->require_subcommand(1);
    std::string s_config;
    std::uint64_t s_seed = 0;
    int s_starts = 32, s_d = 2, s_trials = 1000;
    double s_delta = 1e-3;
    auto* exact = ss->add_subcommand("exact", "Gray-code enumeration");
    exact->add_option("config", s_config)->required()->check(CLI::ExistingFile);
    exact->callback([&] {
        action = [&] {
            run.inputs.push_back(s_config);
            run.output = polar::max_sign_sum_exact(polar::read_configuration(s_config));
        };
    });
    auto* local = ss->add_subcommand("local", "multi-start Bang hill climbing");
    local->add_option("config", s_config)->required()->check(CLI::ExistingFile);
    local->add_option("--seed", s_seed);
    local->add_option("--starts", s_starts);
    local->callback([&] {
        action = [&] {
            run.inputs.push_back(s_config);
            run.seed = s_seed;
            run.output = polar::max_sign_sum_local(polar::read_configuration(s_config), s_seed, s_starts);
        };
    });
    auto* prop3 = ss->add_subcommand("prop3", "sign-sum maximum against the certified l1 polarization");
    prop3->add_option("config", s_config)->required()->check(CLI::ExistingFile);
    prop3->add_option("--delta", s_delta);
    prop3->callback([&] {
        action = [&] {
            run.inputs.push_back(s_config);
            run.output = polar::prop3_crosscheck(polar::read_configuration(s_config), s_delta);
        };
    });
    auto* conj1 = ss->add_subcommand("conjecture1", "exact sign sums of d+1 random unit vectors");
    conj1->add_option("--d", s_d)->required();
    conj1->add_option("--trials", s_trials);
    conj1->add_option("--seed", s_seed);
    conj1->callback([&] {
        action = [&] {
            run.seed = s_seed;
            run.output = polar::conjecture1_harness(s_d, s_trials, s_seed);
        };
    });

    // planar
    auto* planar = app.add_subcommand("planar", "the circle: energies, Stolarsky maxima, scans");
    planar->require_subcommand(1);
    int pl_n = 0, pl_steps = 10, pl_restarts = 16;
    double pl_p = 1.0, pl_pmin = 0.5, pl_pmax = 5.0;
    std::uint64_t pl_seed = 0;
    auto* energy = planar->add_subcommand("energy", "Riesz energy of the n-th roots of unity");
    energy->add_option("--n", pl_n)->required();
    energy->add_option("--p", pl_p)->required();
    energy->callback([&] {
        action = [&] {
            const auto r = polar::stolarsky_max(pl_n, polar::Exponent(pl_p));
            run.output = {{"n", pl_n}, {"p", pl_p}, {"direct", r.direct},
                          {"closed", r.closed ? json(*r.closed) : json(nullptr)}};
        };
    });
    auto* stol = planar->add_subcommand("stolarsky", "max over T of the potential of the roots of unity");
    stol->add_option("--n", pl_n)->required();
    stol->add_option("--p", pl_p)->required();
    stol->callback([&] { action = [&] { run.output = polar::stolarsky_max(pl_n, polar::Exponent(pl_p)); }; });
    auto* prop5 = planar->add_subcommand("prop5", "M^p_n(S^1) for 0 < p <= 1");
    prop5->add_option("--n", pl_n)->required();
    prop5->add_option("--p", pl_p)->required();
    prop5->callback([&] {
        action = [&] { run.output = {{"n", pl_n}, {"p", pl_p}, {"value", polar::prop5_value(pl_n, pl_p)}}; };
    });
    auto* scan = planar->add_subcommand("scan", "planar minimizer against equally spaced lines");
    scan->add_option("--n", pl_n)->required();
    scan->add_option("--pmin", pl_pmin);
    scan->add_option("--pmax", pl_pmax);
    scan->add_option("--steps", pl_steps, "number of grid points from pmin to pmax");
    scan->add_option("--restarts", pl_restarts);
    scan->add_option("--seed", pl_seed);
    scan->callback([&] {
        action = [&] {
            if (pl_steps < 1) throw CLI::ValidationError("--steps", "must be >= 1");
            std::vector<double> grid;
            for (int k = 0; k < pl_steps; ++k)
                grid.push_back(pl_steps == 1 ? pl_pmin : pl_pmin + (pl_pmax - pl_pmin) * k / (pl_steps - 1));
            run.seed = pl_seed;
            const auto rep = polar::conjecture2_scan(pl_n, grid, pl_restarts, pl_seed);
            run.output = rep;
            run.table_header = "# p best";
            for (const auto& it : rep.items) run.table.emplace_back(it.p, it.best);
        };
    });

    // search
    auto* search = app.add_subcommand("search", "heuristic minimization of the polarization");
    int se_n = 0, se_d = 0;
    double se_p = 2.0;
    polar::SearchOptions se_opts;
    bool no_structured = false;
    search->add_option("--n", se_n)->required();
    search->add_option("--d", se_d)->required();
    search->add_option("--p", se_p)->required();
    search->add_option("--restarts", se_opts.restarts);
    search->add_option("--delta", se_opts.net_delta);
    search->add_option("--steps", se_opts.outer_steps);
    search->add_option("--beta", se_opts.smoothing, "soft-max beta (default 50/n)");
    search->add_option("--surrogate-points", se_opts.surrogate_points);
    search->add_option("--seed", se_opts.seed);
    search->add_flag("--no-structured", no_structured);
    search->callback([&] {
        action = [&] {
            if (no_structured) se_opts.structured = {false, false, false};
            run.seed = se_opts.seed;
            run.output = polar::minimize_polarization(se_n, se_d, polar::Exponent(se_p), se_opts);
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    polar::AcceptanceOptions v_opts;
    bool v_determinism = true;
    verify->add_option("--seed", v_opts.seed);
    verify->add_option("--only", v_opts.criteria, "criteria to run (1..9)");
    verify->add_flag("!--no-determinism", v_determinism, "skip the 1-vs-8 worker rerun");
    verify->callback([&] {
        action = [&] {
            run.seed = v_opts.seed;
            std::vector<polar::CriterionOutcome> outcomes;
            if (v_determinism) {
                const auto det = polar::determinism_check(v_opts, &outcomes);
                outcomes.push_back(det);
            } else {
                outcomes = polar::run_acceptance(v_opts);
            }
            bool all = true;
            for (const auto& o : outcomes) {
                std::cerr << polar::summary_line(o) << '\n';
                all = all && o.passed();
            }
            // Criterion 10 compares exactly this array, so it carries no timings.
            std::vector<polar::CriterionOutcome> numeric(outcomes.begin(), outcomes.end());
            if (v_determinism) numeric.pop_back();
            run.output = polar::acceptance_json(numeric);
            run.exit_code = all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    polar::set_workers(worker_count);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}}.dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        const bool budget = dynamic_cast<const polar::BudgetExceeded*>(&e) != nullptr;
        std::cout << json{{"error", {{"type", budget ? "budget_exceeded" : "numeric"}, {"message", e.what()}}}}.dump(2)
                  << '\n';
        return 1;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string text = run.output.dump(2);
    std::cout << text << '\n';

    if (table && !run.table.empty()) {
        std::cerr << run.table_header << '\n' << std::setprecision(17);
        for (const auto& [x, y] : run.table) std::cerr << x << ' ' << y << '\n';
    }
    if (!manifest_path.empty()) {
        std::string cmdline;
        for (int k = 0; k < argc; ++k) cmdline += (k ? " " : "") + std::string(argv[k]);
        json inputs = json::object();
        for (const auto& f : run.inputs) inputs[f] = file_digest(f);
        const json manifest{{"command_line", cmdline},
                            {"seed", run.seed},
                            {"version", kVersion},
                            {"workers", polar::workers()},
                            {"wall_seconds", wall},
                            {"input_digests", inputs},
                            {"output_digest", polar::fnv1a_hex(text)}};
        if (manifest_path == "-") {
            std::cerr << manifest.dump(2) << '\n';
        } else {
            std::ofstream(manifest_path) << manifest.dump(2) << '\n';
        }
    }
    return run.exit_code;
}
