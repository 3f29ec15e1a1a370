// opam: priority-assignment search toolkit command line.
// Subcommands: synth, optimize, simulate, compare.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "opam/baselines.hpp"
#include "opam/coevolution.hpp"
#include "opam/io.hpp"
#include "opam/scheduler.hpp"
#include "opam/synth.hpp"
#include "opam/indicators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path output_root(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("OPAM_OUT_ROOT")) return env;
    return ".";
}

struct OptimizeOptions {
    std::string method = "opam";
    std::string taskset_path;
    std::string out_dir;
    std::string engineer_path;
    std::uint64_t budget = 0;
    bool history = false;
    opam::CoevolutionConfig config;
};

int run_optimize(const OptimizeOptions& opt) {
    const opam::TaskSet ts = opam::read_taskset(opt.taskset_path);
    opam::CoevolutionConfig config = opt.config;
    if (!opt.engineer_path.empty())
        config.engineer_assignment = opam::read_priorities(opt.engineer_path);
    config.keep_history = opt.history;

    opam::RunResult result;
    if (opt.method == "opam") {
        result = opam::coevolve(ts, config);
    } else if (opt.method == "rs") {
        result = opam::rs_run(ts, config);
    } else {
        std::uint64_t budget = opt.budget;
        if (budget == 0) {
            // match the coevolution *search* spend for the same cycle count;
            // external-set monitoring is excluded since it does not drive the search
            const std::uint64_t per_cycle =
                static_cast<std::uint64_t>(config.arrival_pop_size) * config.priority_pop_size +
                2ull * config.arrival_steps_per_cycle * config.priority_pop_size +
                2ull * config.priority_pop_size * config.arrival_pop_size;
            budget = per_cycle * static_cast<std::uint64_t>(config.cycles);
        }
        result = opam::seq_run(ts, config, opam::Budget{budget});
    }

    const fs::path out = output_root(opt.out_dir);
    fs::create_directories(out);
    opam::write_front(result.front, out / "front.json", opt.method, config.seed);
    opam::write_cycle_csv(result.log, out / "cycles.csv");

    json manifest;
    manifest["method"] = opt.method;
    manifest["taskset"] = opt.taskset_path;
    manifest["seed"] = config.seed;
    manifest["config"] = {
        {"cycles", config.cycles},
        {"ps_a", config.arrival_pop_size},
        {"ps_p", config.priority_pop_size},
        {"cp_a", config.arrival_crossover},
        {"cp_p", config.priority_crossover},
        {"mp_a", config.resolved_arrival_mutation(ts.size())},
        {"mp_p", config.resolved_priority_mutation(ts.size())},
        {"horizon", config.horizon},
        {"external_set_size", config.external_set_size},
        {"arrival_steps_per_cycle", config.arrival_steps_per_cycle},
        {"jobs", config.jobs},
    };
    if (opt.method == "seq") {
        manifest["budget"] = opt.budget;
        manifest["phase1_invocations"] = result.phase1_invocations;
    }
    manifest["simulator_invocations"] = result.simulator_invocations;
    manifest["search_invocations"] = result.search_invocations;
    std::ofstream(out / "manifest.json") << manifest.dump(2) << "\n";

    std::cout << opt.method << ": front size " << result.front.members.size() << ", "
              << result.simulator_invocations << " simulator invocations, artifacts in "
              << out.string() << "\n";
    return 0;
}

int run_compare(const std::vector<std::string>& group_a, const std::vector<std::string>& group_b,
                const std::string& out_path) {
    struct Entry {
        std::string file, method;
        std::uint64_t seed = 0;
        std::vector<opam::Point2> points;
        int group = 0;
    };
    std::vector<Entry> entries;
    auto load = [&](const std::vector<std::string>& files, int group) {
        for (const auto& f : files) {
            Entry e;
            e.file = f;
            e.group = group;
            const json doc = json::parse(std::ifstream(f));
            e.method = doc.value("method", "");
            e.seed = doc.value("seed", 0ull);
            const opam::BestFront front = opam::read_front(f);
            for (const auto& m : front.members) e.points.push_back({m.fs, m.fc});
            entries.push_back(std::move(e));
        }
    };
    load(group_a, 0);
    load(group_b, 1);

    std::vector<std::vector<opam::Point2>> raw;
    for (const auto& e : entries) raw.push_back(e.points);
    const auto norm = opam::normalize_fronts(raw);

    std::ostringstream csv;
    csv << "method,subject,seed,hv,gd_plus,delta\n";
    std::vector<double> hv_a, hv_b;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const double hv = opam::hypervolume_2d(norm.fronts[i]);
        const double gd = opam::gd_plus(norm.fronts[i], norm.reference);
        const double delta = opam::spread_delta(norm.fronts[i], norm.reference);
        (entries[i].group == 0 ? hv_a : hv_b).push_back(hv);
        csv << entries[i].method << ',' << fs::path(entries[i].file).stem().string() << ','
            << entries[i].seed << ',' << hv << ',' << gd << ',' << delta << '\n';
    }
    csv << "statistic,value\n";
    if (hv_a.size() >= 2 && hv_b.size() >= 2) {
        const auto mw = opam::mann_whitney_u(hv_a, hv_b);
        csv << "hv_mann_whitney_u," << mw.u << "\n";
        csv << "hv_p_value," << mw.p_value << "\n";
        csv << "hv_a12," << opam::vargha_delaney_a12(hv_a, hv_b) << "\n";
    } else {
        csv << "hv_mann_whitney_u,n/a\nhv_p_value,n/a\nhv_a12,n/a\n";
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream(out_path) << csv.str();
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto-optimal fixed-priority assignment search for real-time task sets"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "generate synthetic task sets");
    opam::SynthConfig synth_cfg;
    int synth_count = 1;
    std::string synth_out;
    bool synth_rm = false;
    synth->add_option("--n", synth_cfg.n, "number of tasks");
    synth->add_option("--u", synth_cfg.target_utilization, "target utilization (0,1]");
    synth->add_option("--pd-min", synth_cfg.pd_min, "minimum period (ticks)");
    synth->add_option("--pd-max", synth_cfg.pd_max, "maximum period (ticks)");
    synth->add_option("--g", synth_cfg.granularity, "period granularity (ticks)");
    synth->add_option("--gamma", synth_cfg.aperiodic_ratio, "aperiodic task ratio [0,1]");
    synth->add_option("--mu", synth_cfg.range_factor, "inter-arrival range factor (>1)");
    synth->add_option("--cores", synth_cfg.cores, "platform cores");
    synth->add_option("--seed", synth_cfg.seed, "generator seed");
    synth->add_option("--count", synth_count, "number of task sets (seed, seed+1, ...)");
    synth->add_option("--out", synth_out, "output directory");
    synth->add_flag("--rate-monotonic", synth_rm, "also write the rate-monotonic assignment");
    synth->callback([&] {
        if (auto errs = synth_cfg.validate(); !errs.empty())
            throw CLI::ValidationError("synth", errs.front());
        const fs::path out = output_root(synth_out);
        fs::create_directories(out);
        for (int i = 0; i < synth_count; ++i) {
            opam::SynthConfig cfg = synth_cfg;
            cfg.seed = synth_cfg.seed + static_cast<std::uint64_t>(i);
            const auto result = opam::synthesize(cfg);
            const std::string stem = "taskset_seed" + std::to_string(cfg.seed);
            opam::write_taskset(result.taskset, out / (stem + ".json"));
            if (synth_rm)
                opam::write_priorities(result.rate_monotonic, out / (stem + "_rm.json"));
            std::cout << "seed " << cfg.seed << " -> " << (out / (stem + ".json")).string()
                      << "\n";
        }
    });

    // optimize
    auto* optimize = app.add_subcommand("optimize", "search priority assignments");
    OptimizeOptions opt;
    optimize->add_option("taskset", opt.taskset_path, "task-description JSON")->required();
    optimize->add_option("--method", opt.method, "opam | rs | seq")
        ->check(CLI::IsMember({"opam", "rs", "seq"}));
    optimize->add_option("--cycles", opt.config.cycles, "coevolution cycles");
    optimize->add_option("--ps-a", opt.config.arrival_pop_size, "arrival population size");
    optimize->add_option("--ps-p", opt.config.priority_pop_size, "priority population size");
    optimize->add_option("--cp-a", opt.config.arrival_crossover, "arrival crossover probability");
    optimize->add_option("--cp-p", opt.config.priority_crossover, "priority crossover probability");
    optimize->add_option("--mp-a", opt.config.arrival_mutation,
                         "arrival mutation probability (default 1/n)");
    optimize->add_option("--mp-p", opt.config.priority_mutation,
                         "priority mutation probability (default 1/n)");
    optimize->add_option("--horizon", opt.config.horizon, "simulation horizon (ticks)");
    optimize->add_option("--external", opt.config.external_set_size, "external set size");
    optimize->add_option("--seed", opt.config.seed, "run seed");
    optimize->add_option("--jobs", opt.config.jobs, "parallel simulation threads");
    optimize->add_option("--budget", opt.budget, "simulator-invocation budget (seq)");
    optimize->add_option("--engineer", opt.engineer_path, "seed assignment file");
    optimize->add_option("--out", opt.out_dir, "output directory");
    optimize->add_flag("--history", opt.history, "keep per-cycle best-front snapshots");
    optimize->callback([&] { run_optimize(opt); });

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "run one schedule simulation");
    std::string sim_taskset, sim_arrivals, sim_priorities, sim_out;
    std::optional<std::uint64_t> sim_random_seed;
    opam::Tick sim_horizon = 0;
    simulate_cmd->add_option("taskset", sim_taskset, "task-description JSON")->required();
    simulate_cmd->add_option("--arrivals", sim_arrivals, "arrival-sequence JSON");
    simulate_cmd->add_option("--worst-random", sim_random_seed,
                             "draw a random arrival sequence from this seed");
    simulate_cmd->add_option("--priorities", sim_priorities, "priority assignment JSON")
        ->required();
    simulate_cmd->add_option("--horizon", sim_horizon, "horizon (required with --worst-random)");
    simulate_cmd->add_option("--out", sim_out, "scenario CSV path (default stdout)");
    simulate_cmd->callback([&] {
        const opam::TaskSet ts = opam::read_taskset(sim_taskset);
        const opam::PriorityAssignment pa = opam::read_priorities(sim_priorities);
        opam::ArrivalSequence seq;
        if (!sim_arrivals.empty()) {
            seq = opam::read_arrivals(sim_arrivals, ts.size());
            if (auto errs = opam::validate_arrivals(ts, seq); !errs.empty())
                throw std::runtime_error(sim_arrivals + ": " + errs.front());
        } else if (sim_random_seed) {
            opam::Rng rng(*sim_random_seed);
            seq = opam::random_arrival_sequence(ts, sim_horizon, rng);
        } else {
            throw CLI::ValidationError("simulate", "need --arrivals or --worst-random");
        }
        const auto scenario = opam::simulate(ts, seq, pa, seq.horizon);
        if (sim_out.empty())
            std::cout << opam::scenario_to_csv(scenario);
        else
            opam::write_scenario_csv(scenario, sim_out);
    });

    // compare
    auto* compare = app.add_subcommand("compare", "indicators and statistics over front files");
    std::vector<std::string> group_a, group_b;
    std::string compare_out;
    compare->add_option("--group-a", group_a, "front JSON files, first group")->required();
    compare->add_option("--group-b", group_b, "front JSON files, second group")->required();
    compare->add_option("--out", compare_out, "indicator CSV path (default stdout)");
    compare->callback([&] { run_compare(group_a, group_b, compare_out); });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
