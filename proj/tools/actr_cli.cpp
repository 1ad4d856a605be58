// actr — run production-rule models against rock-paper-scissors opponents.
//
//   actr run --player 2 --strategy success-cost
//   actr run --model my.model --samples moves.txt --strategy random-cost --runs 50 --seed 7
//   actr validate --model my.model

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "actr/error.hpp"
#include "actr/experiment.hpp"
#include "actr/model_parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRuntime = 2;

struct RunArgs {
    std::string model_path;
    int player = 0;
    std::string samples_path;
    std::size_t sample_index = 0;
    std::string strategy = "reinforcement";
    bool refraction = false;
    double alpha = 0.2;
    double goal_value = 20.0;
    std::string tiebreak;
    std::uint64_t seed = 1;
    std::size_t runs = 1;
    double t_limit = 2.0;
    std::string format = "csv";
    bool trace = false;
    std::string trace_file;
};

// Failures that come from running a well-formed model rather than from the
// inputs themselves.
bool is_runtime(actr::ErrorCode c) {
    using actr::ErrorCode;
    return c == ErrorCode::ProviderExhausted || c == ErrorCode::UnknownProvider || c == ErrorCode::TimeInPast ||
           c == ErrorCode::EmptyBuffer || c == ErrorCode::EmptyResults;
}

actr::ModelAST load_model(const std::string& path) {
    if (path.empty()) return actr::parse_model(actr::builtin::rps_model());
    std::ifstream in(path);
    if (!in) throw actr::Error(actr::ErrorCode::InvalidArgument, "cannot open model file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return actr::parse_model(buf.str());
}

int validate_only(const std::string& path) {
    actr::ModelAST model = load_model(path);
    auto diags = actr::validate_model(model);
    for (const auto& d : diags) std::cerr << "error: " << d << "\n";
    if (!diags.empty()) return kExitInput;
    std::cout << "ok: " << model.productions.size() << " productions, " << model.chunk_types.size()
              << " chunk types\n";
    return kExitOk;
}

int run(const RunArgs& a) {
    actr::ModelAST model = load_model(a.model_path);
    if (auto diags = actr::validate_model(model); !diags.empty()) {
        for (const auto& d : diags) std::cerr << "error: " << d << "\n";
        return kExitInput;
    }

    std::vector<actr::Sample> samples;
    if (!a.samples_path.empty()) samples = actr::load_samples(a.samples_path);
    else samples = actr::builtin_player_samples(a.player == 0 ? 1 : a.player);
    if (a.sample_index != 0) {
        if (a.sample_index > samples.size())
            throw actr::Error(actr::ErrorCode::InvalidArgument,
                              "sample index " + std::to_string(a.sample_index) + " out of range (have " +
                                  std::to_string(samples.size()) + ")");
        samples = {samples[a.sample_index - 1]};
    }
    if (samples.empty()) throw actr::Error(actr::ErrorCode::InvalidArgument, "no samples to run");

    actr::HarnessConfig cfg;
    cfg.strategy = actr::StrategyConfig::preset(actr::parse_strategy_kind(a.strategy));
    cfg.strategy.alpha = a.alpha;
    cfg.strategy.goal_value = a.goal_value;
    if (!a.tiebreak.empty()) cfg.strategy.tie_break = actr::parse_tie_break(a.tiebreak);
    cfg.strategy.refraction = a.refraction;
    cfg.strategy.seed = a.seed;
    cfg.runs = a.runs;
    cfg.t_limit = actr::SimTime::from_seconds(a.t_limit);

    std::ofstream trace_out;
    if (!a.trace_file.empty()) {
        trace_out.open(a.trace_file);
        if (!trace_out)
            throw actr::Error(actr::ErrorCode::InvalidArgument, "cannot write trace file '" + a.trace_file + "'");
        cfg.trace_stream = &trace_out;
    } else if (a.trace) {
        cfg.trace_stream = &std::cerr;
    }

    actr::Report report = actr::run_experiment(model, cfg, samples);
    std::cout << (a.format == "json" ? actr::to_json(report) : actr::to_csv(report));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACT-R style production-rule engine with rock-paper-scissors experiments"};
    app.require_subcommand(1);

    RunArgs args;
    auto* run_cmd = app.add_subcommand("run", "Run the model over opponent samples and print a report");
    run_cmd->add_option("--model", args.model_path, "Model file (default: built-in RPS model)")
        ->check(CLI::ExistingFile);
    auto* player = run_cmd->add_option("--player", args.player, "Built-in opponent (1, 2 or 3)")
                       ->check(CLI::Range(1, 3));
    run_cmd->add_option("--samples", args.samples_path, "Sample file; overrides --player")
        ->check(CLI::ExistingFile)
        ->excludes(player);
    run_cmd->add_option("--sample-index", args.sample_index, "Run only this 1-based sample")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--strategy", args.strategy, "Conflict resolution strategy")
        ->check(CLI::IsMember({"reinforcement", "success-cost", "random-cost"}));
    run_cmd->add_flag("--refraction", args.refraction, "Never re-fire an applied instantiation");
    run_cmd->add_option("--alpha", args.alpha, "Learning rate for reinforcement, in (0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->check([](const std::string& s) { return std::stod(s) > 0.0 ? "" : "alpha must be > 0"; });
    run_cmd->add_option("--goal-value", args.goal_value, "Goal value G in seconds");
    run_cmd->add_option("--tiebreak", args.tiebreak, "Tie-break policy (default depends on strategy)")
        ->check(CLI::IsMember({"first-declared", "last-declared"}));
    run_cmd->add_option("--seed", args.seed, "Base RNG seed; repeat k uses seed + k");
    run_cmd->add_option("--runs", args.runs, "Repeats per sample")->check(CLI::PositiveNumber);
    run_cmd->add_option("--t-limit", args.t_limit, "Simulated seconds per run")->check(CLI::PositiveNumber);
    run_cmd->add_option("--format", args.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_flag("--trace", args.trace, "Write the firing trace to stderr");
    run_cmd->add_option("--trace-file", args.trace_file, "Write the firing trace to a file");

    std::string validate_path;
    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a model file");
    validate_cmd->add_option("--model", validate_path, "Model file (default: built-in RPS model)")
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*validate_cmd) return validate_only(validate_path);
        return run(args);
    } catch (const actr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_runtime(e.code()) ? kExitRuntime : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
