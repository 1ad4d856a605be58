#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "actr/model.hpp"
#include "actr/sim_time.hpp"
#include "actr/strategies.hpp"

namespace actr {

enum class StrategyKind { Reinforcement, SuccessCost, RandomCost };

std::string_view to_string(StrategyKind kind);
std::string_view to_string(TieBreakPolicy policy);
StrategyKind parse_strategy_kind(std::string_view text);
TieBreakPolicy parse_tie_break(std::string_view text);

// Last-declared for reinforcement, first-declared otherwise.
TieBreakPolicy default_tie_break(StrategyKind kind);

struct StrategyConfig {
    StrategyKind kind = StrategyKind::Reinforcement;
    double alpha = 0.2;
    double goal_value = 20.0;
    TieBreakPolicy tie_break = TieBreakPolicy::LastDeclared;
    bool refraction = false;
    std::uint64_t seed = 1;

    static StrategyConfig preset(StrategyKind kind);
};

std::unique_ptr<Strategy> make_strategy(const StrategyConfig& config, std::uint64_t seed);

enum class Move { Rock, Paper, Scissors };

Symbol move_symbol(Move m);

struct Sample {
    std::size_t index = 0;  // 1-based
    std::vector<Move> moves;
};

inline constexpr std::size_t kMovesPerSample = 20;

// One sample per non-blank line: 20 tokens from {r, p, s}.
std::vector<Sample> parse_samples(std::string_view text);
std::vector<Sample> load_samples(const std::filesystem::path& path);

// Player 1 always plays rock; players 2 and 3 ship as data.
std::vector<Sample> builtin_player_samples(int player);

enum class RoundOutcome { Win, Draw, Defeat };

struct HarnessConfig {
    StrategyConfig strategy;
    SimTime t_limit = SimTime::from_micros(2'000'000);
    std::size_t runs = 1;
    Symbol move_provider = "next-move";
    // Fired rules whose name starts with a prefix count as that outcome.
    std::vector<std::pair<std::string, RoundOutcome>> outcome_prefixes = {
        {"detect-win-", RoundOutcome::Win},
        {"detect-draw-", RoundOutcome::Draw},
        {"detect-defeat-", RoundOutcome::Defeat},
    };
    // Rules whose final utilities are reported, as (U_r, U_p, U_s).
    std::array<Symbol, 3> utility_rules = {"play-rock", "play-paper", "play-scissors"};
    std::ostream* trace_stream = nullptr;
};

struct RunResult {
    std::string label;
    std::size_t sample = 0;
    std::size_t run = 0;  // 0-based repeat index
    std::uint64_t seed = 0;
    std::array<double, 3> utilities{};
    int wins = 0;
    int draws = 0;
    int defeats = 0;
};

struct Averages {
    std::array<double, 3> utilities{};
    double wins = 0.0;
    double draws = 0.0;
    double defeats = 0.0;
};

struct Report {
    StrategyConfig config;
    std::vector<RunResult> results;
    Averages average;
};

// Fresh engine and strategy for one pass over a sample.
RunResult run_sample(const ModelAST& model, const HarnessConfig& config, const Sample& sample,
                     std::uint64_t seed);

// Every sample, `config.runs` times each. Repeat k uses seed
// config.strategy.seed + k.
Report run_experiment(const ModelAST& model, const HarnessConfig& config, std::span<const Sample> samples);

// Arithmetic means over the results. Throws EmptyResults on empty input.
Report summarize(std::vector<RunResult> results, const StrategyConfig& config = {});

// Half-up rounding to 3 decimals in decimal terms: values within float noise
// of a ...5 boundary round away from zero.
double round3(double value);
std::string format_utility(double value);  // "%.3f" of round3, no "-0.000"
std::string format_count(double value);    // shortest form: 19, 8.9, 13.94

std::string to_csv(const Report& report);
std::string to_json(const Report& report);

namespace builtin {
std::string_view rps_model();
std::string_view player2_samples();
std::string_view player3_samples();
}  // namespace builtin

}  // namespace actr
