#include "actr/experiment.hpp"

#include <fstream>
#include <sstream>

#include "actr/engine.hpp"
#include "actr/error.hpp"

namespace actr {

std::string_view to_string(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::Reinforcement: return "reinforcement";
    case StrategyKind::SuccessCost: return "success-cost";
    case StrategyKind::RandomCost: return "random-cost";
    }
    return "?";
}

std::string_view to_string(TieBreakPolicy policy) {
    return policy == TieBreakPolicy::FirstDeclared ? "first-declared" : "last-declared";
}

StrategyKind parse_strategy_kind(std::string_view text) {
    if (text == "reinforcement") return StrategyKind::Reinforcement;
    if (text == "success-cost") return StrategyKind::SuccessCost;
    if (text == "random-cost") return StrategyKind::RandomCost;
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + std::string(text) + "'");
}

TieBreakPolicy parse_tie_break(std::string_view text) {
    if (text == "first-declared") return TieBreakPolicy::FirstDeclared;
    if (text == "last-declared") return TieBreakPolicy::LastDeclared;
    throw Error(ErrorCode::InvalidArgument, "unknown tie-break policy '" + std::string(text) + "'");
}

TieBreakPolicy default_tie_break(StrategyKind kind) {
    return kind == StrategyKind::Reinforcement ? TieBreakPolicy::LastDeclared : TieBreakPolicy::FirstDeclared;
}

StrategyConfig StrategyConfig::preset(StrategyKind kind) {
    StrategyConfig c;
    c.kind = kind;
    c.tie_break = default_tie_break(kind);
    return c;
}

std::unique_ptr<Strategy> make_strategy(const StrategyConfig& config, std::uint64_t seed) {
    switch (config.kind) {
    case StrategyKind::Reinforcement:
        return std::make_unique<ReinforcementStrategy>(config.alpha, config.tie_break);
    case StrategyKind::SuccessCost:
        return std::make_unique<SuccessCostStrategy>(config.goal_value, config.tie_break);
    case StrategyKind::RandomCost:
        return std::make_unique<RandomCostStrategy>(seed, config.goal_value, config.tie_break);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown strategy kind");
}

Symbol move_symbol(Move m) {
    switch (m) {
    case Move::Rock: return "rock";
    case Move::Paper: return "paper";
    case Move::Scissors: return "scissors";
    }
    return kNil;
}

std::vector<Sample> parse_samples(std::string_view text) {
    std::vector<Sample> samples;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string tok;
        Sample s;
        while (words >> tok) {
            if (tok == "r") s.moves.push_back(Move::Rock);
            else if (tok == "p") s.moves.push_back(Move::Paper);
            else if (tok == "s") s.moves.push_back(Move::Scissors);
            else
                throw Error(ErrorCode::MalformedMove,
                            "line " + std::to_string(line_no) + ": bad move token '" + tok + "'");
        }
        if (s.moves.empty()) continue;
        if (s.moves.size() != kMovesPerSample)
            throw Error(ErrorCode::WrongLength, "line " + std::to_string(line_no) + ": expected " +
                                                    std::to_string(kMovesPerSample) + " moves, got " +
                                                    std::to_string(s.moves.size()));
        s.index = samples.size() + 1;
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<Sample> load_samples(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open samples file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_samples(buf.str());
}

std::vector<Sample> builtin_player_samples(int player) {
    switch (player) {
    case 1: return {Sample{1, std::vector<Move>(kMovesPerSample, Move::Rock)}};
    case 2: return parse_samples(builtin::player2_samples());
    case 3: return parse_samples(builtin::player3_samples());
    default: throw Error(ErrorCode::InvalidArgument, "player must be 1, 2 or 3");
    }
}

RunResult run_sample(const ModelAST& model, const HarnessConfig& config, const Sample& sample,
                     std::uint64_t seed) {
    EngineOptions opts;
    opts.refraction = config.strategy.refraction;
    opts.trace_stream = config.trace_stream;
    Engine engine(model, make_strategy(config.strategy, seed), opts);

    std::vector<Symbol> moves;
    moves.reserve(sample.moves.size());
    for (Move m : sample.moves) moves.push_back(move_symbol(m));
    engine.register_provider(config.move_provider, sequence_provider(std::move(moves)));

    engine.run(config.t_limit);

    RunResult r;
    r.sample = sample.index;
    r.seed = seed;
    for (const FiredRule& f : engine.trace()) {
        for (const auto& [prefix, outcome] : config.outcome_prefixes) {
            if (!f.rule.starts_with(prefix)) continue;
            switch (outcome) {
            case RoundOutcome::Win: ++r.wins; break;
            case RoundOutcome::Draw: ++r.draws; break;
            case RoundOutcome::Defeat: ++r.defeats; break;
            }
            break;
        }
    }
    for (std::size_t i = 0; i < 3; ++i) r.utilities[i] = engine.strategy().utility(config.utility_rules[i]);
    return r;
}

Report run_experiment(const ModelAST& model, const HarnessConfig& config, std::span<const Sample> samples) {
    if (config.runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be at least 1");
    std::vector<RunResult> results;
    results.reserve(samples.size() * config.runs);
    for (const Sample& s : samples) {
        for (std::size_t k = 0; k < config.runs; ++k) {
            RunResult r = run_sample(model, config, s, config.strategy.seed + k);
            r.run = k;
            r.label = config.runs > 1 ? std::to_string(s.index) + "/" + std::to_string(k + 1)
                                      : std::to_string(s.index);
            results.push_back(std::move(r));
        }
    }
    return summarize(std::move(results), config.strategy);
}

Report summarize(std::vector<RunResult> results, const StrategyConfig& config) {
    if (results.empty()) throw Error(ErrorCode::EmptyResults, "no results to summarize");
    Report rep;
    rep.config = config;
    const double n = static_cast<double>(results.size());
    for (const RunResult& r : results) {
        for (std::size_t i = 0; i < 3; ++i) rep.average.utilities[i] += r.utilities[i];
        rep.average.wins += r.wins;
        rep.average.draws += r.draws;
        rep.average.defeats += r.defeats;
    }
    for (double& u : rep.average.utilities) u /= n;
    rep.average.wins /= n;
    rep.average.draws /= n;
    rep.average.defeats /= n;
    rep.results = std::move(results);
    return rep;
}

}  // namespace actr
