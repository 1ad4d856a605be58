#include <algorithm>
#include <array>

#include <gtest/gtest.h>
#include <json.hpp>

#include "actr/error.hpp"
#include "actr/experiment.hpp"
#include "actr/model_parser.hpp"

using namespace actr;

namespace {

std::array<int, 3> frequencies(const Sample& s) {
    std::array<int, 3> f{};
    for (Move m : s.moves) ++f[static_cast<int>(m)];
    return f;
}

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no actr::Error thrown";
    return ErrorCode::InvalidArgument;
}

HarnessConfig config(StrategyKind kind) {
    HarnessConfig c;
    c.strategy = StrategyConfig::preset(kind);
    return c;
}

}  // namespace

TEST(Samples, BuiltinPlayers) {
    auto p1 = builtin_player_samples(1);
    ASSERT_EQ(p1.size(), 1u);
    EXPECT_EQ(frequencies(p1[0]), (std::array<int, 3>{20, 0, 0}));

    auto p2 = builtin_player_samples(2);
    ASSERT_EQ(p2.size(), 20u);
    EXPECT_EQ(frequencies(p2[0]), (std::array<int, 3>{11, 9, 0}));
    for (const auto& s : p2) EXPECT_EQ(frequencies(s)[2], 0) << "player 2 never plays scissors";

    auto p3 = builtin_player_samples(3);
    ASSERT_EQ(p3.size(), 20u);
    EXPECT_EQ(frequencies(p3[0]), (std::array<int, 3>{6, 3, 11}));
    EXPECT_EQ(p3[19].index, 20u);
    EXPECT_THROW(builtin_player_samples(4), Error);
}

TEST(Samples, ParseErrors) {
    const std::string ok = "r r r r r p p p p p s s s s s r p s r p";
    EXPECT_EQ(parse_samples(ok + "\n\n" + ok + "\n").size(), 2u);
    EXPECT_EQ(code_of([&] { parse_samples("r r x"); }), ErrorCode::MalformedMove);
    EXPECT_EQ(code_of([&] { parse_samples("r r r"); }), ErrorCode::WrongLength);
    EXPECT_EQ(code_of([&] { parse_samples(ok + " r"); }), ErrorCode::WrongLength);
    EXPECT_THROW(load_samples("/nonexistent/samples.txt"), Error);
}

TEST(Report, Rounding) {
    EXPECT_EQ(format_utility(0.0195), "0.020");  // binary 0.01949999...
    EXPECT_EQ(format_utility(-0.02), "-0.020");
    EXPECT_EQ(format_utility(-0.0001), "0.000");
    EXPECT_EQ(format_utility(19.925), "19.925");
    EXPECT_EQ(format_utility(9.9245), "9.925");
    EXPECT_EQ(format_utility(1.8725), "1.873");
    EXPECT_EQ(format_count(2.0), "2");
    EXPECT_EQ(format_count(8.9), "8.9");
    EXPECT_EQ(format_count(7.65), "7.65");
    EXPECT_EQ(format_count(13.94), "13.94");
}

TEST(Report, SummarizeSingleAndEmpty) {
    RunResult r{"1", 1, 0, 0, {1.0, 2.0, 3.0}, 4, 5, 6};
    Report rep = summarize({r});
    EXPECT_EQ(rep.average.utilities, r.utilities);
    EXPECT_EQ(rep.average.wins, 4.0);
    EXPECT_EQ(code_of([] { summarize({}); }), ErrorCode::EmptyResults);
}

TEST(Report, AverageOfUnroundedValues) {
    // Means are taken before rounding: 0.0004 and 0.0012 average to 0.0008,
    // which rounds to 0.001 although both rounded inputs average to 0.0005.
    Report rep = summarize({RunResult{"1", 1, 0, 0, {0.0004, 0, 0}, 0, 0, 0},
                            RunResult{"2", 2, 0, 0, {0.0012, 0, 0}, 0, 0, 0}});
    EXPECT_NE(to_csv(rep).find("avg,0.001,"), std::string::npos);
}

TEST(Experiment, PlayerOneReinforcement) {
    ModelAST m = parse_model(builtin::rps_model());
    Report rep = run_experiment(m, config(StrategyKind::Reinforcement), builtin_player_samples(1));
    EXPECT_EQ(to_csv(rep), "sample,U_r,U_p,U_s,wins,draws,defeats\n"
                           "1,0.000,1.873,-0.020,19,0,1\n"
                           "avg,0.000,1.873,-0.020,19,0,1\n");
}

TEST(Experiment, PlayerOneSuccessCost) {
    ModelAST m = parse_model(builtin::rps_model());
    Report rep = run_experiment(m, config(StrategyKind::SuccessCost), builtin_player_samples(1));
    ASSERT_EQ(rep.results.size(), 1u);
    const RunResult& r = rep.results[0];
    for (double u : r.utilities) EXPECT_EQ(format_utility(u), "19.950");
    EXPECT_EQ(r.wins, 0);
    EXPECT_EQ(r.draws, 20);
    EXPECT_EQ(r.defeats, 0);
}

TEST(Experiment, ZeroRoundRun) {
    ModelAST m = parse_model(builtin::rps_model());
    HarnessConfig c = config(StrategyKind::SuccessCost);
    c.t_limit = SimTime{};
    Report rep = run_experiment(m, c, builtin_player_samples(3));
    for (const auto& r : rep.results) {
        EXPECT_EQ(r.wins + r.draws + r.defeats, 0);
        for (double u : r.utilities) EXPECT_NEAR(u, 19.95, 1e-12);
    }
}

TEST(Experiment, RoundAccounting) {
    ModelAST m = parse_model(builtin::rps_model());
    for (auto kind : {StrategyKind::Reinforcement, StrategyKind::SuccessCost, StrategyKind::RandomCost}) {
        HarnessConfig c = config(kind);
        Report rep = run_experiment(m, c, builtin_player_samples(3));
        for (const auto& r : rep.results) EXPECT_EQ(r.wins + r.draws + r.defeats, 20) << r.label;
    }
}

TEST(Experiment, ProviderExhaustedPropagates) {
    ModelAST m = parse_model(builtin::rps_model());
    HarnessConfig c = config(StrategyKind::Reinforcement);
    c.t_limit = SimTime::from_seconds(2.1);  // round 21 needs a 21st move
    EXPECT_EQ(code_of([&] { run_experiment(m, c, builtin_player_samples(1)); }), ErrorCode::ProviderExhausted);
}

TEST(Experiment, RepeatedRunsUseDistinctSeeds) {
    ModelAST m = parse_model(builtin::rps_model());
    HarnessConfig c = config(StrategyKind::RandomCost);
    c.runs = 5;
    c.strategy.seed = 100;
    auto samples = builtin_player_samples(2);
    Report rep = run_experiment(m, c, std::span(samples).first(1));
    ASSERT_EQ(rep.results.size(), 5u);
    EXPECT_EQ(rep.results[0].label, "1/1");
    EXPECT_EQ(rep.results[4].label, "1/5");
    EXPECT_EQ(rep.results[4].seed, 104u);
    Report again = run_experiment(m, c, std::span(samples).first(1));
    EXPECT_EQ(to_csv(rep), to_csv(again));

    HarnessConfig single = c;
    single.runs = 1;
    single.strategy.seed = 103;
    Report one = run_experiment(m, single, std::span(samples).first(1));
    EXPECT_EQ(one.results[0].utilities, rep.results[3].utilities);
}

TEST(Report, JsonMirrorsCsv) {
    ModelAST m = parse_model(builtin::rps_model());
    Report rep = run_experiment(m, config(StrategyKind::SuccessCost), builtin_player_samples(2));
    auto j = nlohmann::json::parse(to_json(rep));
    EXPECT_EQ(j["config"]["strategy"], "success-cost");
    EXPECT_EQ(j["config"]["tiebreak"], "first-declared");
    ASSERT_EQ(j["results"].size(), 20u);
    EXPECT_DOUBLE_EQ(j["average"]["U_r"].get<double>(), 7.44);
    EXPECT_DOUBLE_EQ(j["average"]["wins"].get<double>(), 8.9);
    EXPECT_EQ(j["results"][0]["wins"], rep.results[0].wins);
}
