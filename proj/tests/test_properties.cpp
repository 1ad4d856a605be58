#include <gtest/gtest.h>

#include "property_checks.hpp"

using namespace actr::checks;

#define EXPECT_VERDICT(expr)                  \
    do {                                      \
        const Verdict v_ = (expr);            \
        EXPECT_TRUE(v_.ok) << v_.detail;      \
        RecordProperty("detail", v_.detail);  \
    } while (0)

TEST(Properties, ReinforcementContraction) { EXPECT_VERDICT(reinforcement_contraction(20'000, 1)); }

TEST(Properties, SuccessCostMatchesRecompute) { EXPECT_VERDICT(success_cost_oracle(10'000, 2)); }

TEST(Properties, RandomCostMean) {
    for (double theta : {0.05, 0.075, 1.0, 3.7}) EXPECT_VERDICT(zeta_mean(theta, 100'000, 3));
    EXPECT_VERDICT(zeta_mean_via_strategy(100'000, 4));
}

TEST(Properties, SchedulerTotalOrder) { EXPECT_VERDICT(scheduler_total_order(500, 5)); }

TEST(Properties, ChunkStoreConsistency) { EXPECT_VERDICT(chunk_store_consistency(500, 6)); }

TEST(Properties, TraceDeterminism) { EXPECT_VERDICT(trace_determinism(10)); }

TEST(Properties, RefractionNeverRefires) { EXPECT_VERDICT(refraction_random_models(1'000, 7)); }

TEST(Properties, RefractionHaltsRps) { EXPECT_VERDICT(refraction_halts_rps()); }

TEST(Properties, RefractionKeepsUtilityArithmetic) { EXPECT_VERDICT(refraction_preserves_arithmetic(300, 8)); }
