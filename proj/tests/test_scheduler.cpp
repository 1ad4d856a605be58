#include <random>
#include <string>

#include <gtest/gtest.h>

#include "actr/event_queue.hpp"

using namespace actr;

namespace {
SimTime sec(double s) { return SimTime::from_seconds(s); }
}  // namespace

TEST(EventQueue, FreshQueue) {
    EventQueue<std::string> q;
    EXPECT_EQ(q.now(), SimTime{});
    EXPECT_FALSE(q.pop_next().has_value());
    EXPECT_FALSE(q.peek_time().has_value());
}

TEST(EventQueue, ScheduleAndAdvance) {
    EventQueue<std::string> q;
    EventTicket t = q.schedule(sec(0.05), 0, "apply");
    EXPECT_EQ(t.time, sec(0.05));
    EXPECT_EQ(q.size(), 1u);
    auto ev = q.pop_next();
    ASSERT_TRUE(ev);
    EXPECT_EQ(ev->payload, "apply");
    EXPECT_EQ(q.now(), sec(0.05));
}

TEST(EventQueue, TimeInPast) {
    EventQueue<int> q;
    q.schedule(sec(1.0), 0, 1);
    q.pop_next();
    try {
        q.schedule(sec(0.999999), 0, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TimeInPast);
    }
    EXPECT_NO_THROW(q.schedule(sec(1.0), 0, 3));  // "now" is not the past
}

TEST(EventQueue, HigherPriorityFirstWithinInstant) {
    EventQueue<char> q;
    q.schedule(sec(1.0), -10, 'B');
    q.schedule(sec(1.0), 0, 'A');
    EXPECT_EQ(q.pop_next()->payload, 'A');
    EXPECT_EQ(q.pop_next()->payload, 'B');
}

TEST(EventQueue, TimeDominatesPriority) {
    EventQueue<char> q;
    q.schedule(sec(1.0), 100, 'B');
    q.schedule(sec(0.5), -10, 'A');
    EXPECT_EQ(q.pop_next()->payload, 'A');
}

TEST(EventQueue, FifoOnFullTie) {
    EventQueue<int> q;
    for (int i = 0; i < 10; ++i) q.schedule(sec(1.0), 0, i);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(q.pop_next()->payload, i);
}

TEST(SimTime, RepeatedStepsAreExact) {
    SimTime t;
    for (int i = 0; i < 40; ++i) t = t + kFiringLatency;
    EXPECT_EQ(t, sec(2.0));
    EXPECT_DOUBLE_EQ(t.seconds(), 2.0);
}
