#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace actr {

// Simulated time. Stored as integer microseconds so that repeated 50 ms
// steps compare exactly; exposed in seconds.
class SimTime {
public:
    constexpr SimTime() = default;

    static constexpr SimTime from_micros(std::int64_t us) { return SimTime(us); }
    static SimTime from_seconds(double s) { return SimTime(std::llround(s * 1e6)); }

    constexpr std::int64_t micros() const { return us_; }
    constexpr double seconds() const { return static_cast<double>(us_) / 1e6; }

    constexpr SimTime operator+(SimTime o) const { return SimTime(us_ + o.us_); }
    constexpr SimTime operator-(SimTime o) const { return SimTime(us_ - o.us_); }
    constexpr auto operator<=>(const SimTime&) const = default;

private:
    constexpr explicit SimTime(std::int64_t us) : us_(us) {}
    std::int64_t us_ = 0;
};

// Time between selecting a rule and applying it.
inline constexpr SimTime kFiringLatency = SimTime::from_micros(50'000);

}  // namespace actr
