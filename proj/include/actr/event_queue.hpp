#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "actr/error.hpp"
#include "actr/sim_time.hpp"

namespace actr {

template <typename Payload>
struct Event {
    SimTime time;
    int priority = 0;
    std::uint64_t seq = 0;
    Payload payload;
};

// Simulation clock plus pending events. Pop order: ascending time, then
// descending priority, then insertion order.
// Handle returned by schedule(); identifies the queued event.
struct EventTicket {
    SimTime time;
    int priority = 0;
    std::uint64_t seq = 0;
};

template <typename Payload>
class EventQueue {
public:
    using EventType = Event<Payload>;

    EventTicket schedule(SimTime t, int priority, Payload payload) {
        if (t < clock_) {
            throw Error(ErrorCode::TimeInPast, "event at " + std::to_string(t.seconds()) +
                                                   "s is before the clock (" +
                                                   std::to_string(clock_.seconds()) + "s)");
        }
        EventTicket ticket{t, priority, next_seq_++};
        heap_.push_back(EventType{t, priority, ticket.seq, std::move(payload)});
        std::push_heap(heap_.begin(), heap_.end(), Later{});
        return ticket;
    }

    std::optional<EventType> pop_next() {
        if (heap_.empty()) return std::nullopt;
        std::pop_heap(heap_.begin(), heap_.end(), Later{});
        EventType ev = std::move(heap_.back());
        heap_.pop_back();
        clock_ = ev.time;
        return ev;
    }

    // Time of the next event without removing it.
    std::optional<SimTime> peek_time() const {
        if (heap_.empty()) return std::nullopt;
        return heap_.front().time;
    }

    SimTime now() const { return clock_; }
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

private:
    // Heap comparator: true when a pops after b.
    struct Later {
        bool operator()(const EventType& a, const EventType& b) const {
            if (a.time != b.time) return a.time > b.time;
            if (a.priority != b.priority) return a.priority < b.priority;
            return a.seq > b.seq;
        }
    };

    std::vector<EventType> heap_;
    SimTime clock_;
    std::uint64_t next_seq_ = 0;
};

}  // namespace actr
