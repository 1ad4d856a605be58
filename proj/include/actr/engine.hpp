#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "actr/buffer_system.hpp"
#include "actr/chunk_store.hpp"
#include "actr/event_queue.hpp"
#include "actr/instantiation.hpp"
#include "actr/model.hpp"
#include "actr/strategies.hpp"

namespace actr {

class Engine;

// Event priorities within one time instant; higher runs first.
inline constexpr int kModifyPriority = 100;
inline constexpr int kClearPriority = 90;
inline constexpr int kApplyPriority = 0;
inline constexpr int kMatchPriority = -10;

struct MatchEvent {};

struct ApplyRuleEvent {
    Instantiation instantiation;
};

// A fully resolved buffer action.
struct BufferEffectEvent {
    ActionKind kind = ActionKind::Modify;
    Symbol buffer;
    ChunkDescription description;
};

struct HarnessCallback {
    std::function<void(Engine&)> fn;
};

using EnginePayload = std::variant<MatchEvent, ApplyRuleEvent, BufferEffectEvent, HarnessCallback>;

// Host-side value source for `!bind!`; nullopt means exhausted.
using Provider = std::function<std::optional<Symbol>()>;

// Provider yielding each value once, in order.
Provider sequence_provider(std::vector<Symbol> values);

struct FiredRule {
    SimTime time;            // application time
    SimTime selection_time;
    Symbol rule;
    std::map<Symbol, Symbol> bindings;  // LHS plus host bindings
};

struct EngineOptions {
    bool refraction = false;
    // Receives `TIME<tab>RULE<tab>BINDINGS` per firing when set.
    std::ostream* trace_stream = nullptr;
};

// Match-select-apply cycle over one model. Single-threaded; independent
// instances may run concurrently.
class Engine {
public:
    // Throws Error(InvalidArgument) if validate_model reports anything.
    Engine(ModelAST model, std::unique_ptr<Strategy> strategy, EngineOptions options = {});

    void register_provider(const Symbol& name, Provider provider);

    // At most one instantiation per production since buffers hold one chunk.
    std::vector<Instantiation> find_instantiations() const;

    void run_match_phase();
    void run_apply_phase(const Instantiation& inst);

    // Processes events up to and including t_limit.
    void run(SimTime t_limit);
    void run_seconds(double t_limit) { run(SimTime::from_seconds(t_limit)); }

    void schedule_callback(SimTime t, int priority, std::function<void(Engine&)> fn);

    const ModelAST& model() const { return model_; }
    const ChunkStore& store() const { return store_; }
    const BufferSystem& buffers() const { return buffers_; }
    const Strategy& strategy() const { return *strategy_; }
    Strategy& strategy() { return *strategy_; }
    const std::vector<FiredRule>& trace() const { return trace_; }
    const RefractionHistory& refraction_history() const { return history_; }
    SimTime now() const { return queue_.now(); }
    bool busy() const { return pending_.has_value(); }
    std::size_t pending_events() const { return queue_.size(); }

    // Mutable access for harness callbacks.
    ChunkStore& mutable_store() { return store_; }
    BufferSystem& mutable_buffers() { return buffers_; }

private:
    void dispatch(Event<EnginePayload>& ev);
    void apply_effect(const BufferEffectEvent& effect);
    const Production& production(const Symbol& name) const;

    ModelAST model_;
    std::unique_ptr<Strategy> strategy_;
    EngineOptions options_;
    ChunkStore store_;
    BufferSystem buffers_;
    EventQueue<EnginePayload> queue_;
    std::map<Symbol, Provider> providers_;
    std::map<Symbol, std::size_t> production_index_;
    std::optional<InstantiationKey> pending_;
    RefractionHistory history_;
    std::vector<FiredRule> trace_;
};

std::string format_bindings(const std::map<Symbol, Symbol>& bindings);

}  // namespace actr
