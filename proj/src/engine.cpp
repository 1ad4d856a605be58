#include "actr/engine.hpp"

#include <cstdio>

#include "actr/error.hpp"
#include "actr/model_parser.hpp"

namespace actr {

Provider sequence_provider(std::vector<Symbol> values) {
    auto state = std::make_shared<std::pair<std::vector<Symbol>, std::size_t>>(std::move(values), 0);
    return [state]() -> std::optional<Symbol> {
        auto& [vals, next] = *state;
        if (next >= vals.size()) return std::nullopt;
        return vals[next++];
    };
}

std::string format_bindings(const std::map<Symbol, Symbol>& bindings) {
    std::string out;
    for (const auto& [var, val] : bindings) {
        if (!out.empty()) out += ',';
        out += var + '=' + val;
    }
    return out;
}

Engine::Engine(ModelAST model, std::unique_ptr<Strategy> strategy, EngineOptions options)
    : model_(std::move(model)), strategy_(std::move(strategy)), options_(options) {
    if (!strategy_) throw Error(ErrorCode::InvalidArgument, "engine needs a strategy");
    const auto diagnostics = validate_model(model_);
    if (!diagnostics.empty()) {
        std::string msg = "model is invalid:";
        for (const auto& d : diagnostics) msg += "\n  " + d;
        throw Error(ErrorCode::InvalidArgument, msg);
    }
    for (const auto& t : model_.chunk_types) store_.define_chunk_type(t.name, t.slots);
    for (const auto& c : model_.initial_chunks) {
        store_.create_chunk(c.name, c.type, {c.values.begin(), c.values.end()});
    }
    for (const auto& b : model_.declared_buffers()) buffers_.declare_buffer(b);
    for (const auto& init : model_.buffer_inits) buffers_.set_buffer(init.buffer, init.chunk, store_);
    for (std::size_t i = 0; i < model_.productions.size(); ++i) {
        production_index_.emplace(model_.productions[i].name, i);
    }
    strategy_->attach(model_);
    queue_.schedule(SimTime{}, kMatchPriority, MatchEvent{});
}

void Engine::register_provider(const Symbol& name, Provider provider) {
    providers_[name] = std::move(provider);
}

const Production& Engine::production(const Symbol& name) const {
    return model_.productions.at(production_index_.at(name));
}

std::vector<Instantiation> Engine::find_instantiations() const {
    std::vector<Instantiation> out;
    for (const auto& p : model_.productions) {
        Instantiation inst;
        inst.rule = p.name;
        inst.source_index = p.source_index;
        bool ok = true;
        for (const auto& test : p.tests) {
            if (!buffers_.has_buffer(test.buffer)) {
                ok = false;
                break;
            }
            const auto held = buffers_.held(test.buffer);
            if (!held) {
                ok = false;
                break;
            }
            const Chunk& chunk = store_.chunk(*held);
            if (chunk.type != test.type) {
                ok = false;
                break;
            }
            MatchedBuffer m{test.buffer, chunk.name, {}};
            for (const auto& st : test.slot_tests) {
                // An unset slot matches nothing, not even a variable.
                auto it = chunk.slot_values.find(st.slot);
                if (it == chunk.slot_values.end()) {
                    ok = false;
                    break;
                }
                const Symbol& value = it->second;
                if (st.value.is_variable()) {
                    auto [b, inserted] = inst.bindings.emplace(st.value.text, value);
                    if (!inserted && b->second != value) {
                        ok = false;
                        break;
                    }
                } else if (st.value.text != value) {
                    ok = false;
                    break;
                }
                m.tested.emplace_back(st.slot, value);
            }
            if (!ok) break;
            inst.matched.push_back(std::move(m));
        }
        if (ok) out.push_back(std::move(inst));
    }
    return out;
}

void Engine::run_match_phase() {
    if (busy()) return;  // matching is inhibited until the selected rule fires
    auto set = find_instantiations();
    if (options_.refraction) set = refraction_prune(std::move(set), history_);

    std::optional<std::size_t> winner;
    if (!set.empty()) {
        const auto utilities = strategy_->evaluate(set);
        winner = select_winner(set, utilities, strategy_->tie_break());
    }
    if (!winner) {
        // Nothing can fire until some other event changes the buffers.
        if (auto next = queue_.peek_time()) queue_.schedule(*next, kMatchPriority, MatchEvent{});
        return;
    }
    Instantiation chosen = std::move(set[*winner]);
    chosen.selection_time = now();
    pending_ = chosen.key();
    queue_.schedule(now() + kFiringLatency, kApplyPriority, ApplyRuleEvent{std::move(chosen)});
}

void Engine::run_apply_phase(const Instantiation& inst) {
    if (!pending_ || *pending_ != inst.key()) {
        throw Error(ErrorCode::InvalidArgument, "rule '" + inst.rule + "' was not selected");
    }
    strategy_->on_applied(inst.rule, inst.selection_time, now());
    if (options_.refraction) history_.record(inst);

    std::map<Symbol, Symbol> bindings = inst.bindings;
    const Production& p = production(inst.rule);
    for (const auto& action : p.actions) {
        for (const auto& bind : action.binds) {
            auto it = providers_.find(bind.provider);
            if (it == providers_.end()) {
                throw Error(ErrorCode::UnknownProvider, "no provider '" + bind.provider + "' registered");
            }
            auto value = it->second();
            if (!value) {
                throw Error(ErrorCode::ProviderExhausted,
                            "provider '" + bind.provider + "' has no value for rule '" + inst.rule + "'");
            }
            bindings[bind.variable] = *value;
        }
        BufferEffectEvent effect{action.kind, action.buffer, {std::nullopt, action.type, {}}};
        for (const auto& su : action.slot_updates) {
            Term v = su.value;
            if (v.is_variable()) {
                auto b = bindings.find(v.text);
                if (b == bindings.end()) {
                    throw Error(ErrorCode::UnboundVariable, "=" + v.text + " unbound in '" + inst.rule + "'");
                }
                v = Term::constant(b->second);
            }
            effect.description.slot_values.push_back({su.slot, std::move(v)});
        }
        const int priority = action.kind == ActionKind::Modify ? kModifyPriority : kClearPriority;
        queue_.schedule(now(), priority, std::move(effect));
    }
    queue_.schedule(now(), kMatchPriority, MatchEvent{});
    pending_.reset();

    trace_.push_back(FiredRule{now(), inst.selection_time, inst.rule, bindings});
    if (options_.trace_stream) {
        char time[32];
        std::snprintf(time, sizeof time, "%.3f", now().seconds());
        *options_.trace_stream << time << '\t' << inst.rule << '\t' << format_bindings(bindings) << '\n';
    }
}

void Engine::apply_effect(const BufferEffectEvent& effect) {
    if (effect.kind == ActionKind::Modify) {
        buffers_.modify_buffer(effect.buffer, effect.description, store_);
    } else {
        buffers_.clear_buffer(effect.buffer);
    }
}

void Engine::dispatch(Event<EnginePayload>& ev) {
    std::visit(
        [&](auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, MatchEvent>) {
                run_match_phase();
            } else if constexpr (std::is_same_v<T, ApplyRuleEvent>) {
                run_apply_phase(payload.instantiation);
            } else if constexpr (std::is_same_v<T, BufferEffectEvent>) {
                apply_effect(payload);
            } else {
                payload.fn(*this);
            }
        },
        ev.payload);
}

void Engine::run(SimTime t_limit) {
    while (auto next = queue_.peek_time()) {
        if (*next > t_limit) break;
        auto ev = queue_.pop_next();
        dispatch(*ev);
    }
}

void Engine::schedule_callback(SimTime t, int priority, std::function<void(Engine&)> fn) {
    queue_.schedule(t, priority, HarnessCallback{std::move(fn)});
}

}  // namespace actr
