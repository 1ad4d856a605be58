#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "actr/symbol.hpp"

namespace actr {

struct ChunkTypeDecl {
    Symbol name;
    std::vector<Symbol> slots;

    bool operator==(const ChunkTypeDecl&) const = default;
};

// One `(add-dm ...)` entry.
struct ChunkDecl {
    Symbol name;
    Symbol type;
    std::vector<std::pair<Symbol, Symbol>> values;

    bool operator==(const ChunkDecl&) const = default;
};

struct BufferInit {
    Symbol buffer;
    Symbol chunk;

    bool operator==(const BufferInit&) const = default;
};

// `=buffer> isa type slot value ...`
struct BufferTest {
    Symbol buffer;
    Symbol type;
    std::vector<SlotTerm> slot_tests;

    bool operator==(const BufferTest&) const = default;
};

enum class ActionKind { Modify, Clear };

// `!bind! =var provider`: the variable is filled from a host-side value
// source each time the rule is applied.
struct HostBinding {
    Symbol variable;
    Symbol provider;

    bool operator==(const HostBinding&) const = default;
};

struct Action {
    ActionKind kind = ActionKind::Modify;
    Symbol buffer;
    std::optional<Symbol> type;  // only an `isa` restatement; never changes the chunk type
    std::vector<SlotTerm> slot_updates;
    std::vector<HostBinding> binds;

    bool operator==(const Action&) const = default;
};

struct Production {
    Symbol name;
    std::vector<BufferTest> tests;
    std::vector<Action> actions;
    std::size_t source_index = 0;  // position among productions in the source

    bool operator==(const Production&) const = default;
};

struct Annotation {
    std::optional<double> reward;
    bool success = false;
    bool failure = false;

    bool operator==(const Annotation&) const = default;
};

struct ModelAST {
    std::vector<ChunkTypeDecl> chunk_types;
    std::vector<ChunkDecl> initial_chunks;
    std::vector<BufferInit> buffer_inits;
    std::vector<Production> productions;  // source order
    std::map<Symbol, Annotation> annotations;

    const Production* find_production(const Symbol& name) const;

    // `goal` plus every buffer given an initial chunk.
    std::set<Symbol> declared_buffers() const;

    bool operator==(const ModelAST&) const = default;
};

inline const Symbol kGoalBuffer = "goal";

}  // namespace actr
