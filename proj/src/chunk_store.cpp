#include "actr/chunk_store.hpp"

#include <algorithm>
#include <set>

#include "actr/error.hpp"

namespace actr {

bool ChunkType::has_slot(const Symbol& slot) const {
    return std::find(slots.begin(), slots.end(), slot) != slots.end();
}

const ChunkType& ChunkStore::define_chunk_type(const Symbol& name, std::span<const Symbol> slots) {
    if (types_.contains(name)) {
        throw Error(ErrorCode::DuplicateType, "chunk type '" + name + "' already defined");
    }
    std::set<Symbol> seen;
    for (const auto& s : slots) {
        if (!seen.insert(s).second) {
            throw Error(ErrorCode::DuplicateSlot, "slot '" + s + "' repeated in type '" + name + "'");
        }
    }
    auto [it, _] = types_.emplace(name, ChunkType{name, {slots.begin(), slots.end()}});
    return it->second;
}

const Chunk& ChunkStore::create_chunk(const std::optional<Symbol>& name, const Symbol& type_name,
                                      const std::map<Symbol, Symbol>& values) {
    const auto& t = type(type_name);
    for (const auto& [slot, _] : values) {
        if (!t.has_slot(slot)) {
            throw Error(ErrorCode::UnknownSlot, "type '" + type_name + "' has no slot '" + slot + "'");
        }
    }
    Symbol chunk_name;
    if (name) {
        if (chunks_.contains(*name)) {
            throw Error(ErrorCode::DuplicateChunkName, "chunk '" + *name + "' already exists");
        }
        chunk_name = *name;
    } else {
        do {
            chunk_name = "gen" + std::to_string(next_generated_++);
        } while (chunks_.contains(chunk_name));
    }
    auto [it, _] = chunks_.emplace(chunk_name, Chunk{chunk_name, type_name, values});
    return it->second;
}

void ChunkStore::set_slot(const Symbol& chunk_name, const Symbol& slot, const Symbol& value) {
    auto& c = mutable_chunk(chunk_name);
    if (!type(c.type).has_slot(slot)) {
        throw Error(ErrorCode::UnknownSlot, "chunk '" + chunk_name + "' of type '" + c.type +
                                                "' has no slot '" + slot + "'");
    }
    c.slot_values[slot] = value;
}

std::optional<Symbol> ChunkStore::get_slot(const Symbol& chunk_name, const Symbol& slot) const {
    const auto& c = chunk(chunk_name);
    auto it = c.slot_values.find(slot);
    if (it == c.slot_values.end()) return std::nullopt;
    return it->second;
}

const ChunkType& ChunkStore::type(const Symbol& name) const {
    auto it = types_.find(name);
    if (it == types_.end()) throw Error(ErrorCode::UnknownType, "no chunk type '" + name + "'");
    return it->second;
}

const Chunk& ChunkStore::chunk(const Symbol& name) const {
    auto it = chunks_.find(name);
    if (it == chunks_.end()) throw Error(ErrorCode::UnknownChunk, "no chunk '" + name + "'");
    return it->second;
}

Chunk& ChunkStore::mutable_chunk(const Symbol& name) {
    auto it = chunks_.find(name);
    if (it == chunks_.end()) throw Error(ErrorCode::UnknownChunk, "no chunk '" + name + "'");
    return it->second;
}

ChunkDescription ChunkStore::describe(const Symbol& chunk_name) const {
    const auto& c = chunk(chunk_name);
    ChunkDescription d{c.name, c.type, {}};
    for (const auto& slot : type(c.type).slots) {
        if (auto it = c.slot_values.find(slot); it != c.slot_values.end()) {
            d.slot_values.push_back({slot, Term::constant(it->second)});
        }
    }
    return d;
}

bool ChunkStore::is_type_consistent() const {
    for (const auto& [name, c] : chunks_) {
        if (c.name != name) return false;
        auto t = types_.find(c.type);
        if (t == types_.end()) return false;
        // slot_values is a map, so condition (1) holds structurally; (2) is checked here.
        for (const auto& [slot, _] : c.slot_values) {
            if (!t->second.has_slot(slot)) return false;
        }
    }
    return true;
}

}  // namespace actr
