#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "actr/symbol.hpp"

namespace actr {

struct ChunkType {
    Symbol name;
    std::vector<Symbol> slots;  // declaration order

    bool has_slot(const Symbol& slot) const;
};

struct Chunk {
    Symbol name;
    Symbol type;
    std::map<Symbol, Symbol> slot_values;  // unset slots are absent
};

// Typed declarative network. Isa is stored as Chunk::type (exactly one type
// per chunk); HasSlot as Chunk::slot_values (at most one value per slot).
class ChunkStore {
public:
    const ChunkType& define_chunk_type(const Symbol& name, std::span<const Symbol> slots);
    const ChunkType& define_chunk_type(const Symbol& name, std::initializer_list<Symbol> slots) {
        return define_chunk_type(name, std::span<const Symbol>(slots.begin(), slots.size()));
    }

    // Anonymous chunks receive a fresh `gen<N>` name.
    const Chunk& create_chunk(const std::optional<Symbol>& name, const Symbol& type,
                              const std::map<Symbol, Symbol>& values);

    void set_slot(const Symbol& chunk, const Symbol& slot, const Symbol& value);
    std::optional<Symbol> get_slot(const Symbol& chunk, const Symbol& slot) const;

    bool has_type(const Symbol& name) const { return types_.contains(name); }
    bool has_chunk(const Symbol& name) const { return chunks_.contains(name); }
    const ChunkType& type(const Symbol& name) const;
    const Chunk& chunk(const Symbol& name) const;

    // Complete description (name, type, filled slots in type order).
    ChunkDescription describe(const Symbol& chunk) const;

    // Checks Isa left-total/right-unique and both type-consistency conditions.
    bool is_type_consistent() const;

    const std::map<Symbol, ChunkType>& types() const { return types_; }
    const std::map<Symbol, Chunk>& chunks() const { return chunks_; }

private:
    Chunk& mutable_chunk(const Symbol& name);

    std::map<Symbol, ChunkType> types_;
    std::map<Symbol, Chunk> chunks_;
    std::uint64_t next_generated_ = 1;
};

}  // namespace actr
