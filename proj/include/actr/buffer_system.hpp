#pragma once

#include <map>
#include <optional>
#include <vector>

#include "actr/chunk_store.hpp"

namespace actr {

struct Buffer {
    Symbol name;
    std::optional<Symbol> held;
};

// Named buffers over a chunk store. Holds is right-unique: a buffer references
// at most one chunk. Module affiliation is not modelled (no requests).
class BufferSystem {
public:
    const Buffer& declare_buffer(const Symbol& name);
    void set_buffer(const Symbol& buffer, const Symbol& chunk, const ChunkStore& store);

    // Overwrites each listed slot of the held chunk. All values must be
    // constants; the description may not rename or retype the chunk.
    void modify_buffer(const Symbol& buffer, const ChunkDescription& desc, ChunkStore& store) const;

    // Idempotent on empty buffers. The chunk stays in the store.
    void clear_buffer(const Symbol& buffer);

    bool has_buffer(const Symbol& name) const { return buffers_.contains(name); }
    std::optional<Symbol> held(const Symbol& buffer) const { return get(buffer).held; }
    const Buffer& get(const Symbol& buffer) const;
    const std::map<Symbol, Buffer>& buffers() const { return buffers_; }

    // Every held chunk exists and the store is type-consistent.
    bool is_consistent(const ChunkStore& store) const;

private:
    Buffer& get_mutable(const Symbol& buffer);

    std::map<Symbol, Buffer> buffers_;
};

}  // namespace actr
