#include "actr/buffer_system.hpp"

#include "actr/error.hpp"

namespace actr {

const Buffer& BufferSystem::declare_buffer(const Symbol& name) {
    if (buffers_.contains(name)) {
        throw Error(ErrorCode::DuplicateBuffer, "buffer '" + name + "' already declared");
    }
    return buffers_.emplace(name, Buffer{name, std::nullopt}).first->second;
}

void BufferSystem::set_buffer(const Symbol& buffer, const Symbol& chunk, const ChunkStore& store) {
    auto& b = get_mutable(buffer);
    if (!store.has_chunk(chunk)) throw Error(ErrorCode::UnknownChunk, "no chunk '" + chunk + "'");
    b.held = chunk;
}

void BufferSystem::modify_buffer(const Symbol& buffer, const ChunkDescription& desc,
                                 ChunkStore& store) const {
    const auto& b = get(buffer);
    if (!b.held) throw Error(ErrorCode::EmptyBuffer, "buffer '" + buffer + "' is empty");
    const Chunk& c = store.chunk(*b.held);
    if (desc.name && *desc.name != c.name) {
        throw Error(ErrorCode::TypeMismatch, "modification cannot rename chunk '" + c.name + "'");
    }
    if (desc.type && *desc.type != c.type) {
        throw Error(ErrorCode::TypeMismatch,
                    "modification cannot change type of '" + c.name + "' to '" + *desc.type + "'");
    }
    const ChunkType& t = store.type(c.type);
    // Validate everything first so a failed modification leaves the chunk untouched.
    for (const auto& sv : desc.slot_values) {
        if (!t.has_slot(sv.slot)) {
            throw Error(ErrorCode::UnknownSlot, "type '" + t.name + "' has no slot '" + sv.slot + "'");
        }
        if (sv.value.is_variable()) {
            throw Error(ErrorCode::UnboundVariable, "unresolved variable =" + sv.value.text);
        }
    }
    const Symbol name = c.name;
    for (const auto& sv : desc.slot_values) store.set_slot(name, sv.slot, sv.value.text);
}

void BufferSystem::clear_buffer(const Symbol& buffer) { get_mutable(buffer).held.reset(); }

const Buffer& BufferSystem::get(const Symbol& buffer) const {
    auto it = buffers_.find(buffer);
    if (it == buffers_.end()) throw Error(ErrorCode::UnknownBuffer, "no buffer '" + buffer + "'");
    return it->second;
}

Buffer& BufferSystem::get_mutable(const Symbol& buffer) {
    auto it = buffers_.find(buffer);
    if (it == buffers_.end()) throw Error(ErrorCode::UnknownBuffer, "no buffer '" + buffer + "'");
    return it->second;
}

bool BufferSystem::is_consistent(const ChunkStore& store) const {
    for (const auto& [_, b] : buffers_) {
        if (b.held && !store.has_chunk(*b.held)) return false;
    }
    return store.is_type_consistent();
}

}  // namespace actr
