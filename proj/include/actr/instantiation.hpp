#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "actr/sim_time.hpp"
#include "actr/symbol.hpp"

namespace actr {

// The chunk a buffer test matched, with the values of the tested slots.
struct MatchedBuffer {
    Symbol buffer;
    Symbol chunk;
    std::vector<std::pair<Symbol, Symbol>> tested;

    auto operator<=>(const MatchedBuffer&) const = default;
};

// Identity of an instantiation for refraction and tracing.
struct InstantiationKey {
    Symbol rule;
    std::map<Symbol, Symbol> bindings;
    std::vector<MatchedBuffer> matched;

    auto operator<=>(const InstantiationKey&) const = default;
};

// A production with a consistent binding against the current buffers.
struct Instantiation {
    Symbol rule;
    std::size_t source_index = 0;
    std::map<Symbol, Symbol> bindings;  // exactly the LHS variables
    std::vector<MatchedBuffer> matched;
    SimTime selection_time;

    InstantiationKey key() const { return {rule, bindings, matched}; }
};

}  // namespace actr
