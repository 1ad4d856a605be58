#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace actr {

// Symbols obey the unique-name assumption: equal text is the same symbol.
using Symbol = std::string;

inline const Symbol kNil = "nil";

// A slot value in a test or action: a constant symbol or a `=var`.
struct Term {
    enum class Kind { Constant, Variable };

    Kind kind = Kind::Constant;
    // Variables are stored without the leading '='.
    std::string text;

    static Term constant(std::string s) { return {Kind::Constant, std::move(s)}; }
    static Term variable(std::string s) { return {Kind::Variable, std::move(s)}; }

    bool is_variable() const { return kind == Kind::Variable; }
    std::string to_source() const { return is_variable() ? "=" + text : text; }

    auto operator<=>(const Term&) const = default;
};

struct SlotTerm {
    Symbol slot;
    Term value;

    auto operator<=>(const SlotTerm&) const = default;
};

// Possibly incomplete description of a chunk: any field may be left open.
struct ChunkDescription {
    std::optional<Symbol> name;
    std::optional<Symbol> type;
    std::vector<SlotTerm> slot_values;

    auto operator<=>(const ChunkDescription&) const = default;
};

}  // namespace actr
