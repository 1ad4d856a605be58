#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "actr/model.hpp"

namespace actr {

// Parses the s-expression model language:
//
//   (chunk-type NAME SLOT...)
//   (add-dm (NAME isa TYPE SLOT VALUE ...) ...)
//   (goal-focus [BUFFER] CHUNK)
//   (p NAME =BUF> isa TYPE SLOT VAL ... ==> =BUF> SLOT VAL ... -BUF> !bind! =V PROVIDER)
//   (spp RULE :reward N | :success t | :failure t ...)
//
// `;` starts a line comment. `(define-model NAME FORM...)` is unwrapped.
// `!output!` directives are accepted and dropped. Throws Error with a
// `line L, col C` position on malformed input.
ModelAST parse_model(std::string_view text);

// Cross-reference checks; an empty result means the model is runnable.
std::vector<std::string> validate_model(const ModelAST& ast);

// Canonical source text; parse_model(to_source(ast)) == ast.
std::string to_source(const ModelAST& ast);

}  // namespace actr
