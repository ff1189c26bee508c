#pragma once

#include <string_view>

#include "trivalent/formula.hpp"

namespace trivalent {

/// Parses a formula. Grammar:
///
///     disj  := conj ('|' conj)*
///     conj  := unary ('&' unary)*
///     unary := '~' unary | atom | '(' disj ')'
///     atom  := [A-Za-z_][A-Za-z0-9_']*
///
/// Throws ParseError carrying the byte offset of the offending token.
Formula parse(std::string_view text);

/// Parses `F1, ..., Fn => G` (n may be 0). Repeated premises collapse.
Inference parse_inference(std::string_view text);

}  // namespace trivalent
