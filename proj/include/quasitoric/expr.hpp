#pragma once

#include <map>
#include <string>

#include "quasitoric/types.hpp"

namespace quasitoric {

/// Evaluate a constant arithmetic expression: numbers, named constants,
/// + - * /, unary minus, parentheses and the functions sqrt, sin, cos.
/// `pi` is always defined; `vars` supplies additional named constants.
/// Throws ParseError on malformed input or unknown names.
double eval_expression(const std::string& text, const std::map<std::string, double>& vars = {});

}  // namespace quasitoric
