#pragma once

#include <string>

#include "mmr/ast.hpp"

namespace mmr {

/// Canonical surface syntax. Parsing the output yields a structurally equal
/// tree; named arguments print as `name = value`, list() calls print in
/// bracket form, pipes are never reintroduced.
std::string pretty_print(const ExprPtr& expr);

/// A whole program (Block) printed one statement per line without braces.
std::string pretty_print_program(const ExprPtr& program);

/// Shortest decimal form that round-trips, always containing '.' or 'e' so it
/// re-lexes as a float.
std::string format_float(double d);

std::string escape_string(const std::string& s);

}  // namespace mmr
