#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmr/ast.hpp"
#include "mmr/source_span.hpp"

namespace mmr {

struct ParseError : std::runtime_error {
  ParseError(std::string msg, SourceSpan s, std::vector<std::string> expected_tokens = {})
      : std::runtime_error(std::move(msg)), span(s), expected(std::move(expected_tokens)) {}
  SourceSpan span;
  std::vector<std::string> expected;
};

/// Parses a whole program into a Block of top-level statements.
/// `lhs |> f(a)` desugars to `f(lhs, a)` here; pipes never reach the tree.
ExprPtr parse(std::string_view source);

/// Parses a single expression (used by the repl's meta commands).
ExprPtr parse_expression(std::string_view source);

}  // namespace mmr
