#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmr/source_span.hpp"

namespace mmr {

enum class TokenKind {
  Ident,
  Int,
  Float,
  String,
  Operator,
  Punct,
  Keyword,
};

struct Token {
  TokenKind kind;
  std::string text;  // exact source slice (strings keep their quotes)
  SourceSpan span;
};

struct LexError : std::runtime_error {
  LexError(std::string msg, SourceSpan s) : std::runtime_error(std::move(msg)), span(s) {}
  SourceSpan span;
};

/// Splits source into tokens. Comments (`#` to end of line) and whitespace are
/// skipped; token texts plus skipped trivia reproduce the source exactly.
std::vector<Token> tokenize(std::string_view source);

}  // namespace mmr
