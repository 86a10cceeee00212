#pragma once

#include <cstddef>

namespace mmr {

/// Location of a syntactic element in the original source text.
/// line/column are 1-based; a default-constructed span marks synthesized nodes.
struct SourceSpan {
  int line = 0;
  int column = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
};

}  // namespace mmr
