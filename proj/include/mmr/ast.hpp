#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mmr/source_span.hpp"

namespace mmr {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
};

const char* binary_op_text(BinaryOp op);

struct IntLit {
  std::int64_t value = 0;
};

struct FloatLit {
  double value = 0;
};

struct StringLit {
  std::string value;
};

struct BoolLit {
  bool value = false;
};

struct NullLit {};

struct Symbol {
  std::string name;
};

struct CallArg {
  std::optional<std::string> name;
  ExprPtr value;
};

struct Call {
  ExprPtr callee;
  std::vector<CallArg> args;
};

struct Lambda {
  std::vector<std::string> params;
  ExprPtr body;
};

struct Block {
  std::vector<ExprPtr> stmts;
};

struct Assign {
  std::string target;
  ExprPtr value;
};

struct Binary {
  BinaryOp op = BinaryOp::Add;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Index {
  ExprPtr base;
  ExprPtr index;
};

struct Range {
  ExprPtr lo;
  ExprPtr hi;
};

using ExprNode = std::variant<IntLit, FloatLit, StringLit, BoolLit, NullLit, Symbol, Call,
                              Lambda, Block, Assign, Binary, Index, Range>;

/// One node of the expression tree. Nodes are immutable after construction and
/// shared freely between threads.
struct Expr {
  SourceSpan span;
  ExprNode node;

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

inline ExprPtr make_expr(SourceSpan span, ExprNode node) {
  return std::make_shared<Expr>(Expr{span, std::move(node)});
}

inline ExprPtr make_expr(ExprNode node) { return make_expr(SourceSpan{}, std::move(node)); }

/// Structural equality; source spans are ignored.
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace mmr
