#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "mmr/ast.hpp"

namespace mmr {

class Value;

struct ListElem;

struct ListData {
  std::vector<ListElem> elems;
};

struct ClosureData {
  std::vector<std::string> params;
  ExprPtr body;
  // Resolved free variables, in first-occurrence order.
  std::vector<std::pair<std::string, Value>> captured;
};

struct ErrorData {
  std::string error_class;
  std::string message;
  std::optional<std::int64_t> origin_index;  // 1-based input element index
};

/// Reference to a host-implemented function; lets builtins be passed around
/// and shipped like ordinary values.
struct BuiltinRef {
  std::string name;
};

/// Runtime datum. Immutable after construction; heavy payloads are shared.
class Value {
 public:
  struct Null {};
  using Variant = std::variant<Null, bool, std::int64_t, double, std::string,
                               std::shared_ptr<const ListData>, std::shared_ptr<const ClosureData>,
                               std::shared_ptr<const ErrorData>, BuiltinRef>;

  Value() : v_(Null{}) {}
  explicit Value(Variant v) : v_(std::move(v)) {}

  static Value null() { return Value(); }
  static Value boolean(bool b) { return Value(Variant{b}); }
  static Value integer(std::int64_t i) { return Value(Variant{i}); }
  static Value real(double d) { return Value(Variant{d}); }
  static Value str(std::string s) { return Value(Variant{std::move(s)}); }
  static Value list(std::vector<ListElem> elems);
  static Value closure(std::vector<std::string> params, ExprPtr body,
                       std::vector<std::pair<std::string, Value>> captured);
  static Value error(std::string error_class, std::string message,
                     std::optional<std::int64_t> origin = std::nullopt);
  static Value builtin(std::string name) { return Value(Variant{BuiltinRef{std::move(name)}}); }

  bool is_null() const { return std::holds_alternative<Null>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const { return std::holds_alternative<std::shared_ptr<const ListData>>(v_); }
  bool is_closure() const { return std::holds_alternative<std::shared_ptr<const ClosureData>>(v_); }
  bool is_error() const { return std::holds_alternative<std::shared_ptr<const ErrorData>>(v_); }
  bool is_builtin() const { return std::holds_alternative<BuiltinRef>(v_); }
  bool is_number() const { return is_int() || is_float(); }
  bool is_callable() const { return is_closure() || is_builtin(); }

  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  double as_float() const { return std::get<double>(v_); }
  const std::string& as_str() const { return std::get<std::string>(v_); }
  const ListData& as_list() const { return *std::get<std::shared_ptr<const ListData>>(v_); }
  const ClosureData& as_closure() const { return *std::get<std::shared_ptr<const ClosureData>>(v_); }
  const ErrorData& as_error() const { return *std::get<std::shared_ptr<const ErrorData>>(v_); }
  const BuiltinRef& as_builtin() const { return std::get<BuiltinRef>(v_); }

  /// Numeric value as double; caller must check is_number() first.
  double num() const { return is_int() ? static_cast<double>(as_int()) : as_float(); }

  const Variant& variant() const { return v_; }

 private:
  Variant v_;
};

struct ListElem {
  std::optional<std::string> name;
  Value value;
};

inline Value Value::list(std::vector<ListElem> elems) {
  return Value(Variant{std::make_shared<const ListData>(ListData{std::move(elems)})});
}

inline Value Value::closure(std::vector<std::string> params, ExprPtr body,
                            std::vector<std::pair<std::string, Value>> captured) {
  return Value(Variant{std::make_shared<const ClosureData>(
      ClosureData{std::move(params), std::move(body), std::move(captured)})});
}

inline Value Value::error(std::string error_class, std::string message,
                          std::optional<std::int64_t> origin) {
  return Value(Variant{std::make_shared<const ErrorData>(
      ErrorData{std::move(error_class), std::move(message), origin})});
}

/// Structural equality. Floats compare bit-for-bit, which makes NaN equal to
/// itself; the runtime is deterministic so bitwise identity is the contract.
bool value_equal(const Value& a, const Value& b);

/// Plain lexical environment: bindings plus an optional parent chain.
/// Confined to one evaluating task; never shared across threads.
class Env {
 public:
  explicit Env(std::shared_ptr<Env> parent = nullptr) : parent_(std::move(parent)) {}

  const Value* lookup(const std::string& name) const {
    for (const Env* e = this; e != nullptr; e = e->parent_.get()) {
      auto it = e->bindings_.find(name);
      if (it != e->bindings_.end()) return &it->second;
    }
    return nullptr;
  }

  void define(const std::string& name, Value v) { bindings_[name] = std::move(v); }

  const std::shared_ptr<Env>& parent() const { return parent_; }

 private:
  std::unordered_map<std::string, Value> bindings_;
  std::shared_ptr<Env> parent_;
};

using EnvPtr = std::shared_ptr<Env>;

/// Error signal used inside the evaluator; carries the error value itself so
/// the original object survives all the way to the controller.
struct MmrError {
  Value error;  // always an error value

  const ErrorData& data() const { return error.as_error(); }
};

[[noreturn]] inline void raise_error(std::string error_class, std::string message,
                                     std::optional<std::int64_t> origin = std::nullopt) {
  throw MmrError{Value::error(std::move(error_class), std::move(message), origin)};
}

// Error class names used across the runtime.
namespace errclass {
inline constexpr const char* kUser = "user";
inline constexpr const char* kTypeError = "TypeError";
inline constexpr const char* kArityError = "ArityError";
inline constexpr const char* kIndexError = "IndexError";
inline constexpr const char* kSymbolNotFound = "SymbolNotFound";
inline constexpr const char* kLengthMismatch = "LengthMismatch";
inline constexpr const char* kNonBooleanPredicate = "NonBooleanPredicate";
inline constexpr const char* kEmptyData = "EmptyData";
inline constexpr const char* kUnsupportedCall = "UnsupportedCall";
inline constexpr const char* kNotACall = "NotACall";
inline constexpr const char* kGlobalNotFound = "GlobalNotFound";
inline constexpr const char* kOptionConflict = "OptionConflict";
inline constexpr const char* kRegistrationTooLate = "RegistrationTooLate";
inline constexpr const char* kInvalidPlan = "InvalidPlan";
inline constexpr const char* kProtocolError = "ProtocolError";
inline constexpr const char* kWorkerDied = "WorkerDied";
inline constexpr const char* kCancelled = "Cancelled";
inline constexpr const char* kBackendUnavailable = "BackendUnavailable";
inline constexpr const char* kDecodeError = "DecodeError";
}  // namespace errclass

}  // namespace mmr
