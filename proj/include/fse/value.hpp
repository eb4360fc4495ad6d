#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace fse {

/// Render a double as the shortest decimal string that parses back to the
/// same bits ("1000", "17.5", "6.5"). Used for interval tokens, CSV cells
/// and reports so that serialized numbers round-trip exactly.
std::string render_number(double v);

/// One cell of an example: a finite numeric value or a nominal token.
/// Numeric equality is bit-exact on the stored double — values compare the
/// same way they hash, and -0.0 is distinct from 0.0.
class Value {
 public:
  Value() : v_(0.0) {}

  static Value number(double v) { return Value(v); }
  static Value token(std::string t) { return Value(std::move(t)); }

  bool is_number() const { return v_.index() == 0; }
  double as_number() const { return std::get<double>(v_); }
  const std::string& as_token() const { return std::get<std::string>(v_); }

  std::size_t hash() const;
  std::string render() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  explicit Value(double v) : v_(v) {}
  explicit Value(std::string t) : v_(std::move(t)) {}

  std::variant<double, std::string> v_;
};

/// Projection of one example onto a feature subset, values in schema order.
/// Equality is exact, value-wise.
struct Description {
  std::vector<Value> values;

  friend bool operator==(const Description&, const Description&) = default;
};

struct DescriptionHash {
  std::size_t operator()(const Description& d) const;
};

}  // namespace fse
