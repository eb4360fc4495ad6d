#include "fse/value.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <functional>
#include <system_error>

namespace fse {

std::string render_number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::size_t Value::hash() const {
  if (is_number()) {
    // Hash the bit pattern so hashing agrees with the bit-exact equality.
    const auto bits = std::bit_cast<std::uint64_t>(as_number());
    return std::hash<std::uint64_t>{}(bits);
  }
  return std::hash<std::string>{}(as_token()) ^ 0x9E3779B97F4A7C15ull;
}

std::string Value::render() const {
  return is_number() ? render_number(as_number()) : as_token();
}

bool operator==(const Value& a, const Value& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_number()) {
    return std::bit_cast<std::uint64_t>(a.as_number()) ==
           std::bit_cast<std::uint64_t>(b.as_number());
  }
  return a.as_token() == b.as_token();
}

std::size_t DescriptionHash::operator()(const Description& d) const {
  std::size_t h = d.values.size();
  for (const Value& v : d.values) {
    h ^= v.hash() + 0x9E3779B9u + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fse
