#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

namespace gjg {

/// A graph invariant value: a finite non-negative integer, "infinite"
/// (e.g. distance between components), or "undefined" (e.g. girth of a
/// forest).
class Quantity {
 public:
  enum class Kind : std::uint8_t { Finite, Infinite, Undefined };

  static constexpr Quantity finite(int value) noexcept { return {Kind::Finite, value}; }
  static constexpr Quantity infinite() noexcept { return {Kind::Infinite, 0}; }
  static constexpr Quantity undefined() noexcept { return {Kind::Undefined, 0}; }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
  constexpr bool is_undefined() const noexcept { return kind_ == Kind::Undefined; }

  constexpr int value() const noexcept {
    assert(is_finite());
    return value_;
  }

  /// "infinite", "undefined", or the decimal value.
  std::string to_string() const {
    switch (kind_) {
      case Kind::Infinite: return "infinite";
      case Kind::Undefined: return "undefined";
      case Kind::Finite: break;
    }
    return std::to_string(value_);
  }

  friend constexpr bool operator==(const Quantity&, const Quantity&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Quantity& q) {
    return os << q.to_string();
  }

 private:
  constexpr Quantity(Kind kind, int value) noexcept : kind_(kind), value_(value) {}

  Kind kind_;
  int value_;
};

}  // namespace gjg
