#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace stlrob {

/// Extended integer: the codomain of temporal robustness values.
/// Totally ordered with -inf < ... < -1 < 0 < 1 < ... < +inf.
class ExtInt {
 public:
  constexpr ExtInt() : v_(0) {}

  static constexpr ExtInt fin(std::int64_t v) {
    if (v <= kNeg || v >= kPos) throw std::overflow_error("ExtInt: finite value out of range");
    return ExtInt(v);
  }
  static constexpr ExtInt neg_inf() { return ExtInt(kNeg); }
  static constexpr ExtInt pos_inf() { return ExtInt(kPos); }

  constexpr bool is_finite() const { return v_ != kNeg && v_ != kPos; }
  constexpr bool is_neg_inf() const { return v_ == kNeg; }
  constexpr bool is_pos_inf() const { return v_ == kPos; }

  /// Finite value; throws on +/-inf.
  constexpr std::int64_t value() const {
    if (!is_finite()) throw std::domain_error("ExtInt: value() on infinite");
    return v_;
  }

  constexpr ExtInt operator-() const {
    if (v_ == kNeg) return pos_inf();
    if (v_ == kPos) return neg_inf();
    return ExtInt(-v_);
  }

  /// Absolute value (|-inf| = +inf).
  constexpr ExtInt abs() const { return v_ < 0 ? -*this : *this; }

  /// Add a finite offset; infinities absorb.
  constexpr ExtInt operator+(std::int64_t d) const {
    if (!is_finite()) return *this;
    return fin(v_ + d);
  }
  constexpr ExtInt operator-(std::int64_t d) const { return *this + (-d); }

  friend constexpr bool operator==(ExtInt a, ExtInt b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtInt a, ExtInt b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(ExtInt a, ExtInt b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return a.v_ >= b.v_; }

  friend constexpr ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }
  friend constexpr ExtInt max(ExtInt a, ExtInt b) { return a > b ? a : b; }

  /// Sign in {-1, 0, +1}; infinities count as their sign.
  constexpr int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  std::string str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(v_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtInt x) { return os << x.str(); }

 private:
  static constexpr std::int64_t kNeg = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPos = std::numeric_limits<std::int64_t>::max();
  explicit constexpr ExtInt(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

}  // namespace stlrob
