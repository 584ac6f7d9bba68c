#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace normcat {

/// Value in [0, +inf] with saturating arithmetic. Codomain of every norm.
///
/// Finite values are ordinary nonnegative doubles; infinity() is the
/// distinguished top element. NaN and negative inputs are rejected at
/// construction, so every live ExtReal is a valid norm value.
class ExtReal {
 public:
  constexpr ExtReal() : v_(0.0) {}

  explicit ExtReal(double v) : v_(v) {
    if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN is not a norm value");
    if (v < 0.0) throw std::invalid_argument("ExtReal: negative value " + std::to_string(v));
  }

  static constexpr ExtReal infinity() { return ExtReal(inf_tag{}); }
  static constexpr ExtReal zero() { return ExtReal(); }

  constexpr bool is_inf() const { return v_ == std::numeric_limits<double>::infinity(); }
  constexpr bool is_finite() const { return !is_inf(); }

  /// Finite payload; calling on infinity is a contract violation.
  double finite_value() const {
    if (is_inf()) throw std::logic_error("ExtReal: finite_value() on infinity");
    return v_;
  }

  /// Raw double, +inf for the top element. Safe for comparisons and IEEE sums.
  constexpr double raw() const { return v_; }

  friend ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    return ExtReal(a.v_ + b.v_);
  }
  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

  /// a <= b + tol with saturation: anything is below infinity.
  friend bool leq_with_tol(ExtReal a, ExtReal b, double tol) {
    if (b.is_inf()) return true;
    if (a.is_inf()) return false;
    return a.v_ <= b.v_ + tol;
  }

  std::string str() const {
    if (is_inf()) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v_);
    return buf;
  }

 private:
  struct inf_tag {};
  explicit constexpr ExtReal(inf_tag) : v_(std::numeric_limits<double>::infinity()) {}
  double v_;
};

/// |a - b| with saturation. inf - inf has no honest value; it is reported
/// as infinity with `warned` set, and is only ever used in report deltas.
struct AbsDelta {
  ExtReal value;
  bool warned = false;
};

inline AbsDelta abs_delta(ExtReal a, ExtReal b) {
  if (a.is_inf() && b.is_inf()) return {ExtReal::infinity(), true};
  if (a.is_inf() || b.is_inf()) return {ExtReal::infinity(), false};
  return {ExtReal(std::fabs(a.raw() - b.raw())), false};
}

inline ExtReal min(ExtReal a, ExtReal b) { return a <= b ? a : b; }
inline ExtReal max(ExtReal a, ExtReal b) { return a >= b ? a : b; }

}  // namespace normcat
