#pragma once

#include <cmath>
#include <string>

namespace spiralbound {

/// A real number or one of the two signed infinities. Curvatures of
/// degenerate biarcs and default node-curvature bounds are infinite; the tag
/// keeps IEEE infinities out of the arithmetic.
class ExtendedReal {
 public:
  enum class Kind { finite, positive_infinity, negative_infinity };

  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : kind_(Kind::finite), value_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedReal pos_inf() { return ExtendedReal(Kind::positive_infinity); }
  static constexpr ExtendedReal neg_inf() { return ExtendedReal(Kind::negative_infinity); }

  /// Maps IEEE infinities onto the tags; NaN is not accepted.
  static ExtendedReal from_double(double v) {
    if (std::isinf(v)) return v > 0 ? pos_inf() : neg_inf();
    return ExtendedReal(v);
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::positive_infinity; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::negative_infinity; }

  /// Finite value; only meaningful when is_finite().
  constexpr double value() const { return value_; }

  /// For display and comparisons only.
  double to_double() const {
    switch (kind_) {
      case Kind::positive_infinity: return HUGE_VAL;
      case Kind::negative_infinity: return -HUGE_VAL;
      default: return value_;
    }
  }

  constexpr ExtendedReal operator-() const {
    switch (kind_) {
      case Kind::positive_infinity: return neg_inf();
      case Kind::negative_infinity: return pos_inf();
      default: return ExtendedReal(-value_);
    }
  }

  friend bool operator<(const ExtendedReal& l, const ExtendedReal& r) { return rank(l, r) < 0; }
  friend bool operator>(const ExtendedReal& l, const ExtendedReal& r) { return rank(l, r) > 0; }
  friend bool operator<=(const ExtendedReal& l, const ExtendedReal& r) { return rank(l, r) <= 0; }
  friend bool operator>=(const ExtendedReal& l, const ExtendedReal& r) { return rank(l, r) >= 0; }
  friend bool operator==(const ExtendedReal& l, const ExtendedReal& r) { return rank(l, r) == 0; }

  /// "+inf", "-inf" or the shortest round-trip decimal.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "inf"/"infinity" spellings.
  static ExtendedReal parse(const std::string& text);

 private:
  explicit constexpr ExtendedReal(Kind k) : kind_(k) {}

  static int rank(const ExtendedReal& l, const ExtendedReal& r) {
    auto order = [](Kind k) { return k == Kind::negative_infinity ? 0 : (k == Kind::finite ? 1 : 2); };
    const int ol = order(l.kind_), or_ = order(r.kind_);
    if (ol != or_) return ol < or_ ? -1 : 1;
    if (ol != 1) return 0;
    return l.value_ < r.value_ ? -1 : (l.value_ > r.value_ ? 1 : 0);
  }

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

inline ExtendedReal max(const ExtendedReal& l, const ExtendedReal& r) { return l < r ? r : l; }
inline ExtendedReal min(const ExtendedReal& l, const ExtendedReal& r) { return r < l ? r : l; }

}  // namespace spiralbound
