#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvfilter {

using BigRational = boost::multiprecision::cpp_rational;

/// An exact rational in [0, 1], always in lowest terms.
///
/// The standard MV operations on [0, 1] are closed, so they return Rat
/// directly: x⊕y = min(1, x+y), ¬x = 1−x, x→y = min(1, 1−x+y), and
/// x⊗y = max(0, x+y−1).
class Rat {
public:
  Rat() = default;
  /// Throws InvalidArgument for a zero denominator or a value outside [0, 1].
  Rat(long long num, long long den = 1);
  explicit Rat(const BigRational& v);

  /// Accepts "n/d", "n" or a decimal such as "0.375", all converted exactly.
  static Rat parse(std::string_view text);

  const BigRational& value() const noexcept { return v_; }
  std::string to_string() const;

  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  BigRational v_{0};
};

Rat mv_neg(const Rat& x);
Rat mv_oplus(const Rat& x, const Rat& y);
Rat mv_otimes(const Rat& x, const Rat& y);
Rat mv_implies(const Rat& x, const Rat& y);

}  // namespace mvfilter
