#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace seqvcg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Every quantity in the library (types, valuations,
/// transfers, taxes, utilities) is one of these; no floating point is
/// used anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  static std::optional<Rational> parse(std::string_view text);

  /// "p" when integral, "p/q" otherwise. Never a binary-float rendering.
  std::string str() const;

  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rational max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline Rational min(const Rational& a, const Rational& b) {
  return a < b ? a : b;
}

}  // namespace seqvcg
