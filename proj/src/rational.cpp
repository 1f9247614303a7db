#include "seqvcg/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace seqvcg {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

// Accepts "42", "-7", "3/4", "-3/4", "0.25", "-1.5", with optional
// surrounding whitespace.
std::optional<Rational> Rational::parse(std::string_view text) {
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) return std::nullopt;
  std::string_view s = text.substr(b, e - b + 1);

  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;

  mpq_class value;
  if (size_t slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    mpz_class d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (size_t dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class scale = 1;
    mpz_class f = 0;
    if (!frac.empty()) {
      f = mpz_class(std::string(frac), 10);
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    }
    value = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(s)) return std::nullopt;
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  if (neg) value = -value;
  return Rational(value);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace seqvcg
