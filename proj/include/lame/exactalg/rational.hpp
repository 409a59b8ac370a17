#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lame {

using BigInt = boost::multiprecision::cpp_int;

// =====================================================================
// Rational: exact arbitrary-precision rational numbers.
//
// Canonical form is maintained by the backing multiprecision type:
// always reduced, denominator > 0, zero is 0/1.
// =====================================================================
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = d < 0 ? Backing(-n, -d) : Backing(n, d);
  }
  Rational(long long n, long long d)
      : Rational(BigInt(static_cast<std::int64_t>(n)),
                 BigInt(static_cast<std::int64_t>(d))) {}

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ == 0 ? 0 : (v_ > 0 ? 1 : -1); }

  Rational operator-() const { return Rational(Backing(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(Backing(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(Backing(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(Backing(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(Backing(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Parses "a" or "a/b" with optional leading sign.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(s));
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  std::string str() const {
    std::string out = numerator().str();
    if (!is_integer()) out += "/" + denominator().str();
    return out;
  }

 private:
  using Backing = boost::multiprecision::cpp_rational;
  explicit Rational(const Backing& v) : v_(v) {}
  Backing v_;
};

inline Rational operator+(int a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(int a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(int a, const Rational& b) { return Rational(a) * b; }

// Exact integer square root test: returns true and sets root when n is a
// perfect square (n >= 0).
inline bool perfect_square(const BigInt& n, BigInt* root) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// Exact square root of a rational if it exists in Q.
inline bool rational_sqrt(const Rational& q, Rational* out) {
  if (q.sign() < 0) return false;
  BigInt rn, rd;
  if (!perfect_square(q.numerator(), &rn)) return false;
  if (!perfect_square(q.denominator(), &rd)) return false;
  if (out) *out = Rational(rn, rd);
  return true;
}

}  // namespace lame
