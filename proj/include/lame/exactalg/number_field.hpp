#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lame/exactalg/rational.hpp"

namespace lame {

// =====================================================================
// NumberField: Q itself or a quadratic extension Q(t) with t^2 = b*t + c.
//
// The defining polynomial x^2 - b*x - c must be irreducible over Q,
// which for a quadratic is equivalent to its discriminant b^2 + 4c not
// being a rational square.
// =====================================================================
class NumberField {
 public:
  // The rational field Q.
  NumberField() : rational_(true) {}

  NumberField(const Rational& b, const Rational& c)
      : rational_(false), b_(b), c_(c) {
    Rational disc = b * b + Rational(4) * c;
    if (rational_sqrt(disc, nullptr))
      throw std::invalid_argument(
          "NumberField: t^2 = " + b.str() + "*t + " + c.str() +
          " is reducible over Q");
  }

  static NumberField rationals() { return NumberField(); }
  // Q(sqrt(d)) for a non-square rational d: t^2 = d.
  static NumberField quadratic_sqrt(const Rational& d) {
    return NumberField(Rational(0), d);
  }
  // Q(omega), omega a primitive cube root of unity: t^2 = -t - 1.
  static NumberField cyclotomic_omega() {
    return NumberField(Rational(-1), Rational(-1));
  }
  // Q(i): t^2 = -1.
  static NumberField gaussian() {
    return NumberField(Rational(0), Rational(-1));
  }

  bool is_rational() const { return rational_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool operator==(const NumberField& o) const {
    if (rational_ != o.rational_) return false;
    return rational_ || (b_ == o.b_ && c_ == o.c_);
  }
  bool operator!=(const NumberField& o) const { return !(*this == o); }

  // Token format: "Q" or "Q(b,c)" meaning t^2 = b*t + c.
  std::string str() const {
    if (rational_) return "Q";
    return "Q(" + b_.str() + "," + c_.str() + ")";
  }
  static NumberField parse(const std::string& s) {
    if (s == "Q") return NumberField();
    if (s.size() >= 5 && s.substr(0, 2) == "Q(" && s.back() == ')') {
      std::string inner = s.substr(2, s.size() - 3);
      auto comma = inner.find(',');
      if (comma != std::string::npos)
        return NumberField(Rational::parse(inner.substr(0, comma)),
                           Rational::parse(inner.substr(comma + 1)));
    }
    throw std::invalid_argument("NumberField: cannot parse '" + s + "'");
  }

 private:
  bool rational_;
  Rational b_, c_;
};

// =====================================================================
// FieldElem: an element a + b*t of a NumberField (b = 0 over Q).
// =====================================================================
class FieldElem {
 public:
  explicit FieldElem(const NumberField& f) : field_(f) {}
  FieldElem(const NumberField& f, const Rational& a) : field_(f), a_(a) {}
  FieldElem(const NumberField& f, const Rational& a, const Rational& b)
      : field_(f), a_(a), b_(b) {
    if (f.is_rational() && !b_.is_zero())
      throw std::invalid_argument("FieldElem: t-coefficient over Q");
  }

  const NumberField& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_ == Rational(1) && b_.is_zero(); }
  bool is_rational_value() const { return b_.is_zero(); }

  FieldElem operator-() const { return FieldElem(field_, -a_, -b_); }
  FieldElem operator+(const FieldElem& o) const {
    check(o);
    return FieldElem(field_, a_ + o.a_, b_ + o.b_);
  }
  FieldElem operator-(const FieldElem& o) const {
    check(o);
    return FieldElem(field_, a_ - o.a_, b_ - o.b_);
  }
  FieldElem operator*(const FieldElem& o) const {
    check(o);
    // (a1 + b1 t)(a2 + b2 t) with t^2 = B t + C
    Rational cross = a_ * o.b_ + b_ * o.a_;
    Rational tt = b_ * o.b_;
    return FieldElem(field_, a_ * o.a_ + tt * field_.c(),
                     cross + tt * field_.b());
  }
  FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

  // Galois conjugate: t -> B - t (the other root of the defining relation).
  FieldElem conj() const {
    return FieldElem(field_, a_ + b_ * field_.b(), -b_);
  }
  // Field norm N(x) = x * conj(x), a rational.
  Rational norm() const {
    return a_ * a_ + a_ * b_ * field_.b() - b_ * b_ * field_.c();
  }

  FieldElem inverse() const {
    if (is_zero()) throw std::domain_error("FieldElem: division by zero");
    Rational n = norm();
    FieldElem cj = conj();
    return FieldElem(field_, cj.a_ / n, cj.b_ / n);
  }

  bool operator==(const FieldElem& o) const {
    return field_ == o.field_ && a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Arbitrary total order for canonical sorting within one field.
  bool operator<(const FieldElem& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
  }

  // Coefficient token: "a" or "a+b*t".
  std::string str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + "+" + b_.str() + "*t";
  }
  static FieldElem parse(const NumberField& f, const std::string& s) {
    auto star = s.rfind("*t");
    if (star == std::string::npos || star + 2 != s.size())
      return FieldElem(f, Rational::parse(s));
    auto plus = s.rfind('+', star);
    if (plus == std::string::npos || plus == 0)
      throw std::invalid_argument("FieldElem: cannot parse '" + s + "'");
    return FieldElem(f, Rational::parse(s.substr(0, plus)),
                     Rational::parse(s.substr(plus + 1, star - plus - 1)));
  }

 private:
  void check(const FieldElem& o) const {
    if (field_ != o.field_)
      throw std::invalid_argument("FieldElem: mixing distinct fields");
  }
  NumberField field_;
  Rational a_, b_;
};

// Square root of d inside its own quadratic field (or inside Q when the
// field is Q). Returns the root with (b > 0) or (b = 0, a >= 0) when one
// exists.
inline std::optional<FieldElem> sqrt_in_field(const FieldElem& d) {
  const NumberField& F = d.field();
  auto normalize = [](FieldElem x) {
    bool flip = x.b().sign() < 0 || (x.b().is_zero() && x.a().sign() < 0);
    return flip ? -x : x;
  };
  // rational candidate: u^2 = d
  if (d.b().is_zero()) {
    Rational u;
    if (rational_sqrt(d.a(), &u)) return normalize(FieldElem(F, u));
  }
  if (F.is_rational()) return std::nullopt;
  const Rational B = F.b(), C = F.c();
  // (u + v t)^2 = u^2 + v^2 C + (2uv + v^2 B) t  with v != 0:
  // from the t-part: u = (d_b - v^2 B) / (2v); substitute into the
  // rational part and clear denominators:
  //   w^2 (B^2 + 4C) - w (2 B d_b + 4 d_a) + d_b^2 = 0,  w := v^2.
  Rational A2 = B * B + Rational(4) * C;
  Rational A1 = Rational(2) * B * d.b() + Rational(4) * d.a();
  Rational A0 = d.b() * d.b();
  Rational disc = A1 * A1 - Rational(4) * A2 * A0;
  Rational sd;
  if (!rational_sqrt(disc, &sd)) return std::nullopt;
  for (int s : {1, -1}) {
    Rational w = (A1 + Rational(s) * sd) / (Rational(2) * A2);
    Rational v;
    if (!rational_sqrt(w, &v) || v.is_zero()) continue;
    Rational u = (d.b() - w * B) / (Rational(2) * v);
    FieldElem cand(F, u, v);
    if (cand * cand == d) return normalize(cand);
  }
  return std::nullopt;
}

}  // namespace lame
