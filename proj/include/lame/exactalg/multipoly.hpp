#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lame/exactalg/number_field.hpp"

namespace lame {

// Exponent vector of fixed arity; compared lexicographically by std::map.
using Monomial = std::vector<int>;

// =====================================================================
// MultiPoly: sparse exact multivariate polynomial over a NumberField.
//
// Terms are held in an ordered map keyed by exponent vector; zero
// coefficients are never stored, so the zero polynomial has no terms.
// =====================================================================
class MultiPoly {
 public:
  MultiPoly(int arity, const NumberField& f) : arity_(arity), field_(f) {
    if (arity < 0) throw std::invalid_argument("MultiPoly: negative arity");
  }

  static MultiPoly zero(int arity, const NumberField& f) {
    return MultiPoly(arity, f);
  }
  static MultiPoly constant(int arity, const FieldElem& c) {
    MultiPoly p(arity, c.field());
    p.add_term(Monomial(arity, 0), c);
    return p;
  }
  static MultiPoly constant(int arity, const NumberField& f, const Rational& q) {
    return constant(arity, FieldElem(f, q));
  }
  static MultiPoly variable(int arity, const NumberField& f, int var,
                            int power = 1) {
    MultiPoly p(arity, f);
    Monomial m(arity, 0);
    p.range_check(var);
    m[var] = power;
    p.add_term(m, FieldElem(f, Rational(1)));
    return p;
  }

  int arity() const { return arity_; }
  const NumberField& field() const { return field_; }
  const std::map<Monomial, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial(arity_, 0));
  }
  FieldElem constant_value() const {
    if (terms_.empty()) return FieldElem(field_);
    auto it = terms_.find(Monomial(arity_, 0));
    if (it == terms_.end() || terms_.size() != 1)
      throw std::domain_error("MultiPoly: not a constant");
    return it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int e : m) s += e;
      d = std::max(d, s);
    }
    return d;  // -1 for the zero polynomial
  }
  int degree_in(int var) const {
    range_check(var);
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return terms_.empty() ? -1 : d;
  }

  // Homogeneity in a subset of the variables (all terms having equal
  // degree-sum over that subset).
  bool is_homogeneous_in(const std::vector<int>& vars, int* degree_out = nullptr) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int s = 0;
      for (int v : vars) s += m[v];
      if (d < 0) d = s;
      else if (s != d) return false;
    }
    if (degree_out) *degree_out = d;
    return true;
  }

  void add_term(const Monomial& m, const FieldElem& c) {
    if (static_cast<int>(m.size()) != arity_)
      throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.field() != field_)
      throw std::invalid_argument("MultiPoly: coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FieldElem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem(field_) : it->second;
  }

  MultiPoly operator-() const {
    MultiPoly r(arity_, field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  MultiPoly operator+(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    check(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    check(o);
    MultiPoly r(arity_, field_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(arity_);
        for (int i = 0; i < arity_; ++i) m[i] = m1[i] + m2[i];
        r.add_term(m, c1 * c2);
      }
    return r;
  }
  MultiPoly scale(const FieldElem& c) const {
    MultiPoly r(arity_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
  }
  MultiPoly scale(const Rational& q) const { return scale(FieldElem(field_, q)); }

  bool operator==(const MultiPoly& o) const {
    return arity_ == o.arity_ && field_ == o.field_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly r = constant(arity_, FieldElem(field_, Rational(1)));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  MultiPoly partial_derivative(int var) const {
    range_check(var);
    MultiPoly r(arity_, field_);
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial d = m;
      d[var] -= 1;
      r.add_term(d, c * FieldElem(field_, Rational(m[var])));
    }
    return r;
  }

  // Substitutes an entire polynomial (same arity) for one variable, with
  // full expansion.
  MultiPoly substitute(int var, const MultiPoly& repl) const {
    check(repl);
    range_check(var);
    if (repl.degree_in(var) > 0)
      throw std::invalid_argument("MultiPoly: substitute replacement uses the substituted variable");
    // cache powers of repl
    std::vector<MultiPoly> powers{constant(arity_, FieldElem(field_, Rational(1)))};
    MultiPoly r(arity_, field_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      while (static_cast<int>(powers.size()) <= e)
        powers.push_back(powers.back() * repl);
      Monomial rest = m;
      rest[var] = 0;
      MultiPoly term(arity_, field_);
      term.add_term(rest, c);
      r = r + term * powers[e];
    }
    return r;
  }

  // Substitutes a field constant for one variable (arity preserved; the
  // variable's exponent becomes 0 in every term).
  MultiPoly eval_var(int var, const FieldElem& value) const {
    return substitute(var, constant(arity_, value));
  }

  // Evaluates at a full point; arity many values.
  FieldElem eval(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw std::invalid_argument("MultiPoly: eval point arity mismatch");
    FieldElem acc(field_);
    for (const auto& [m, c] : terms_) {
      FieldElem t = c;
      for (int i = 0; i < arity_; ++i)
        for (int k = 0; k < m[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  // Removes a variable that no longer occurs (for moving to a smaller ring).
  MultiPoly drop_var(int var) const {
    range_check(var);
    if (degree_in(var) > 0)
      throw std::invalid_argument("MultiPoly: drop_var on an occurring variable");
    MultiPoly r(arity_ - 1, field_);
    for (const auto& [m, c] : terms_) {
      Monomial d;
      d.reserve(arity_ - 1);
      for (int i = 0; i < arity_; ++i)
        if (i != var) d.push_back(m[i]);
      r.add_term(d, c);
    }
    return r;
  }

  // Inserts a fresh unused variable at the given position.
  MultiPoly insert_var(int pos) const {
    if (pos < 0 || pos > arity_)
      throw std::invalid_argument("MultiPoly: insert position out of range");
    MultiPoly r(arity_ + 1, field_);
    for (const auto& [m, c] : terms_) {
      Monomial d;
      d.reserve(arity_ + 1);
      for (int i = 0; i < pos; ++i) d.push_back(m[i]);
      d.push_back(0);
      for (int i = pos; i < arity_; ++i) d.push_back(m[i]);
      r.add_term(d, c);
    }
    return r;
  }

  // Coefficient of var^k, as a polynomial of the same arity not using var.
  MultiPoly coeff_of(int var, int k) const {
    range_check(var);
    MultiPoly r(arity_, field_);
    for (const auto& [m, c] : terms_) {
      if (m[var] != k) continue;
      Monomial d = m;
      d[var] = 0;
      r.add_term(d, c);
    }
    return r;
  }

  // Leading term in the map's lexicographic order (last key).
  std::pair<Monomial, FieldElem> leading_term() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: leading term of zero");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
  }

  // Exact division: returns the quotient when divisor divides this
  // exactly; nullopt otherwise. Multivariate long division tracking the
  // lexicographic leading terms.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const {
    check(divisor);
    if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    MultiPoly rem = *this;
    MultiPoly quot(arity_, field_);
    auto [dm, dc] = divisor.leading_term();
    while (!rem.is_zero()) {
      auto [rm, rc] = rem.leading_term();
      Monomial q(arity_);
      for (int i = 0; i < arity_; ++i) {
        q[i] = rm[i] - dm[i];
        if (q[i] < 0) return std::nullopt;
      }
      FieldElem qc = rc / dc;
      MultiPoly qt(arity_, field_);
      qt.add_term(q, qc);
      quot = quot + qt;
      rem = rem - qt * divisor;
      if (!rem.is_zero() && rem.leading_term().first >= rm)
        return std::nullopt;  // no strict progress: not exactly divisible
    }
    return quot;
  }

  // ---------------------------------------------------------------- text IO
  // Format:  poly <arity> <field>\n  then one line per term:
  //   <coeff> : e1 e2 ... ek
  std::string str() const {
    std::ostringstream out;
    out << "poly " << arity_ << " " << field_.str() << "\n";
    for (const auto& [m, c] : terms_) {
      out << c.str() << " :";
      for (int e : m) out << " " << e;
      out << "\n";
    }
    return out.str();
  }

  static MultiPoly parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("MultiPoly: empty input");
    std::istringstream head(line);
    std::string tag, ftok;
    int arity = -1;
    head >> tag >> arity >> ftok;
    if (tag != "poly" || arity < 0 || ftok.empty())
      throw std::invalid_argument("MultiPoly: bad header '" + line + "'");
    MultiPoly p(arity, NumberField::parse(ftok));
    int lineno = 1;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      auto colon = line.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("MultiPoly: missing ':' on line " +
                                    std::to_string(lineno));
      std::string ctok = line.substr(0, colon);
      ctok.erase(ctok.find_last_not_of(" \t") + 1);
      ctok.erase(0, ctok.find_first_not_of(" \t"));
      FieldElem c = FieldElem::parse(p.field(), ctok);
      std::istringstream rest(line.substr(colon + 1));
      Monomial m;
      int e;
      while (rest >> e) m.push_back(e);
      if (static_cast<int>(m.size()) != arity)
        throw std::invalid_argument("MultiPoly: wrong exponent count on line " +
                                    std::to_string(lineno));
      p.add_term(m, c);
    }
    return p;
  }

  // Human-readable rendering with variable names, for reports.
  std::string pretty(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (int i = 0; i < arity_; ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      std::string c = it->second.str();
      if (mono.empty()) out += c;
      else if (it->second.is_one()) out += mono;
      else out += "(" + c + ")*" + mono;
    }
    return out;
  }

 private:
  void check(const MultiPoly& o) const {
    if (field_ != o.field_)
      throw std::invalid_argument("MultiPoly: mixing distinct fields");
    if (arity_ != o.arity_)
      throw std::invalid_argument("MultiPoly: mixing distinct arities");
  }
  void range_check(int var) const {
    if (var < 0 || var >= arity_)
      throw std::invalid_argument("MultiPoly: variable index out of range");
  }

  int arity_;
  NumberField field_;
  std::map<Monomial, FieldElem> terms_;
};

}  // namespace lame
