#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lame/exactalg/multipoly.hpp"

namespace lame {

// =====================================================================
// Resultants, univariate gcd, and perfect-square decomposition.
// =====================================================================

// Determinant of the Sylvester matrix of f and g with respect to one
// variable, computed by fraction-free (Bareiss) elimination so that all
// intermediate entries stay polynomial. Rows are ordered f-block first,
// then g-block, which fixes the sign convention.
//
// The result is zero iff f and g share a factor of positive degree in
// var over the fraction field of the remaining variables.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("resultant: zero input polynomial");
  const int df = f.degree_in(var), dg = g.degree_in(var);
  const int n = df + dg;
  const NumberField& F = f.field();
  const MultiPoly one = MultiPoly::constant(f.arity(), FieldElem(F, Rational(1)));
  if (n == 0) return one;

  std::vector<std::vector<MultiPoly>> M(
      n, std::vector<MultiPoly>(n, MultiPoly::zero(f.arity(), F)));
  for (int r = 0; r < dg; ++r)
    for (int k = 0; k <= df; ++k)
      M[r][r + k] = f.coeff_of(var, df - k);
  for (int r = 0; r < df; ++r)
    for (int k = 0; k <= dg; ++k)
      M[dg + r][r + k] = g.coeff_of(var, dg - k);

  int sign = 1;
  MultiPoly prev = one;
  for (int k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!M[i][k].is_zero()) { swap_row = i; break; }
      if (swap_row < 0) return MultiPoly::zero(f.arity(), F);
      std::swap(M[k], M[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MultiPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        if (num.is_zero()) {
          M[i][j] = num;
          continue;
        }
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("resultant: Bareiss division failed");
        M[i][j] = *q;
      }
      M[i][k] = MultiPoly::zero(f.arity(), F);
    }
    prev = M[k][k];
  }
  MultiPoly det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------- univariate

inline void require_univariate(const MultiPoly& f, int var) {
  for (const auto& [m, c] : f.terms())
    for (int i = 0; i < f.arity(); ++i)
      if (i != var && m[i] != 0)
        throw std::invalid_argument("expected univariate polynomial");
}

// Standard long division of univariate polynomials over the field.
inline std::pair<MultiPoly, MultiPoly> divmod_univariate(const MultiPoly& f,
                                                         const MultiPoly& g,
                                                         int var) {
  require_univariate(f, var);
  require_univariate(g, var);
  if (g.is_zero()) throw std::domain_error("divmod: division by zero");
  const NumberField& F = f.field();
  MultiPoly q = MultiPoly::zero(f.arity(), F);
  MultiPoly r = f;
  const int dg = g.degree_in(var);
  const FieldElem glead = g.coeff_of(var, dg).constant_value();
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    int dr = r.degree_in(var);
    FieldElem c = r.coeff_of(var, dr).constant_value() / glead;
    MultiPoly t(f.arity(), F);
    Monomial m(f.arity(), 0);
    m[var] = dr - dg;
    t.add_term(m, c);
    q = q + t;
    r = r - t * g;
  }
  return {q, r};
}

// Monic gcd of univariate polynomials via the Euclidean algorithm.
inline MultiPoly gcd_univariate(const MultiPoly& f, const MultiPoly& g,
                                int var) {
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd_univariate: both inputs zero");
  MultiPoly a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = divmod_univariate(a, b, var);
    a = b;
    b = r;
  }
  FieldElem lead = a.coeff_of(var, a.degree_in(var)).constant_value();
  return a.scale(lead.inverse());
}

// ------------------------------------------------------- perfect square form

// Decomposes a binary form f (homogeneous of even degree in the two
// variables var_x, var_y; the remaining variables act as parameters) as
// f = scalar * root^2, where root has constant coefficients in (x,y) with
// the leading one normalized to 1, and the scalar is a polynomial in the
// parameter variables. Returns nullopt when no such decomposition exists.
inline std::optional<std::pair<MultiPoly, MultiPoly>> perfect_square_form(
    const MultiPoly& f, int var_x, int var_y) {
  if (f.is_zero())
    throw std::invalid_argument("perfect_square_form: zero input");
  int deg = 0;
  if (!f.is_homogeneous_in({var_x, var_y}, &deg))
    throw std::invalid_argument("perfect_square_form: not homogeneous in (x,y)");
  if (deg % 2 != 0) return std::nullopt;
  const int d = deg / 2;
  const NumberField& F = f.field();
  const int arity = f.arity();

  // top x-degree present
  int k = f.degree_in(var_x);
  if (k % 2 != 0) return std::nullopt;
  const int m = k / 2;  // x-degree of the root

  // scalar candidate: the coefficient (in the parameter ring) of x^k y^(deg-k)
  MultiPoly scalar = f.coeff_of(var_x, k);  // still contains y^(deg-k)
  // strip the y-power
  MultiPoly ypow = MultiPoly::variable(arity, F, var_y, deg - k);
  auto sc = scalar.divide_exact(ypow);
  if (!sc || sc->is_zero()) return std::nullopt;
  scalar = *sc;

  // root coefficients b_j (constant), j = x-degree from m down to 0;
  // b_m = 1; remaining from the triangular system
  //   coeff of x^(m+i) y^(deg-m-i) in f  =  scalar * sum_{p+q=m+i} b_p b_q.
  std::vector<FieldElem> b(m + 1, FieldElem(F));
  b[m] = FieldElem(F, Rational(1));
  MultiPoly two = MultiPoly::constant(arity, FieldElem(F, Rational(2)));
  for (int j = m - 1; j >= 0; --j) {
    // x-degree m + j term: 2 b_m b_j + sum over known pairs p+q = m+j, p,q < m
    MultiPoly target = f.coeff_of(var_x, m + j);
    auto tc = target.divide_exact(MultiPoly::variable(arity, F, var_y, deg - m - j));
    if (!tc) {
      if (!target.is_zero()) return std::nullopt;
      tc = MultiPoly::zero(arity, F);
    }
    // sum over known unordered pairs (p,q), p+q = m+j, j < p <= q <= m
    FieldElem s(F);
    for (int p = j + 1; p <= m; ++p) {
      int q = m + j - p;
      if (q <= j || q > m || q < 0) continue;
      if (p > q) continue;  // count unordered pairs once
      FieldElem prod = b[p] * b[q];
      s = s + (p == q ? prod : prod + prod);
    }
    // tc = scalar * (2 b_m b_j ... ) => (tc - scalar*s) / (2*scalar) = b_j
    MultiPoly rem = *tc - scalar.scale(s);
    auto bj = rem.divide_exact(scalar * two);
    if (!bj) return std::nullopt;
    if (!bj->is_constant()) return std::nullopt;
    b[j] = bj->constant_value();
  }

  MultiPoly root = MultiPoly::zero(arity, F);
  for (int j = 0; j <= m; ++j) {
    Monomial mn(arity, 0);
    mn[var_x] = j;
    mn[var_y] = d - j;
    MultiPoly t(arity, F);
    t.add_term(mn, b[j]);
    root = root + t;
  }
  if (f != scalar * root * root) return std::nullopt;
  return std::make_pair(scalar, root);
}

// ---------------------------------------------------------- rational content

// Positive rational c with f/c having coprime integer coefficients.
// Requires all coefficients rational-valued.
inline Rational rational_content(const MultiPoly& f) {
  if (f.is_zero()) return Rational(1);
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_rational_value())
      throw std::invalid_argument("rational_content: non-rational coefficient");
    num_gcd = boost::multiprecision::gcd(num_gcd,
                                         boost::multiprecision::abs(c.a().numerator()));
    den_lcm = boost::multiprecision::lcm(den_lcm, c.a().denominator());
  }
  return Rational(num_gcd, den_lcm);
}

inline MultiPoly primitive_part(const MultiPoly& f) {
  if (f.is_zero()) return f;
  return f.scale(FieldElem(f.field(), Rational(1) / rational_content(f)));
}

// --------------------------------------------------------- rational roots

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
  bool complete = false;  // true when the candidate enumeration was exhaustive
};

namespace detail {
inline std::vector<BigInt> bounded_divisors(BigInt n, int cap) {
  n = boost::multiprecision::abs(n);
  std::vector<BigInt> divs;
  if (n == 0) return divs;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
      if (static_cast<int>(divs.size()) > cap) return {};
    }
    if (d > 2000000) return {};  // trial bound exceeded: give up
  }
  return divs;
}
}  // namespace detail

// All rational roots of a univariate polynomial over Q, with
// multiplicities. Small-height roots are stripped first by direct scan;
// the remainder is settled by the rational root theorem when the divisor
// enumeration of its (primitive) trailing and leading coefficients stays
// within bounds, in which case `complete` is set.
inline RationalRoots find_rational_roots(MultiPoly f, int var,
                                         int scan_height = 16) {
  require_univariate(f, var);
  RationalRoots out;
  if (f.is_zero())
    throw std::invalid_argument("find_rational_roots: zero polynomial");
  const NumberField& F = f.field();
  if (!F.is_rational())
    throw std::invalid_argument("find_rational_roots: field must be Q");

  auto strip_root = [&](const Rational& r) {
    int mult = 0;
    for (;;) {
      // evaluate
      std::vector<FieldElem> pt(f.arity(), FieldElem(F));
      pt[var] = FieldElem(F, r);
      if (!f.eval(pt).is_zero()) break;
      MultiPoly lin = MultiPoly::variable(f.arity(), F, var) -
                      MultiPoly::constant(f.arity(), FieldElem(F, r));
      auto [q, rem] = divmod_univariate(f, lin, var);
      if (!rem.is_zero()) throw std::logic_error("root strip: nonzero remainder");
      f = q;
      ++mult;
      if (f.is_constant()) break;
    }
    if (mult > 0) out.roots.push_back({r, mult});
  };

  // factor out powers of var (root 0), then scan small heights
  strip_root(Rational(0));
  for (int n = 1; n <= scan_height && !f.is_constant(); ++n) {
    for (int d = 1; d <= scan_height; ++d) {
      if (boost::multiprecision::gcd(BigInt(n), BigInt(d)) != 1) continue;
      strip_root(Rational(n, d));
      strip_root(Rational(-n, d));
    }
  }
  if (f.is_constant()) {
    out.complete = true;
    return out;
  }

  // rational root theorem on the primitive cofactor
  MultiPoly prim = primitive_part(f);
  BigInt lead = prim.coeff_of(var, prim.degree_in(var)).constant_value().a().numerator();
  BigInt trail = prim.coeff_of(var, 0).constant_value().a().numerator();
  auto ps = detail::bounded_divisors(trail, 4096);
  auto qs = detail::bounded_divisors(lead, 4096);
  if (ps.empty() || qs.empty()) {
    out.complete = false;  // enumeration infeasible; scanned roots only
    return out;
  }
  for (const BigInt& p : ps)
    for (const BigInt& q : qs) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      strip_root(Rational(p, q));
      strip_root(Rational(-p, q));
    }
  out.complete = true;
  return out;
}

}  // namespace lame
