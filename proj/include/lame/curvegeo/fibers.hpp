#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lame/curvegeo/family.hpp"
#include "lame/exactalg/multipoly.hpp"
#include "lame/exactalg/resultant.hpp"

namespace lame {
namespace detail {

// =====================================================================
// Integer-kernel univariate resultants and gcds. Pseudo-remainder
// sequences with content stripping keep coefficient growth in check
// while every correction factor is tracked exactly.
// =====================================================================

inline int vec_degree(const std::vector<BigInt>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[i] != 0) return i;
  return -1;
}

inline void vec_trim(std::vector<BigInt>& v) {
  v.resize(static_cast<size_t>(vec_degree(v) + 1));
}

inline BigInt vec_content(const std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& c : v) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? BigInt(-g) : g;
}

// lc(B)^(deg A - deg B + 1) * A reduced modulo B.
inline std::vector<BigInt> pseudo_rem(std::vector<BigInt> A,
                                      const std::vector<BigInt>& B) {
  int m = vec_degree(A), n = vec_degree(B);
  if (n < 0) throw std::invalid_argument("pseudo_rem: zero divisor");
  const BigInt& lb = B[n];
  for (int k = m; k >= n; --k) {
    BigInt t = A[k];
    for (BigInt& c : A) c *= lb;
    if (t != 0)
      for (int i = 0; i <= n; ++i) A[k - n + i] -= t * B[i];
    A[k] = 0;
  }
  vec_trim(A);
  return A;
}

inline Rational bigint_power(const BigInt& b, int e) {
  BigInt p = boost::multiprecision::pow(b, unsigned(e >= 0 ? e : -e));
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

// Resultant of two integer-coefficient polynomials, exact over Q.
inline Rational int_resultant(std::vector<BigInt> A, std::vector<BigInt> B) {
  vec_trim(A);
  vec_trim(B);
  if (A.empty() || B.empty()) return Rational(0);
  Rational acc(1);
  int sgn = 1;
  while (true) {
    int m = vec_degree(A), n = vec_degree(B);
    if (m < n) {
      if ((m & 1) && (n & 1)) sgn = -sgn;
      std::swap(A, B);
      continue;
    }
    if (n == 0) {
      Rational r = acc * bigint_power(B[0], m);
      return sgn < 0 ? -r : r;
    }
    int delta = m - n;
    BigInt lb = B[n];
    std::vector<BigInt> R = pseudo_rem(A, B);
    if (R.empty()) return Rational(0);
    int d = vec_degree(R);
    BigInt c = vec_content(R);
    for (BigInt& x : R) x /= c;
    acc *= bigint_power(lb, (m - d) - (delta + 1) * n) * bigint_power(c, n);
    if ((m & 1) && (n & 1)) sgn = -sgn;
    A = std::move(B);
    B = std::move(R);
  }
}

inline BigInt bigint_lcm(const BigInt& a, const BigInt& b) {
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt l = a / g * b;
  return l < 0 ? BigInt(-l) : l;
}

// Clears denominators and delegates to the integer kernel.
inline Rational rational_resultant(const std::vector<Rational>& A,
                                   const std::vector<Rational>& B) {
  auto clear = [](const std::vector<Rational>& v, BigInt* den) {
    *den = 1;
    for (const Rational& q : v) *den = bigint_lcm(*den, q.denominator());
    std::vector<BigInt> out;
    for (const Rational& q : v)
      out.push_back(q.numerator() * (*den / q.denominator()));
    vec_trim(out);
    return out;
  };
  BigInt da = 1, db = 1;
  std::vector<BigInt> ia = clear(A, &da), ib = clear(B, &db);
  if (ia.empty() || ib.empty()) return Rational(0);
  Rational r = int_resultant(ia, ib);
  return r / (bigint_power(da, vec_degree(ib)) * bigint_power(db, vec_degree(ia)));
}

// =====================================================================
// Univariate helpers over Q on MultiPoly values.
// =====================================================================

inline MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
  auto r = p.divide_exact(q);
  if (!r) throw std::logic_error("exact_div: division is not exact");
  return *r;
}

inline MultiPoly monic_in(const MultiPoly& p, int var) {
  if (p.is_zero()) throw std::invalid_argument("monic_in: zero polynomial");
  FieldElem lead = p.coeff_of(var, p.degree_in(var)).constant_value();
  return p.scale(lead.inverse());
}

inline std::vector<Rational> coeff_vector_q(const MultiPoly& p, int var) {
  require_univariate(p, var);
  std::vector<Rational> out(static_cast<size_t>(p.degree_in(var) + 1),
                            Rational(0));
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_rational_value())
      throw std::invalid_argument("coeff_vector_q: non-rational coefficient");
    out[static_cast<size_t>(m[var])] = c.a();
  }
  return out;
}

inline std::vector<BigInt> int_primitive_vector(const MultiPoly& p, int var) {
  std::vector<Rational> q = coeff_vector_q(p, var);
  BigInt den = 1;
  for (const Rational& c : q) den = bigint_lcm(den, c.denominator());
  std::vector<BigInt> out;
  for (const Rational& c : q) out.push_back(c.numerator() * (den / c.denominator()));
  vec_trim(out);
  if (!out.empty()) {
    BigInt cont = vec_content(out);
    for (BigInt& c : out) c /= cont;
  }
  return out;
}

// Monic gcd over Q via an integer primitive remainder sequence; suited
// to dense inputs with large coefficients.
inline MultiPoly primitive_gcd(const MultiPoly& a, const MultiPoly& b, int var) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("primitive_gcd: both inputs zero");
  if (a.is_zero()) return monic_in(b, var);
  if (b.is_zero()) return monic_in(a, var);
  std::vector<BigInt> va = int_primitive_vector(a, var);
  std::vector<BigInt> vb = int_primitive_vector(b, var);
  if (vec_degree(va) < vec_degree(vb)) std::swap(va, vb);
  while (!vb.empty()) {
    std::vector<BigInt> r = pseudo_rem(va, vb);
    if (!r.empty()) {
      BigInt c = vec_content(r);
      for (BigInt& x : r) x /= c;
    }
    va = std::move(vb);
    vb = std::move(r);
  }
  const NumberField& F = a.field();
  MultiPoly g(kFamilyArity, F);
  for (size_t i = 0; i < va.size(); ++i) {
    if (va[i] == 0) continue;
    Monomial m(kFamilyArity, 0);
    m[var] = static_cast<int>(i);
    g.add_term(m, FieldElem(F, Rational(va[i])));
  }
  return monic_in(g, var);
}

// Newton interpolation through (xs[i], ys[i]), returned in the monomial
// basis.
inline std::vector<Rational> interp_coeffs(const std::vector<Rational>& xs,
                                           const std::vector<Rational>& ys) {
  size_t n = xs.size();
  if (n == 0 || ys.size() != n)
    throw std::invalid_argument("interp_coeffs: bad sample arrays");
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<Rational> coeffs(n, Rational(0));
  std::vector<Rational> basis = {Rational(1)};
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < basis.size(); ++k) coeffs[k] += dd[i] * basis[k];
    if (i + 1 < n) {
      basis.push_back(Rational(0));
      for (size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - xs[i] * basis[k];
      basis[0] = -xs[i] * basis[0];
    }
  }
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

// Deterministic sample stream 0, 1, -1, 2, -2, ...
inline Rational sample_value(int i) {
  if (i == 0) return Rational(0);
  int k = (i + 1) / 2;
  return (i % 2 == 1) ? Rational(k) : Rational(-k);
}

// =====================================================================
// Exact bivariate resultant by interpolation. The inputs live in the
// variables {elim, other, parameter}; the output eliminates `elim`.
// Specializations are only taken where both leading coefficients
// survive, so every sample value equals the specialized resultant and
// the reconstruction is a polynomial identity, verified at spare
// sample points.
// =====================================================================
inline MultiPoly resultant_by_interpolation(const MultiPoly& f,
                                            const MultiPoly& g, int elim,
                                            int other) {
  if (!f.field().is_rational() || !g.field().is_rational())
    throw std::invalid_argument(
        "resultant_by_interpolation: rational coefficients required");
  const NumberField& F = f.field();
  if (f.is_zero() || g.is_zero()) return MultiPoly::zero(kFamilyArity, F);
  int df = f.degree_in(elim), dg = g.degree_in(elim);
  if (df == 0) return f.pow(dg);
  if (dg == 0) return g.pow(df);

  int dy_bound = f.degree_in(other) * dg + g.degree_in(other) * df;
  int da_bound =
      f.degree_in(kVarParam) * dg + g.degree_in(kVarParam) * df;

  std::vector<MultiPoly> fk, gk;
  for (int k = 0; k <= df; ++k) fk.push_back(f.coeff_of(elim, k));
  for (int k = 0; k <= dg; ++k) gk.push_back(g.coeff_of(elim, k));
  const MultiPoly& lcf = fk.back();
  const MultiPoly& lcg = gk.back();

  auto eval_q = [&](const MultiPoly& p, const Rational& y0,
                    const Rational& a0) {
    std::vector<FieldElem> at(kFamilyArity, FieldElem(F));
    at[static_cast<size_t>(other)] = FieldElem(F, y0);
    at[kVarParam] = FieldElem(F, a0);
    return p.eval(at).a();
  };
  auto value_at = [&](const Rational& y0, const Rational& a0) {
    std::vector<Rational> av, bv;
    for (const MultiPoly& p : fk) av.push_back(eval_q(p, y0, a0));
    for (const MultiPoly& p : gk) bv.push_back(eval_q(p, y0, a0));
    return rational_resultant(av, bv);
  };
  auto lc_ok = [&](const Rational& y0, const Rational& a0) {
    return !eval_q(lcf, y0, a0).is_zero() && !eval_q(lcg, y0, a0).is_zero();
  };
  auto lc_alive_at_param = [&](const Rational& a0) {
    return !lcf.eval_var(kVarParam, FieldElem(F, a0)).is_zero() &&
           !lcg.eval_var(kVarParam, FieldElem(F, a0)).is_zero();
  };

  const int cap = 8 * (dy_bound + da_bound + 16);
  std::vector<Rational> a_samples;
  std::vector<std::vector<Rational>> rows;
  int ai = 0;
  while (static_cast<int>(a_samples.size()) <= da_bound && ai < cap) {
    Rational a0 = sample_value(ai++);
    if (!lc_alive_at_param(a0)) continue;
    std::vector<Rational> ys, vals;
    int yi = 0;
    while (static_cast<int>(ys.size()) <= dy_bound && yi < cap) {
      Rational y0 = sample_value(yi++);
      if (!lc_ok(y0, a0)) continue;
      ys.push_back(y0);
      vals.push_back(value_at(y0, a0));
    }
    if (static_cast<int>(ys.size()) <= dy_bound)
      throw std::logic_error("resultant_by_interpolation: sample shortage");
    std::vector<Rational> row = interp_coeffs(ys, vals);
    row.resize(static_cast<size_t>(dy_bound + 1), Rational(0));
    a_samples.push_back(a0);
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(a_samples.size()) <= da_bound)
    throw std::logic_error("resultant_by_interpolation: sample shortage");

  MultiPoly result(kFamilyArity, F);
  for (int k = 0; k <= dy_bound; ++k) {
    std::vector<Rational> col;
    for (const auto& row : rows) col.push_back(row[static_cast<size_t>(k)]);
    std::vector<Rational> ck = interp_coeffs(a_samples, col);
    for (size_t j = 0; j < ck.size(); ++j) {
      if (ck[j].is_zero()) continue;
      Monomial m(kFamilyArity, 0);
      m[other] = k;
      m[kVarParam] = static_cast<int>(j);
      result.add_term(m, FieldElem(F, ck[j]));
    }
  }

  int checked = 0;
  while (checked < 2 && ai < cap) {
    Rational a0 = sample_value(ai++);
    if (!lc_alive_at_param(a0)) continue;
    int yi = 37;
    Rational y0 = sample_value(yi);
    while (!lc_ok(y0, a0) && yi < cap) y0 = sample_value(++yi);
    std::vector<FieldElem> at(kFamilyArity, FieldElem(F));
    at[static_cast<size_t>(other)] = FieldElem(F, y0);
    at[kVarParam] = FieldElem(F, a0);
    if (result.eval(at).a() != value_at(y0, a0))
      throw std::logic_error(
          "resultant_by_interpolation: verification sample mismatch");
    ++checked;
  }
  if (checked < 2)
    throw std::logic_error(
        "resultant_by_interpolation: verification samples unavailable");
  return result;
}

// =====================================================================
// Factor bookkeeping on univariate eliminants.
// =====================================================================

// Divides out (var - root) factors for the listed roots, returning the
// multiplicity of each.
inline std::pair<MultiPoly, std::vector<std::pair<Rational, int>>>
strip_linear_factors(MultiPoly p, int var, const std::vector<Rational>& roots) {
  const NumberField& F = p.field();
  std::vector<std::pair<Rational, int>> found;
  for (const Rational& r : roots) {
    MultiPoly lin = MultiPoly::variable(kFamilyArity, F, var) -
                    MultiPoly::constant(kFamilyArity, F, r);
    int count = 0;
    while (true) {
      auto q = p.divide_exact(lin);
      if (!q) break;
      p = *q;
      ++count;
    }
    if (count > 0) found.push_back({r, count});
  }
  return {std::move(p), std::move(found)};
}

// Squarefree decomposition over Q; returns (level, multiplicity) pairs
// with each level monic and squarefree.
inline std::vector<std::pair<MultiPoly, int>> yun_squarefree(
    const MultiPoly& p0, int var) {
  MultiPoly p = monic_in(p0, var);
  std::vector<std::pair<MultiPoly, int>> out;
  if (p.degree_in(var) == 0) return out;
  MultiPoly dp = p.partial_derivative(var);
  MultiPoly u = primitive_gcd(p, dp, var);
  MultiPoly v = exact_div(p, u);
  MultiPoly w = exact_div(dp, u);
  int i = 1;
  while (v.degree_in(var) > 0) {
    if (i > 512) throw std::logic_error("yun_squarefree: runaway loop");
    MultiPoly diff = w - v.partial_derivative(var);
    MultiPoly h = diff.is_zero() ? monic_in(v, var)
                                 : primitive_gcd(v, diff, var);
    if (h.degree_in(var) > 0) out.push_back({h, i});
    v = exact_div(v, h);
    w = diff.is_zero() ? MultiPoly::zero(kFamilyArity, p.field())
                       : exact_div(diff, h);
    ++i;
  }
  return out;
}

// Finds quadratic divisors var^2 - d with integer d of bounded height.
inline std::pair<MultiPoly, std::vector<std::pair<Rational, int>>>
quadratic_divisor_scan(MultiPoly p, int var, int height = 200) {
  const NumberField& F = p.field();
  std::vector<std::pair<Rational, int>> found;
  for (int ad = 1; ad <= height; ++ad) {
    for (int s : {1, -1}) {
      int d = s * ad;
      BigInt root;
      if (d > 0 && perfect_square(BigInt(d), &root)) continue;
      MultiPoly quad = MultiPoly::variable(kFamilyArity, F, var, 2) -
                       MultiPoly::constant(kFamilyArity, F, Rational(d));
      int count = 0;
      while (true) {
        auto q = p.divide_exact(quad);
        if (!q) break;
        p = *q;
        ++count;
      }
      if (count > 0) found.push_back({Rational(d), count});
    }
  }
  return {std::move(p), std::move(found)};
}

// d = scale^2 * square_free with square_free squarefree.
inline std::pair<Rational, Rational> squarefree_decompose(const Rational& d) {
  if (!d.is_integer())
    throw std::invalid_argument("squarefree_decompose: integer input expected");
  BigInt n = d.numerator();
  int sign = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  BigInt scale = 1, rest = 1;
  for (BigInt f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) scale *= f;
    if (e % 2 == 1) rest *= f;
  }
  rest *= n;
  if (sign < 0) rest = -rest;
  return {Rational(rest), Rational(scale)};
}

}  // namespace detail

// =====================================================================
// Exactly located singular points of a parameter-free plane form.
// =====================================================================

struct InfinityNodeReport {
  std::vector<ProjPoint> nodes;
  bool complete = false;
  std::vector<std::string> notes;
};

inline InfinityNodeReport infinity_node_analysis(const MultiPoly& form_in) {
  NumberField Q = NumberField::rationals();
  MultiPoly form = with_field(form_in, Q);
  if (form.is_zero())
    throw std::invalid_argument("infinity_node_analysis: zero form");
  FieldElem one(Q, Rational(1));

  InfinityNodeReport rep;
  rep.complete = true;
  std::vector<ProjPoint> nodes;

  static const std::array<std::array<int, 3>, 3> charts = {
      std::array<int, 3>{kVarZ, kVarX, kVarY},
      std::array<int, 3>{kVarY, kVarX, kVarZ},
      std::array<int, 3>{kVarX, kVarY, kVarZ}};
  static const char* chart_names[3] = {"z=1", "y=1", "x=1"};

  auto chart_point = [&](int keep, int v1, int v2, const FieldElem& b,
                         const FieldElem& c) {
    std::array<FieldElem, 3> q = {FieldElem(Q), FieldElem(Q), FieldElem(Q)};
    q[keep] = one;
    q[v1] = b;
    q[v2] = c;
    return ProjPoint(q[0], q[1], q[2]).normalized();
  };
  auto is_singular = [&](const ProjPoint& p) {
    std::vector<FieldElem> at = {p[0], p[1], p[2], FieldElem(Q)};
    if (!form.eval(at).is_zero()) return false;
    for (int v : {kVarX, kVarY, kVarZ})
      if (!form.partial_derivative(v).eval(at).is_zero()) return false;
    return true;
  };

  for (int ci = 0; ci < 3; ++ci) {
    auto [keep, v1, v2] = charts[ci];
    MultiPoly fc = form.eval_var(keep, one);
    if (fc.is_constant()) {
      if (fc.is_zero()) {
        rep.complete = false;
        rep.notes.push_back(std::string(chart_names[ci]) +
                            ": form vanishes on the whole chart");
      }
      continue;
    }
    MultiPoly g1 = fc.partial_derivative(v1);
    MultiPoly g2 = fc.partial_derivative(v2);
    if (g1.is_zero() || g2.is_zero()) {
      rep.complete = false;
      rep.notes.push_back(std::string(chart_names[ci]) +
                          ": degenerate gradient");
      continue;
    }
    MultiPoly r1 = resultant(fc, g1, v1);
    MultiPoly r2 = resultant(fc, g2, v1);
    if (r1.is_zero() || r2.is_zero()) {
      rep.complete = false;
      rep.notes.push_back(std::string(chart_names[ci]) +
                          ": chart eliminant vanished");
      continue;
    }
    MultiPoly g = detail::primitive_gcd(r1, r2, v2);
    MultiPoly lc1 = fc.coeff_of(v1, fc.degree_in(v1));
    MultiPoly h = lc1.is_constant() ? g : g * lc1;

    RationalRoots rr = find_rational_roots(h, v2);
    if (!rr.complete) {
      rep.complete = false;
      rep.notes.push_back(std::string(chart_names[ci]) +
                          ": candidate roots not exhaustive");
    }
    std::vector<Rational> root_list;
    for (const auto& [r, mult] : rr.roots) root_list.push_back(r);
    for (const Rational& c : root_list) {
      FieldElem cv(Q, c);
      std::vector<MultiPoly> specs;
      for (const MultiPoly* p : {&fc, &g1, &g2}) {
        MultiPoly s = p->eval_var(v2, cv);
        if (!s.is_zero()) specs.push_back(s);
      }
      if (specs.empty()) {
        rep.complete = false;
        rep.notes.push_back(std::string(chart_names[ci]) +
                            ": one-dimensional singular locus candidate");
        continue;
      }
      MultiPoly gg = specs[0];
      for (size_t i = 1; i < specs.size(); ++i) {
        if (gg.degree_in(v1) == 0) break;
        gg = detail::primitive_gcd(gg, specs[i], v1);
      }
      if (gg.degree_in(v1) == 0) continue;
      RationalRoots xr = find_rational_roots(gg, v1);
      if (!xr.complete) {
        rep.complete = false;
        rep.notes.push_back(std::string(chart_names[ci]) +
                            ": fiber roots not exhaustive");
      }
      std::vector<Rational> xroots;
      for (const auto& [b, mb] : xr.roots) {
        xroots.push_back(b);
        ProjPoint cand = chart_point(keep, v1, v2, FieldElem(Q, b), cv);
        if (is_singular(cand)) nodes.push_back(cand);
      }
      auto [gg_rest, gg_found] =
          detail::strip_linear_factors(gg, v1, xroots);
      (void)gg_found;
      if (gg_rest.degree_in(v1) > 0) {
        rep.complete = false;
        rep.notes.push_back(std::string(chart_names[ci]) +
                            ": nonrational fiber factor left unresolved");
      }
    }

    auto [cof, stripped] = detail::strip_linear_factors(h, v2, root_list);
    (void)stripped;
    if (cof.degree_in(v2) > 0) {
      auto [rest, quads] = detail::quadratic_divisor_scan(cof, v2);
      for (const auto& [d, cnt] : quads) {
        auto [sf, sc] = detail::squarefree_decompose(d);
        Rational sfr;
        if (rational_sqrt(sf, &sfr)) continue;
        NumberField K = NumberField::quadratic_sqrt(sf);
        MultiPoly fcK = with_field(fc, K);
        bool spurious = true;
        for (int s : {1, -1}) {
          FieldElem y0(K, Rational(0), s * sc);
          MultiPoly lifted = fcK.eval_var(v2, y0);
          if (lifted.is_zero() || !lifted.is_constant()) spurious = false;
        }
        if (!spurious) {
          rep.complete = false;
          rep.notes.push_back(std::string(chart_names[ci]) +
                              ": unresolved quadratic candidate d=" + d.str());
        }
      }
      if (rest.degree_in(v2) > 0) {
        rep.complete = false;
        rep.notes.push_back(std::string(chart_names[ci]) +
                            ": unresolved candidate factor of degree " +
                            std::to_string(rest.degree_in(v2)));
      }
    }
  }

  std::sort(nodes.begin(), nodes.end());
  for (const ProjPoint& p : nodes)
    if (rep.nodes.empty() || !rep.nodes.back().same_point(p))
      rep.nodes.push_back(p);
  return rep;
}

// =====================================================================
// Special fibers of the quartic pencil.
// =====================================================================

struct SpecialFiberReport {
  MultiPoly conic;
  bool double_conic_ok = false;
  std::vector<MultiPoly> lines;
  bool line_product_ok = false;
  bool pencil_identity_ok = false;
  std::string modulus_formula;
  bool modulus_zero_at_two = false;
  bool modulus_pole_at_minus_two = false;
  MultiPoly infinity_form;
  InfinityNodeReport infinity_nodes;
  std::vector<std::string> notes;
};

inline SpecialFiberReport special_fiber_factorizations() {
  NumberField Q = NumberField::rationals();
  CurveFamily fam = quartic_family(Q);
  using detail::fam_var;

  MultiPoly conic = fam_var(Q, kVarX, 2) + fam_var(Q, kVarY, 2) +
                    fam_var(Q, kVarZ, 2);
  bool double_ok =
      fam.poly.eval_var(kVarParam, FieldElem(Q, Rational(2))) == conic * conic;

  std::vector<MultiPoly> lines;
  MultiPoly prod = MultiPoly::constant(kFamilyArity, Q, Rational(1));
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      MultiPoly line = fam_var(Q, kVarX) +
                       fam_var(Q, kVarY).scale(Rational(s1)) +
                       fam_var(Q, kVarZ).scale(Rational(s2));
      prod = prod * line;
      lines.push_back(std::move(line));
    }
  bool product_ok =
      fam.poly.eval_var(kVarParam, FieldElem(Q, Rational(-2))) == prod;

  MultiPoly a = fam_var(Q, kVarParam);
  MultiPoly two = MultiPoly::constant(kFamilyArity, Q, Rational(2));
  MultiPoly four_f = fam.poly.scale(Rational(4));
  bool pencil_ok = four_f == (two + a) * (conic * conic) + (two - a) * prod;

  MultiPoly t_num = two - a, t_den = two + a;
  bool t_zero =
      t_num.eval_var(kVarParam, FieldElem(Q, Rational(2))).is_zero();
  bool t_pole =
      t_den.eval_var(kVarParam, FieldElem(Q, Rational(-2))).is_zero();

  MultiPoly infinity_form = fam.poly.coeff_of(kVarParam, 1);
  InfinityNodeReport nodes = infinity_node_analysis(infinity_form);

  SpecialFiberReport rep{std::move(conic),
                         double_ok,
                         std::move(lines),
                         product_ok,
                         pencil_ok,
                         "t(a) = (2 - a)/(2 + a)",
                         t_zero,
                         t_pole,
                         std::move(infinity_form),
                         std::move(nodes),
                         {}};
  rep.notes.push_back(
      "fiber moduli separate the double conic (t=0) from the line "
      "quadrilateral (t=infinity)");
  return rep;
}

// =====================================================================
// Singular parameter search by chartwise elimination.
// =====================================================================

struct SingularWitness {
  std::string param_desc;
  std::string field_desc;
  FieldElem alpha;
  ProjPoint point;
};

struct QuadraticParamClass {
  Rational d;
  int multiplicity = 0;
  Rational square_free;
  Rational scale;
};

struct SingularParameterReport {
  std::string family_name;
  bool degenerate = false;
  std::vector<std::string> chart_notes;
  std::optional<MultiPoly> eliminant;
  std::vector<std::pair<Rational, int>> rational_parameters;
  std::vector<QuadraticParamClass> quadratic_parameters;
  std::vector<std::pair<MultiPoly, int>> unresolved_factors;
  bool includes_infinity = false;
  std::optional<InfinityNodeReport> infinity_nodes;
  std::vector<ProjPoint> identically_singular;
  std::vector<SingularWitness> witnesses;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<FieldElem> witness_coordinate_set(const NumberField& F) {
  std::vector<FieldElem> out;
  for (int v : {0, 1, -1, 2, -2}) out.push_back(FieldElem(F, Rational(v)));
  if (!F.is_rational()) {
    std::vector<FieldElem> ext;
    FieldElem t(F, Rational(0), Rational(1));
    FieldElem one(F, Rational(1));
    FieldElem half(F, Rational(1, 2));
    ext.push_back(t);
    ext.push_back(one + t);
    ext.push_back(one - t);
    ext.push_back(half * (one + t));
    ext.push_back(half * (one - t));
    for (const FieldElem& e : ext) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

inline std::vector<ProjPoint> witness_candidates(const NumberField& F) {
  std::vector<FieldElem> S = witness_coordinate_set(F);
  FieldElem one(F, Rational(1)), zero(F);
  std::vector<ProjPoint> out;
  for (const FieldElem& s1 : S)
    for (const FieldElem& s2 : S) out.push_back(ProjPoint(one, s1, s2));
  for (const FieldElem& s : S) out.push_back(ProjPoint(zero, one, s));
  out.push_back(ProjPoint(zero, zero, one));
  return out;
}

inline bool point_singular_at(const MultiPoly& poly, const ProjPoint& p,
                              const FieldElem& alpha) {
  std::vector<FieldElem> at = {p[0], p[1], p[2], alpha};
  if (!poly.eval(at).is_zero()) return false;
  for (int v : {kVarX, kVarY, kVarZ})
    if (!poly.partial_derivative(v).eval(at).is_zero()) return false;
  return true;
}

inline bool point_identically_singular(const MultiPoly& poly,
                                       const ProjPoint& p) {
  const NumberField& F = poly.field();
  for (int k = 0; k <= poly.degree_in(kVarParam); ++k) {
    MultiPoly part = poly.coeff_of(kVarParam, k);
    if (!point_singular_at(part, p, FieldElem(F))) return false;
  }
  return true;
}

inline ProjPoint over_rationals_if_possible(const ProjPoint& p) {
  for (int i = 0; i < 3; ++i)
    if (!p[i].is_rational_value()) return p;
  NumberField Q = NumberField::rationals();
  return ProjPoint(FieldElem(Q, p[0].a()), FieldElem(Q, p[1].a()),
                   FieldElem(Q, p[2].a()));
}

inline std::optional<ProjPoint> witness_search(
    const MultiPoly& poly, const FieldElem& alpha,
    std::vector<ProjPoint>* identically_singular) {
  std::optional<ProjPoint> witness;
  for (const ProjPoint& p : witness_candidates(poly.field())) {
    if (!point_singular_at(poly, p, alpha)) continue;
    if (point_identically_singular(poly, p)) {
      ProjPoint rec = over_rationals_if_possible(p);
      bool seen = false;
      for (const ProjPoint& q : *identically_singular)
        if (q.same_point(rec)) seen = true;
      if (!seen) identically_singular->push_back(rec);
      continue;
    }
    if (!witness) witness = p;
  }
  return witness;
}

}  // namespace detail

inline SingularParameterReport singular_parameters(const CurveFamily& fam) {
  NumberField Q = NumberField::rationals();
  MultiPoly fq = with_field(fam.poly, Q);
  FieldElem one(Q, Rational(1));

  SingularParameterReport rep;
  rep.family_name = fam.name;

  static const std::array<std::array<int, 3>, 3> charts = {
      std::array<int, 3>{kVarZ, kVarX, kVarY},
      std::array<int, 3>{kVarY, kVarX, kVarZ},
      std::array<int, 3>{kVarX, kVarY, kVarZ}};
  static const char* chart_names[3] = {"z=1", "y=1", "x=1"};

  std::vector<MultiPoly> chart_elims;
  std::optional<std::pair<MultiPoly, MultiPoly>> first_chart_pair;
  bool degenerate = false;

  for (int ci = 0; ci < 3 && !degenerate; ++ci) {
    auto [keep, v1, v2] = charts[ci];
    MultiPoly fc = fq.eval_var(keep, one);
    MultiPoly g1 = fc.partial_derivative(v1);
    MultiPoly g2 = fc.partial_derivative(v2);
    MultiPoly r1 = detail::resultant_by_interpolation(fc, g1, v1, v2);
    MultiPoly r2 = detail::resultant_by_interpolation(fc, g2, v1, v2);
    if (ci == 0 && !r1.is_zero() && !r2.is_zero())
      first_chart_pair = std::make_pair(r1, r2);
    if (r1.is_zero() || r2.is_zero()) {
      degenerate = true;
      rep.chart_notes.push_back(std::string(chart_names[ci]) +
                                ": intermediate eliminant vanished");
      break;
    }
    MultiPoly R = detail::resultant_by_interpolation(r1, r2, v2, v1);
    if (R.is_zero()) {
      degenerate = true;
      rep.chart_notes.push_back(std::string(chart_names[ci]) +
                                ": joint eliminant vanished identically");
      break;
    }
    chart_elims.push_back(detail::monic_in(R, kVarParam));
    rep.chart_notes.push_back(std::string(chart_names[ci]) +
                              ": eliminant degree " +
                              std::to_string(R.degree_in(kVarParam)));
  }

  std::optional<MultiPoly> eliminant;
  if (!degenerate && !chart_elims.empty()) {
    MultiPoly e = chart_elims[0];
    for (size_t i = 1; i < chart_elims.size(); ++i)
      e = detail::primitive_gcd(e, chart_elims[i], kVarParam);
    eliminant = e;
  } else if (degenerate && first_chart_pair) {
    rep.degenerate = true;
    auto strip_all = [&](MultiPoly p, int var) {
      auto [stripped, found] = detail::strip_linear_factors(
          std::move(p), var, {Rational(0), Rational(1), Rational(-1)});
      return std::make_pair(stripped, found);
    };
    auto [s1, f1] = strip_all(first_chart_pair->first, charts[0][2]);
    auto [s2, f2] = strip_all(first_chart_pair->second, charts[0][2]);
    for (const auto& [r, c] : f1)
      rep.notes.push_back("stripped (v - " + r.str() + ")^" +
                          std::to_string(c) + " from the first eliminant");
    for (const auto& [r, c] : f2)
      rep.notes.push_back("stripped (v - " + r.str() + ")^" +
                          std::to_string(c) + " from the second eliminant");
    MultiPoly R =
        detail::resultant_by_interpolation(s1, s2, charts[0][2], charts[0][1]);
    if (R.is_zero()) {
      rep.notes.push_back(
          "stripped elimination still vanished; no parameters recovered");
    } else {
      eliminant = detail::monic_in(R, kVarParam);
      rep.notes.push_back(
          "parameters recovered from the stripped chart z=1 elimination");
    }
  }

  if (eliminant) {
    rep.eliminant = eliminant;
    for (const auto& [level, mult] :
         detail::yun_squarefree(*eliminant, kVarParam)) {
      RationalRoots rr = find_rational_roots(level, kVarParam);
      if (!rr.complete)
        rep.notes.push_back("rational root scan not exhaustive at level " +
                            std::to_string(mult));
      std::vector<Rational> roots;
      for (const auto& [r, m] : rr.roots) roots.push_back(r);
      auto [cof, found] =
          detail::strip_linear_factors(level, kVarParam, roots);
      for (const auto& [r, c] : found)
        rep.rational_parameters.push_back({r, mult * c});
      if (cof.degree_in(kVarParam) > 0) {
        auto [rest, quads] = detail::quadratic_divisor_scan(cof, kVarParam);
        for (const auto& [d, c] : quads) {
          auto [sf, sc] = detail::squarefree_decompose(d);
          rep.quadratic_parameters.push_back(
              QuadraticParamClass{d, mult * c, sf, sc});
        }
        if (rest.degree_in(kVarParam) > 0)
          rep.unresolved_factors.push_back({rest, mult});
      }
    }
    std::sort(rep.rational_parameters.begin(), rep.rational_parameters.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::sort(rep.quadratic_parameters.begin(), rep.quadratic_parameters.end(),
              [](const auto& a, const auto& b) { return a.d < b.d; });
  }

  // Witnesses for every recovered parameter.
  const NumberField& famF = fam.poly.field();
  for (const auto& [r, mult] : rep.rational_parameters) {
    FieldElem alpha(famF, r);
    auto w = detail::witness_search(fam.poly, alpha, &rep.identically_singular);
    if (w)
      rep.witnesses.push_back(
          SingularWitness{r.str(), famF.str(), alpha, *w});
    else
      rep.notes.push_back("no witness located for parameter " + r.str());
  }
  for (const auto& qc : rep.quadratic_parameters) {
    NumberField K = NumberField::quadratic_sqrt(qc.square_free);
    MultiPoly fk = with_field(fq, K);
    for (int s : {1, -1}) {
      FieldElem alpha(K, Rational(0), qc.scale * Rational(s));
      std::string desc = (s < 0 ? "-" : "") +
                         (qc.scale == Rational(1)
                              ? std::string("sqrt(") + qc.square_free.str() + ")"
                              : qc.scale.str() + "*sqrt(" +
                                    qc.square_free.str() + ")");
      auto w = detail::witness_search(fk, alpha, &rep.identically_singular);
      if (w)
        rep.witnesses.push_back(SingularWitness{desc, K.str(), alpha, *w});
      else
        rep.notes.push_back("no witness located for parameter " + desc);
    }
  }

  // Behavior at the infinite parameter: the leading form in a.
  MultiPoly lead = fq.coeff_of(kVarParam, fq.degree_in(kVarParam));
  if (fq.degree_in(kVarParam) > 0 && !lead.is_zero()) {
    rep.includes_infinity = true;
    rep.infinity_nodes = infinity_node_analysis(lead);
    if (rep.infinity_nodes->nodes.empty())
      rep.notes.push_back(
          "leading-form fiber has no rational node in the scan; treated as "
          "unverified");
  }

  if (!rep.identically_singular.empty())
    rep.notes.push_back(
        "some points are singular for every parameter value and are excluded "
        "from witness duty");
  return rep;
}

}  // namespace lame
