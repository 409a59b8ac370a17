#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lame/curvegeo/family.hpp"
#include "lame/exactalg/multipoly.hpp"
#include "lame/exactalg/resultant.hpp"

namespace lame {

// =====================================================================
// Lines in the projective plane, kept as degree-one forms of arity 4.
// =====================================================================

inline MultiPoly make_line(const NumberField& f, const FieldElem& c0,
                           const FieldElem& c1, const FieldElem& c2) {
  MultiPoly line(kFamilyArity, f);
  const FieldElem* c[3] = {&c0, &c1, &c2};
  for (int i = 0; i < 3; ++i) {
    Monomial m(kFamilyArity, 0);
    m[i] = 1;
    line.add_term(m, *c[i]);
  }
  if (line.is_zero()) throw std::invalid_argument("make_line: zero form");
  return line;
}

inline MultiPoly make_line(const NumberField& f, const Rational& c0,
                           const Rational& c1, const Rational& c2) {
  return make_line(f, FieldElem(f, c0), FieldElem(f, c1), FieldElem(f, c2));
}

// The line through two distinct points, by the coordinate cross product.
inline MultiPoly line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p.same_point(q))
    throw std::invalid_argument("line_through: points coincide");
  FieldElem c0 = p[1] * q[2] - p[2] * q[1];
  FieldElem c1 = p[2] * q[0] - p[0] * q[2];
  FieldElem c2 = p[0] * q[1] - p[1] * q[0];
  return make_line(p.field(), c0, c1, c2);
}

inline std::array<FieldElem, 3> line_coeffs(const MultiPoly& line) {
  if (line.arity() != kFamilyArity || line.is_zero() ||
      line.degree_in(kVarParam) != 0)
    throw std::invalid_argument("line_coeffs: not a coordinate line form");
  int deg = 0;
  if (!line.is_homogeneous_in({kVarX, kVarY, kVarZ}, &deg) || deg != 1)
    throw std::invalid_argument("line_coeffs: not a degree-one form");
  std::array<FieldElem, 3> c = {FieldElem(line.field()), FieldElem(line.field()),
                                FieldElem(line.field())};
  for (int i = 0; i < 3; ++i) {
    Monomial m(kFamilyArity, 0);
    m[i] = 1;
    c[i] = line.coeff(m);
  }
  return c;
}

inline FieldElem line_eval(const MultiPoly& line, const ProjPoint& p) {
  auto c = line_coeffs(line);
  return c[0] * p[0] + c[1] * p[1] + c[2] * p[2];
}

// The lines x + s1 y + s2 z over the given field, in sign order
// (+,+), (+,-), (-,+), (-,-).
struct SignedLine {
  int s1 = 1;
  int s2 = 1;
  MultiPoly form;
};

inline std::vector<SignedLine> four_bitangent_lines(const NumberField& f) {
  std::vector<SignedLine> out;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      out.push_back(SignedLine{s1, s2,
                               make_line(f, Rational(1), Rational(s1),
                                         Rational(s2))});
  return out;
}

// =====================================================================
// Bitangency test: restrict the family to a line and demand an exact
// square with parameter-free double roots.
// =====================================================================

namespace detail {

// Solutions (u : w) of A u^2 + B u w + C w^2 = 0 within the field.
inline std::vector<std::pair<FieldElem, FieldElem>> binary_quadratic_roots(
    const FieldElem& A, const FieldElem& B, const FieldElem& C) {
  const NumberField& F = A.field();
  FieldElem one(F, Rational(1)), zero(F);
  std::vector<std::pair<FieldElem, FieldElem>> out;
  if (A.is_zero() && B.is_zero() && C.is_zero())
    throw std::invalid_argument("binary_quadratic_roots: zero form");
  if (A.is_zero()) {
    out.push_back({one, zero});
    if (!B.is_zero()) out.push_back({-(C / B), one});
    return out;
  }
  FieldElem disc = B * B - FieldElem(F, Rational(4)) * A * C;
  auto s = sqrt_in_field(disc);
  if (!s)
    throw std::domain_error(
        "binary_quadratic_roots: discriminant is not a square in the field");
  FieldElem two_a = FieldElem(F, Rational(2)) * A;
  out.push_back({(-B + *s) / two_a, one});
  if (!s->is_zero()) out.push_back({(-B - *s) / two_a, one});
  return out;
}

}  // namespace detail

struct BitangencyResult {
  MultiPoly scalar;     // polynomial in the family parameter
  MultiPoly quadratic;  // constant-coefficient binary form with the contacts
  std::vector<ProjPoint> points;
  int pivot = 0;  // coordinate eliminated along the line
};

inline BitangencyResult bitangency(const CurveFamily& fam,
                                   const MultiPoly& line) {
  if (fam.poly.field() != line.field())
    throw std::invalid_argument("bitangency: field mismatch");
  auto c = line_coeffs(line);
  int pivot = -1;
  for (int i = 2; i >= 0; --i)
    if (!c[i].is_zero()) {
      pivot = i;
      break;
    }
  std::array<int, 2> rest{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) rest[k++] = i;

  const NumberField& F = fam.poly.field();
  FieldElem inv = -c[pivot].inverse();
  MultiPoly repl(kFamilyArity, F);
  for (int i : rest) {
    Monomial m(kFamilyArity, 0);
    m[i] = 1;
    repl.add_term(m, c[i] * inv);
  }
  MultiPoly r = fam.poly.substitute(pivot, repl);
  if (r.is_zero())
    throw std::domain_error(
        "bitangency: restriction vanishes identically; the line is a "
        "component of the fiber");
  auto sq = perfect_square_form(r, rest[0], rest[1]);
  if (!sq)
    throw std::invalid_argument(
        "bitangency: restriction is not a parameter-independent square; the "
        "line is not a bitangent of the whole family");
  auto [scalar, root] = *sq;

  // Contact locus: zeros of the binary form `root` in the two free
  // coordinates, lifted back to the line.
  int d = 0;
  root.is_homogeneous_in({rest[0], rest[1]}, &d);
  std::vector<std::pair<FieldElem, FieldElem>> dirs;
  if (d == 1) {
    Monomial a(kFamilyArity, 0), b(kFamilyArity, 0);
    a[rest[0]] = 1;
    b[rest[1]] = 1;
    FieldElem A = root.coeff(a), B = root.coeff(b);
    dirs.push_back({-B, A});
  } else if (d == 2) {
    Monomial a(kFamilyArity, 0), b(kFamilyArity, 0), e(kFamilyArity, 0);
    a[rest[0]] = 2;
    b[rest[0]] = 1;
    b[rest[1]] = 1;
    e[rest[1]] = 2;
    dirs = detail::binary_quadratic_roots(root.coeff(a), root.coeff(b),
                                          root.coeff(e));
  } else {
    throw std::invalid_argument(
        "bitangency: contact form degree above 2 is not supported");
  }

  std::vector<ProjPoint> points;
  for (const auto& [u, w] : dirs) {
    std::array<FieldElem, 3> q = {FieldElem(F), FieldElem(F), FieldElem(F)};
    q[rest[0]] = u;
    q[rest[1]] = w;
    q[pivot] = (c[rest[0]] * u + c[rest[1]] * w) * inv;
    points.push_back(ProjPoint(q[0], q[1], q[2]).normalized());
  }
  std::sort(points.begin(), points.end());
  return BitangencyResult{std::move(scalar), std::move(root), std::move(points),
                          pivot};
}

// =====================================================================
// Orbits of a point set under monomial classes.
// =====================================================================

inline std::vector<std::vector<int>> tangency_orbits(
    const std::vector<ProjPoint>& points, const std::vector<MonomialMap>& maps) {
  int n = static_cast<int>(points.size());
  auto locate = [&](const ProjPoint& q) {
    for (int j = 0; j < n; ++j)
      if (points[j].same_point(q)) return j;
    throw std::invalid_argument(
        "tangency_orbits: point set is not invariant under the maps");
  };
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (const MonomialMap& m : maps) {
      int j = locate(m.apply(points[i]));
      root[find(i)] = find(j);
    }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(orbits.size());
      orbits.push_back({});
    }
    orbits[slot[r]].push_back(i);
  }
  return orbits;
}

// =====================================================================
// The two-torsion pencil attached to the eight quartic contact points.
// =====================================================================

struct LineTangency {
  int s1 = 1;
  int s2 = 1;
  std::vector<FieldElem> lambda_roots;
};

struct PencilTwoTorsionReport {
  std::vector<ProjPoint> orbit1;
  std::vector<ProjPoint> orbit2;
  MultiPoly pencil;
  MultiPoly conj_pencil;
  std::vector<LineTangency> tangencies;
  std::vector<LineTangency> conj_tangencies;
  FieldElem lambda_star;
  FieldElem conj_lambda_star;
  // member_matrix[r][s]: the members at parameter (r ? w^2 : w) of the
  // pencil and (s ? w^2 : w) of the conjugate pencil share the four
  // corner base points.
  std::array<std::array<bool, 2>, 2> member_matrix{};
  std::vector<ProjPoint> base_points;
  bool base_points_complete = false;
  std::vector<ProjPoint> contacts;
  std::vector<ProjPoint> conj_contacts;
  std::vector<std::string> notes;
};

namespace detail {

// Roots of a polynomial of degree at most two in one variable, within
// the coefficient field.
inline std::vector<FieldElem> low_degree_roots(const MultiPoly& p, int var) {
  if (p.is_zero())
    throw std::invalid_argument("low_degree_roots: zero polynomial");
  require_univariate(p, var);
  int d = p.degree_in(var);
  std::vector<FieldElem> out;
  if (d == 0) return out;
  auto coeff_at = [&](int k) { return p.coeff_of(var, k).constant_value(); };
  if (d == 1) {
    out.push_back(-coeff_at(0) / coeff_at(1));
    return out;
  }
  if (d == 2) {
    for (auto& [u, w] : binary_quadratic_roots(coeff_at(2), coeff_at(1),
                                               coeff_at(0)))
      if (!w.is_zero()) out.push_back(u / w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  throw std::invalid_argument("low_degree_roots: degree above 2");
}

// Restricts a parameterized conic to the line x + s1 y + s2 z = 0.
inline MultiPoly restrict_to_signed_line(const MultiPoly& p, int s1, int s2) {
  const NumberField& F = p.field();
  MultiPoly repl(kFamilyArity, F);
  Monomial mx(kFamilyArity, 0), my(kFamilyArity, 0);
  mx[kVarX] = 1;
  my[kVarY] = 1;
  repl.add_term(mx, FieldElem(F, Rational(-s2)));
  repl.add_term(my, FieldElem(F, Rational(-s1 * s2)));
  return p.substitute(kVarZ, repl);
}

// Tangency parameters of the pencil against one signed line: roots of
// the discriminant of the restricted binary quadratic.
inline std::vector<FieldElem> pencil_tangency_roots(const MultiPoly& pencil,
                                                    int s1, int s2) {
  MultiPoly r = restrict_to_signed_line(pencil, s1, s2);
  MultiPoly A = r.coeff_of(kVarX, 2);
  MultiPoly B = r.coeff_of(kVarX, 1).coeff_of(kVarY, 1);
  MultiPoly C = r.coeff_of(kVarX, 0).coeff_of(kVarY, 2);
  MultiPoly disc =
      B * B - MultiPoly::constant(kFamilyArity, r.field(), Rational(4)) * A * C;
  return low_degree_roots(disc, kVarParam);
}

// Determinant of the symmetric matrix of a constant-coefficient conic;
// nonzero exactly when the conic is irreducible.
inline FieldElem conic_determinant(const MultiPoly& q) {
  const NumberField& F = q.field();
  auto coeff2 = [&](int i, int j) {
    Monomial m(kFamilyArity, 0);
    m[i] += 1;
    m[j] += 1;
    return q.coeff(m);
  };
  FieldElem half(F, Rational(1, 2));
  std::array<std::array<FieldElem, 3>, 3> M = {
      std::array<FieldElem, 3>{coeff2(0, 0), half * coeff2(0, 1),
                               half * coeff2(0, 2)},
      std::array<FieldElem, 3>{half * coeff2(0, 1), coeff2(1, 1),
                               half * coeff2(1, 2)},
      std::array<FieldElem, 3>{half * coeff2(0, 2), half * coeff2(1, 2),
                               coeff2(2, 2)}};
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
         M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

// Contact point of a conic tangent to a signed line.
inline ProjPoint conic_line_contact(const MultiPoly& conic, int s1, int s2) {
  MultiPoly r = restrict_to_signed_line(conic, s1, s2);
  auto sq = perfect_square_form(r, kVarX, kVarY);
  if (!sq)
    throw std::logic_error("conic_line_contact: restriction is not a square");
  const MultiPoly& root = sq->second;
  Monomial mx(kFamilyArity, 0), my(kFamilyArity, 0);
  mx[kVarX] = 1;
  my[kVarY] = 1;
  FieldElem A = root.coeff(mx), B = root.coeff(my);
  const NumberField& F = conic.field();
  FieldElem u = -B, w = A;
  FieldElem z = FieldElem(F, Rational(-s2)) * (u + FieldElem(F, Rational(s1)) * w);
  return ProjPoint(u, w, z).normalized();
}

}  // namespace detail

inline PencilTwoTorsionReport pencil_two_torsion() {
  const NumberField F = NumberField::cyclotomic_omega();
  FieldElem one(F, Rational(1)), omega(F, Rational(0), Rational(1));
  FieldElem omega2 = omega * omega;

  std::vector<ProjPoint> orbit1 = {
      ProjPoint(one, omega, omega2), ProjPoint(one, omega, -omega2),
      ProjPoint(one, -omega, -omega2), ProjPoint(one, -omega, omega2)};
  std::vector<ProjPoint> orbit2;
  for (const auto& p : orbit1) orbit2.push_back(p.conj());

  auto build_pencil = [&](const std::vector<ProjPoint>& p) {
    MultiPoly l1 = line_through(p[0], p[1]);
    MultiPoly l2 = line_through(p[2], p[3]);
    MultiPoly l3 = line_through(p[0], p[2]);
    MultiPoly l4 = line_through(p[1], p[3]);
    MultiPoly lam = MultiPoly::variable(kFamilyArity, F, kVarParam);
    return l1 * l2 + lam * (l3 * l4);
  };
  MultiPoly pencil = build_pencil(orbit1);
  MultiPoly conj_pencil = build_pencil(orbit2);

  for (const auto& p : orbit1) {
    std::vector<FieldElem> at = {p[0], p[1], p[2], FieldElem(F)};
    MultiPoly in_lambda(kFamilyArity, F);
    for (int k = 0; k <= pencil.degree_in(kVarParam); ++k) {
      Monomial m(kFamilyArity, 0);
      m[kVarParam] = k;
      in_lambda.add_term(m, pencil.coeff_of(kVarParam, k).eval(at));
    }
    if (!in_lambda.is_zero())
      throw std::logic_error("pencil_two_torsion: base orbit escapes the pencil");
  }

  PencilTwoTorsionReport rep{std::move(orbit1),
                             std::move(orbit2),
                             pencil,
                             conj_pencil,
                             {},
                             {},
                             omega2,
                             omega,
                             {},
                             {},
                             false,
                             {},
                             {},
                             {}};

  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      rep.tangencies.push_back(
          LineTangency{s1, s2, detail::pencil_tangency_roots(pencil, s1, s2)});
      rep.conj_tangencies.push_back(LineTangency{
          s1, s2, detail::pencil_tangency_roots(conj_pencil, s1, s2)});
    }

  std::vector<ProjPoint> corners;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      corners.push_back(
          ProjPoint(one, FieldElem(F, Rational(s1)), FieldElem(F, Rational(s2))));

  std::array<FieldElem, 2> params = {omega, omega2};
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      MultiPoly mr = pencil.eval_var(kVarParam, params[r]);
      MultiPoly ms = conj_pencil.eval_var(kVarParam, params[s]);
      bool all = true;
      for (const auto& q : corners) {
        std::vector<FieldElem> at = {q[0], q[1], q[2], FieldElem(F)};
        if (!mr.eval(at).is_zero() || !ms.eval(at).is_zero()) all = false;
      }
      rep.member_matrix[r][s] = all;
    }

  rep.base_points = corners;
  MultiPoly member = pencil.eval_var(kVarParam, omega2);
  MultiPoly conj_member = conj_pencil.eval_var(kVarParam, omega);
  rep.base_points_complete =
      !detail::conic_determinant(member).is_zero() &&
      !detail::conic_determinant(conj_member).is_zero();

  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      rep.contacts.push_back(detail::conic_line_contact(member, s1, s2));
      rep.conj_contacts.push_back(
          detail::conic_line_contact(conj_member, s1, s2));
    }

  rep.notes.push_back(
      "tangent member pair: pencil at lambda = w^2, conjugate pencil at "
      "lambda = w");
  return rep;
}

}  // namespace lame
