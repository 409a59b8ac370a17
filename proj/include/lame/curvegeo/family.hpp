#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lame/exactalg/multipoly.hpp"
#include "lame/exactalg/resultant.hpp"
#include "lame/permgrp/group.hpp"

namespace lame {

// Variable layout shared by every plane-curve computation: three projective
// coordinates and one pencil parameter.
inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;
inline constexpr int kVarParam = 3;
inline constexpr int kFamilyArity = 4;

inline const std::vector<std::string>& family_var_names() {
  static const std::vector<std::string> names = {"x", "y", "z", "a"};
  return names;
}

// =====================================================================
// ProjPoint: a point of the projective plane over a number field.
// =====================================================================
class ProjPoint {
 public:
  ProjPoint(const FieldElem& x, const FieldElem& y, const FieldElem& z)
      : coords_{x, y, z} {
    if (x.field() != y.field() || x.field() != z.field())
      throw std::invalid_argument("ProjPoint: mixed coordinate fields");
    if (x.is_zero() && y.is_zero() && z.is_zero())
      throw std::invalid_argument("ProjPoint: all coordinates zero");
  }

  const NumberField& field() const { return coords_[0].field(); }
  const FieldElem& operator[](int i) const { return coords_.at(i); }

  // Projective equality: coordinates agree up to one nonzero scalar.
  bool same_point(const ProjPoint& o) const {
    if (field() != o.field()) return false;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (coords_[i] * o.coords_[j] != coords_[j] * o.coords_[i])
          return false;
    return true;
  }

  // Scales so that the first nonzero coordinate is 1.
  ProjPoint normalized() const {
    for (int i = 0; i < 3; ++i)
      if (!coords_[i].is_zero()) {
        FieldElem inv = coords_[i].inverse();
        return ProjPoint(coords_[0] * inv, coords_[1] * inv, coords_[2] * inv);
      }
    throw std::logic_error("ProjPoint: no nonzero coordinate");
  }

  // Coordinatewise Galois conjugate (identity over Q).
  ProjPoint conj() const {
    return ProjPoint(coords_[0].conj(), coords_[1].conj(), coords_[2].conj());
  }

  // Total order on normalized coordinates, for canonical sorting.
  bool operator<(const ProjPoint& o) const {
    ProjPoint a = normalized(), b = o.normalized();
    for (int i = 0; i < 3; ++i) {
      if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
    }
    return false;
  }

  std::string str() const {
    return "(" + coords_[0].str() + " : " + coords_[1].str() + " : " +
           coords_[2].str() + ")";
  }

 private:
  std::array<FieldElem, 3> coords_;
};

// =====================================================================
// MonomialMap: a signed coordinate permutation of the projective plane,
// taken modulo the global sign. The 24 classes form a group.
// =====================================================================
struct MonomialMap {
  std::array<int, 3> perm = {0, 1, 2};
  std::array<int, 3> sign = {1, 1, 1};

  // Canonical class representative: first sign positive.
  MonomialMap normalized() const {
    MonomialMap m = *this;
    if (m.sign[0] < 0)
      for (int& s : m.sign) s = -s;
    return m;
  }

  bool operator==(const MonomialMap& o) const {
    MonomialMap a = normalized(), b = o.normalized();
    return a.perm == b.perm && a.sign == b.sign;
  }
  bool operator!=(const MonomialMap& o) const { return !(*this == o); }
  bool operator<(const MonomialMap& o) const {
    MonomialMap a = normalized(), b = o.normalized();
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.sign < b.sign;
  }

  static MonomialMap identity() { return MonomialMap{}; }

  // Matrix product: apply `inner` first, then `outer`, as point maps.
  static MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
    MonomialMap r;
    for (int i = 0; i < 3; ++i) {
      r.perm[i] = inner.perm[outer.perm[i]];
      r.sign[i] = outer.sign[i] * inner.sign[outer.perm[i]];
    }
    return r.normalized();
  }

  MonomialMap inverse() const {
    MonomialMap r;
    for (int i = 0; i < 3; ++i) {
      r.perm[perm[i]] = i;
      r.sign[perm[i]] = sign[i];
    }
    return r.normalized();
  }

  // Point action: q_i = sign_i * p_{perm_i}.
  ProjPoint apply(const ProjPoint& p) const {
    const NumberField& F = p.field();
    std::array<FieldElem, 3> q = {FieldElem(F), FieldElem(F), FieldElem(F)};
    for (int i = 0; i < 3; ++i) {
      q[i] = p[perm[i]];
      if (sign[i] < 0) q[i] = -q[i];
    }
    return ProjPoint(q[0], q[1], q[2]);
  }

  // Substitution action on polynomials: x_i -> sign_i * x_{perm_i}, so
  // that apply(f, m)(p) = f(m.apply(p)). The parameter variable is fixed.
  MultiPoly apply(const MultiPoly& f) const {
    if (f.arity() != kFamilyArity)
      throw std::invalid_argument("MonomialMap: expected the family arity");
    MultiPoly r(f.arity(), f.field());
    for (const auto& [m, c] : f.terms()) {
      Monomial d(f.arity(), 0);
      d[kVarParam] = m[kVarParam];
      int s = 1;
      for (int i = 0; i < 3; ++i) {
        d[perm[i]] += m[i];
        if (sign[i] < 0 && m[i] % 2 != 0) s = -s;
      }
      r.add_term(d, s < 0 ? -c : c);
    }
    return r;
  }

  std::string str() const {
    static const char* names[3] = {"x", "y", "z"};
    std::string out;
    for (int i = 0; i < 3; ++i) {
      if (!out.empty()) out += ", ";
      out += names[i];
      out += " -> ";
      if (sign[i] < 0) out += "-";
      out += names[perm[i]];
    }
    return out;
  }

  // All 24 classes in canonical order.
  static const std::vector<MonomialMap>& all_classes() {
    static const std::vector<MonomialMap> classes = [] {
      std::vector<MonomialMap> out;
      std::array<int, 3> p = {0, 1, 2};
      do {
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            out.push_back(MonomialMap{p, {1, s1, s2}});
      } while (std::next_permutation(p.begin(), p.end()));
      std::sort(out.begin(), out.end());
      return out;
    }();
    return classes;
  }

  static int class_index(const MonomialMap& m) {
    const auto& classes = all_classes();
    MonomialMap n = m.normalized();
    auto it = std::lower_bound(classes.begin(), classes.end(), n);
    if (it == classes.end() || *it != n)
      throw std::logic_error("MonomialMap: class lookup failed");
    return static_cast<int>(it - classes.begin());
  }
};

// =====================================================================
// CurveFamily: a pencil of plane curves F_0 + a * F_1, homogeneous in
// the projective coordinates.
// =====================================================================
struct CurveFamily {
  std::string name;
  MultiPoly poly;
  int degree = 0;
  std::string metadata;
};

inline CurveFamily make_family(std::string name, MultiPoly poly,
                               std::string metadata = "") {
  if (poly.arity() != kFamilyArity)
    throw std::invalid_argument("make_family: expected arity 4");
  if (poly.is_zero()) throw std::invalid_argument("make_family: zero polynomial");
  int degree = 0;
  if (!poly.is_homogeneous_in({kVarX, kVarY, kVarZ}, &degree))
    throw std::invalid_argument(
        "make_family: not homogeneous in the projective coordinates");
  if (poly.degree_in(kVarParam) > 1)
    throw std::invalid_argument("make_family: parameter degree above 1");
  return CurveFamily{std::move(name), std::move(poly), degree,
                     std::move(metadata)};
}

namespace detail {

inline MultiPoly fam_var(const NumberField& f, int var, int power = 1) {
  return MultiPoly::variable(kFamilyArity, f, var, power);
}

inline MultiPoly fam_const(const NumberField& f, const Rational& q) {
  return MultiPoly::constant(kFamilyArity, f, q);
}

}  // namespace detail

// x^4 + y^4 + z^4 + a (x^2 y^2 + y^2 z^2 + z^2 x^2).
inline CurveFamily quartic_family(
    const NumberField& f = NumberField::cyclotomic_omega()) {
  using detail::fam_var;
  MultiPoly x2 = fam_var(f, kVarX, 2), y2 = fam_var(f, kVarY, 2),
            z2 = fam_var(f, kVarZ, 2);
  MultiPoly p = fam_var(f, kVarX, 4) + fam_var(f, kVarY, 4) +
                fam_var(f, kVarZ, 4) +
                fam_var(f, kVarParam) * (x2 * y2 + y2 * z2 + z2 * x2);
  return make_family("quartic pencil", std::move(p));
}

// T + a S with T = x^6+y^6+z^6 + (x^2+y^2+z^2)(x^4+y^4+z^4) - 12 x^2y^2z^2
// and S = (y^2-z^2)(z^2-x^2)(x^2-y^2).
inline CurveFamily sextic_family(const NumberField& f = NumberField::rationals()) {
  using detail::fam_var;
  MultiPoly x2 = fam_var(f, kVarX, 2), y2 = fam_var(f, kVarY, 2),
            z2 = fam_var(f, kVarZ, 2);
  MultiPoly t = fam_var(f, kVarX, 6) + fam_var(f, kVarY, 6) +
                fam_var(f, kVarZ, 6) +
                (x2 + y2 + z2) * (fam_var(f, kVarX, 4) + fam_var(f, kVarY, 4) +
                                  fam_var(f, kVarZ, 4)) -
                detail::fam_const(f, Rational(12)) * x2 * y2 * z2;
  MultiPoly s = (y2 - z2) * (z2 - x2) * (x2 - y2);
  return make_family(
      "sextic pencil", t + fam_var(f, kVarParam) * s,
      "only the order-12 monomial symmetry is machine-checked here; the larger "
      "icosahedral symmetry of the smooth fibers is carried as metadata");
}

// x^3 + y^3 + z^3, parameter-free.
inline CurveFamily fermat_cubic(const NumberField& f = NumberField::rationals()) {
  using detail::fam_var;
  return make_family("fermat cubic", fam_var(f, kVarX, 3) + fam_var(f, kVarY, 3) +
                                         fam_var(f, kVarZ, 3));
}

// Rebuilds a polynomial with rational coefficients over another field.
inline MultiPoly with_field(const MultiPoly& f, const NumberField& target) {
  MultiPoly r(f.arity(), target);
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_rational_value())
      throw std::invalid_argument("with_field: non-rational coefficient");
    r.add_term(m, FieldElem(target, c.a()));
  }
  return r;
}

// =====================================================================
// Monomial stabilizer of a family.
// =====================================================================

// The stabilizing classes together with their left-multiplication
// permutation representation on all 24 classes. Generator i of `group`
// is the action of maps[i].
struct MonomialGroup {
  std::vector<MonomialMap> maps;
  PermGroup group;
};

namespace detail {

inline Perm left_multiplication_perm(const MonomialMap& m) {
  const auto& classes = MonomialMap::all_classes();
  std::vector<int> img(classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    img[i] = MonomialMap::class_index(MonomialMap::compose(m, classes[i]));
  return Perm(std::move(img));
}

inline MonomialGroup group_from_maps(std::vector<MonomialMap> maps,
                                     const std::string& name) {
  std::vector<Perm> gens;
  gens.reserve(maps.size());
  for (const MonomialMap& m : maps) gens.push_back(left_multiplication_perm(m));
  PermGroup g(static_cast<int>(MonomialMap::all_classes().size()),
              std::move(gens), name);
  return MonomialGroup{std::move(maps), std::move(g)};
}

}  // namespace detail

// Subgroup of the 24 classes fixing the polynomial up to a scalar.
inline MonomialGroup monomial_stabilizer(const MultiPoly& f, const std::string& name) {
  if (f.is_zero())
    throw std::invalid_argument("monomial_stabilizer: zero polynomial");
  std::vector<MonomialMap> maps;
  for (const MonomialMap& m : MonomialMap::all_classes()) {
    MultiPoly image = m.apply(f);
    auto [lead_mono, lead_coeff] = f.leading_term();
    FieldElem image_coeff = image.coeff(lead_mono);
    if (image_coeff.is_zero()) continue;
    FieldElem scalar = image_coeff / lead_coeff;
    if (image == f.scale(scalar)) maps.push_back(m);
  }
  return detail::group_from_maps(std::move(maps), name);
}

inline MonomialGroup monomial_stabilizer(const CurveFamily& fam) {
  return monomial_stabilizer(fam.poly, fam.name + " stabilizer");
}

// The full 24-class group.
inline MonomialGroup full_monomial_group() {
  return detail::group_from_maps(MonomialMap::all_classes(), "monomial classes");
}

// Classes inducing an even permutation of the four points (1:+-1:+-1).
inline MonomialGroup even_monomial_group() {
  auto diag_index = [](int s1, int s2) { return (s1 < 0 ? 2 : 0) + (s2 < 0 ? 1 : 0); };
  std::vector<MonomialMap> out;
  for (const MonomialMap& m : MonomialMap::all_classes()) {
    std::array<int, 4> img{};
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        std::array<int, 3> p = {1, s1, s2};
        std::array<int, 3> q{};
        for (int i = 0; i < 3; ++i) q[i] = m.sign[i] * p[m.perm[i]];
        img[diag_index(s1, s2)] = diag_index(q[1] * q[0], q[2] * q[0]);
      }
    int parity = 0;
    std::array<bool, 4> seen{};
    for (int i = 0; i < 4; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img[j]) {
        seen[j] = true;
        ++len;
      }
      parity ^= (len + 1) % 2;
    }
    if (parity == 0) out.push_back(m);
  }
  return detail::group_from_maps(std::move(out), "even monomial classes");
}

}  // namespace lame
