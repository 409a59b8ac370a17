#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "lame/exactalg/rational.hpp"
#include "lame/permgrp/group.hpp"
#include "lame/treegrp/tree.hpp"

namespace lame {

// =====================================================================
// Concrete amalgam records U *_Z V with pinned amalgamating elements.
// =====================================================================

struct AmalgamSpec {
  PermGroup u;
  PermGroup v;
  Perm z_u;
  Perm z_v;
  std::string name;

  long long edge_order() const { return z_u.order(); }
};

// True iff no cyclic subgroup of g strictly contains <z>: z must not be
// a proper power of a higher-order element.
inline bool is_maximal_cyclic(const PermGroup& g, const Perm& z) {
  int zo = z.order();
  for (const Perm& e : g.elements()) {
    if (e.order() <= zo) continue;
    Perm p = e;
    for (int k = 1; k < e.order(); ++k) {
      if (p == z) return false;
      p = p * e;
    }
  }
  return true;
}

namespace detail {

// Canonical order-m element of the vertex group realizing an edge slot.
inline Perm pinned_element(const VertexLabel& l, const PermGroup& g, int m) {
  switch (l.tag()) {
    case VertexLabel::Tag::Dihedral:
      if (l.n() == 2) return g.gens()[0];  // any involution; all automorphic
      if (m == l.n()) return g.gens()[0];  // the rotation
      if (m == 2) return g.gens()[1];      // a reflection
      break;
    case VertexLabel::Tag::S4:
      if (m == 4) return Perm::parse_cycles("(1,2,3,4)", 4);
      if (m == 3) return Perm::parse_cycles("(1,2,3)", 4);
      if (m == 2) return Perm::parse_cycles("(1,2)", 4);
      break;
    case VertexLabel::Tag::A4:
      if (m == 3) return Perm::parse_cycles("(1,2,3)", 4);
      if (m == 2) return Perm::parse_cycles("(1,2)(3,4)", 4);
      break;
    case VertexLabel::Tag::A5:
      if (m == 5) return Perm::parse_cycles("(1,2,3,4,5)", 5);
      if (m == 3) return Perm::parse_cycles("(1,2,3)", 5);
      if (m == 2) return Perm::parse_cycles("(1,2)(3,4)", 5);
      break;
    default:
      break;
  }
  throw std::invalid_argument("realize_amalgam: no canonical order-" +
                              std::to_string(m) + " element in " + l.str());
}

inline PermGroup realize_label(const VertexLabel& l) {
  switch (l.tag()) {
    case VertexLabel::Tag::Cyclic: return PermGroup::cyclic(l.n());
    case VertexLabel::Tag::Dihedral: return PermGroup::dihedral(l.n());
    case VertexLabel::Tag::A4: return PermGroup::alternating(4);
    case VertexLabel::Tag::S4: return PermGroup::symmetric(4);
    case VertexLabel::Tag::A5: return PermGroup::alternating(5);
  }
  throw std::invalid_argument("realize_amalgam: unknown label");
}

}  // namespace detail

// Concrete permutation groups for a two-vertex tree, with canonical
// amalgamating elements whose cyclic subgroups are verified maximal.
inline AmalgamSpec realize_amalgam(const TreeOfGroups& t) {
  if (t.vertices().size() != 2 || t.edges().size() != 1)
    throw std::invalid_argument("realize_amalgam: need exactly two vertices");
  const VertexLabel& lu = t.vertices()[0];
  const VertexLabel& lv = t.vertices()[1];
  int m = t.edges()[0].label;
  PermGroup u = detail::realize_label(lu);
  PermGroup v = detail::realize_label(lv);
  Perm zu = detail::pinned_element(lu, u, m);
  Perm zv = detail::pinned_element(lv, v, m);
  if (zu.order() != m || zv.order() != m)
    throw std::logic_error("realize_amalgam: pinned element order mismatch");
  if (!is_maximal_cyclic(u, zu) || !is_maximal_cyclic(v, zv))
    throw std::invalid_argument(
        "realize_amalgam: edge order not realizable as a maximal cyclic "
        "subgroup");
  std::string name = lu.str() + " *_Z" + std::to_string(m) + " " + lv.str();
  return AmalgamSpec{std::move(u), std::move(v), std::move(zu), std::move(zv),
                     std::move(name)};
}

// ------------------------------------------------- Euler characteristic

// Sum of reciprocal vertex group orders minus reciprocal edge group
// orders; ends are excluded.
inline Rational euler_characteristic(const TreeOfGroups& t) {
  Rational chi;
  for (const VertexLabel& v : t.vertices())
    chi += Rational(1, static_cast<long long>(v.order()));
  for (const TreeEdge& e : t.edges()) chi -= Rational(1, e.label);
  return chi;
}

inline Rational euler_characteristic(const AmalgamSpec& a) {
  return Rational(1, a.u.order()) + Rational(1, a.v.order()) -
         Rational(1, a.edge_order());
}

// Genus of the free kernel of a surjection onto a group of the given
// order: the Euler characteristic multiplies by the index, and a free
// group of rank g has characteristic 1 - g.
inline int expected_genus(const AmalgamSpec& a, long long group_order) {
  Rational g = Rational(1) - Rational(group_order) * euler_characteristic(a);
  if (!g.is_integer())
    throw std::invalid_argument("expected_genus: non-integral result");
  long long gi = static_cast<long long>(g.numerator());
  if (gi < 2)
    throw std::invalid_argument("expected_genus: genus below 2");
  return static_cast<int>(gi);
}

}  // namespace lame
