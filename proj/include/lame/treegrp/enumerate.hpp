#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "lame/treegrp/tree.hpp"

namespace lame {

// =====================================================================
// Enumeration of admissible normalizer trees with prescribed ends.
// =====================================================================

namespace detail {

inline std::vector<VertexLabel> label_alphabet(int n_cap) {
  std::vector<VertexLabel> out;
  for (int n = 2; n <= n_cap; ++n) out.push_back(VertexLabel::cyclic(n));
  for (int n = 2; n <= n_cap; ++n) out.push_back(VertexLabel::dihedral(n));
  out.push_back(VertexLabel::a4());
  out.push_back(VertexLabel::s4());
  out.push_back(VertexLabel::a5());
  return out;
}

// Multiset difference; nullopt when sub is not contained in sup.
inline std::optional<std::vector<int>> multiset_minus(std::vector<int> sup,
                                                      const std::vector<int>& sub) {
  for (int x : sub) {
    auto it = std::find(sup.begin(), sup.end(), x);
    if (it == sup.end()) return std::nullopt;
    sup.erase(it);
  }
  return sup;
}

// A cyclic vertex whose full-order edge groups consume both slots is an
// inner chain vertex: the amalgam Z_n *_{Z_n} W collapses, so the
// vertex is contracted away. A cyclic vertex with one edge and one end
// would make the edge group the entire vertex group, which is excluded
// (the edge group must be maximal cyclic in a strictly larger vertex
// group); such trees are dropped.
inline std::optional<TreeOfGroups> contract(const TreeOfGroups& t) {
  std::vector<int> keep;
  for (size_t v = 0; v < t.vertices().size(); ++v) {
    if (t.vertices()[v].tag() != VertexLabel::Tag::Cyclic) {
      keep.push_back(static_cast<int>(v));
      continue;
    }
    int edge_count = 0;
    for (const TreeEdge& e : t.edges())
      if (e.a == static_cast<int>(v) || e.b == static_cast<int>(v)) ++edge_count;
    int end_count = 0;
    for (const TreeEnd& e : t.ends())
      if (e.v == static_cast<int>(v)) ++end_count;
    if (edge_count == 0) {
      keep.push_back(static_cast<int>(v));  // isolated cyclic vertex: fine
    } else if (edge_count == 2 && end_count == 0) {
      // contracted below
    } else {
      return std::nullopt;  // cyclic vertex as a proper edge endpoint
    }
  }
  if (keep.size() == t.vertices().size()) return t;

  // Rebuild: splice the two edges at each contracted vertex into one.
  std::vector<TreeEdge> edges = t.edges();
  for (size_t v = 0; v < t.vertices().size(); ++v) {
    if (std::find(keep.begin(), keep.end(), static_cast<int>(v)) != keep.end())
      continue;
    std::vector<size_t> inc;
    for (size_t i = 0; i < edges.size(); ++i)
      if (edges[i].a == static_cast<int>(v) || edges[i].b == static_cast<int>(v))
        inc.push_back(i);
    if (inc.size() != 2) return std::nullopt;
    const TreeEdge& e1 = edges[inc[0]];
    const TreeEdge& e2 = edges[inc[1]];
    if (e1.label != e2.label) return std::nullopt;
    int u = e1.a == static_cast<int>(v) ? e1.b : e1.a;
    int w = e2.a == static_cast<int>(v) ? e2.b : e2.a;
    TreeEdge merged{u, w, e1.label};
    edges.erase(edges.begin() + inc[1]);
    edges.erase(edges.begin() + inc[0]);
    edges.push_back(merged);
  }
  std::vector<int> remap(t.vertices().size(), -1);
  std::vector<VertexLabel> vl;
  for (int v : keep) {
    remap[v] = static_cast<int>(vl.size());
    vl.push_back(t.vertices()[v]);
  }
  std::vector<TreeEdge> el;
  for (const TreeEdge& e : edges) el.push_back({remap[e.a], remap[e.b], e.label});
  std::vector<TreeEnd> nl;
  for (const TreeEnd& e : t.ends()) nl.push_back({remap[e.v], e.label});
  return TreeOfGroups(std::move(vl), std::move(el), std::move(nl));
}

inline std::optional<TreeOfGroups> try_build(std::vector<VertexLabel> vl,
                                             std::vector<TreeEdge> el,
                                             std::vector<TreeEnd> nl) {
  try {
    return TreeOfGroups(std::move(vl), std::move(el), std::move(nl));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace detail

// All trees over the alphabet, up to relabeling, whose slots exactly
// consume the branching multisets, whose ends carry `end_labels`, and
// whose cyclic vertices survive the contraction rule. shape_cap bounds
// the raw vertex count before contraction (supported range 1..3; the
// classification argument needs 2, and 3 verifies that longer chains
// contract to the same set). n_cap bounds cyclic/dihedral parameters.
inline std::vector<TreeOfGroups> enumerate_normalizer_trees(
    std::vector<int> end_labels, int shape_cap = 2, int n_cap = 30) {
  if (shape_cap < 1)
    throw std::invalid_argument("enumerate_normalizer_trees: shape_cap < 1");
  if (shape_cap > 3)
    throw std::invalid_argument(
        "enumerate_normalizer_trees: shape_cap > 3 not supported (chains "
        "contract; see contraction rule)");
  if (n_cap < 2)
    throw std::invalid_argument("enumerate_normalizer_trees: n_cap < 2");
  for (int l : end_labels)
    if (l < 2)
      throw std::invalid_argument("enumerate_normalizer_trees: end label < 2");
  std::sort(end_labels.begin(), end_labels.end());

  std::vector<VertexLabel> alpha = detail::label_alphabet(n_cap);
  std::set<std::string> seen;
  std::vector<TreeOfGroups> out;
  auto emit = [&](const TreeOfGroups& raw) {
    auto t = detail::contract(raw);
    if (!t) return;
    if (t->end_labels() != end_labels) return;
    std::string key = t->canonical_str();
    if (seen.insert(key).second) out.push_back(*t);
  };

  // one vertex
  for (const VertexLabel& l : alpha) {
    if (branching_indices(l) != end_labels) continue;
    std::vector<TreeEnd> ends;
    for (int b : l.branching()) ends.push_back({0, b});
    if (auto t = detail::try_build({l}, {}, std::move(ends))) emit(*t);
  }

  // two vertices joined by one edge
  if (shape_cap >= 2) {
    for (size_t i = 0; i < alpha.size(); ++i)
      for (size_t j = i; j < alpha.size(); ++j) {
        const VertexLabel& l0 = alpha[i];
        const VertexLabel& l1 = alpha[j];
        std::set<int> shared;
        for (int m : l0.branching()) shared.insert(m);
        for (int m : shared) {
          auto r0 = detail::multiset_minus(branching_indices(l0), {m});
          auto r1 = detail::multiset_minus(branching_indices(l1), {m});
          if (!r0 || !r1) continue;
          std::vector<int> ends_all = *r0;
          ends_all.insert(ends_all.end(), r1->begin(), r1->end());
          std::sort(ends_all.begin(), ends_all.end());
          if (ends_all != end_labels) continue;
          std::vector<TreeEnd> ends;
          for (int b : *r0) ends.push_back({0, b});
          for (int b : *r1) ends.push_back({1, b});
          if (auto t = detail::try_build({l0, l1}, {{0, 1, m}}, std::move(ends)))
            emit(*t);
        }
      }
  }

  // three-vertex paths (the middle vertex carries two edges)
  if (shape_cap >= 3) {
    for (const VertexLabel& mid : alpha)
      for (size_t i = 0; i < alpha.size(); ++i)
        for (size_t j = i; j < alpha.size(); ++j) {
          const VertexLabel& l0 = alpha[i];
          const VertexLabel& l2 = alpha[j];
          const std::vector<int> b0 = l0.branching();
          const std::vector<int> b2 = l2.branching();
          for (int m01 : std::set<int>(b0.begin(), b0.end()))
            for (int m12 : std::set<int>(b2.begin(), b2.end())) {
              auto rm = detail::multiset_minus(branching_indices(mid),
                                               {m01, m12});
              auto r0 = detail::multiset_minus(branching_indices(l0), {m01});
              auto r2 = detail::multiset_minus(branching_indices(l2), {m12});
              if (!rm || !r0 || !r2) continue;
              std::vector<int> ends_all = *r0;
              ends_all.insert(ends_all.end(), rm->begin(), rm->end());
              ends_all.insert(ends_all.end(), r2->begin(), r2->end());
              std::sort(ends_all.begin(), ends_all.end());
              if (ends_all != end_labels) continue;
              std::vector<TreeEnd> ends;
              for (int b : *r0) ends.push_back({0, b});
              for (int b : *rm) ends.push_back({1, b});
              for (int b : *r2) ends.push_back({2, b});
              if (auto t = detail::try_build({l0, mid, l2},
                                             {{0, 1, m01}, {1, 2, m12}},
                                             std::move(ends)))
                emit(*t);
            }
        }
  }

  std::sort(out.begin(), out.end(),
            [](const TreeOfGroups& a, const TreeOfGroups& b) {
              return a.canonical_str() < b.canonical_str();
            });
  return out;
}

}  // namespace lame
