#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lame/curvegeo/family.hpp"
#include "lame/exactalg/rational.hpp"
#include "lame/permgrp/group.hpp"
#include "lame/permgrp/hom.hpp"
#include "lame/treegrp/tree.hpp"

namespace lame {

// =====================================================================
// Dual graphs of degenerate fibers.
// =====================================================================

namespace detail {

inline std::string graph_trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> graph_split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

}  // namespace detail

// A finite connected graph with named vertices. Edges are unordered
// pairs stored with the smaller vertex index first; parallel edges and
// loops are kept as distinct entries in insertion order.
class DualGraph {
 public:
  DualGraph(std::vector<std::string> vertex_names,
            std::vector<std::pair<int, int>> edges)
      : names_(std::move(vertex_names)), edges_(std::move(edges)) {
    if (names_.empty())
      throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::string> seen;
    for (const std::string& n : names_) {
      if (n.empty()) throw std::invalid_argument("empty vertex name");
      for (char c : n)
        if (c == ',' || c == ';' || c == '-' || c == ' ' || c == '{' ||
            c == '}')
          throw std::invalid_argument("vertex name uses a reserved character: " +
                                      n);
      if (!seen.insert(n).second)
        throw std::invalid_argument("duplicate vertex name: " + n);
    }
    for (auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::vector<int> parent(names_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& [u, v] : edges_) parent[find(u)] = find(v);
    for (int v = 0; v < vertex_count(); ++v)
      if (find(v) != find(0))
        throw std::invalid_argument("graph is not connected");
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int vertex_index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
      throw std::invalid_argument("unknown vertex name: " + name);
    return static_cast<int>(it - names_.begin());
  }

  // First Betti number of a connected graph.
  int betti() const { return edge_count() - vertex_count() + 1; }

  bool operator==(const DualGraph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }
  bool operator!=(const DualGraph& o) const { return !(*this == o); }

  std::string str() const {
    std::string out = "graph { v: ";
    for (size_t i = 0; i < names_.size(); ++i) {
      if (i > 0) out += ",";
      out += names_[i];
    }
    out += "; e: ";
    for (size_t i = 0; i < edges_.size(); ++i) {
      if (i > 0) out += ", ";
      out += names_[edges_[i].first] + "-" + names_[edges_[i].second];
    }
    out += " }";
    return out;
  }

  static DualGraph parse(const std::string& text) {
    using detail::graph_split;
    using detail::graph_trim;
    size_t open = text.find('{');
    size_t close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos ||
        close < open || graph_trim(text.substr(0, open)) != "graph")
      throw std::invalid_argument("graph literal must look like graph { ... }");
    std::vector<std::string> sections =
        graph_split(text.substr(open + 1, close - open - 1), ';');
    if (sections.size() != 2)
      throw std::invalid_argument("graph literal needs a v: and an e: section");
    std::string vsec = graph_trim(sections[0]);
    std::string esec = graph_trim(sections[1]);
    if (vsec.rfind("v:", 0) != 0 || esec.rfind("e:", 0) != 0)
      throw std::invalid_argument("graph sections must be v: then e:");
    std::vector<std::string> names;
    for (const std::string& tok : graph_split(vsec.substr(2), ',')) {
      std::string n = graph_trim(tok);
      if (n.empty())
        throw std::invalid_argument("empty vertex name in graph literal");
      names.push_back(n);
    }
    std::vector<std::pair<int, int>> edges;
    std::string ebody = graph_trim(esec.substr(2));
    if (!ebody.empty()) {
      auto index_of = [&](const std::string& n) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end())
          throw std::invalid_argument("edge uses unknown vertex: " + n);
        return static_cast<int>(it - names.begin());
      };
      for (const std::string& tok : graph_split(ebody, ',')) {
        std::vector<std::string> ends = graph_split(graph_trim(tok), '-');
        if (ends.size() != 2)
          throw std::invalid_argument("edge must be written u-v: " + tok);
        edges.push_back({index_of(graph_trim(ends[0])),
                         index_of(graph_trim(ends[1]))});
      }
    }
    return DualGraph(std::move(names), std::move(edges));
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
};

// Edge permutation induced by a vertex permutation on a graph without
// parallel edges.
inline Perm edge_perm_from_vertices(const DualGraph& g, const Perm& vp) {
  if (vp.degree() != g.vertex_count())
    throw std::invalid_argument("vertex permutation degree mismatch");
  std::map<std::pair<int, int>, int> where;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!where.emplace(g.edges()[e], e).second)
      throw std::invalid_argument(
          "parallel edges require explicit edge images");
  std::vector<int> img(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    int iu = vp.apply(u);
    int iv = vp.apply(v);
    if (iu > iv) std::swap(iu, iv);
    auto it = where.find({iu, iv});
    if (it == where.end())
      throw std::invalid_argument(
          "vertex permutation does not preserve the edge set");
    img[e] = it->second;
  }
  return Perm(std::move(img));
}

// Double cover of a graph classified by one bit per edge: sheet s over
// the lower endpoint of an edge joins sheet s xor bit over the upper
// endpoint. Vertex v gets covers named va, vb at indices 2v, 2v + 1;
// edge e gets covers at indices 2e, 2e + 1.
inline DualGraph graph_double_cover(const DualGraph& base,
                                    const std::vector<int>& bits) {
  if (static_cast<int>(bits.size()) != base.edge_count())
    throw std::invalid_argument("double cover needs one bit per edge");
  std::vector<std::string> names;
  for (const std::string& n : base.names()) {
    names.push_back(n + "a");
    names.push_back(n + "b");
  }
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < base.edge_count(); ++e) {
    auto [u, v] = base.edges()[e];
    for (int s = 0; s < 2; ++s)
      edges.push_back({2 * u + s, 2 * v + (s ^ (bits[e] & 1))});
  }
  return DualGraph(std::move(names), std::move(edges));
}

// =====================================================================
// Group actions on graphs.
// =====================================================================

namespace detail {

inline int checked_edge_count(const DualGraph& g) {
  if (g.edge_count() < 1)
    throw std::invalid_argument("graph action requires at least one edge");
  return g.edge_count();
}

}  // namespace detail

// A group acting on a graph through compatible vertex and edge
// homomorphisms. Construction verifies that every group element sends
// the endpoints of each edge to the endpoints of its image edge, and
// records whether some element fixes an edge while swapping its
// endpoints.
class GraphAction {
 public:
  GraphAction(DualGraph graph, PermGroup group, std::vector<Perm> vertex_images,
              std::vector<Perm> edge_images)
      : graph_(std::move(graph)), group_(std::move(group)),
        vertex_hom_(group_, PermGroup::symmetric(graph_.vertex_count()),
                    std::move(vertex_images)),
        edge_hom_(group_,
                  PermGroup::symmetric(detail::checked_edge_count(graph_)),
                  std::move(edge_images)) {
    const auto& vt = vertex_hom_.table();
    const auto& et = edge_hom_.table();
    for (size_t k = 0; k < vt.size(); ++k)
      for (int e = 0; e < graph_.edge_count(); ++e) {
        auto [u, v] = graph_.edges()[e];
        auto [pu, pv] = graph_.edges()[et[k].apply(e)];
        int iu = vt[k].apply(u);
        int iv = vt[k].apply(v);
        if (iu > iv) std::swap(iu, iv);
        if (iu != pu || iv != pv)
          throw std::invalid_argument(
              "edge and vertex actions are incompatible");
        if (et[k].apply(e) == e && u != v && vt[k].apply(u) == v)
          has_inversion_ = true;
      }
  }

  const DualGraph& graph() const { return graph_; }
  const PermGroup& group() const { return group_; }
  const Hom& vertex_hom() const { return vertex_hom_; }
  const Hom& edge_hom() const { return edge_hom_; }
  bool has_inversion() const { return has_inversion_; }

  const Perm& vertex_image(const Perm& g) const {
    return vertex_hom_.image_of(g);
  }
  const Perm& edge_image(const Perm& g) const { return edge_hom_.image_of(g); }

 private:
  DualGraph graph_;
  PermGroup group_;
  Hom vertex_hom_;
  Hom edge_hom_;
  bool has_inversion_ = false;
};

// =====================================================================
// Quotient graphs of groups.
// =====================================================================

// Isomorphism label of a small group: cyclic, dihedral, A4, S4, A5, or
// a bare order marker.
inline std::string group_label(const PermGroup& g) {
  long long n = g.order();
  if (n == 1) return "Z1";
  if (n <= kDegreeCap && is_isomorphic(g, PermGroup::cyclic(static_cast<int>(n))))
    return "Z" + std::to_string(n);
  if (n % 2 == 0 && n >= 4 && n / 2 <= kDegreeCap &&
      is_isomorphic(g, PermGroup::dihedral(static_cast<int>(n / 2))))
    return "D" + std::to_string(n / 2);
  if (n == 12 && is_isomorphic(g, PermGroup::alternating(4))) return "A4";
  if (n == 24 && is_isomorphic(g, PermGroup::symmetric(4))) return "S4";
  if (n == 60 && is_isomorphic(g, PermGroup::alternating(5))) return "A5";
  return "G" + std::to_string(n);
}

// One orbit of the action with the stabilizer of its smallest point.
struct OrbitInfo {
  std::vector<int> members;
  int representative = 0;
  PermGroup stabilizer;
  std::string label;
};

struct GraphQuotient {
  DualGraph quotient;
  std::vector<OrbitInfo> vertex_orbits;
  std::vector<OrbitInfo> edge_orbits;
  Rational euler_characteristic;
  std::optional<std::string> amalgam_name;
};

namespace detail {

inline std::vector<OrbitInfo> action_orbits(const PermGroup& g,
                                            const std::vector<Perm>& table,
                                            int npoints) {
  const auto& els = g.elements();
  std::vector<int> orbit_of(npoints, -1);
  std::vector<OrbitInfo> out;
  for (int p = 0; p < npoints; ++p) {
    if (orbit_of[p] >= 0) continue;
    std::set<int> members;
    std::vector<Perm> stab;
    for (size_t k = 0; k < els.size(); ++k) {
      int q = table[k].apply(p);
      members.insert(q);
      if (q == p) stab.push_back(els[k]);
    }
    for (int m : members) orbit_of[m] = static_cast<int>(out.size());
    OrbitInfo info{std::vector<int>(members.begin(), members.end()), p,
                   g.subgroup(std::move(stab), "stabilizer"), ""};
    if (static_cast<long long>(info.members.size()) *
            info.stabilizer.order() != g.order())
      throw std::logic_error("orbit size times stabilizer order must be the group order");
    info.label = group_label(info.stabilizer);
    out.push_back(std::move(info));
  }
  return out;
}

inline std::optional<VertexLabel> parse_vertex_label(const std::string& s) {
  try {
    return VertexLabel::parse(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Quotient graph of groups of an action. Vertex and edge orbits carry
// stabilizer labels; a two-vertex one-edge quotient with a cyclic edge
// label is also reported in amalgam notation.
inline GraphQuotient graph_quotient(const GraphAction& action) {
  if (action.has_inversion())
    throw std::logic_error(
        "quotient requires an action without edge inversions; apply "
        "barycentric subdivision first");
  const DualGraph& g = action.graph();
  const PermGroup& grp = action.group();
  std::vector<OrbitInfo> vorbs =
      detail::action_orbits(grp, action.vertex_hom().table(), g.vertex_count());
  std::vector<OrbitInfo> eorbs =
      detail::action_orbits(grp, action.edge_hom().table(), g.edge_count());

  std::vector<int> vorbit_of(g.vertex_count(), -1);
  for (size_t i = 0; i < vorbs.size(); ++i)
    for (int m : vorbs[i].members) vorbit_of[m] = static_cast<int>(i);
  std::vector<std::string> qnames;
  for (const OrbitInfo& o : vorbs) qnames.push_back(g.names()[o.representative]);
  std::vector<std::pair<int, int>> qedges;
  for (const OrbitInfo& o : eorbs) {
    auto [u, v] = g.edges()[o.representative];
    qedges.push_back({vorbit_of[u], vorbit_of[v]});
  }

  Rational chi(0);
  for (const OrbitInfo& o : vorbs) chi = chi + Rational(1, o.stabilizer.order());
  for (const OrbitInfo& o : eorbs) chi = chi - Rational(1, o.stabilizer.order());

  std::optional<std::string> amalgam;
  if (vorbs.size() == 2 && eorbs.size() == 1) {
    auto a = detail::parse_vertex_label(vorbs[0].label);
    auto b = detail::parse_vertex_label(vorbs[1].label);
    const std::string& el = eorbs[0].label;
    if (a && b && el.size() >= 2 && el[0] == 'Z') {
      const VertexLabel& lo = *a < *b ? *a : *b;
      const VertexLabel& hi = *a < *b ? *b : *a;
      amalgam = lo.str() + " *_" + el + " " + hi.str();
    }
  }

  return GraphQuotient{DualGraph(std::move(qnames), std::move(qedges)),
                       std::move(vorbs), std::move(eorbs), chi,
                       std::move(amalgam)};
}

// =====================================================================
// The fiber at infinity of the quartic family.
// =====================================================================

namespace detail {

// Edge index of the branch with sign s at node j.
inline int infinity_branch_index(int j, int s) { return 2 * j + (s < 0 ? 1 : 0); }

// A monomial class sends node j to the node jprime carrying its image
// and multiplies the branch sign by this factor, computed from the two
// coordinates complementary to jprime.
inline int infinity_branch_sign_factor(const MonomialMap& m, int jprime) {
  std::array<int, 2> c{};
  int k = 0;
  for (int i = 0; i < 3; ++i)
    if (i != jprime) c[k++] = i;
  int f = m.sign[c[0]] * m.sign[c[1]];
  return m.perm[c[0]] < m.perm[c[1]] ? f : -f;
}

inline int infinity_node_image(const MonomialMap& m, int j) {
  for (int i = 0; i < 3; ++i)
    if (m.perm[i] == j) return i;
  throw std::logic_error("monomial class without a node image");
}

}  // namespace detail

// Dual graph of the fiber at infinity: a rational central component c
// with its three nodes e0, e1, e2 subdivided, so each node contributes
// two branch edges.
inline DualGraph infinity_fiber_graph() {
  std::vector<std::string> names = {"c", "e0", "e1", "e2"};
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < 3; ++j) {
    edges.push_back({0, 1 + j});
    edges.push_back({0, 1 + j});
  }
  return DualGraph(std::move(names), std::move(edges));
}

// Full monomial action on the fiber at infinity.
inline GraphAction infinity_fiber_action() {
  DualGraph g = infinity_fiber_graph();
  MonomialGroup mono = full_monomial_group();
  std::vector<Perm> vimgs;
  std::vector<Perm> eimgs;
  for (const MonomialMap& m : mono.maps) {
    std::vector<int> vimg = {0, 0, 0, 0};
    std::vector<int> eimg(6);
    for (int j = 0; j < 3; ++j) {
      int jp = detail::infinity_node_image(m, j);
      vimg[1 + j] = 1 + jp;
      int f = detail::infinity_branch_sign_factor(m, jp);
      for (int s : {1, -1})
        eimg[detail::infinity_branch_index(j, s)] =
            detail::infinity_branch_index(jp, s * f);
    }
    vimgs.push_back(Perm(std::move(vimg)));
    eimgs.push_back(Perm(std::move(eimg)));
  }
  return GraphAction(std::move(g), mono.group, std::move(vimgs),
                     std::move(eimgs));
}

// Admissible double cover of the fiber at infinity: the central
// component and each node split in two, positive branches stay on
// their sheet and negative branches cross. The result is the complete
// bipartite graph on 2 + 6 vertices.
inline DualGraph infinity_cover_graph() {
  return graph_double_cover(infinity_fiber_graph(), {0, 1, 0, 1, 0, 1});
}

// Action of the monomial classes extended by the deck swap on the
// double cover; the group is the direct product of the 24 classes with
// the deck involution.
inline GraphAction infinity_cover_action() {
  DualGraph g = infinity_cover_graph();
  MonomialGroup mono = full_monomial_group();
  PermGroup grp = PermGroup::direct_product(mono.group, PermGroup::cyclic(2));
  std::vector<Perm> vimgs;
  std::vector<Perm> eimgs;
  for (const MonomialMap& m : mono.maps) {
    std::vector<int> vimg(8);
    vimg[0] = 0;
    vimg[1] = 1;
    for (int j = 0; j < 3; ++j) {
      int jp = detail::infinity_node_image(m, j);
      int b = detail::infinity_branch_sign_factor(m, jp) < 0 ? 1 : 0;
      for (int u = 0; u < 2; ++u) vimg[2 + 2 * j + u] = 2 + 2 * jp + (u ^ b);
    }
    Perm vp(std::move(vimg));
    eimgs.push_back(edge_perm_from_vertices(g, vp));
    vimgs.push_back(std::move(vp));
  }
  std::vector<int> dimg(8);
  for (int v = 0; v < 4; ++v)
    for (int s = 0; s < 2; ++s) dimg[2 * v + s] = 2 * v + (1 - s);
  Perm deck(std::move(dimg));
  eimgs.push_back(edge_perm_from_vertices(g, deck));
  vimgs.push_back(std::move(deck));
  return GraphAction(std::move(g), std::move(grp), std::move(vimgs),
                     std::move(eimgs));
}

// =====================================================================
// The four-line fiber of the quartic family.
// =====================================================================

namespace detail {

inline int line_index(int s1, int s2) {
  return (s1 < 0 ? 2 : 0) + (s2 < 0 ? 1 : 0);
}

// Image of the line x + s1 y + s2 z under a monomial class, acting on
// coefficient vectors and renormalizing the leading coefficient.
inline int line_image(const MonomialMap& m, int k) {
  std::array<int, 3> c = {1, (k & 2) ? -1 : 1, (k & 1) ? -1 : 1};
  std::array<int, 3> cp{};
  for (int i = 0; i < 3; ++i) cp[i] = m.sign[i] * c[m.perm[i]];
  return line_index(cp[1] * cp[0], cp[2] * cp[0]);
}

inline int line_pair_rank(int i, int j) {
  if (i > j) std::swap(i, j);
  return i * (7 - i) / 2 + j - i - 1;
}

// Monodromy bits of the double cover over the subdivided line
// quadrilateral: the half of each subdivided edge leaving the lower
// line carries the indicator of the pairing {l0, l1}, {l2, l3}.
inline std::vector<int> four_lines_monodromy() {
  std::vector<int> beta(12, 0);
  int e = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      bool paired = (i == 0 && j == 1) || (i == 2 && j == 3);
      beta[e] = paired ? 1 : 0;
      beta[e + 1] = 0;
      e += 2;
    }
  return beta;
}

// Vertex transfer bits making a base symmetry lift to the double
// cover: propagated over a spanning tree and checked on every edge.
inline std::vector<int> cover_transfer(const DualGraph& base,
                                       const std::vector<int>& beta,
                                       const Perm& vp, const Perm& ep) {
  int n = base.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < base.edge_count(); ++e) {
    auto [u, w] = base.edges()[e];
    adj[u].push_back({e, w});
    adj[w].push_back({e, u});
  }
  std::vector<int> c(n, -1);
  c[0] = 0;
  std::vector<int> queue = {0};
  for (size_t k = 0; k < queue.size(); ++k) {
    int u = queue[k];
    for (auto [e, w] : adj[u])
      if (c[w] < 0) {
        c[w] = c[u] ^ beta[ep.apply(e)] ^ beta[e];
        queue.push_back(w);
      }
  }
  for (int e = 0; e < base.edge_count(); ++e) {
    auto [u, w] = base.edges()[e];
    if (c[u] < 0 || c[w] < 0 ||
        (c[u] ^ c[w]) != (beta[ep.apply(e)] ^ beta[e]))
      throw std::logic_error("monodromy class is not preserved by the action");
  }
  return c;
}

inline Perm cover_lift(const Perm& vp, const std::vector<int>& c) {
  int n = vp.degree();
  std::vector<int> img(2 * n);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 2; ++s) img[2 * v + s] = 2 * vp.apply(v) + (s ^ c[v]);
  return Perm(std::move(img));
}

}  // namespace detail

// Dual graph of the four-line fiber: the subdivided complete graph on
// the lines x + s1 y + s2 z, with one subdivision vertex qij on each of
// the six pairwise intersection points.
inline DualGraph four_lines_graph() {
  std::vector<std::string> names = {"lpp", "lpm", "lmp", "lmm", "q01",
                                    "q02", "q03", "q12", "q13", "q23"};
  std::vector<std::pair<int, int>> edges;
  int q = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      edges.push_back({i, q});
      edges.push_back({j, q});
      ++q;
    }
  return DualGraph(std::move(names), std::move(edges));
}

// Full monomial action on the four-line fiber.
inline GraphAction four_lines_action() {
  DualGraph g = four_lines_graph();
  MonomialGroup mono = full_monomial_group();
  std::vector<Perm> vimgs;
  std::vector<Perm> eimgs;
  for (const MonomialMap& m : mono.maps) {
    std::vector<int> vimg(10);
    std::array<int, 4> li{};
    for (int k = 0; k < 4; ++k) {
      li[k] = detail::line_image(m, k);
      vimg[k] = li[k];
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        vimg[4 + detail::line_pair_rank(i, j)] =
            4 + detail::line_pair_rank(li[i], li[j]);
    Perm vp(std::move(vimg));
    eimgs.push_back(edge_perm_from_vertices(g, vp));
    vimgs.push_back(std::move(vp));
  }
  return GraphAction(std::move(g), mono.group, std::move(vimgs),
                     std::move(eimgs));
}

// Admissible double cover of the four-line fiber, with monodromy given
// by the pairing bits; every triangle of the quadrilateral lifts to a
// hexagon.
inline DualGraph four_lines_cover_graph() {
  return graph_double_cover(four_lines_graph(), detail::four_lines_monodromy());
}

// Action on the double cover of the four-line fiber: each monomial
// class lifts through its transfer bits, and the deck involution is
// added as an extra generator. The closure has order 48.
inline GraphAction four_lines_cover_action() {
  DualGraph base = four_lines_graph();
  std::vector<int> beta = detail::four_lines_monodromy();
  DualGraph cover = four_lines_cover_graph();
  GraphAction baseact = four_lines_action();
  std::vector<Perm> gens;
  const auto& vgens = baseact.vertex_hom().gen_images();
  const auto& egens = baseact.edge_hom().gen_images();
  for (size_t i = 0; i < vgens.size(); ++i) {
    std::vector<int> c = detail::cover_transfer(base, beta, vgens[i], egens[i]);
    gens.push_back(detail::cover_lift(vgens[i], c));
  }
  std::vector<int> dimg(cover.vertex_count());
  for (int v = 0; v < base.vertex_count(); ++v)
    for (int s = 0; s < 2; ++s) dimg[2 * v + s] = 2 * v + (1 - s);
  gens.push_back(Perm(std::move(dimg)));
  PermGroup grp(cover.vertex_count(), gens, "four line cover symmetries");
  if (grp.order() != 48)
    throw std::logic_error("four line cover closure must have order 48");
  std::vector<Perm> eimgs;
  for (const Perm& vp : grp.gens())
    eimgs.push_back(edge_perm_from_vertices(cover, vp));
  return GraphAction(std::move(cover), grp, grp.gens(), std::move(eimgs));
}

}  // namespace lame
