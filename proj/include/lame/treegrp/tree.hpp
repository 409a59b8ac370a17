#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lame {

// =====================================================================
// Vertex alphabet for normalizer trees and the trees themselves.
// =====================================================================

// The finite subgroups of the one-variable projective linear group of
// order prime to the residue characteristic: cyclic, dihedral, A4, S4,
// A5, each with its quotient branching indices.
class VertexLabel {
 public:
  enum class Tag { Cyclic, Dihedral, A4, S4, A5 };

  static VertexLabel cyclic(int n) {
    require(n >= 2, "cyclic label needs n >= 2");
    return VertexLabel(Tag::Cyclic, n);
  }
  static VertexLabel dihedral(int n) {
    require(n >= 2, "dihedral label needs n >= 2 (D1 disallowed)");
    return VertexLabel(Tag::Dihedral, n);
  }
  static VertexLabel a4() { return VertexLabel(Tag::A4, 0); }
  static VertexLabel s4() { return VertexLabel(Tag::S4, 0); }
  static VertexLabel a5() { return VertexLabel(Tag::A5, 0); }

  Tag tag() const { return tag_; }
  int n() const { return n_; }

  long long order() const {
    switch (tag_) {
      case Tag::Cyclic: return n_;
      case Tag::Dihedral: return 2LL * n_;
      case Tag::A4: return 12;
      case Tag::S4: return 24;
      case Tag::A5: return 60;
    }
    return 0;
  }

  // Branching indices of the quotient map to the projective line.
  std::vector<int> branching() const {
    switch (tag_) {
      case Tag::Cyclic: return {n_, n_};
      case Tag::Dihedral: return {2, 2, n_};
      case Tag::A4: return {2, 3, 3};
      case Tag::S4: return {2, 3, 4};
      case Tag::A5: return {2, 3, 5};
    }
    return {};
  }

  // Valid only in residue characteristic 0 or > 5.
  bool requires_large_characteristic() const { return tag_ == Tag::A5; }

  std::string str() const {
    switch (tag_) {
      case Tag::Cyclic: return "Z" + std::to_string(n_);
      case Tag::Dihedral: return "D" + std::to_string(n_);
      case Tag::A4: return "A4";
      case Tag::S4: return "S4";
      case Tag::A5: return "A5";
    }
    return "";
  }

  static VertexLabel parse(const std::string& s) {
    if (s == "A4") return a4();
    if (s == "S4") return s4();
    if (s == "A5") return a5();
    if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'D')) {
      int n = std::stoi(s.substr(1));
      return s[0] == 'Z' ? cyclic(n) : dihedral(n);
    }
    throw std::invalid_argument("unknown vertex label: " + s);
  }

  // Ordering key: cyclic < dihedral < A4 < S4 < A5, then by parameter.
  std::pair<int, int> key() const {
    switch (tag_) {
      case Tag::Cyclic: return {0, n_};
      case Tag::Dihedral: return {1, n_};
      case Tag::A4: return {2, 0};
      case Tag::S4: return {3, 0};
      case Tag::A5: return {4, 0};
    }
    return {9, 9};
  }
  bool operator==(const VertexLabel& o) const { return key() == o.key(); }
  bool operator<(const VertexLabel& o) const { return key() < o.key(); }

 private:
  VertexLabel(Tag t, int n) : tag_(t), n_(n) {}
  static void require(bool c, const char* msg) {
    if (!c) throw std::invalid_argument(msg);
  }
  Tag tag_;
  int n_;
};

inline std::vector<int> branching_indices(const VertexLabel& v) {
  std::vector<int> b = v.branching();
  std::sort(b.begin(), b.end());
  return b;
}

// ----------------------------------------------------------------- tree

struct TreeEdge {
  int a, b;   // vertex indices
  int label;  // cyclic edge group order
};

struct TreeEnd {
  int v;      // vertex index
  int label;  // branch index at the end
};

// A finite tree with alphabet labels on vertices, cyclic orders on
// edges, and labeled half-edges (ends). Slots at each vertex (incident
// edges plus ends) must exactly consume the vertex branching multiset.
class TreeOfGroups {
 public:
  TreeOfGroups(std::vector<VertexLabel> vertices, std::vector<TreeEdge> edges,
               std::vector<TreeEnd> ends)
      : vertices_(std::move(vertices)), edges_(std::move(edges)),
        ends_(std::move(ends)) {
    validate();
  }

  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const std::vector<TreeEnd>& ends() const { return ends_; }

  std::vector<int> end_labels() const {
    std::vector<int> out;
    for (const TreeEnd& e : ends_) out.push_back(e.label);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "tree { ";
    for (size_t i = 0; i < vertices_.size(); ++i)
      os << "v" << i << ": " << vertices_[i].str() << "; ";
    for (const TreeEdge& e : edges_)
      os << "e(v" << std::min(e.a, e.b) << ",v" << std::max(e.a, e.b)
         << "): Z" << e.label << "; ";
    std::vector<TreeEnd> se = ends_;
    std::sort(se.begin(), se.end(), [](const TreeEnd& x, const TreeEnd& y) {
      return std::tie(x.v, x.label) < std::tie(y.v, y.label);
    });
    for (size_t i = 0; i < se.size(); ++i) {
      os << "end(v" << se[i].v << "): " << se[i].label;
      os << (i + 1 < se.size() ? "; " : " ");
    }
    os << "}";
    return os.str();
  }

  static TreeOfGroups parse(const std::string& s) {
    size_t open = s.find('{');
    size_t close = s.rfind('}');
    if (s.substr(0, open).find("tree") == std::string::npos ||
        open == std::string::npos || close == std::string::npos)
      throw std::invalid_argument("tree parse: missing 'tree { ... }'");
    std::map<int, VertexLabel> verts;
    std::vector<TreeEdge> edges;
    std::vector<TreeEnd> ends;
    std::string body = s.substr(open + 1, close - open - 1);
    std::istringstream items(body);
    std::string item;
    while (std::getline(items, item, ';')) {
      auto trim = [](std::string t) {
        size_t b = t.find_first_not_of(" \t\n");
        size_t e = t.find_last_not_of(" \t\n");
        return b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
      };
      item = trim(item);
      if (item.empty()) continue;
      size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("tree parse: missing ':' in '" + item + "'");
      std::string head = trim(item.substr(0, colon));
      std::string tail = trim(item.substr(colon + 1));
      if (head.rfind("e(", 0) == 0) {
        size_t comma = head.find(',');
        int a = std::stoi(head.substr(3, comma - 3));
        int b = std::stoi(head.substr(comma + 2, head.size() - comma - 3));
        if (tail.empty() || tail[0] != 'Z')
          throw std::invalid_argument("tree parse: edge label must be Z<n>");
        edges.push_back({a, b, std::stoi(tail.substr(1))});
      } else if (head.rfind("end(", 0) == 0) {
        int v = std::stoi(head.substr(5, head.size() - 6));
        ends.push_back({v, std::stoi(tail)});
      } else if (head.rfind("v", 0) == 0) {
        verts.emplace(std::stoi(head.substr(1)), VertexLabel::parse(tail));
      } else {
        throw std::invalid_argument("tree parse: unknown item '" + item + "'");
      }
    }
    std::vector<VertexLabel> vlist;
    for (auto& [idx, lab] : verts) {
      if (idx != static_cast<int>(vlist.size()))
        throw std::invalid_argument("tree parse: vertex ids must be v0,v1,...");
      vlist.push_back(lab);
    }
    return TreeOfGroups(std::move(vlist), std::move(edges), std::move(ends));
  }

  // Lexicographically least serialization over vertex relabelings;
  // used for deduplication up to tree isomorphism.
  std::string canonical_str() const {
    std::vector<int> perm(vertices_.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::string best;
    do {
      std::vector<VertexLabel> vl;
      vl.reserve(vertices_.size());
      for (size_t i = 0; i < perm.size(); ++i)
        vl.push_back(vertices_[0]);  // placeholder, overwritten below
      for (size_t i = 0; i < perm.size(); ++i) vl[perm[i]] = vertices_[i];
      std::vector<TreeEdge> el;
      for (const TreeEdge& e : edges_) el.push_back({perm[e.a], perm[e.b], e.label});
      std::sort(el.begin(), el.end(), [](const TreeEdge& x, const TreeEdge& y) {
        return std::tie(std::min(x.a, x.b), std::max(x.a, x.b), x.label) <
               std::tie(std::min(y.a, y.b), std::max(y.a, y.b), y.label);
      });
      std::vector<TreeEnd> nl;
      for (const TreeEnd& e : ends_) nl.push_back({perm[e.v], e.label});
      TreeOfGroups cand(std::move(vl), std::move(el), std::move(nl));
      std::string s = cand.str();
      if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

 private:
  void validate() const {
    int n = static_cast<int>(vertices_.size());
    if (n == 0) throw std::invalid_argument("tree: no vertices");
    if (static_cast<int>(edges_.size()) != n - 1)
      throw std::invalid_argument("tree: edge count must be vertex count - 1");
    // connectivity
    std::vector<int> comp(n);
    for (int i = 0; i < n; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (const TreeEdge& e : edges_) {
      if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.a == e.b)
        throw std::invalid_argument("tree: bad edge endpoints");
      comp[find(e.a)] = find(e.b);
    }
    for (int i = 0; i < n; ++i)
      if (find(i) != find(0)) throw std::invalid_argument("tree: not connected");
    for (const TreeEnd& e : ends_)
      if (e.v < 0 || e.v >= n)
        throw std::invalid_argument("tree: bad end vertex");
    // slot exactness and label divisibility
    for (int v = 0; v < n; ++v) {
      std::vector<int> slots;
      for (const TreeEdge& e : edges_)
        if (e.a == v || e.b == v) {
          if (vertices_[v].order() % e.label != 0)
            throw std::invalid_argument("tree: edge label does not divide " +
                                        vertices_[v].str());
          slots.push_back(e.label);
        }
      for (const TreeEnd& e : ends_)
        if (e.v == v) {
          if (vertices_[v].order() % e.label != 0)
            throw std::invalid_argument("tree: end label does not divide " +
                                        vertices_[v].str());
          slots.push_back(e.label);
        }
      std::sort(slots.begin(), slots.end());
      if (slots != branching_indices(vertices_[v]))
        throw std::invalid_argument("tree: slots at " + vertices_[v].str() +
                                    " do not match its branching");
    }
  }

  std::vector<VertexLabel> vertices_;
  std::vector<TreeEdge> edges_;
  std::vector<TreeEnd> ends_;
};

}  // namespace lame
