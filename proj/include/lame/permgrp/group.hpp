#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lame/permgrp/perm.hpp"

namespace lame {

inline constexpr int kDegreeCap = 64;
inline constexpr int kDefaultOrderCap = 10000;

// =====================================================================
// Finite permutation groups with lazy breadth-first closure.
// =====================================================================

class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> gens, std::string name = "",
            int order_cap = kDefaultOrderCap)
      : degree_(degree), gens_(std::move(gens)), name_(std::move(name)),
        order_cap_(order_cap) {
    if (degree < 1 || degree > kDegreeCap)
      throw std::invalid_argument("PermGroup: degree outside 1.." +
                                  std::to_string(kDegreeCap));
    for (const Perm& g : gens_)
      if (g.degree() != degree_)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
  }

  // ------------------------------------------------------------ factories

  static PermGroup cyclic(int n) {
    check_range(n, 1);
    std::vector<Perm> gens;
    if (n > 1) gens.push_back(rotation(n));
    return PermGroup(n, std::move(gens), "Z" + std::to_string(n));
  }

  // Dihedral group of order 2n. For n >= 3 the natural action on n
  // points; D2 is realized on 4 points as <(1,2),(3,4)>.
  static PermGroup dihedral(int n) {
    if (n == 2) {
      std::vector<Perm> gens = {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})};
      return PermGroup(4, std::move(gens), "D2");
    }
    check_range(n, 3);
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    std::vector<Perm> gens = {rotation(n), Perm(std::move(refl))};
    return PermGroup(n, std::move(gens), "D" + std::to_string(n));
  }

  static PermGroup symmetric(int n) {
    check_range(n, 1);
    std::vector<Perm> gens;
    if (n >= 2) {
      std::vector<int> t(n);
      for (int i = 0; i < n; ++i) t[i] = i;
      t[0] = 1;
      t[1] = 0;
      gens.push_back(Perm(std::move(t)));
      if (n >= 3) gens.push_back(rotation(n));
    }
    return PermGroup(n, std::move(gens), "S" + std::to_string(n));
  }

  static PermGroup alternating(int n) {
    check_range(n, 1);
    std::vector<Perm> gens;
    for (int k = 2; k < n; ++k) {
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = i;
      img[0] = 1;
      img[1] = k;
      img[k] = 0;
      gens.push_back(Perm(std::move(img)));
    }
    return PermGroup(n, std::move(gens), "A" + std::to_string(n));
  }

  static PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    int d = a.degree() + b.degree();
    if (d > kDegreeCap)
      throw std::invalid_argument("direct_product: degree cap exceeded");
    std::vector<Perm> gens;
    for (const Perm& g : a.gens()) {
      std::vector<int> img(d);
      for (int i = 0; i < a.degree(); ++i) img[i] = g.apply(i);
      for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + i;
      gens.push_back(Perm(std::move(img)));
    }
    for (const Perm& g : b.gens()) {
      std::vector<int> img(d);
      for (int i = 0; i < a.degree(); ++i) img[i] = i;
      for (int i = 0; i < b.degree(); ++i) img[a.degree() + i] = a.degree() + g.apply(i);
      gens.push_back(Perm(std::move(img)));
    }
    std::string nm = a.name().empty() || b.name().empty()
                         ? ""
                         : a.name() + "x" + b.name();
    return PermGroup(d, std::move(gens), std::move(nm));
  }

  // ------------------------------------------------------------- accessors

  int degree() const { return degree_; }
  const std::vector<Perm>& gens() const { return gens_; }
  const std::string& name() const { return name_; }
  Perm identity() const { return Perm::identity(degree_); }

  // Subgroup of the same ambient degree generated by `gens`.
  PermGroup subgroup(std::vector<Perm> gens, std::string name = "") const {
    return PermGroup(degree_, std::move(gens), std::move(name), order_cap_);
  }

  // -------------------------------------------------------------- closure

  // Deterministic breadth-first closure under right multiplication by
  // the generators, starting from the identity.
  const std::vector<Perm>& elements() const {
    close();
    return elements_;
  }
  long long order() const { return static_cast<long long>(elements().size()); }
  bool contains(const Perm& p) const {
    close();
    return index_.count(p) > 0;
  }
  int element_index(const Perm& p) const {
    close();
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("element not in group");
    return it->second;
  }
  // For element k > 0: elements()[k] == elements()[prov[k].first] *
  // gens()[prov[k].second]; entry 0 is the identity with (-1,-1).
  const std::vector<std::pair<int, int>>& provenance() const {
    close();
    return provenance_;
  }

  bool is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree()) return false;
    for (const Perm& x : gens_)
      if (!g.contains(x)) return false;
    return true;
  }

  bool same_element_set(const PermGroup& o) const {
    return degree_ == o.degree() && order() == o.order() &&
           o.is_subgroup_of(*this);
  }

  // ------------------------------------------------------ structure queries

  PermGroup center() const {
    std::vector<Perm> out;
    for (const Perm& e : elements()) {
      bool ok = true;
      for (const Perm& g : gens_)
        if (!(e * g == g * e)) { ok = false; break; }
      if (ok) out.push_back(e);
    }
    return subgroup(std::move(out), "center");
  }

  PermGroup centralizer(const PermGroup& h) const {
    require_subgroup(h);
    std::vector<Perm> out;
    for (const Perm& e : elements()) {
      bool ok = true;
      for (const Perm& g : h.gens())
        if (!(e * g == g * e)) { ok = false; break; }
      if (ok) out.push_back(e);
    }
    return subgroup(std::move(out), "centralizer");
  }

  PermGroup normalizer(const PermGroup& h) const {
    require_subgroup(h);
    std::vector<Perm> out;
    for (const Perm& e : elements()) {
      Perm einv = e.inverse();
      bool ok = true;
      for (const Perm& g : h.gens())
        if (!h.contains(e * g * einv)) { ok = false; break; }
      if (ok) out.push_back(e);
    }
    return subgroup(std::move(out), "normalizer");
  }

  bool is_normal(const PermGroup& h) const {
    require_subgroup(h);
    for (const Perm& g : gens_) {
      Perm ginv = g.inverse();
      for (const Perm& x : h.gens())
        if (!h.contains(g * x * ginv)) return false;
    }
    return true;
  }

  PermGroup derived_subgroup() const {
    std::set<Perm> comms;
    const auto& els = elements();
    for (const Perm& a : els)
      for (const Perm& b : els)
        comms.insert(a.inverse() * b.inverse() * a * b);
    return subgroup(std::vector<Perm>(comms.begin(), comms.end()), "derived");
  }

  std::vector<long long> conjugacy_class_sizes() const {
    const auto& els = elements();
    close();
    std::vector<bool> seen(els.size(), false);
    std::vector<long long> sizes;
    for (size_t i = 0; i < els.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> orbit = {static_cast<int>(i)};
      seen[i] = true;
      for (size_t k = 0; k < orbit.size(); ++k) {
        for (const Perm& g : gens_) {
          Perm c = g * els[orbit[k]] * g.inverse();
          int j = index_.at(c);
          if (!seen[j]) {
            seen[j] = true;
            orbit.push_back(j);
          }
        }
      }
      sizes.push_back(static_cast<long long>(orbit.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  std::map<int, long long> element_order_histogram() const {
    std::map<int, long long> h;
    for (const Perm& e : elements()) ++h[e.order()];
    return h;
  }

  // Element-order histogram of G/[G,G]; determines the abelianization
  // up to isomorphism.
  std::map<int, long long> abelianization_histogram() const {
    PermGroup d = derived_subgroup();
    auto [reps, coset_of] = left_cosets(d);
    int m = static_cast<int>(reps.size());
    // multiplication on coset indices
    auto mul = [&](int i, int j) {
      return coset_of.at(elements()[reps[i]] * elements()[reps[j]]);
    };
    std::map<int, long long> h;
    for (int i = 0; i < m; ++i) {
      int ord = 1, x = i;
      while (x != 0) {
        x = mul(x, i);
        ++ord;
      }
      ++h[ord];
    }
    return h;
  }

  // Left cosets of h in this group: indices of representatives (in
  // elements() order) and a map element -> coset index.
  std::pair<std::vector<int>, std::map<Perm, int>> left_cosets(
      const PermGroup& h) const {
    require_subgroup(h);
    std::vector<int> reps;
    std::map<Perm, int> coset_of;
    const auto& els = elements();
    for (size_t i = 0; i < els.size(); ++i) {
      if (coset_of.count(els[i])) continue;
      int c = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(i));
      for (const Perm& x : h.elements()) coset_of[els[i] * x] = c;
    }
    return {reps, coset_of};
  }

  // ----------------------------------------------------------- fingerprint

  // Isomorphism-invariant summary: order, element-order histogram,
  // center order, derived-subgroup order, abelianization histogram,
  // conjugacy class sizes, Sylow counts.
  const std::vector<long long>& fingerprint() const;

 private:
  static void check_range(int n, int lo) {
    if (n < lo || n > kDegreeCap)
      throw std::invalid_argument("make_group: size outside supported range");
  }
  static Perm rotation(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Perm(std::move(img));
  }
  void require_subgroup(const PermGroup& h) const {
    if (!h.is_subgroup_of(*this))
      throw std::invalid_argument("structure query: not a subgroup");
  }

  void close() const {
    if (!elements_.empty()) return;
    Perm id = Perm::identity(degree_);
    elements_.push_back(id);
    index_[id] = 0;
    provenance_.push_back({-1, -1});
    for (size_t k = 0; k < elements_.size(); ++k) {
      for (size_t gi = 0; gi < gens_.size(); ++gi) {
        Perm nxt = elements_[k] * gens_[gi];
        if (index_.count(nxt)) continue;
        if (static_cast<int>(elements_.size()) >= order_cap_)
          throw std::runtime_error("PermGroup: order cap exceeded");
        index_[nxt] = static_cast<int>(elements_.size());
        elements_.push_back(nxt);
        provenance_.push_back({static_cast<int>(k), static_cast<int>(gi)});
      }
    }
  }

  int degree_;
  std::vector<Perm> gens_;
  std::string name_;
  int order_cap_;
  mutable std::vector<Perm> elements_;
  mutable std::map<Perm, int> index_;
  mutable std::vector<std::pair<int, int>> provenance_;
  mutable std::vector<long long> fingerprint_;
};

// ------------------------------------------------------------------ Sylow

struct SylowResult {
  PermGroup subgroup;
  long long count;
};

// One Sylow p-subgroup via normalizer climbing: a p-subgroup properly
// contained in a Sylow is proper in the p-part of its normalizer, so
// repeatedly adjoining p-power-order normalizer elements reaches full
// p-part. Count is the index of the Sylow normalizer.
inline SylowResult sylow(const PermGroup& g, int p) {
  long long pk = 1, n = g.order();
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  auto p_power = [&](long long o) {
    while (o % p == 0) o /= p;
    return o == 1;
  };
  if (pk == 1) return {g.subgroup({}, "sylow"), 1};

  std::vector<Perm> pgens;
  for (const Perm& e : g.elements()) {
    int o = e.order();
    if (o % p == 0) {
      long long m = o;
      while (m % p == 0) m /= p;
      Perm x = e;
      for (long long i = 1; i < m; ++i) x = x * e;
      pgens.push_back(x);
      break;
    }
  }
  PermGroup sub = g.subgroup(pgens, "sylow");
  while (sub.order() < pk) {
    PermGroup nrm = g.normalizer(sub);
    bool grew = false;
    for (const Perm& y : nrm.elements()) {
      if (!p_power(y.order()) || sub.contains(y)) continue;
      std::vector<Perm> ng = pgens;
      ng.push_back(y);
      PermGroup cand = g.subgroup(ng, "sylow");
      if (p_power(cand.order())) {
        pgens = std::move(ng);
        sub = std::move(cand);
        grew = true;
        break;
      }
    }
    if (!grew) break;
  }
  long long cnt = g.order() / g.normalizer(sub).order();
  return {std::move(sub), cnt};
}

inline const std::vector<long long>& PermGroup::fingerprint() const {
  if (!fingerprint_.empty()) return fingerprint_;
  std::vector<long long> fp;
  fp.push_back(order());
  for (auto [o, c] : element_order_histogram()) {
    fp.push_back(o);
    fp.push_back(c);
  }
  fp.push_back(-1);
  fp.push_back(center().order());
  fp.push_back(derived_subgroup().order());
  for (auto [o, c] : abelianization_histogram()) {
    fp.push_back(o);
    fp.push_back(c);
  }
  fp.push_back(-1);
  for (long long s : conjugacy_class_sizes()) fp.push_back(s);
  fp.push_back(-1);
  for (int p : {2, 3, 5, 7})
    if (order() % p == 0) fp.push_back(sylow(*this, p).count);
  fingerprint_ = std::move(fp);
  return fingerprint_;
}

}  // namespace lame
