#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lame/permgrp/group.hpp"

namespace lame {

// =====================================================================
// Homomorphisms between permutation groups.
// =====================================================================

// A homomorphism determined by generator images. Construction builds
// the full element table by following the source closure and verifies
// the relation table: phi(e * g) == phi(e) * phi(g) for every source
// element e and generator g.
class Hom {
 public:
  Hom(PermGroup source, PermGroup target, std::vector<Perm> gen_images)
      : source_(std::move(source)), target_(std::move(target)),
        gen_images_(std::move(gen_images)) {
    if (gen_images_.size() != source_.gens().size())
      throw std::invalid_argument("Hom: one image per source generator");
    for (const Perm& p : gen_images_)
      if (p.degree() != target_.degree())
        throw std::invalid_argument("Hom: image degree mismatch");
    const auto& els = source_.elements();
    const auto& prov = source_.provenance();
    table_.reserve(els.size());
    table_.push_back(Perm::identity(target_.degree()));
    for (size_t k = 1; k < els.size(); ++k)
      table_.push_back(table_[prov[k].first] * gen_images_[prov[k].second]);
    for (size_t k = 0; k < els.size(); ++k)
      for (size_t j = 0; j < gen_images_.size(); ++j) {
        int idx = source_.element_index(els[k] * source_.gens()[j]);
        if (!(table_[idx] == table_[k] * gen_images_[j]))
          throw std::invalid_argument("Hom: generator images violate relations");
      }
  }

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Perm>& gen_images() const { return gen_images_; }
  const std::vector<Perm>& table() const { return table_; }

  const Perm& image_of(const Perm& x) const {
    return table_[source_.element_index(x)];
  }

  bool is_injective() const {
    std::set<Perm> imgs(table_.begin(), table_.end());
    return imgs.size() == table_.size();
  }

  PermGroup kernel() const {
    std::vector<Perm> ker;
    const auto& els = source_.elements();
    for (size_t k = 0; k < els.size(); ++k)
      if (table_[k].is_identity()) ker.push_back(els[k]);
    return source_.subgroup(std::move(ker), "kernel");
  }

  PermGroup image_group() const {
    return PermGroup(target_.degree(), gen_images_, "image");
  }

  // Transitivity of the image on the target points.
  bool image_is_transitive() const {
    std::vector<bool> seen(target_.degree(), false);
    std::vector<int> orbit = {0};
    seen[0] = true;
    for (size_t k = 0; k < orbit.size(); ++k)
      for (const Perm& g : gen_images_) {
        int j = g.apply(orbit[k]);
        if (!seen[j]) {
          seen[j] = true;
          orbit.push_back(j);
        }
      }
    return static_cast<int>(orbit.size()) == target_.degree();
  }

 private:
  PermGroup source_;
  PermGroup target_;
  std::vector<Perm> gen_images_;
  std::vector<Perm> table_;
};

// --------------------------------------------------------- coset action

// Action of g on the left cosets of h by left multiplication, as a
// homomorphism into the symmetric group on the cosets. The kernel is
// the largest normal subgroup of g contained in h.
inline Hom coset_action(const PermGroup& g, const PermGroup& h) {
  auto [reps, coset_of] = g.left_cosets(h);
  int m = static_cast<int>(reps.size());
  if (m > kDegreeCap)
    throw std::runtime_error("coset_action: index exceeds degree cap");
  const auto& els = g.elements();
  std::vector<Perm> imgs;
  for (const Perm& gen : g.gens()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = coset_of.at(gen * els[reps[i]]);
    imgs.push_back(Perm(std::move(img)));
  }
  return Hom(g, PermGroup::symmetric(m), std::move(imgs));
}

// --------------------------------------------------- monomorphism search

namespace detail {

// Closure of the assigned source generators with simultaneous image
// tracking; detects relation conflicts and (optionally) image
// collisions early.
inline bool partial_map(const PermGroup& u, const std::vector<Perm>& sgens,
                        const std::vector<Perm>& timgs, int tdeg,
                        std::map<Perm, Perm>* out) {
  std::map<Perm, Perm> phi;
  std::vector<const Perm*> order;
  auto [it0, ok0] = phi.emplace(u.identity(), Perm::identity(tdeg));
  order.push_back(&it0->first);
  std::set<Perm> images = {it0->second};
  for (size_t k = 0; k < order.size(); ++k) {
    Perm src = *order[k];
    Perm img = phi.at(src);
    for (size_t j = 0; j < timgs.size(); ++j) {
      Perm s = src * sgens[j];
      Perm im = img * timgs[j];
      auto it = phi.find(s);
      if (it != phi.end()) {
        if (!(it->second == im)) return false;
      } else {
        if (!images.insert(im).second) return false;  // not injective
        auto [it2, ok2] = phi.emplace(std::move(s), std::move(im));
        order.push_back(&it2->first);
      }
    }
  }
  if (out) *out = std::move(phi);
  return true;
}

inline std::vector<Hom> mono_search(
    const PermGroup& u, const PermGroup& g,
    const std::optional<std::pair<Perm, Perm>>& anchor, bool first_only) {
  std::vector<Hom> out;
  if (u.order() == 0 || g.order() % u.order() != 0) return out;

  std::vector<Perm> sgens;
  if (anchor) {
    if (!u.contains(anchor->first))
      throw std::invalid_argument("monomorphisms: anchor not in source");
    if (!g.contains(anchor->second))
      throw std::invalid_argument("monomorphisms: anchor image not in target");
    if (anchor->first.order() != anchor->second.order()) return out;
    sgens.push_back(anchor->first);
  }
  std::vector<Perm> rest = u.gens();
  std::stable_sort(rest.begin(), rest.end(),
                   [](const Perm& a, const Perm& b) {
                     return a.order() > b.order();
                   });
  sgens.insert(sgens.end(), rest.begin(), rest.end());

  std::map<int, std::vector<Perm>> by_order;
  for (const Perm& e : g.elements()) by_order[e.order()].push_back(e);

  std::vector<Perm> timgs;
  std::vector<int> sorders;
  for (const Perm& s : sgens) sorders.push_back(s.order());

  std::function<void(size_t)> rec = [&](size_t d) {
    if (first_only && !out.empty()) return;
    if (d == sgens.size()) {
      std::map<Perm, Perm> phi;
      if (!partial_map(u, sgens, timgs, g.degree(), &phi)) return;
      if (static_cast<long long>(phi.size()) != u.order()) return;
      std::vector<Perm> gen_images;
      for (const Perm& ug : u.gens()) gen_images.push_back(phi.at(ug));
      out.emplace_back(u, g, std::move(gen_images));
      return;
    }
    auto bit = by_order.find(sorders[d]);
    if (bit == by_order.end()) return;
    const std::vector<Perm> pinned =
        (d == 0 && anchor) ? std::vector<Perm>{anchor->second}
                           : std::vector<Perm>{};
    const std::vector<Perm>& cands = pinned.empty() ? bit->second : pinned;
    for (const Perm& c : cands) {
      timgs.push_back(c);
      if (partial_map(u, {sgens.begin(), sgens.begin() + d + 1}, timgs,
                      g.degree(), nullptr))
        rec(d + 1);
      timgs.pop_back();
      if (first_only && !out.empty()) return;
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

// All injective homomorphisms from u into g, by backtracking over
// generator images bucketed by element order. An anchor pins the image
// of one source element (searched first); mismatched anchor orders give
// an immediate empty result.
inline std::vector<Hom> monomorphisms(
    const PermGroup& u, const PermGroup& g,
    const std::optional<std::pair<Perm, Perm>>& anchor = std::nullopt) {
  return detail::mono_search(u, g, anchor, false);
}

// ------------------------------------------------------------ isomorphism

inline bool is_isomorphic(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.fingerprint() != b.fingerprint()) return false;
  return !detail::mono_search(a, b, std::nullopt, true).empty();
}

}  // namespace lame
