#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lame {

// =====================================================================
// Permutations on {0..n-1} with 1-based disjoint-cycle serialization.
// =====================================================================

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Perm: image array is not a bijection");
      seen[v] = true;
    }
  }
  static Perm identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // (p * q)(i) = p(q(i)): q acts first.
  Perm operator*(const Perm& q) const {
    if (degree() != q.degree())
      throw std::invalid_argument("Perm: degree mismatch");
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[i] = img_[q.img_[i]];
    Perm r;
    r.img_ = std::move(img);
    return r;
  }

  Perm inverse() const {
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
    Perm r;
    r.img_ = std::move(img);
    return r;
  }

  int order() const {
    int n = 1;
    Perm p = *this;
    while (!p.is_identity()) {
      p = p * *this;
      ++n;
    }
    return n;
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // Disjoint cycle string over 1-based points, e.g. "(1,2,3)(4,5)";
  // fixed points omitted; the identity prints as "()".
  std::string cycles() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += '(';
      int j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += ',';
        out += std::to_string(j + 1);
        first = false;
        j = img_[j];
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  // Parses 1-based disjoint cycle notation. Rejects points outside
  // 1..degree and points repeated across or within cycles.
  static Perm parse_cycles(const std::string& s, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(degree, false);
    size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    skip_ws();
    bool any = false;
    while (pos < s.size()) {
      if (s[pos] != '(')
        throw std::invalid_argument("cycle parse: expected '(' in " + s);
      ++pos;
      std::vector<int> cyc;
      skip_ws();
      while (pos < s.size() && s[pos] != ')') {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (pos == start)
          throw std::invalid_argument("cycle parse: expected point in " + s);
        int v = std::stoi(s.substr(start, pos - start));
        if (v < 1 || v > degree)
          throw std::invalid_argument("cycle parse: point " + std::to_string(v) +
                                      " outside 1.." + std::to_string(degree));
        if (used[v - 1])
          throw std::invalid_argument("cycle parse: repeated point " +
                                      std::to_string(v));
        used[v - 1] = true;
        cyc.push_back(v - 1);
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          skip_ws();
        }
      }
      if (pos >= s.size())
        throw std::invalid_argument("cycle parse: unterminated cycle in " + s);
      ++pos;  // ')'
      for (size_t i = 0; i < cyc.size(); ++i)
        img[cyc[i]] = cyc[(i + 1) % cyc.size()];
      any = true;
      skip_ws();
    }
    if (!any) throw std::invalid_argument("cycle parse: empty input");
    return Perm(std::move(img));
  }

 private:
  std::vector<int> img_;
};

}  // namespace lame
