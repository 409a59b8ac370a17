#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lame/exactalg/rational.hpp"

namespace lame {

// =====================================================================
// Ramification arithmetic for ordinary curves with genus-0 quotient.
// =====================================================================

namespace detail {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long checked_pow(long long base, int exp) {
  __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > static_cast<__int128>(4e18))
      throw std::overflow_error("checked_pow: overflow");
  }
  return static_cast<long long>(acc);
}

}  // namespace detail

// A branch point whose inertia group is an extension of a cyclic tame
// part of order n by an elementary abelian wild part of order p^t.
struct RamPoint {
  int n = 1;
  int t = 0;
  long long p = 0;

  RamPoint(int n_in, int t_in, long long p_in) : n(n_in), t(t_in), p(p_in) {
    if (n < 1) throw std::invalid_argument("RamPoint: n must be >= 1");
    if (t < 0) throw std::invalid_argument("RamPoint: t must be >= 0");
    if (p < 0) throw std::invalid_argument("RamPoint: p must be >= 0");
    if (t > 0) {
      if (!detail::is_prime(p))
        throw std::invalid_argument("RamPoint: wild part needs a prime p");
      long long q = detail::checked_pow(p, t);
      if ((q - 1) % n != 0)
        throw std::invalid_argument(
            "RamPoint: tame part must divide p^t - 1");
    } else if (p > 0) {
      if (std::gcd(static_cast<long long>(n), p) != 1)
        throw std::invalid_argument(
            "RamPoint: tame order must be coprime to p");
    }
  }

  long long wild_order() const {
    return t == 0 ? 1 : detail::checked_pow(p, t);
  }

  std::string str() const {
    if (t == 0) return std::to_string(n);
    return std::to_string(p) + "^" + std::to_string(t) + ":" +
           std::to_string(n);
  }

  friend bool operator==(const RamPoint& a, const RamPoint& b) {
    return a.n == b.n && a.t == b.t && a.p == b.p;
  }
  friend bool operator<(const RamPoint& a, const RamPoint& b) {
    return std::tie(a.n, a.t, a.p) < std::tie(b.n, b.t, b.p);
  }
};

// Contribution of one branch point to the degree-normalized
// Riemann-Hurwitz sum: (1/n)(1 - 2/p^t), with p^0 := 1.
inline Rational rh_term(const RamPoint& pt) {
  long long q = pt.wild_order();
  return Rational(q - 2, static_cast<long long>(pt.n) * q);
}

// A full ramification datum: the multiset of branch points together
// with the residue characteristic.
struct RamType {
  std::vector<RamPoint> points;
  long long p = 0;

  RamType(std::vector<RamPoint> pts, long long p_in)
      : points(std::move(pts)), p(p_in) {
    for (const RamPoint& pt : points)
      if (pt.p != p)
        throw std::invalid_argument("RamType: inconsistent characteristic");
    std::sort(points.begin(), points.end());
  }

  bool tame() const {
    return std::all_of(points.begin(), points.end(),
                       [](const RamPoint& pt) { return pt.t == 0; });
  }

  std::vector<int> tame_indices() const {
    std::vector<int> out;
    for (const RamPoint& pt : points) out.push_back(pt.n);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i) os << ",";
      os << points[i].str();
    }
    os << ")";
    if (tame()) os << " tame";
    os << ", char " << p;
    return os.str();
  }

  // In characteristic 0 the tame indices still constrain which residue
  // characteristics admit this reduction type.
  std::string residue_constraint() const {
    if (p != 0) return "";
    std::set<long long> primes;
    for (const RamPoint& pt : points)
      for (long long d = 2; d <= pt.n; ++d)
        if (pt.n % d == 0 && detail::is_prime(d)) primes.insert(d);
    if (primes.empty()) return "";
    std::ostringstream os;
    os << "tame indices require residue characteristic 0 or outside {";
    bool first = true;
    for (long long q : primes) {
      if (!first) os << ", ";
      os << q;
      first = false;
    }
    os << "}";
    return os.str();
  }

  friend bool operator==(const RamType& a, const RamType& b) {
    return a.p == b.p && a.points == b.points;
  }
  friend bool operator<(const RamType& a, const RamType& b) {
    return std::tie(a.p, a.points) < std::tie(b.p, b.points);
  }
};

namespace detail {

// Candidate branch points in characteristic p with n <= n_cap and
// t <= t_cap. Tame points need n >= 2: a point with trivial inertia is
// not a branch point at all.
inline std::vector<RamPoint> candidate_points(long long p, int n_cap,
                                              int t_cap) {
  std::vector<RamPoint> out;
  for (int n = 2; n <= n_cap; ++n) {
    if (p > 0 && std::gcd(static_cast<long long>(n), p) != 1) continue;
    out.emplace_back(n, 0, p);
  }
  if (is_prime(p)) {
    for (int t = 1; t <= t_cap; ++t) {
      long long q = checked_pow(p, t);
      for (int n = 1; n <= n_cap; ++n)
        if ((q - 1) % n == 0) out.emplace_back(n, t, p);
    }
  }
  return out;
}

}  // namespace detail

// Exhaustive search for 4-point ramification data summing to -11/6,
// restricted only by the stated caps. Candidates are ordered by
// ascending term value; a partial choice is abandoned as soon as the
// remaining slots can no longer reach the remaining target, which is
// sound because later candidates only have larger terms.
inline std::vector<RamType> solve_rh_bounded(long long p, int n_cap = 1000,
                                             int t_cap = 6) {
  std::vector<RamPoint> cand = detail::candidate_points(p, n_cap, t_cap);
  std::vector<Rational> term;
  term.reserve(cand.size());
  for (const RamPoint& pt : cand) term.push_back(rh_term(pt));
  std::vector<size_t> idx(cand.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (term[a] != term[b]) return term[a] < term[b];
    return cand[a] < cand[b];
  });

  const Rational target(-11, 6);
  Rational max_term = term.empty() ? Rational(0) : term[idx.back()];
  std::vector<RamType> out;
  std::vector<RamPoint> chosen;
  std::function<void(size_t, Rational)> go = [&](size_t from,
                                                 Rational remaining) {
    int slots = 4 - static_cast<int>(chosen.size());
    if (slots == 0) {
      if (remaining == Rational(0)) out.emplace_back(chosen, p);
      return;
    }
    for (size_t k = from; k < idx.size(); ++k) {
      const Rational& tk = term[idx[k]];
      // all further picks are >= tk, so slots * tk must not overshoot
      if (Rational(slots) * tk > remaining) break;
      if (Rational(slots) * max_term < remaining) continue;
      chosen.push_back(cand[idx[k]]);
      go(k, remaining - tk);
      chosen.pop_back();
    }
  };
  go(0, target);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Solutions of the 4-point equation sum rh_term = -11/6 in
// characteristic p. Completeness does not need caps: every admissible
// term is >= -1/2 (tame points have n >= 2, wild terms are >= 0 since
// p^t >= 2), so each individual term is at most
// -11/6 + 3*(1/2) = -1/3 < 0. Wild terms are never negative, so all
// four points are tame, and -1/n <= -1/3 forces n <= 3.
inline std::vector<RamType> solve_rh(long long p) {
  if (p != 0 && !detail::is_prime(p))
    throw std::invalid_argument("solve_rh: p must be 0 or prime");
  std::vector<int> allowed;
  for (int n : {2, 3})
    if (p == 0 || std::gcd(static_cast<long long>(n), p) == 1)
      allowed.push_back(n);
  std::vector<RamType> out;
  std::vector<int> pick(4);
  const Rational target(-11, 6);
  size_t a = allowed.size();
  for (size_t i0 = 0; i0 < a; ++i0)
    for (size_t i1 = i0; i1 < a; ++i1)
      for (size_t i2 = i1; i2 < a; ++i2)
        for (size_t i3 = i2; i3 < a; ++i3) {
          std::array<int, 4> ns = {allowed[i0], allowed[i1], allowed[i2],
                                   allowed[i3]};
          Rational sum(0);
          std::vector<RamPoint> pts;
          for (int n : ns) {
            RamPoint pt(n, 0, p);
            sum = sum + rh_term(pt);
            pts.push_back(pt);
          }
          if (sum == target) out.emplace_back(std::move(pts), p);
        }
  std::sort(out.begin(), out.end());
  return out;
}

// Group order forced by Riemann-Hurwitz over a genus-0 quotient with
// tame branching indices ns: 2g - 2 = |G| (-2 + sum (1 - 1/n_i)).
inline Rational tame_order(int g, const std::vector<int>& ns) {
  Rational denom(-2);
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("tame_order: indices must be >= 2");
    denom = denom + Rational(n - 1, n);
  }
  if (!(denom > Rational(0)))
    throw std::invalid_argument(
        "tame_order: branching type is not hyperbolic");
  return Rational(2 * g - 2) / denom;
}

struct ThreePointRecord {
  std::array<int, 3> triple;
  Rational order;
};

// All hyperbolic three-point branching triples with entries up to 100,
// with the group order each would force at genus g. No emptiness claim
// is attached: callers inspect which triples land at or below a bound.
inline std::vector<ThreePointRecord> three_point_explore(int g) {
  if (g < 2) throw std::invalid_argument("three_point_explore: g must be >= 2");
  std::vector<ThreePointRecord> out;
  for (long long n1 = 2; n1 <= 100; ++n1)
    for (long long n2 = n1; n2 <= 100; ++n2)
      for (long long n3 = n2; n3 <= 100; ++n3) {
        long long prod = n1 * n2 * n3;
        long long pairs = n1 * n2 + n1 * n3 + n2 * n3;
        if (pairs >= prod) continue;  // 1/n1 + 1/n2 + 1/n3 >= 1
        out.push_back({{static_cast<int>(n1), static_cast<int>(n2),
                        static_cast<int>(n3)},
                       Rational(2 * (g - 1) * prod, prod - pairs)});
      }
  return out;
}

}  // namespace lame
