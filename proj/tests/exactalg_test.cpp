#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <random>

#include "lame/exactalg/multipoly.hpp"
#include "lame/exactalg/number_field.hpp"
#include "lame/exactalg/rational.hpp"
#include "lame/exactalg/resultant.hpp"

namespace lame {
namespace {

// =====================================================================
// Rational
// =====================================================================

TEST(RationalTest, ReducesToCanonicalForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), BigInt(-3));
  EXPECT_EQ(r.denominator(), BigInt(2));
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(-2, 1).str(), "-2");
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(RationalTest, ArithmeticAndComparison) {
  Rational a(3, 4), b(-1, 2);
  EXPECT_EQ(a * b, Rational(-3, 8));
  EXPECT_EQ(a / b, Rational(-3, 2));
  EXPECT_EQ(a - b, Rational(5, 4));
  EXPECT_LT(b, a);
  EXPECT_EQ(a.abs(), a);
  EXPECT_EQ(b.abs(), Rational(1, 2));
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(RationalTest, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("-11/6"), Rational(-11, 6));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational(-11, 6).str(), "-11/6");
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(RationalTest, PerfectSquareDetection) {
  BigInt root;
  EXPECT_TRUE(perfect_square(BigInt(144), &root));
  EXPECT_EQ(root, BigInt(12));
  EXPECT_FALSE(perfect_square(BigInt(145), &root));
  Rational s;
  EXPECT_TRUE(rational_sqrt(Rational(49, 4), &s));
  EXPECT_EQ(s, Rational(7, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2), &s));
}

// =====================================================================
// NumberField / FieldElem
// =====================================================================

TEST(NumberFieldTest, RejectsReducibleRelation) {
  // t^2 = t + 2 has the rational root t = 2.
  EXPECT_THROW(NumberField(Rational(1), Rational(2)), std::invalid_argument);
  EXPECT_NO_THROW(NumberField(Rational(-1), Rational(-1)));
}

TEST(NumberFieldTest, FactoriesAndSerialization) {
  NumberField q = NumberField::rationals();
  EXPECT_TRUE(q.is_rational());
  EXPECT_EQ(q.str(), "Q");
  NumberField w = NumberField::cyclotomic_omega();
  EXPECT_EQ(NumberField::parse(w.str()), w);
  EXPECT_EQ(NumberField::parse("Q"), q);
  NumberField g = NumberField::gaussian();
  EXPECT_EQ(g.b(), Rational(0));
  EXPECT_EQ(g.c(), Rational(-1));
}

TEST(FieldElemTest, OmegaIsACubeRootOfUnity) {
  NumberField F = NumberField::cyclotomic_omega();
  FieldElem one(F, Rational(1));
  FieldElem omega(F, Rational(0), Rational(1));
  EXPECT_EQ(omega * omega * omega, one);
  EXPECT_TRUE((one + omega + omega * omega).is_zero());
  EXPECT_EQ(omega.inverse(), omega * omega);
}

TEST(FieldElemTest, GaussianAndSqrt5Arithmetic) {
  NumberField gi = NumberField::gaussian();
  FieldElem i(gi, Rational(0), Rational(1));
  EXPECT_EQ(i * i, FieldElem(gi, Rational(-1)));
  NumberField f5 = NumberField::quadratic_sqrt(Rational(5));
  FieldElem r5(f5, Rational(0), Rational(1));
  EXPECT_EQ(r5 * r5, FieldElem(f5, Rational(5)));
  EXPECT_EQ(r5.norm(), Rational(-5));
  EXPECT_EQ(r5.conj(), -r5);
}

TEST(FieldElemTest, InverseAndFieldMismatch) {
  NumberField F = NumberField::cyclotomic_omega();
  FieldElem x(F, Rational(2), Rational(-3));
  EXPECT_EQ(x * x.inverse(), FieldElem(F, Rational(1)));
  FieldElem y(NumberField::gaussian(), Rational(1));
  EXPECT_THROW(x + y, std::invalid_argument);
}

TEST(FieldElemTest, ParseRoundTrip) {
  NumberField F = NumberField::cyclotomic_omega();
  FieldElem x(F, Rational(1, 2), Rational(-3, 4));
  EXPECT_EQ(FieldElem::parse(F, x.str()), x);
  FieldElem r(F, Rational(-7, 3));
  EXPECT_EQ(FieldElem::parse(F, r.str()), r);
}

TEST(FieldElemTest, SqrtInField) {
  NumberField f5 = NumberField::quadratic_sqrt(Rational(5));
  FieldElem five(f5, Rational(5));
  auto r = sqrt_in_field(five);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, five);
  // (1+sqrt5)/2 squares to (3+sqrt5)/2
  FieldElem target(f5, Rational(3, 2), Rational(1, 2));
  auto s = sqrt_in_field(target);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * *s, target);
  EXPECT_FALSE(sqrt_in_field(FieldElem(f5, Rational(2))).has_value());
}

// =====================================================================
// MultiPoly basics
// =====================================================================

MultiPoly mono(int arity, const NumberField& F, Rational c,
               std::vector<int> exps) {
  MultiPoly p(arity, F);
  p.add_term(exps, FieldElem(F, c));
  return p;
}

TEST(MultiPolyTest, DerivativeOfQuarticFamily) {
  // d/dx (x^4 + y^4 + z^4 + a x^2 y^2) = 4x^3 + 2a x y^2, arity 4 = (x,y,z,a)
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(4, Q, Rational(1), {4, 0, 0, 0}) +
                mono(4, Q, Rational(1), {0, 4, 0, 0}) +
                mono(4, Q, Rational(1), {0, 0, 4, 0}) +
                mono(4, Q, Rational(1), {2, 2, 0, 1});
  MultiPoly expect = mono(4, Q, Rational(4), {3, 0, 0, 0}) +
                     mono(4, Q, Rational(2), {1, 2, 0, 1});
  EXPECT_EQ(f.partial_derivative(0), expect);
}

TEST(MultiPolyTest, SubstituteLineIntoFermatQuartic) {
  // z := x + y in x^4 + y^4 + z^4 gives 2x^4+4x^3y+6x^2y^2+4xy^3+2y^4
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(3, Q, Rational(1), {4, 0, 0}) +
                mono(3, Q, Rational(1), {0, 4, 0}) +
                mono(3, Q, Rational(1), {0, 0, 4});
  MultiPoly line = mono(3, Q, Rational(1), {1, 0, 0}) +
                   mono(3, Q, Rational(1), {0, 1, 0});
  MultiPoly got = f.substitute(2, line);
  MultiPoly expect = mono(3, Q, Rational(2), {4, 0, 0}) +
                     mono(3, Q, Rational(4), {3, 1, 0}) +
                     mono(3, Q, Rational(6), {2, 2, 0}) +
                     mono(3, Q, Rational(4), {1, 3, 0}) +
                     mono(3, Q, Rational(2), {0, 4, 0});
  EXPECT_EQ(got, expect);
}

TEST(MultiPolyTest, ProductExpansion) {
  NumberField Q = NumberField::rationals();
  MultiPoly q = mono(2, Q, Rational(1), {2, 0}) +
                mono(2, Q, Rational(1), {1, 1}) +
                mono(2, Q, Rational(1), {0, 2});
  MultiPoly expect = mono(2, Q, Rational(1), {4, 0}) +
                     mono(2, Q, Rational(2), {3, 1}) +
                     mono(2, Q, Rational(3), {2, 2}) +
                     mono(2, Q, Rational(2), {1, 3}) +
                     mono(2, Q, Rational(1), {0, 4});
  EXPECT_EQ(q * q, expect);
}

TEST(MultiPolyTest, DegreeAndHomogeneity) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(3, Q, Rational(1), {4, 0, 0}) +
                mono(3, Q, Rational(1), {2, 2, 1});
  EXPECT_EQ(f.degree_in(0), 4);
  EXPECT_EQ(f.degree_in(2), 1);
  int d = -1;
  EXPECT_TRUE(f.is_homogeneous_in({0, 1}, &d));
  EXPECT_EQ(d, 4);
  EXPECT_FALSE(f.is_homogeneous_in({0, 1, 2}, &d));
  EXPECT_EQ(MultiPoly::zero(3, Q).total_degree(), -1);
}

TEST(MultiPolyTest, EvalAndCoeffExtraction) {
  NumberField F = NumberField::cyclotomic_omega();
  FieldElem omega(F, Rational(0), Rational(1));
  // x^2 + x + 1 vanishes at omega
  MultiPoly f(1, F);
  f.add_term({2}, FieldElem(F, Rational(1)));
  f.add_term({1}, FieldElem(F, Rational(1)));
  f.add_term({0}, FieldElem(F, Rational(1)));
  EXPECT_TRUE(f.eval({omega}).is_zero());
  EXPECT_EQ(f.coeff_of(0, 2).constant_value(), FieldElem(F, Rational(1)));
}

TEST(MultiPolyTest, DivideExact) {
  NumberField Q = NumberField::rationals();
  MultiPoly q = mono(2, Q, Rational(1), {2, 0}) +
                mono(2, Q, Rational(1), {1, 1}) +
                mono(2, Q, Rational(1), {0, 2});
  MultiPoly f = q * q;
  auto quo = f.divide_exact(q);
  ASSERT_TRUE(quo.has_value());
  EXPECT_EQ(*quo, q);
  MultiPoly g = f + mono(2, Q, Rational(1), {1, 0});
  EXPECT_FALSE(g.divide_exact(q).has_value());
}

TEST(MultiPolyTest, FixtureFormatRoundTrip) {
  NumberField F = NumberField::cyclotomic_omega();
  MultiPoly f(3, F);
  f.add_term({2, 0, 1}, FieldElem(F, Rational(1, 2), Rational(-3)));
  f.add_term({0, 1, 0}, FieldElem(F, Rational(-2)));
  MultiPoly back = MultiPoly::parse(f.str());
  EXPECT_EQ(back, f);
  EXPECT_EQ(back.field(), F);
  EXPECT_THROW(MultiPoly::parse("poly x Q"), std::invalid_argument);
  EXPECT_THROW(MultiPoly::parse("poly 2 Q\n1 : 0"), std::invalid_argument);
}

TEST(MultiPolyTest, FieldAndArityMismatchErrors) {
  NumberField Q = NumberField::rationals();
  MultiPoly a = mono(2, Q, Rational(1), {1, 0});
  MultiPoly b = mono(3, Q, Rational(1), {1, 0, 0});
  EXPECT_THROW(a + b, std::invalid_argument);
  MultiPoly c(2, NumberField::gaussian());
  c.add_term({0, 1}, FieldElem(NumberField::gaussian(), Rational(1)));
  EXPECT_THROW(a * c, std::invalid_argument);
}

// =====================================================================
// Resultants
// =====================================================================

TEST(ResultantTest, LinearPair) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(1, Q, Rational(1), {1}) + mono(1, Q, Rational(-1), {0});
  MultiPoly g = mono(1, Q, Rational(1), {1}) + mono(1, Q, Rational(1), {0});
  MultiPoly r = resultant(f, g, 0);
  EXPECT_EQ(r, mono(1, Q, Rational(2), {0}));
}

TEST(ResultantTest, SharedRootGivesZero) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(1, Q, Rational(1), {2}) + mono(1, Q, Rational(-1), {0});
  MultiPoly g = mono(1, Q, Rational(1), {1}) + mono(1, Q, Rational(-1), {0});
  EXPECT_TRUE(resultant(f, g, 0).is_zero());
}

TEST(ResultantTest, ParametricDiscriminant) {
  // resultant(x^2 + a x + 1, 2x + a, x) = -a^2 + 4 with arity 2 = (x, a)
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(2, Q, Rational(1), {2, 0}) +
                mono(2, Q, Rational(1), {1, 1}) +
                mono(2, Q, Rational(1), {0, 0});
  MultiPoly g = mono(2, Q, Rational(2), {1, 0}) + mono(2, Q, Rational(1), {0, 1});
  MultiPoly r = resultant(f, g, 0);
  MultiPoly expect =
      mono(2, Q, Rational(-1), {0, 2}) + mono(2, Q, Rational(4), {0, 0});
  EXPECT_EQ(r, expect);
}

TEST(ResultantTest, RejectsZeroInput) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(1, Q, Rational(1), {1});
  EXPECT_THROW(resultant(f, MultiPoly::zero(1, Q), 0), std::invalid_argument);
}

// =====================================================================
// Univariate gcd
// =====================================================================

TEST(GcdTest, SimpleCommonFactor) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(1, Q, Rational(1), {2}) + mono(1, Q, Rational(-1), {0});
  MultiPoly g = mono(1, Q, Rational(1), {1}) + mono(1, Q, Rational(-1), {0});
  EXPECT_EQ(gcd_univariate(f, g, 0), g);
}

TEST(GcdTest, OverCyclotomicField) {
  NumberField F = NumberField::cyclotomic_omega();
  FieldElem omega(F, Rational(0), Rational(1));
  MultiPoly f(1, F);
  f.add_term({2}, FieldElem(F, Rational(1)));
  f.add_term({1}, FieldElem(F, Rational(1)));
  f.add_term({0}, FieldElem(F, Rational(1)));
  MultiPoly g(1, F);
  g.add_term({1}, FieldElem(F, Rational(1)));
  g.add_term({0}, -omega);
  EXPECT_EQ(gcd_univariate(f, g, 0), g);
}

TEST(GcdTest, CoprimeGivesOne) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(1, Q, Rational(1), {2}) + mono(1, Q, Rational(1), {0});
  MultiPoly g = mono(1, Q, Rational(1), {1}) + mono(1, Q, Rational(2), {0});
  EXPECT_EQ(gcd_univariate(f, g, 0), mono(1, Q, Rational(1), {0}));
}

// =====================================================================
// Perfect square form
// =====================================================================

TEST(PerfectSquareFormTest, BinaryQuarticOverQ) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(2, Q, Rational(2), {4, 0}) +
                mono(2, Q, Rational(4), {3, 1}) +
                mono(2, Q, Rational(6), {2, 2}) +
                mono(2, Q, Rational(4), {1, 3}) +
                mono(2, Q, Rational(2), {0, 4});
  auto res = perfect_square_form(f, 0, 1);
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->first, mono(2, Q, Rational(2), {0, 0}));
  MultiPoly q = mono(2, Q, Rational(1), {2, 0}) +
                mono(2, Q, Rational(1), {1, 1}) +
                mono(2, Q, Rational(1), {0, 2});
  EXPECT_EQ(res->second, q);
}

TEST(PerfectSquareFormTest, FermatQuarticIsNot) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(2, Q, Rational(1), {4, 0}) + mono(2, Q, Rational(1), {0, 4});
  EXPECT_FALSE(perfect_square_form(f, 0, 1).has_value());
}

TEST(PerfectSquareFormTest, ParametricScalar) {
  // (2 + a) * (x^2 + x y + y^2)^2 with arity 3 = (x, y, a)
  NumberField Q = NumberField::rationals();
  MultiPoly c = mono(3, Q, Rational(2), {0, 0, 0}) +
                mono(3, Q, Rational(1), {0, 0, 1});
  MultiPoly q = mono(3, Q, Rational(1), {2, 0, 0}) +
                mono(3, Q, Rational(1), {1, 1, 0}) +
                mono(3, Q, Rational(1), {0, 2, 0});
  auto res = perfect_square_form(c * q * q, 0, 1);
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->first, c);
  EXPECT_EQ(res->second, q);
}

TEST(PerfectSquareFormTest, RejectsNonHomogeneous) {
  NumberField Q = NumberField::rationals();
  MultiPoly f = mono(2, Q, Rational(1), {4, 0}) + mono(2, Q, Rational(1), {0, 3});
  EXPECT_THROW(perfect_square_form(f, 0, 1), std::invalid_argument);
}

// =====================================================================
// Rational roots
// =====================================================================

TEST(RationalRootsTest, StripsAllRootsWithMultiplicity) {
  NumberField Q = NumberField::rationals();
  auto lin = [&](Rational r) {
    return mono(1, Q, Rational(1), {1}) + mono(1, Q, -r, {0});
  };
  MultiPoly junk = mono(1, Q, Rational(1), {2}) + mono(1, Q, Rational(1), {1}) +
                   mono(1, Q, Rational(1), {0});
  MultiPoly f = lin(Rational(2)) * lin(Rational(-2)) * lin(Rational(-1)) *
                lin(Rational(-1)) * junk;
  auto rr = find_rational_roots(f, 0);
  EXPECT_TRUE(rr.complete);
  ASSERT_EQ(rr.roots.size(), 3u);
  std::map<Rational, int> got(rr.roots.begin(), rr.roots.end());
  EXPECT_EQ(got[Rational(2)], 1);
  EXPECT_EQ(got[Rational(-2)], 1);
  EXPECT_EQ(got[Rational(-1)], 2);
}

TEST(RationalRootsTest, HalfIntegerRootViaLeadingDivisors) {
  NumberField Q = NumberField::rationals();
  // (2x - 1)(x^2 + 3)
  MultiPoly f = (mono(1, Q, Rational(2), {1}) + mono(1, Q, Rational(-1), {0})) *
                (mono(1, Q, Rational(1), {2}) + mono(1, Q, Rational(3), {0}));
  auto rr = find_rational_roots(f, 0);
  EXPECT_TRUE(rr.complete);
  ASSERT_EQ(rr.roots.size(), 1u);
  EXPECT_EQ(rr.roots[0].first, Rational(1, 2));
}

// =====================================================================
// Randomized properties
// =====================================================================

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }
  Rational rational() {
    return Rational(uniform(-9, 9), uniform(1, 5));
  }
  FieldElem elem(const NumberField& F) {
    if (F.is_rational()) return FieldElem(F, rational());
    return FieldElem(F, rational(), rational());
  }
  FieldElem nonzero_elem(const NumberField& F) {
    for (;;) {
      FieldElem e = elem(F);
      if (!e.is_zero()) return e;
    }
  }
  MultiPoly poly(int arity, const NumberField& F, int max_deg, int terms) {
    MultiPoly p(arity, F);
    for (int t = 0; t < terms; ++t) {
      Monomial m(arity);
      for (int i = 0; i < arity; ++i) m[i] = uniform(0, max_deg);
      p.add_term(m, elem(F));
    }
    return p;
  }
  MultiPoly univariate(const NumberField& F, int deg) {
    MultiPoly p(1, F);
    for (int i = 0; i <= deg; ++i) p.add_term({i}, elem(F));
    if (p.is_zero() || p.degree_in(0) < 1)
      p.add_term({deg}, FieldElem(F, Rational(1)));
    return p;
  }

 private:
  std::mt19937 gen_;
};

TEST(PropertyTest, RingAxiomsOverQAndOmega) {
  Rng rng(20260823);
  const NumberField fields[2] = {NumberField::rationals(),
                                 NumberField::cyclotomic_omega()};
  for (int c = 0; c < 400; ++c) {
    const NumberField& F = fields[c % 2];
    MultiPoly a = rng.poly(2, F, 3, 4);
    MultiPoly b = rng.poly(2, F, 3, 4);
    MultiPoly d = rng.poly(2, F, 3, 4);
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a - a, MultiPoly::zero(2, F));
  }
}

TEST(PropertyTest, ResultantVanishesIffGcdNonconstant) {
  Rng rng(424243);
  NumberField Q = NumberField::rationals();
  for (int c = 0; c < 300; ++c) {
    MultiPoly f = rng.univariate(Q, rng.uniform(1, 3));
    MultiPoly g = rng.univariate(Q, rng.uniform(1, 3));
    if (c % 2 == 0) {
      MultiPoly h = rng.univariate(Q, rng.uniform(1, 2));
      f = f * h;
      g = g * h;
    }
    bool res_zero = resultant(f, g, 0).is_zero();
    bool gcd_nonconst = gcd_univariate(f, g, 0).degree_in(0) > 0;
    ASSERT_EQ(res_zero, gcd_nonconst);
  }
}

TEST(PropertyTest, PerfectSquareRecovery) {
  Rng rng(777001);
  const NumberField fields[2] = {NumberField::rationals(),
                                 NumberField::cyclotomic_omega()};
  for (int c = 0; c < 300; ++c) {
    const NumberField& F = fields[c % 2];
    MultiPoly q(2, F);
    q.add_term({2, 0}, rng.elem(F));
    q.add_term({1, 1}, rng.elem(F));
    q.add_term({0, 2}, rng.elem(F));
    if (q.is_zero()) continue;
    MultiPoly cs = MultiPoly::constant(2, rng.nonzero_elem(F));
    MultiPoly f = cs * q * q;
    auto res = perfect_square_form(f, 0, 1);
    ASSERT_TRUE(res.has_value());
    ASSERT_EQ(res->first * res->second * res->second, f);
  }
}

TEST(PropertyTest, FieldInverseRoundTrip) {
  Rng rng(515151);
  const NumberField fields[3] = {NumberField::cyclotomic_omega(),
                                 NumberField::gaussian(),
                                 NumberField::quadratic_sqrt(Rational(5))};
  for (int c = 0; c < 300; ++c) {
    const NumberField& F = fields[c % 3];
    FieldElem x = rng.nonzero_elem(F);
    ASSERT_EQ(x * x.inverse(), FieldElem(F, Rational(1)));
    FieldElem y = rng.elem(F);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
  }
}

}  // namespace
}  // namespace lame
