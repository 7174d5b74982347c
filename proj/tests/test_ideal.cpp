#include "doctest.h"

#include <map>

#include "formcone/errors.hpp"
#include "formcone/ideal.hpp"
#include "test_util.hpp"

using namespace formcone;
using namespace formcone::testing;

namespace {

PresentedIdeal I(const RingPtr& r, const std::string& gens,
                 std::shared_ptr<const Ideal> base = nullptr) {
  return PresentedIdeal(r, gens.empty() ? std::vector<Polynomial>{} : Ps(r, gens), base);
}

struct SemigroupRing {
  RingPtr r = ring_qq({"X", "Y", "Z"});
  std::shared_ptr<const Ideal> base = make_base(r, Ps(r, "X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2"));
};

}  // namespace

TEST_CASE("ideal_sum and ideal_product examples") {
  auto r = ring_qq({"x", "y"});
  CHECK(ideal_equal(ideal_sum(I(r, "x"), I(r, "y")), I(r, "x, y")));
  CHECK(ideal_equal(ideal_product(I(r, "x"), I(r, "x")), I(r, "x^2")));

  SemigroupRing a;
  auto m = I(a.r, "X, Y, Z", a.base);
  CHECK(ideal_equal(ideal_product(m, m), I(a.r, "X^2, X*Y, X*Z, Y^2, Y*Z, Z^2", a.base)));
}

TEST_CASE("base mismatch is rejected") {
  SemigroupRing a;
  auto r = a.r;
  CHECK_THROWS_AS(ideal_sum(I(r, "X", a.base), I(r, "X")), MathError);
  auto other = ring_qq({"x", "y"});
  CHECK_THROWS_AS(ideal_sum(I(r, "X"), I(other, "x")), MathError);
}

TEST_CASE("ideal_power examples") {
  auto r = ring_qq({"x", "y"});
  CHECK(ideal_power(I(r, "x, y"), 0).is_unit());
  CHECK(ideal_equal(ideal_power(I(r, "x, y"), 2), I(r, "x^2, x*y, y^2")));

  // In k[t^4,t^5,t^11]: (x)^(n+k) : x^k = (x)^n.
  SemigroupRing a;
  auto q = I(a.r, "X", a.base);
  auto x = P(a.r, "X");
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned k = 1; k <= 6; ++k) {
      auto lhs = ideal_colon(ideal_power(q, n + k), x.pow(k));
      CHECK(ideal_equal(lhs, ideal_power(q, n)));
    }
}

TEST_CASE("ideal_intersect examples") {
  auto r = ring_qq({"x", "y"});
  CHECK(ideal_equal(ideal_intersect(I(r, "x"), I(r, "y")), I(r, "x*y")));
  auto both = ideal_intersect(I(r, "x^2, y"), I(r, "x"));
  CHECK(ideal_equal(both, I(r, "x^2, x*y")));
  // Brute force: a monomial of degree <= 4 lies in both iff it lies in the intersection.
  for (const auto& m : monomials_upto(2, 4)) {
    auto f = Polynomial::term(r, m);
    bool in_both = member_in_degree(f, Ps(r, "x^2, y"), 4) && member_in_degree(f, Ps(r, "x"), 4);
    CHECK(in_both == both.contains(f));
  }
  auto i = I(r, "x^2 + y, x*y");
  CHECK(ideal_equal(ideal_intersect(i, i), i));
}

TEST_CASE("ideal_colon examples") {
  auto r = ring_qq({"x", "y"});
  CHECK(ideal_equal(ideal_colon(I(r, "x^2"), P(r, "x")), I(r, "x")));
  CHECK(ideal_equal(ideal_colon(I(r, "x*y, y^2"), P(r, "y")), I(r, "x, y")));
  auto base = make_base(r, Ps(r, "x^2, x*y"));
  CHECK(base->contains(P(r, "x*y")));
  auto c = ideal_colon(I(r, "y^2", base), P(r, "y"));
  CHECK(c.contains(P(r, "x")));
  // Colon by an element of the ideal is everything.
  CHECK(ideal_colon(I(r, "x"), P(r, "x*y")).is_unit());
  CHECK(ideal_colon_ideal(I(r, "x*y, y^2"), I(r, "x, y")).contains(P(r, "y")));
}

TEST_CASE("saturate examples") {
  auto r = ring_qq({"x", "y"});
  auto s1 = saturate(I(r, "x^2*y"), P(r, "x"));
  CHECK(ideal_equal(s1.ideal, I(r, "y")));
  CHECK(s1.exponent == 2);
  auto s2 = saturate(I(r, "x"), P(r, "y"));
  CHECK(ideal_equal(s2.ideal, I(r, "x")));
  CHECK(s2.exponent == 0);
  // One colon step gives (x, y); since 1 * x^2 lies in the ideal the
  // saturation itself is the unit ideal, reached at exponent 2.
  CHECK(ideal_equal(ideal_colon(I(r, "x^2, x*y"), P(r, "x")), I(r, "x, y")));
  CHECK(member_in_degree(P(r, "x^2"), Ps(r, "x^2, x*y"), 2));
  auto s3 = saturate(I(r, "x^2, x*y"), P(r, "x"));
  CHECK(s3.ideal.is_unit());
  CHECK(s3.exponent == 2);
}

TEST_CASE("colon of finite-colength ideals matches the intersection route") {
  std::mt19937 rng(8080);
  auto r = ring_qq({"x", "y", "z"});
  int cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    // Zero-dimensional: pure powers plus a random binomial.
    std::vector<Polynomial> gens = Ps(r, "x^3, y^3, z^3");
    gens.push_back(random_poly(rng, r, 2, 2));
    Ideal a(r, gens);
    REQUIRE(colength(a).has_value());
    auto f = random_poly(rng, r, 3, 2);
    if (f.is_zero() || a.contains(f)) continue;
    Ideal fast = colon(a, f);
    // (a : f) = (a ∩ (f)) / f.
    Ideal both = intersect(a, Ideal(r, {f}));
    std::vector<Polynomial> quotients;
    for (const auto& g : both.gb().elements()) quotients.push_back(divide_exact(g, f));
    CHECK(fast == Ideal(r, quotients));
    for (const auto& g : fast.gb().elements()) CHECK(a.contains(g * f));
    ++cases;
  }
  CHECK(cases >= 15);
  // The semigroup ring colon that defeats the elimination route.
  SemigroupRing s;
  PresentedIdeal m(s.r, Ps(s.r, "X, Y, Z"), s.base);
  auto c = ideal_colon(ideal_power(m, 9), P(s.r, "X + Y + Z").pow(3));
  CHECK(ideal_equal(c, ideal_power(m, 6)));
}

TEST_CASE("eliminate examples") {
  auto r = ring_qq({"t", "x", "y"});
  auto e = eliminate(I(r, "y - t^2, x - t"), {0});
  CHECK(ideal_equal(e, I(r, "y - x^2")));
  auto rt = ring_qq({"x", "y1", "T"});
  auto e2 = eliminate(I(rt, "y1 - x*T"), {2});
  for (const auto& g : e2.gb().elements()) CHECK_FALSE(g.uses_variable(2));
  CHECK(e2.gb().empty());
  auto i = I(r, "x^2 - y, t*x");
  CHECK(ideal_equal(eliminate(i, {}), i));
}

TEST_CASE("krull_dim examples") {
  auto r = ring_qq({"x", "y"});
  CHECK(krull_dim(I(r, "x")) == 1);
  CHECK(krull_dim(I(r, "")) == 2);
  CHECK_FALSE(krull_dim(I(r, "1")).has_value());
  SemigroupRing a;
  CHECK(krull_dim(I(a.r, "", a.base)) == 1);
  CHECK(krull_dim(I(a.r, "X*Z, Y*Z, Y^4, Z^2")) == 1);
  // Standard-monomial count of the cone in degree d stabilizes at 4.
  auto cone = I(a.r, "X*Z, Y*Z, Y^4, Z^2");
  for (std::uint32_t d = 3; d <= 8; ++d) {
    int count = 0;
    for (const auto& m : monomials_upto(3, d))
      if (m.degree() == d && !normal_form(Polynomial::term(a.r, m), cone.gb()).is_zero()) ++count;
    CHECK(count == 4);
  }
}

TEST_CASE("ideal_equal and ideal_member examples") {
  auto r = ring_qq({"x", "y"});
  CHECK(ideal_equal(I(r, "x, y"), I(r, "y, x")));
  CHECK(ideal_member(P(r, "x^2"), I(r, "x")));
  SemigroupRing a;
  CHECK(ideal_member(P(a.r, "Y^4 - X^5"), I(a.r, "", a.base)));
  // Semigroup degrees: Y^4 -> t^20 = t^20 <- X^5.
  auto tr = ring_qq({"t"});
  std::vector<Polynomial> param{P(tr, "t^4"), P(tr, "t^5"), P(tr, "t^11")};
  CHECK(P(a.r, "Y^4 - X^5").substitute(tr, param).is_zero());
}

TEST_CASE("randomized colon, saturation, power and intersection properties") {
  std::mt19937 rng(31337);
  auto r = ring_qq({"x", "y", "z"});
  int cases = 0;
  auto random_monomial_ideal = [&](int n) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < n; ++i) {
      auto m = random_monomial(rng, 3, 2);
      if (m.is_one()) m.set(0, 1);
      gens.push_back(Polynomial::term(r, m));
    }
    return gens;
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens = random_monomial_ideal(3);
    // Add a binomial to leave the monomial world.
    gens.push_back(P(r, "x*y - z^2"));
    PresentedIdeal i(r, gens);
    auto f = random_poly(rng, r, 2, 2);
    if (f.is_zero() || f.is_constant()) f = P(r, "x + z");

    auto c = ideal_colon(i, f);
    // Soundness.
    for (const auto& g : c.gb().elements()) CHECK(i.contains(g * f));
    // Bounded completeness.
    for (const auto& g : colon_oracle(i.ideal(), f, 3)) CHECK(c.contains(g));
    ++cases;

    // Saturation chain.
    auto sat = saturate(i, f);
    PresentedIdeal prev = i;
    for (unsigned k = 1; k <= sat.exponent + 1; ++k) {
      auto cur = ideal_colon(prev, f);
      CHECK(cur.contains(prev));
      if (k <= sat.exponent) CHECK_FALSE(prev.contains(cur));
      prev = cur;
    }
    CHECK(ideal_equal(prev, sat.ideal));
    ++cases;

    // Power coherence.
    PresentedIdeal q(r, random_monomial_ideal(2));
    std::uniform_int_distribution<unsigned> e(0, 3);
    unsigned m = e(rng), n = e(rng);
    CHECK(ideal_power(q, m + n).contains(ideal_product(ideal_power(q, m), ideal_power(q, n))));
    ++cases;

    // Intersection is the greatest lower bound on monomial triples.
    PresentedIdeal a(r, random_monomial_ideal(2)), b(r, random_monomial_ideal(2));
    auto ab = ideal_intersect(a, b);
    CHECK(a.contains(ab));
    CHECK(b.contains(ab));
    auto k = ideal_product(a, b);  // contained in both
    CHECK(ab.contains(k));
    ++cases;
  }
  CHECK(cases >= 160);
}
