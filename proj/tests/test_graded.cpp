#include "doctest.h"

#include "formcone/errors.hpp"
#include "formcone/graded.hpp"
#include "test_util.hpp"

using namespace formcone;
using namespace formcone::testing;

namespace {

FiltrationContext make_ctx(std::vector<std::string> vars, const std::string& base,
                           const std::string& module, const std::string& q) {
  auto r = ring_qq(std::move(vars));
  auto list = [&](const std::string& s) { return s.empty() ? std::vector<Polynomial>{} : Ps(r, s); };
  return FiltrationContext::make(r, list(base), list(module), list(q), {});
}

FiltrationContext semigroup(const std::string& q) {
  return make_ctx({"X", "Y", "Z"}, "X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2", "", q);
}

// dim_k (q^n + I_M)/(q^(n+1) + I_M) from colengths only.
std::vector<std::size_t> colength_hilbert(const FiltrationContext& ctx, unsigned upto) {
  std::vector<std::size_t> out;
  for (unsigned n = 0; n <= upto; ++n)
    out.push_back(*colength(ctx.module_power(n + 1).ideal()) -
                  *colength(ctx.module_power(n).ideal()));
  return out;
}

Polynomial y(const GradedQuotientPresentation& g, std::size_t j) {
  return Polynomial::variable(g.ring, g.num_x + j);
}

}  // namespace

TEST_CASE("Hilbert function of the cone of k[t^4,t^5,t^11]") {
  auto ctx = semigroup("X, Y, Z");
  std::vector<std::size_t> expected{1, 3, 3, 4, 4, 4};
  CHECK(hilbert_function(ctx.form_module(), 5) == expected);
  CHECK(hilbert_function(tangent_cone_fast_path(ctx), 5) == expected);
  CHECK(colength_hilbert(ctx, 5) == expected);
}

TEST_CASE("Hilbert function agrees with colength differences") {
  for (const char* q : {"X", "X, Y", "Y^2, Z"}) {
    auto ctx = semigroup(q);
    CHECK(hilbert_function(ctx.form_module(), 5) == colength_hilbert(ctx, 5));
  }
  auto ctx = make_ctx({"x", "y", "z"}, "x*y - z^2", "x^3", "x, y, z");
  CHECK(hilbert_function(ctx.form_module(), 6) == colength_hilbert(ctx, 6));
}

TEST_CASE("infinite components are reported") {
  auto ctx = make_ctx({"x", "y"}, "", "", "x");
  CHECK_THROWS_AS(hilbert_function(ctx.form_module(), 2), MathError);
}

TEST_CASE("depth of the cone is zero, witnessed by Z") {
  auto ctx = semigroup("X, Y, Z");
  const auto& g = ctx.form_module();
  CHECK(graded_dim(g) == 1u);
  auto d = depth(g);
  REQUIRE(d.value.has_value());
  CHECK(*d.value == 0);
  REQUIRE(d.koszul_index == d.generators.size());
  // The cycle is one element killing the maximal ideal.
  REQUIRE(d.koszul_cycle.rank() == 1);
  const auto& w = d.koszul_cycle.components[0];
  CHECK_FALSE(g.ideal.contains(w));
  for (const auto& v : d.generators) CHECK(g.ideal.contains(w * v));
  // y3 stands for Z.
  auto z = y(g, 2);
  CHECK_FALSE(g.ideal.contains(z));
  for (const auto& v : d.generators) CHECK(g.ideal.contains(z * v));
}

TEST_CASE("regular elements of the cone") {
  auto ctx = semigroup("X, Y, Z");
  const auto& g = ctx.form_module();
  auto x = is_regular_element(g, y(g, 0));
  CHECK_FALSE(x.regular);
  REQUIRE(x.witness.has_value());
  CHECK(g.ideal.contains(*x.witness * y(g, 0)));
  CHECK_FALSE(g.ideal.contains(*x.witness));
  CHECK_THROWS_AS(is_regular_element(g, y(g, 0) + y(g, 1) * y(g, 1)), MathError);
  CHECK(is_system_of_parameters(g, {y(g, 0)}));
  CHECK_FALSE(is_system_of_parameters(g, {y(g, 2)}));
  // Modulo Z the form of X is regular.
  CHECK(is_regular_element(g, y(g, 0), {y(g, 2)}).regular);
}

TEST_CASE("principal q gives a Cohen-Macaulay form ring") {
  auto ctx = semigroup("X");
  const auto& g = ctx.form_module();
  CHECK(graded_dim(g) == 1u);
  CHECK(depth(g).value == 1u);
  CHECK(is_regular_element(g, y(g, 0)).regular);
}

TEST_CASE("Koszul grade in a polynomial ring") {
  auto ctx = make_ctx({"x", "y"}, "", "", "x, y");
  const auto& g = ctx.form_module();
  CHECK(hilbert_function(g, 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(koszul_grade(g, {y(g, 0), y(g, 1)}).value == 2u);
  CHECK(koszul_grade(g, {y(g, 0)}).value == 1u);
  CHECK(koszul_grade(g, {y(g, 0) * y(g, 1), y(g, 0) * y(g, 0)}).value == 1u);
  CHECK(depth(g).value == 2u);
  // The unit ideal has infinite grade.
  CHECK_FALSE(koszul_grade(g, {Polynomial::constant(g.ring, 1)}).value.has_value());
}

TEST_CASE("Koszul certificates are cycles and not boundaries") {
  auto ctx = make_ctx({"x", "y", "z"}, "x*z, y*z", "", "x, y, z");
  const auto& g = ctx.form_module();
  auto rep = koszul_grade(g, {y(g, 0), y(g, 1), y(g, 2)});
  // Plane union line: x + y + z avoids both associated primes, depth 1.
  REQUIRE(rep.value.has_value());
  CHECK(*rep.value == 1);
  CHECK(is_regular_element(g, y(g, 0) + y(g, 1) + y(g, 2)).regular);
  REQUIRE(rep.koszul_index == 2u);
  std::size_t i = *rep.koszul_index;
  REQUIRE(i >= 1);
  auto dz = koszul_differential(rep.generators, i, rep.koszul_cycle);
  for (const auto& c : dz.components) CHECK(g.ideal.contains(c));
}

TEST_CASE("randomized: colon-chain regularity matches regularity of the form") {
  std::mt19937 rng(99);
  auto ctx = make_ctx({"x", "y", "z"}, "x*y - z^2", "", "x, y, z");
  const auto& g = ctx.form_module();
  auto r = ctx.ring();
  std::vector<std::string> candidates{"x", "y", "z", "x + y", "x*z", "z^2", "x^2 - y*z", "x - z",
                                      "y^2 + x*z", "x*y"};
  int cases = 0;
  for (const auto& c : candidates) {
    auto b = P(r, c);
    unsigned d = b.total_degree();
    auto form = lift_to_form(g, b, d);
    bool reg = is_regular_element(g, form.representative).regular;
    CHECK(colon_chain_regularity(ctx, b, d, 5).holds == reg);
    ++cases;
  }
  // Over x*z = y*z = 0, forms touching z are zero divisors.
  auto ctx2 = make_ctx({"x", "y", "z"}, "x*z, y*z", "", "x, y, z");
  for (const char* c : {"x", "z", "x + z", "y", "x + y + z"}) {
    auto b = P(r, c);
    auto form = lift_to_form(ctx2.form_module(), b.map_by_name(ctx2.ring()), 1);
    bool reg = is_regular_element(ctx2.form_module(), form.representative).regular;
    CHECK(colon_chain_regularity(ctx2, b.map_by_name(ctx2.ring()), 1, 5).holds == reg);
    ++cases;
  }
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < 10; ++t) {
    auto b = P(r, "x").scale(coef(rng)) + P(r, "y").scale(coef(rng)) + P(r, "z").scale(coef(rng));
    if (b.is_zero()) continue;
    auto form = lift_to_form(g, b, 1);
    CHECK(colon_chain_regularity(ctx, b, 1, 4).holds ==
          is_regular_element(g, form.representative).regular);
    ++cases;
  }
  CHECK(cases >= 20);
}
