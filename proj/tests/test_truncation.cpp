#include "doctest.h"

#include "formcone/errors.hpp"
#include "formcone/lzero.hpp"
#include "formcone/truncation.hpp"
#include "test_util.hpp"

using namespace formcone;
using namespace formcone::testing;

namespace {

FiltrationContext make_ctx(std::vector<std::string> vars, const std::string& base,
                           const std::string& q, const std::string& system = "") {
  auto r = ring_qq(std::move(vars));
  auto list = [&](const std::string& s) { return s.empty() ? std::vector<Polynomial>{} : Ps(r, s); };
  std::vector<FiltrationContext::ClaimedElement> sys;
  for (auto& a : list(system)) sys.push_back({a, std::nullopt});
  return FiltrationContext::make(r, list(base), {}, list(q), sys);
}

const char* kSemigroup = "X^4 - Y*Z, Y^3 - X*Z, Z^2 - X^3*Y^2";

GradedElement y(const GradedQuotientPresentation& g, std::size_t j) {
  return {Polynomial::variable(g.ring, g.num_x + j), 1};
}

// Does the lzero verdict at (n, l) match brute force in degree <= cap?
void check_lzero_agreement(const FiltrationContext& ctx, unsigned n, unsigned cap) {
  auto rec = lzero_at(ctx, n);
  auto brute = truncated_lzero(ctx, n, rec.stabilized_l, cap);
  for (const auto& g : brute.kernel) CHECK(rec.U.contains(g));
  if (!brute.vanishing) CHECK_FALSE(rec.vanishing);
  bool low_witness = false;
  for (const auto& q : rec.quotient_generators)
    if (q.total_degree() <= cap) low_witness = true;
  if (low_witness) CHECK_FALSE(brute.vanishing);
  if (rec.vanishing) CHECK(brute.vanishing);
}

}  // namespace

TEST_CASE("component_basis examples") {
  auto plane = make_ctx({"X", "Y"}, "", "X, Y");
  auto b = component_basis(plane.form_module(), 2);
  CHECK(b.dimension == 3);
  CHECK(b.monomials.size() == 3);
  auto cone = make_ctx({"X", "Y", "Z"}, kSemigroup, "X, Y, Z");
  CHECK(component_basis(cone.form_module(), 3).dimension == 4);
  auto fat = make_ctx({"x"}, "x^2", "x");
  CHECK(component_basis(fat.form_module(), 2).dimension == 0);
  CHECK(component_basis(fat.form_module(), 2).monomials.empty());
}

TEST_CASE("multiplication_matrix examples") {
  auto line = make_ctx({"X"}, "", "X");
  auto m = multiplication_matrix(line.form_module(), y(line.form_module(), 0), 1);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m.at(0, 0) == 1);

  auto cone = make_ctx({"X", "Y", "Z"}, kSemigroup, "X, Y, Z");
  const auto& g = cone.form_module();
  auto mx = multiplication_matrix(g, y(g, 0), 1);
  CHECK(mx.cols() == 3);
  CHECK(mx.rows() == 3);
  CHECK(mx.rank() == 2);
  auto zero = multiplication_matrix(g, {Polynomial(g.ring), 1}, 1);
  CHECK(zero.is_zero());
}

TEST_CASE("truncated_regularity examples") {
  auto plane = make_ctx({"X", "Y"}, "", "X, Y");
  CHECK(truncated_regularity(plane.form_module(), y(plane.form_module(), 0), 5).regular);

  auto cone = make_ctx({"X", "Y", "Z"}, kSemigroup, "X, Y, Z");
  const auto& g = cone.form_module();
  auto x = truncated_regularity(g, y(g, 0), 5);
  CHECK_FALSE(x.regular);
  CHECK(x.first_failure == 1u);
  REQUIRE(x.kernel_element.has_value());
  // The kernel is spanned by the class of Z.
  CHECK(g.ideal.contains(*x.kernel_element - Polynomial::variable(g.ring, g.num_x + 2).scale(
                                                  x.kernel_element->lead_coef())));
  auto z = truncated_regularity(g, y(g, 2), 5);
  CHECK_FALSE(z.regular);
  CHECK(z.first_failure == 1u);
}

TEST_CASE("truncated_lzero agrees with lzero_at") {
  auto principal = make_ctx({"X", "Y", "Z"}, kSemigroup, "X", "X");
  for (unsigned n = 0; n <= 4; ++n) check_lzero_agreement(principal, n, 6);
  auto emb = make_ctx({"x", "y"}, "x^2, x*y", "x, y", "y");
  for (unsigned n = 0; n <= 4; ++n) check_lzero_agreement(emb, n, 6);
  auto brute = truncated_lzero(emb, 2, 2, 4);
  CHECK_FALSE(brute.vanishing);
  auto maximal = make_ctx({"X", "Y", "Z"}, kSemigroup, "X, Y, Z", "X");
  for (unsigned n = 0; n <= 4; ++n) check_lzero_agreement(maximal, n, 6);
}

TEST_CASE("Hilbert values from colengths") {
  auto cone = make_ctx({"X", "Y", "Z"}, kSemigroup, "X, Y, Z");
  CHECK(hilbert_by_colength(cone, 5) == std::vector<std::size_t>{1, 3, 3, 4, 4, 4});
  auto plane = make_ctx({"x", "y"}, "", "x");
  CHECK_THROWS_AS(hilbert_by_colength(plane, 2), MathError);
}

TEST_CASE("randomized: truncated and exact regularity agree") {
  std::mt19937 rng(555);
  std::vector<const char*> bases{"x*y", "x^2, x*y", "x*y - z^2", "x*z, y*z", "x^3 - y^2",
                                 "x^2*y, z^2", "y^2 - x*z"};
  int cases = 0;
  for (const char* base : bases) {
    auto ctx = make_ctx({"x", "y", "z"}, base, "x, y, z");
    const auto& g = ctx.form_module();
    CHECK(hilbert_function(g, 4) == hilbert_by_colength(ctx, 4));
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int t = 0; t < 5; ++t) {
      Polynomial b(g.ring);
      for (std::size_t j = 0; j < g.num_y(); ++j)
        b += Polynomial::variable(g.ring, g.num_x + j).scale(coef(rng));
      b = g.ideal.reduce(b);
      if (b.is_zero()) continue;
      bool exact = is_regular_element(g, b).regular;
      bool trunc = truncated_regularity(g, {b, 1}, 5).regular;
      CHECK(exact == trunc);
      ++cases;
    }
  }
  CHECK(cases >= 25);
}
