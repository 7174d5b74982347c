#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "formcone/graded.hpp"

namespace formcone {

struct LZeroParams {
  unsigned n_max = 10;
  unsigned l_max = 12;
  // Consecutive equalities U_l = U_(l+1) = ... needed to stop.
  unsigned window = 2;
  // Degrees searched above the largest initial degree.
  unsigned search_extra_degree = 2;
  // Pseudorandom combinations tried per degree.
  unsigned search_random = 40;
};

struct LZeroRecord {
  unsigned n = 0;
  unsigned stabilized_l = 0;
  unsigned window = 0;
  // Intersection of the colons (q^(n+l c_i) + I_M) : a_i^l.
  PresentedIdeal U;
  bool vanishing = true;
  // Basis elements of U that are nonzero modulo q^n + I_M.
  std::vector<Polynomial> quotient_generators;
  // Stabilization is detected by a window, never certified.
  bool certified = false;
  // "stabilized" or "budget".
  std::string status;
};

LZeroRecord lzero_at(const FiltrationContext& ctx, unsigned n, const LZeroParams& params = {});
// Same with an explicit system (element, degree) instead of the context's.
LZeroRecord lzero_at(const FiltrationContext& ctx, const std::vector<SystemElement>& system,
                     unsigned n, const LZeroParams& params = {});

struct LZeroScan {
  std::vector<LZeroRecord> records;
  std::optional<unsigned> first_nonvanishing;
  bool budget_hit = false;
  bool all_vanish() const { return !first_nonvanishing; }
};

// Records for n = 0..n_max; with stop_at_first the scan ends at the first
// nonvanishing n.
LZeroScan lzero_scan(const FiltrationContext& ctx, const LZeroParams& params = {},
                     bool stop_at_first = false);

struct RegularCandidate {
  // b = sum of lambda_k m_k a_(i_k) in the ambient ring, all terms in q^degree.
  Polynomial b;
  unsigned degree = 0;
  GradedElement form;
};

// Search for b in aA whose degree-d form is regular on G_M(q). Every returned
// candidate is verified exactly; nullopt means the search budget ran out.
std::optional<RegularCandidate> find_regular_combination(const FiltrationContext& ctx,
                                                         const LZeroParams& params = {});

// Initial forms of the system in G_M(q).
std::vector<GradedElement> system_forms(const FiltrationContext& ctx);

struct VanishingRegularityResult {
  // Left side: Lzero vanishes for all n <= n_max.
  bool lzero_all_vanish = true;
  std::optional<unsigned> first_nonvanishing;
  std::vector<Polynomial> lzero_witness;
  bool budget_hit = false;
  // Right side, exact: (0 :_G a*G) = 0.
  bool regular_exists = false;
  std::optional<Polynomial> annihilator_witness;
  std::optional<RegularCandidate> regular_witness;
  bool agree = false;
  // "agree", "raise-bounds", "disagree"; "search-budget" when the right side
  // holds but no explicit element was found.
  std::string status;
};

VanishingRegularityResult vanishing_regularity_check(const FiltrationContext& ctx, const LZeroParams& params = {});

// Grade of a*G_A(q) on G_M(q) by repeated quotients by regular elements.
// Throws BudgetExceeded when the regular-element search fails.
GradeReport grade_via_recursion(const FiltrationContext& ctx, const LZeroParams& params = {});

struct CriterionReport {
  GradeReport depth;
  std::optional<std::size_t> dim;
  GradeReport grade_direct;
  GradeReport grade_recursion;
  std::vector<LZeroRecord> lzero_table;
  bool sop_flag = false;
  bool cm_verdict = false;
  std::optional<std::pair<std::size_t, std::size_t>> predicted_band;
  std::vector<std::string> notes;
};

// Throws MathError for an empty system or one with an element in q^cap, and
// InternalError when the grade computations disagree.
CriterionReport criterion_report(const FiltrationContext& ctx, const LZeroParams& params = {});

// The system (a_i^2, 2 c_i).
std::vector<SystemElement> squared_system(const FiltrationContext& ctx);

struct RadicalCheck {
  bool equal = true;
  std::optional<unsigned> first_difference;
  // n where either scan ran out of l_max; those n are not compared.
  std::vector<unsigned> budget_limited;
};

// Compare the U ideals of the context's system and `alt` for n <= n_max.
RadicalCheck radical_invariance_check(const FiltrationContext& ctx,
                                      const std::vector<SystemElement>& alt,
                                      const LZeroParams& params = {});

}  // namespace formcone
