#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formcone/filtration.hpp"

namespace formcone {

// Standard monomials of weighted degree n: a k-basis of the degree-n
// component. Throws MathError if the component is not finite-dimensional.
std::vector<Monomial> component_monomials(const GradedQuotientPresentation& g, unsigned n,
                                          const std::vector<Polynomial>& modulo = {});

// dim_k of the components 0..upto.
std::vector<std::size_t> hilbert_function(const GradedQuotientPresentation& g, unsigned upto);

std::optional<std::size_t> graded_dim(const GradedQuotientPresentation& g);

struct RegularityResult {
  bool regular = false;
  // Nonzero element killed by b, when not regular.
  std::optional<Polynomial> witness;
};

// Is the homogeneous b a nonzerodivisor on g / (modulo)? Throws MathError
// for inhomogeneous b.
RegularityResult is_regular_element(const GradedQuotientPresentation& g, const Polynomial& b,
                                    const std::vector<Polynomial>& modulo = {});

struct ColonChainResult {
  bool holds = true;
  std::optional<unsigned> first_failure;
};

// (q^(n+d) + I_M) : b == q^n + I_M for n = 0..n_max, for b in q^d + I_M.
ColonChainResult colon_chain_regularity(const FiltrationContext& ctx, const Polynomial& b,
                                        unsigned d, unsigned n_max);

struct GradeReport {
  // nullopt means the ideal times G is all of G (grade +infinity).
  std::optional<std::size_t> value;
  std::string method;
  // Regular sequence: element k is regular modulo the earlier ones.
  std::vector<GradedElement> sequence;
  // Koszul certificate: the top nonvanishing index and a cycle that is not a
  // boundary there.
  std::optional<std::size_t> koszul_index;
  FreeModuleElement koszul_cycle;
  std::vector<Polynomial> generators;
  // Recursion certificate: ambient elements behind `sequence`, and the first
  // nonvanishing index of the final quotient with generators of the quotient.
  std::vector<Polynomial> sources;
  std::optional<unsigned> lzero_n;
  std::vector<Polynomial> lzero_witness;
};

// grade(Q, G) = r - max{i : H_i(Q; G) != 0} for Q = (gens).
GradeReport koszul_grade(const GradedQuotientPresentation& g, const std::vector<Polynomial>& gens,
                         const std::vector<Polynomial>& modulo = {});

// Variables of the presentation that are nonzero in G; they generate the
// homogeneous maximal ideal.
std::vector<Polynomial> maximal_ideal_generators(const GradedQuotientPresentation& g);
GradeReport depth(const GradedQuotientPresentation& g);

bool is_system_of_parameters(const GradedQuotientPresentation& g,
                             const std::vector<Polynomial>& elems);

// Koszul differential d_i applied to a vector indexed by i-subsets.
FreeModuleElement koszul_differential(const std::vector<Polynomial>& gens, std::size_t i,
                                      const FreeModuleElement& v);

}  // namespace formcone
