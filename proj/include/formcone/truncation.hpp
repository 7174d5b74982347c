#pragma once

#include <optional>
#include <vector>

#include "formcone/graded.hpp"
#include "formcone/linalg.hpp"

namespace formcone {

// Degreewise linear algebra over standard-monomial bases, used to
// cross-check the Gröbner-basis path.

struct ComponentBasis {
  unsigned degree = 0;
  std::vector<Monomial> monomials;
  std::size_t dimension = 0;
};

ComponentBasis component_basis(const GradedQuotientPresentation& g, unsigned n);

// Matrix of multiplication by b from degree n to degree n + deg b.
Matrix multiplication_matrix(const GradedQuotientPresentation& g, const GradedElement& b,
                             unsigned n);

struct TruncatedRegularity {
  bool regular = true;
  std::optional<unsigned> first_failure;
  std::optional<Polynomial> kernel_element;
};

// Multiplication by b is injective in degrees 0..n_max.
TruncatedRegularity truncated_regularity(const GradedQuotientPresentation& g,
                                         const GradedElement& b, unsigned n_max);

struct TruncatedLZero {
  bool vanishing = true;
  // Polynomials of degree <= cap with g a_i^l in q^(n + l c_i) + I_M for all i.
  std::vector<Polynomial> kernel;
  std::optional<Polynomial> witness;
};

// Brute force over polynomials of degree <= degree_cap, using only normal
// forms modulo the power ideals.
TruncatedLZero truncated_lzero(const FiltrationContext& ctx, unsigned n, unsigned l,
                               unsigned degree_cap);

// dim_k (q^n + I_M)/(q^(n+1) + I_M) for n = 0..upto, from colengths of the
// power ideals. Throws MathError when a colength is infinite.
std::vector<std::size_t> hilbert_by_colength(const FiltrationContext& ctx, unsigned upto);

}  // namespace formcone
