#pragma once

#include <cstdint>
#include <vector>

#include "formcone/polynomial.hpp"

namespace formcone {

struct GbOptions {
  // Cap on S-pair reductions; exceeding it throws BudgetExceeded.
  std::uint64_t max_reductions = 1'000'000;
};

// Reduced Gröbner basis (monic, interreduced, sorted ascending by leading
// monomial) of an ideal or of a submodule of a free module.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elems, bool reduced)
      : ring_(std::move(ring)), elems_(std::move(elems)), reduced_(reduced) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool reduced() const { return reduced_; }
  // True iff the basis contains a nonzero constant.
  bool is_unit_ideal() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elems_ == b.elems_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elems_;
  bool reduced_ = false;
};

// Remainder of full division of f by the given polynomials.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const GbOptions& opts = {});

bool is_groebner(const std::vector<Polynomial>& g);

// Exact quotient f / g; throws MathError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// Element of the free module R^rank, stored componentwise.
struct FreeModuleElement {
  std::vector<Polynomial> components;

  std::size_t rank() const { return components.size(); }
  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const FreeModuleElement&, const FreeModuleElement&) = default;
};

FreeModuleElement unit_vector(const RingPtr& ring, std::size_t rank, std::size_t i);

// Packs into a single polynomial over `module_ring` (components offset by
// `offset`), and back.
Polynomial pack(const FreeModuleElement& v, const RingPtr& module_ring, std::uint32_t offset = 0);
FreeModuleElement unpack(const Polynomial& p, const RingPtr& ring, std::size_t rank,
                         std::uint32_t offset = 0);

// Gröbner basis of the submodule generated by `gens` (position over term on
// top of the ring order).
GroebnerBasis module_groebner(const std::vector<FreeModuleElement>& gens, const RingPtr& ring,
                              const GbOptions& opts = {});
Polynomial module_normal_form(const FreeModuleElement& v, const GroebnerBasis& g);

// Generators of the kernel of R^r -> R^s sending e_i to columns[i]; when
// `modulo` is nonempty the map is taken over R/(modulo), i.e. returned
// vectors s satisfy sum s_i columns[i] in modulo * R^s.
std::vector<FreeModuleElement> syzygy_basis(const std::vector<FreeModuleElement>& columns,
                                            const std::vector<Polynomial>& modulo = {},
                                            const GbOptions& opts = {});

}  // namespace formcone
