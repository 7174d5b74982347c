#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "formcone/groebner.hpp"

namespace formcone {

// Ideal of the ambient polynomial ring with a lazily computed, shareable
// reduced Gröbner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens, GbOptions opts = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GbOptions& options() const { return opts_; }
  // Thread-safe; computed on first use.
  const GroebnerBasis& gb() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const { return gb().is_unit_ideal(); }
  bool is_zero() const { return gb().empty(); }
  Polynomial reduce(const Polynomial& f) const { return normal_form(f, gb()); }

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  GbOptions opts_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Ideal of A = P/base, stored as the ideal generators + base of P. All
// operations carry the base along, so the represented ideal always contains it.
class PresentedIdeal {
 public:
  PresentedIdeal() = default;
  PresentedIdeal(RingPtr ring, std::vector<Polynomial> gens,
                 std::shared_ptr<const Ideal> base = nullptr, GbOptions opts = {});

  const RingPtr& ring() const { return full_.ring(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::shared_ptr<const Ideal>& base() const { return base_; }
  const Ideal& ideal() const { return full_; }
  const GroebnerBasis& gb() const { return full_.gb(); }
  const GbOptions& options() const { return full_.options(); }

  bool contains(const Polynomial& f) const { return full_.contains(f); }
  bool contains(const PresentedIdeal& other) const { return full_.contains(other.full_); }
  bool is_unit() const { return full_.is_unit(); }
  // Same base, new generators.
  PresentedIdeal with_generators(std::vector<Polynomial> gens) const;

  std::string str() const;

 private:
  std::vector<Polynomial> gens_;
  std::shared_ptr<const Ideal> base_;
  Ideal full_;
};

std::shared_ptr<const Ideal> make_base(RingPtr ring, std::vector<Polynomial> gens,
                                       GbOptions opts = {});

PresentedIdeal ideal_sum(const PresentedIdeal& i, const PresentedIdeal& j);
PresentedIdeal ideal_product(const PresentedIdeal& i, const PresentedIdeal& j);
// q^0 = (1).
PresentedIdeal ideal_power(const PresentedIdeal& q, unsigned n);
PresentedIdeal ideal_intersect(const PresentedIdeal& i, const PresentedIdeal& j);
PresentedIdeal ideal_colon(const PresentedIdeal& i, const Polynomial& f);
PresentedIdeal ideal_colon_ideal(const PresentedIdeal& i, const PresentedIdeal& j);

struct Saturation {
  PresentedIdeal ideal;
  // First k with (I : f^k) = (I : f^(k+1)).
  unsigned exponent = 0;
};
Saturation saturate(const PresentedIdeal& i, const Polynomial& f);

// I ∩ k[remaining variables], returned in the same ambient ring.
PresentedIdeal eliminate(const PresentedIdeal& i, const std::vector<std::size_t>& vars);

// Krull dimension of P/(I + base); nullopt when the ideal is the unit ideal.
std::optional<std::size_t> krull_dim(const PresentedIdeal& i);
std::optional<std::size_t> krull_dim(const Ideal& i);

// Standard monomials of a zero-dimensional ideal (a k-basis of P/I); throws
// MathError if P/I is not finite-dimensional.
std::vector<Monomial> standard_monomials(const Ideal& i);
// dim_k P/I, or nullopt when infinite.
std::optional<std::size_t> colength(const Ideal& i);

bool ideal_equal(const PresentedIdeal& i, const PresentedIdeal& j);
bool ideal_member(const Polynomial& f, const PresentedIdeal& i);

// Plain ideal operations on P.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& f);
// Generators of a ∩ k[vars not listed], as polynomials of the same ring.
std::vector<Polynomial> elimination_generators(const Ideal& a, const std::vector<std::size_t>& vars);
// Fresh variable name not present in `names`.
std::string fresh_name(const std::string& stem, const std::vector<std::string>& names);

}  // namespace formcone
