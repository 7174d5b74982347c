#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "formcone/field.hpp"
#include "formcone/monomial.hpp"

namespace formcone {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ordered variable list, coefficient field and active monomial order.
class Ring {
 public:
  static RingPtr make(Field field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::degrevlex());

  const Field& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  // Same ring with position-over-term comparison for free-module elements.
  RingPtr module_ring() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  Ring(Field f, std::vector<std::string> n, MonomialOrder o)
      : field_(f), names_(std::move(n)), order_(std::move(o)) {}
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Scalar coef;
};

// Sparse polynomial (or packed free-module element, see Monomial::component)
// with terms sorted strictly descending in the ring's order and no zero
// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial term(RingPtr ring, const Monomial& m, const Scalar& c = 1);
  // Sorts, combines equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // The order-maximal term. Throws MathError on the zero polynomial.
  const Term& lead() const;
  const Monomial& lead_monomial() const { return lead().mono; }
  const Scalar& lead_coef() const { return lead().coef; }
  std::uint32_t total_degree() const;
  bool is_constant() const { return terms_.empty() || (size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return size() == 1; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  // this -= c * m * g, in place. Used by reduction.
  void sub_multiple(const Scalar& c, const Monomial& m, const Polynomial& g);
  // Removes and returns the lead term.
  Term pop_lead();
  void push_back_unchecked(Term t) { terms_.push_back(std::move(t)); }

  // Re-sorts into a ring with the same variables (possibly another order).
  Polynomial in_ring(const RingPtr& target) const;
  // Variable i goes to target variable image[i].
  Polynomial map_variables(const RingPtr& target, std::span<const std::size_t> image) const;
  // Maps variables by name; every variable occurring in a term must exist in target.
  Polynomial map_by_name(const RingPtr& target) const;
  // Variable i is replaced by images[i] (all in one target ring).
  Polynomial substitute(const RingPtr& target, std::span<const Polynomial> images) const;
  bool uses_variable(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void check_same(const Polynomial& g, const char* what) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul, scalar };

// Dispatch form of the arithmetic operators. For scalar, f must be constant
// and supplies the factor.
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const Scalar& c);

}  // namespace formcone
