#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace formcone {

inline constexpr std::size_t kMaxVariables = 24;

// Exponent vector over an ordered variable list, optionally tagged with a
// free-module component (0 for ring elements). Fixed capacity, no allocation.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exps);
  static Monomial from(std::span<const std::uint32_t> exps, std::uint32_t component = 0);

  std::size_t size() const { return size_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e);
  std::uint32_t degree() const { return degree_; }
  std::uint32_t component() const { return component_; }
  void set_component(std::uint32_t c) { component_ = static_cast<std::uint16_t>(c); }
  bool is_one() const { return degree_ == 0; }

  // Product; components add, so at most one factor may be a module monomial.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  // True iff a | b (same component).
  friend bool divides(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.component_ == b.component_ && a.exps_ == b.exps_;
  }

  std::vector<std::uint32_t> exponents() const;
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
  std::uint16_t component_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { degrevlex, lex, block, weighted };

// A monomial order. block(k) compares the first k variables by degrevlex,
// breaking ties by degrevlex on the rest. weighted compares a nonnegative
// weighted degree first, then degrevlex. With position_over_term set, module
// monomials compare by component first (lower component index is larger).
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::size_t block_size = 0;
  std::vector<std::uint32_t> weights;
  bool position_over_term = false;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0, {}, false}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::block, k, {}, false}; }
  static MonomialOrder weighted(std::vector<std::uint32_t> w) {
    return {OrderKind::weighted, 0, std::move(w), false};
  }

  // Throws MathError if the lengths differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace formcone
