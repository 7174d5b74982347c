#include "formcone/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "formcone/errors.hpp"

namespace formcone {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw MathError("at most " + std::to_string(kMaxVariables) + " variables supported");
  size_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (auto e : exps) set(i++, e);
}

Monomial Monomial::from(std::span<const std::uint32_t> exps, std::uint32_t component) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  m.set_component(component);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw MathError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size_ != b.size_) throw MathError("monomial length mismatch");
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw MathError("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.component_ = static_cast<std::uint16_t>(a.component_ + b.component_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  r.component_ = static_cast<std::uint16_t>(a.component_ - b.component_);
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.component_ != b.component_ || a.degree_ > b.degree_) return false;
  for (std::size_t i = 0; i < a.size_; ++i)
    if (a.exps_[i] > b.exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  r.component_ = a.component_;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size_; ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

std::vector<std::uint32_t> Monomial::exponents() const {
  return {exps_.begin(), exps_.begin() + size_};
}

std::size_t Monomial::hash() const {
  std::size_t h = component_ * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < size_; ++i) h = (h ^ exps_[i]) * 0x100000001b3ULL;
  return h;
}

namespace {

std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw MathError("monomial length mismatch in comparison");
  if (position_over_term && a.component() != b.component())
    return b.component() <=> a.component();
  std::strong_ordering r = std::strong_ordering::equal;
  switch (kind) {
    case OrderKind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      r = degrevlex_range(a, b, 0, a.size());
      break;
    case OrderKind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      break;
    case OrderKind::block: {
      std::size_t k = std::min(block_size, a.size());
      r = degrevlex_range(a, b, 0, k);
      if (r == 0) r = degrevlex_range(a, b, k, a.size());
      break;
    }
    case OrderKind::weighted: {
      std::uint64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t w = i < weights.size() ? weights[i] : 1;
        wa += w * a[i];
        wb += w * b[i];
      }
      if (wa != wb) return wa <=> wb;
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      r = degrevlex_range(a, b, 0, a.size());
      break;
    }
  }
  if (r != 0) return r;
  return b.component() <=> a.component();
}

}  // namespace formcone
