#include "formcone/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "formcone/errors.hpp"

namespace formcone {

RingPtr Ring::make(Field field, std::vector<std::string> names, MonomialOrder order) {
  if (names.size() > kMaxVariables)
    throw MathError("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw InputError("duplicate variable name '" + names[i] + "'");
  return RingPtr(new Ring(field, std::move(names), std::move(order)));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(field_, names_, std::move(order)); }

RingPtr Ring::module_ring() const {
  MonomialOrder o = order_;
  o.position_over_term = true;
  return with_order(o);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

const Field& Polynomial::field() const { return ring_->field(); }

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = ring->field().from(c);
  if (v != 0) p.terms_.push_back({Monomial(ring->size()), v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->size());
  m.set(index, 1);
  return term(std::move(ring), m, 1);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto i = ring->index_of(name);
  if (!i) throw InputError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *i);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  Scalar v = ring->field().from(c);
  if (v != 0) p.terms_.push_back({m, v});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  const auto& k = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = k.add(p.terms_.back().coef, k.from(t.coef));
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back({t.mono, k.from(t.coef)});
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw MathError("leading term of the zero polynomial");
  return terms_.front();
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_same(const Polynomial& g, const char* what) const {
  if (!same_ring(ring_, g.ring_))
    throw MathError(std::string("ambient ring mismatch in ") + what);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = field().neg(t.coef);
  return r;
}

namespace {

Polynomial merge(const Polynomial& f, const Polynomial& g, bool subtract) {
  const auto& ord = f.ring()->order();
  const auto& k = f.ring()->field();
  Polynomial r(f.ring());
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && ord.greater(a[i].mono, b[j].mono))) {
      r.push_back_unchecked(a[i++]);
    } else if (i == a.size() || ord.greater(b[j].mono, a[i].mono)) {
      r.push_back_unchecked({b[j].mono, subtract ? k.neg(b[j].coef) : b[j].coef});
      ++j;
    } else {
      Scalar c = subtract ? k.sub(a[i].coef, b[j].coef) : k.add(a[i].coef, b[j].coef);
      if (c != 0) r.push_back_unchecked({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  if (!f.ring_) return g;
  if (!g.ring_) return f;
  f.check_same(g, "addition");
  return merge(f, g, false);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  if (!g.ring_) return f;
  if (!f.ring_) return -g;
  f.check_same(g, "subtraction");
  return merge(f, g, true);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same(g, "multiplication");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  if (f.size() == 1) return g.mul_term(f.terms_[0].mono, f.terms_[0].coef);
  if (g.size() == 1) return f.mul_term(g.terms_[0].mono, g.terms_[0].coef);
  const auto& k = f.field();
  std::vector<Term> prods;
  prods.reserve(f.size() * g.size());
  for (const auto& s : f.terms_)
    for (const auto& t : g.terms_) prods.push_back({s.mono * t.mono, k.mul(s.coef, t.coef)});
  return Polynomial::from_terms(f.ring_, std::move(prods));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Polynomial r(ring_);
  Scalar v = field().from(c);
  if (v == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field().mul(t.coef, v)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of ring terms, but module
  // elements under position-over-term may reorder when components shift.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field().mul(t.coef, c)});
  if (m.component() != 0) return from_terms(ring_, std::move(r.terms_));
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(lead_coef()));
}

void Polynomial::sub_multiple(const Scalar& c, const Monomial& m, const Polynomial& g) {
  const auto& ord = ring_->order();
  const auto& k = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial bm = b[j].mono * m;
    if (i == a.size()) {
      out.push_back({bm, k.neg(k.mul(c, b[j].coef))});
      ++j;
      continue;
    }
    auto cmp = ord.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({bm, k.neg(k.mul(c, b[j].coef))});
      ++j;
    } else {
      Scalar v = k.sub(a[i].coef, k.mul(c, b[j].coef));
      if (v != 0) out.push_back({bm, std::move(v)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

Term Polynomial::pop_lead() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->size() != ring_->size() || !(target->field() == ring_->field()))
    throw MathError("cannot move polynomial between incompatible rings");
  return from_terms(target, terms_);
}

Polynomial Polynomial::map_variables(const RingPtr& target,
                                     std::span<const std::size_t> image) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) m.set(image[i], m[image[i]] + t.mono[i]);
    m.set_component(t.mono.component());
    out.push_back({m, t.coef});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::map_by_name(const RingPtr& target) const {
  std::vector<std::size_t> image(ring_->size(), 0);
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto j = target->index_of(ring_->names()[i]);
    if (j) {
      image[i] = *j;
    } else if (uses_variable(i)) {
      throw MathError("variable '" + ring_->names()[i] + "' missing in target ring");
    }
  }
  return map_variables(target, image);
}

Polynomial Polynomial::substitute(const RingPtr& target, std::span<const Polynomial> images) const {
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(target, 1));
    while (p.size() <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial acc = constant(target, t.coef);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) acc = acc * power(i, t.mono[i]);
    result += acc;
  }
  return result;
}

bool Polynomial::uses_variable(std::size_t i) const {
  for (const auto& t : terms_)
    if (t.mono[i]) return true;
  return false;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coef != g.terms_[i].coef)
      return false;
  return true;
}

std::string to_string(const Scalar& c) { return c.get_str(); }

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    // Over F_p print residues in the symmetric range for readability.
    mpq_class c = t.coef;
    if (field().is_prime_field() && c > field().characteristic() / 2)
      c -= field().characteristic();
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool one = t.mono.is_one();
    if (one) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += to_string(t.mono, *ring_);
    }
  }
  return out;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    case ArithOp::scalar:
      if (!f.is_constant()) throw MathError("scalar operand must be a constant");
      return g.scale(f.is_zero() ? Scalar(0) : f.lead_coef());
  }
  throw MathError("unknown arithmetic operation");
}

}  // namespace formcone
