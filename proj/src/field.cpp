#include "formcone/field.hpp"

#include "formcone/errors.hpp"

namespace formcone {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("characteristic " + std::to_string(p) +
                     " is not a prime below 2^31");
  return Field(Kind::prime, static_cast<std::uint32_t>(p));
}

namespace {

mpz_class mod_p(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Scalar Field::from(const mpq_class& q) const {
  if (kind_ == Kind::rationals) {
    mpq_class r(q);
    r.canonicalize();
    return r;
  }
  mpz_class num = mod_p(q.get_num(), p_);
  mpz_class den = mod_p(q.get_den(), p_);
  if (den == 0) throw MathError("denominator vanishes modulo " + std::to_string(p_));
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  return mpq_class(mod_p(num * den_inv, p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= p_) s -= p_;
  return mpq_class(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += p_;
  return mpq_class(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) return a * b;
  return mpq_class(mpz_class(a.get_num() * b.get_num()) % p_);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::rationals) return -a;
  if (a == 0) return a;
  return mpq_class(p_ - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw MathError("division by zero");
  if (kind_ == Kind::rationals) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mpz_class(p_).get_mpz_t());
  return mpq_class(r);
}

std::string Field::name() const {
  return kind_ == Kind::rationals ? "QQ" : "FP " + std::to_string(p_);
}

}  // namespace formcone
