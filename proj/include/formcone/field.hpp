#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace formcone {

// Field elements are stored as GMP rationals. Over F_p the stored value is
// always the integer residue in [0, p).
using Scalar = mpq_class;

class Field {
 public:
  enum class Kind { rationals, prime };

  static Field rationals() { return Field(Kind::rationals, 0); }
  // Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }

  // Maps an arbitrary rational into canonical form for this field.
  Scalar from(const mpq_class& q) const;
  Scalar from_int(long v) const { return from(mpq_class(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  // Throws MathError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace formcone
