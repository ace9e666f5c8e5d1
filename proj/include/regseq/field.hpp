#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "regseq/errors.hpp"

namespace regseq {

// Prime field GF(p), p an odd prime < 2^31. Elements are canonical residues
// in [0, p).
class GF {
 public:
  using Elem = std::uint32_t;

  explicit GF(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw PrecondError("GF modulus must be a prime below 2^31, got " +
                         std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return Elem((std::uint64_t(a) * b) % p_);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw ZeroArgumentError("inverse of 0 in " + name());
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return Elem(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Elem(r);
  }
  // Decimal digit string of arbitrary length, reduced mod p.
  Elem from_digits(const std::string& digits) const {
    std::uint64_t acc = 0;
    for (char c : digits) acc = (acc * 10 + std::uint64_t(c - '0')) % p_;
    return Elem(acc);
  }

  std::string str(Elem a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  bool operator==(const GF& o) const { return p_ == o.p_; }
  bool operator!=(const GF& o) const { return p_ != o.p_; }

 private:
  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

// The rationals with arbitrary-precision arithmetic. Elements are always in
// lowest terms with positive denominator (mpq_class keeps them canonical).
class QQ {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw ZeroArgumentError("inverse of 0 in QQ");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_digits(const std::string& digits) const {
    return Elem(mpz_class(digits, 10));
  }

  std::string str(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }

  bool operator==(const QQ&) const { return true; }
  bool operator!=(const QQ&) const { return false; }
};

}  // namespace regseq
