#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "regseq/errors.hpp"

namespace regseq {

// Exponent vector; the length always equals the arity of the ring it lives
// in. The unit monomial has all exponents zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(unsigned arity) : e_(arity, 0u) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}
  Monomial(std::initializer_list<unsigned> exps) : e_(exps) {}

  unsigned arity() const { return static_cast<unsigned>(e_.size()); }
  unsigned operator[](unsigned i) const { return e_[i]; }
  unsigned& operator[](unsigned i) { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned deg() const {
    return std::accumulate(e_.begin(), e_.end(), 0u);
  }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<unsigned> e_;
};

inline void check_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw ArityError("monomial arity mismatch: " + std::to_string(a.arity()) +
                     " vs " + std::to_string(b.arity()));
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  Monomial r(a.arity());
  for (unsigned i = 0; i < a.arity(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  check_arity(a, b);
  for (unsigned i = 0; i < a.arity(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, requires b | a
  check_arity(a, b);
  Monomial r(a.arity());
  for (unsigned i = 0; i < a.arity(); ++i) {
    if (b[i] > a[i]) throw PrecondError("monomial division is not exact");
    r[i] = a[i] - b[i];
  }
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  Monomial r(a.arity());
  for (unsigned i = 0; i < a.arity(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  for (unsigned i = 0; i < a.arity(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace regseq
