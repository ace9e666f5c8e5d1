#pragma once

#include <vector>

#include "regseq/monomial.hpp"

namespace regseq {

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coeff;

  bool operator==(const Term& o) const {
    return mono == o.mono && coeff == o.coeff;
  }
};

// Sparse polynomial: terms strictly descending in the owning ring's order,
// no zero coefficients, no duplicate monomials. Construction goes through
// PolyRing so the invariants always hold.
template <class F>
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<F>>& terms() const { return terms_; }

  const Term<F>& lead() const {
    if (terms_.empty()) throw PrecondError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().mono; }
  const typename F::Elem& lead_coeff() const { return lead().coeff; }

  // Total degree; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.deg()));
    return d;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

  // Raw access for PolyRing and the Groebner engine; callers must keep the
  // invariants.
  static Polynomial from_sorted(std::vector<Term<F>> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }
  std::vector<Term<F>>& mutable_terms() { return terms_; }

 private:
  std::vector<Term<F>> terms_;
};

}  // namespace regseq
