#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "regseq/errors.hpp"
#include "regseq/ring.hpp"

namespace regseq {

// One term of a free-module element: coeff * mono * e_comp.
template <class F>
struct ModTerm {
  unsigned comp;
  Monomial mono;
  typename F::Elem coeff;

  bool operator==(const ModTerm& o) const {
    return comp == o.comp && mono == o.mono && coeff == o.coeff;
  }
};

// Monomial order on a free module R^r. Convention for component ties:
// the smaller component index is the LARGER basis vector (e_0 > e_1 > ...).
//   top      — compare monomials by the ring order first, then component.
//   pot      — compare components first, then monomials.
//   elim     — components < split beat components >= split; top inside.
//   schreyer — order induced by lead terms of a presentation: compare the
//              products (mono * lead_i) in the parent module's order.
class ModuleOrder {
 public:
  enum class Kind { top, pot, elim, schreyer };

  static ModuleOrder top(TermOrder ring_order) {
    return ModuleOrder(Kind::top, std::move(ring_order), 0);
  }
  static ModuleOrder pot(TermOrder ring_order) {
    return ModuleOrder(Kind::pot, std::move(ring_order), 0);
  }
  static ModuleOrder elim(TermOrder ring_order, unsigned split) {
    return ModuleOrder(Kind::elim, std::move(ring_order), split);
  }
  static ModuleOrder schreyer(std::vector<std::pair<unsigned, Monomial>> leads,
                              std::shared_ptr<const ModuleOrder> parent) {
    ModuleOrder o(Kind::schreyer, TermOrder::grevlex(), 0);
    o.leads_ = std::move(leads);
    o.parent_ = std::move(parent);
    return o;
  }

  Kind kind() const { return kind_; }
  unsigned split() const { return split_; }
  const TermOrder& ring_order() const { return ring_order_; }

  int compare(unsigned ci, const Monomial& mi, unsigned cj,
              const Monomial& mj) const {
    switch (kind_) {
      case Kind::top: {
        int c = ring_order_.compare(mi, mj);
        if (c != 0) return c;
        return cmp_comp(ci, cj);
      }
      case Kind::pot: {
        if (int c = cmp_comp(ci, cj); c != 0) return c;
        return ring_order_.compare(mi, mj);
      }
      case Kind::elim: {
        bool hi = ci < split_, hj = cj < split_;
        if (hi != hj) return hi ? 1 : -1;
        int c = ring_order_.compare(mi, mj);
        if (c != 0) return c;
        return cmp_comp(ci, cj);
      }
      case Kind::schreyer: {
        if (ci >= leads_.size() || cj >= leads_.size())
          throw ArityError("schreyer order: component out of range");
        const auto& [pc_i, lm_i] = leads_[ci];
        const auto& [pc_j, lm_j] = leads_[cj];
        int c = parent_->compare(pc_i, mono_mul(mi, lm_i), pc_j,
                                 mono_mul(mj, lm_j));
        if (c != 0) return c;
        return cmp_comp(ci, cj);
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::top:
        return "top(" + ring_order_.name() + ")";
      case Kind::pot:
        return "pot(" + ring_order_.name() + ")";
      case Kind::elim:
        return "elim(" + std::to_string(split_) + "," + ring_order_.name() + ")";
      case Kind::schreyer:
        return "schreyer/" + parent_->name();
    }
    return "?";
  }

 private:
  ModuleOrder(Kind k, TermOrder ro, unsigned split)
      : kind_(k), ring_order_(std::move(ro)), split_(split) {}

  static int cmp_comp(unsigned ci, unsigned cj) {
    if (ci == cj) return 0;
    return ci < cj ? 1 : -1;
  }

  Kind kind_;
  TermOrder ring_order_;
  unsigned split_;
  std::vector<std::pair<unsigned, Monomial>> leads_;
  std::shared_ptr<const ModuleOrder> parent_;
};

// Sparse element of a free module R^rank: terms strictly descending in the
// owning FreeModule's order, no zero coefficients, no duplicates.
template <class F>
class FreeElement {
 public:
  FreeElement() = default;
  explicit FreeElement(unsigned rank) : rank_(rank) {}

  unsigned rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<ModTerm<F>>& terms() const { return terms_; }

  const ModTerm<F>& lead() const {
    if (terms_.empty()) throw PrecondError("leading term of zero element");
    return terms_.front();
  }

  bool operator==(const FreeElement& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }
  bool operator!=(const FreeElement& o) const { return !(*this == o); }

  static FreeElement from_sorted(unsigned rank, std::vector<ModTerm<F>> ts) {
    FreeElement v(rank);
    v.terms_ = std::move(ts);
    return v;
  }

 private:
  unsigned rank_ = 0;
  std::vector<ModTerm<F>> terms_;
};

// Arithmetic context for R^rank with a fixed module order.
template <class F>
class FreeModule {
 public:
  using Elem = typename F::Elem;
  using Poly = Polynomial<F>;
  using Vec = FreeElement<F>;

  FreeModule(PolyRing<F> ring, unsigned rank, ModuleOrder order)
      : ring_(std::move(ring)), rank_(rank), order_(std::move(order)) {}
  FreeModule(PolyRing<F> ring, unsigned rank)
      : FreeModule(std::move(ring),
                   rank, ModuleOrder::top(ring.order())) {}

  const PolyRing<F>& ring() const { return ring_; }
  const F& field() const { return ring_.field(); }
  unsigned rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }

  FreeModule with_order(ModuleOrder o) const {
    return FreeModule(ring_, rank_, std::move(o));
  }
  FreeModule with_rank(unsigned r) const {
    return FreeModule(ring_, r, order_);
  }

  int compare(const ModTerm<F>& a, const ModTerm<F>& b) const {
    return order_.compare(a.comp, a.mono, b.comp, b.mono);
  }

  // ---- construction -------------------------------------------------------

  Vec zero() const { return Vec(rank_); }

  Vec unit(unsigned i) const {
    if (i >= rank_) throw ArityError("free module unit index out of range");
    return Vec::from_sorted(
        rank_, {ModTerm<F>{i, Monomial(ring_.arity()), field().one()}});
  }

  Vec from_terms(std::vector<ModTerm<F>> ts) const {
    for (const auto& t : ts) {
      if (t.comp >= rank_)
        throw ArityError("free element component out of range");
      if (t.mono.arity() != ring_.arity())
        throw ArityError("free element monomial arity mismatch");
    }
    std::sort(ts.begin(), ts.end(),
              [&](const ModTerm<F>& a, const ModTerm<F>& b) {
                return compare(a, b) > 0;
              });
    std::vector<ModTerm<F>> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      if (!out.empty() && out.back().comp == t.comp &&
          out.back().mono == t.mono)
        out.back().coeff = field().add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out,
                  [&](const ModTerm<F>& t) { return field().is_zero(t.coeff); });
    return Vec::from_sorted(rank_, std::move(out));
  }

  Vec from_components(const std::vector<Poly>& comps) const {
    if (comps.size() != rank_)
      throw ArityError("component count does not match free module rank");
    std::vector<ModTerm<F>> ts;
    for (unsigned i = 0; i < rank_; ++i)
      for (const auto& t : comps[i].terms())
        ts.push_back(ModTerm<F>{i, t.mono, t.coeff});
    return from_terms(std::move(ts));
  }

  std::vector<Poly> to_components(const Vec& v) const {
    check(v);
    std::vector<std::vector<Term<F>>> buckets(rank_);
    for (const auto& t : v.terms())
      buckets[t.comp].push_back(Term<F>{t.mono, t.coeff});
    std::vector<Poly> out;
    out.reserve(rank_);
    for (auto& b : buckets) out.push_back(ring_.from_terms(std::move(b)));
    return out;
  }

  // ---- arithmetic ---------------------------------------------------------

  Vec add(const Vec& a, const Vec& b) const {
    check(a);
    check(b);
    std::vector<ModTerm<F>> out;
    out.reserve(a.size() + b.size());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea && ib != eb) {
      int c = compare(*ia, *ib);
      if (c > 0) {
        out.push_back(*ia++);
      } else if (c < 0) {
        out.push_back(*ib++);
      } else {
        Elem s = field().add(ia->coeff, ib->coeff);
        if (!field().is_zero(s))
          out.push_back(ModTerm<F>{ia->comp, ia->mono, std::move(s)});
        ++ia;
        ++ib;
      }
    }
    out.insert(out.end(), ia, ea);
    out.insert(out.end(), ib, eb);
    return Vec::from_sorted(rank_, std::move(out));
  }

  Vec neg(const Vec& a) const {
    check(a);
    std::vector<ModTerm<F>> out = a.terms();
    for (auto& t : out) t.coeff = field().neg(t.coeff);
    return Vec::from_sorted(rank_, std::move(out));
  }

  Vec sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

  Vec scale(const Vec& a, const Elem& c) const {
    check(a);
    if (field().is_zero(c)) return zero();
    std::vector<ModTerm<F>> out = a.terms();
    for (auto& t : out) t.coeff = field().mul(t.coeff, c);
    return Vec::from_sorted(rank_, std::move(out));
  }

  // (c * m) * a — multiplying by one ring term keeps the order of terms.
  Vec mul_term(const Monomial& m, const Elem& c, const Vec& a) const {
    check(a);
    if (field().is_zero(c)) return zero();
    std::vector<ModTerm<F>> out;
    out.reserve(a.size());
    for (const auto& t : a.terms())
      out.push_back(
          ModTerm<F>{t.comp, mono_mul(t.mono, m), field().mul(t.coeff, c)});
    return Vec::from_sorted(rank_, std::move(out));
  }

  Vec mul_poly(const Poly& p, const Vec& a) const {
    check(a);
    std::vector<ModTerm<F>> ts;
    ts.reserve(p.size() * a.size());
    for (const auto& tp : p.terms())
      for (const auto& ta : a.terms())
        ts.push_back(ModTerm<F>{ta.comp, mono_mul(ta.mono, tp.mono),
                                field().mul(ta.coeff, tp.coeff)});
    return from_terms(std::move(ts));
  }

  Vec monic(const Vec& a) const {
    check(a);
    if (a.is_zero()) return a;
    return scale(a, field().inv(a.lead().coeff));
  }

  std::string to_string(const Vec& v) const {
    std::string out = "[";
    auto comps = to_components(v);
    for (unsigned i = 0; i < comps.size(); ++i) {
      if (i) out += ", ";
      out += ring_.to_string(comps[i]);
    }
    out += "]";
    return out;
  }

 private:
  void check(const Vec& v) const {
    if (v.rank() != rank_)
      throw ArityError("free element rank " + std::to_string(v.rank()) +
                       " does not match module rank " + std::to_string(rank_));
  }

  PolyRing<F> ring_;
  unsigned rank_;
  ModuleOrder order_;
};

}  // namespace regseq
