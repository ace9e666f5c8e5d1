#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regseq/groebner.hpp"

namespace regseq {

template <class F>
std::vector<FreeElement<F>> wrap_polys(const FreeModule<F>& m1,
                                       const std::vector<Polynomial<F>>& ps) {
  std::vector<FreeElement<F>> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(m1.from_components({p}));
  return out;
}

template <class F>
std::vector<Polynomial<F>> unwrap_polys(const FreeModule<F>& m1,
                                        const std::vector<FreeElement<F>>& vs) {
  std::vector<Polynomial<F>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(m1.to_components(v)[0]);
  return out;
}

// An ideal of the polynomial ring, with a lazily computed and shared reduced
// Groebner basis. All ideal-theoretic operations reduce to the module engine
// through the rank-1 free module.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(PolyRing<F> ring, std::vector<Poly> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    std::erase_if(gens_, [](const Poly& p) { return p.is_zero(); });
  }

  // For results that are already reduced Groebner bases in the ring's order.
  static Ideal from_gb(PolyRing<F> ring, std::vector<Poly> gb) {
    Ideal I(std::move(ring), gb);
    I.gb_ = std::make_shared<const std::vector<Poly>>(std::move(gb));
    return I;
  }

  const PolyRing<F>& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  FreeModule<F> rank1() const {
    return FreeModule<F>(ring_, 1, ModuleOrder::top(ring_.order()));
  }

  const std::vector<Poly>& gb() const {
    if (!gb_) {
      FreeModule<F> m1 = rank1();
      gb_ = std::make_shared<const std::vector<Poly>>(
          unwrap_polys(m1, buchberger(m1, wrap_polys(m1, gens_))));
    }
    return *gb_;
  }

  Poly nf(const Poly& f) const {
    FreeModule<F> m1 = rank1();
    return m1.to_components(
        normal_form(m1, m1.from_components({f}), wrap_polys(m1, gb())))[0];
  }

  bool contains(const Poly& f) const { return nf(f).is_zero(); }
  bool contains_ideal(const Ideal& J) const {
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const Poly& g) { return contains(g); });
  }
  bool is_zero() const { return gb().empty(); }
  bool is_unit() const {
    const auto& G = gb();
    return G.size() == 1 && G[0] == ring_.one();
  }
  // Canonical equality: reduced Groebner bases coincide.
  bool equals(const Ideal& J) const { return gb() == J.gb(); }

  // If every generator is a scalar multiple of a distinct variable (or the
  // ideal is zero), returns the ascending variable indices. Such ideals are
  // structurally prime; everything else needs a caller assertion.
  std::optional<std::vector<unsigned>> variable_subset() const {
    std::vector<unsigned> vars;
    for (const auto& g : gens_) {
      if (g.size() != 1) return std::nullopt;
      const auto& t = g.terms()[0];
      if (t.mono.deg() != 1) return std::nullopt;
      for (unsigned i = 0; i < t.mono.arity(); ++i)
        if (t.mono[i] == 1) vars.push_back(i);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (vars.size() != gens_.size()) return std::nullopt;  // duplicates
    return vars;
  }

 private:
  PolyRing<F> ring_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<const std::vector<Poly>> gb_;
};

template <class F>
Ideal<F> ideal_sum(const Ideal<F>& I, const Ideal<F>& J) {
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal<F>(I.ring(), std::move(gens));
}

template <class F>
Ideal<F> irrelevant_ideal(const PolyRing<F>& R) {
  std::vector<Polynomial<F>> vars;
  for (unsigned i = 0; i < R.arity(); ++i) vars.push_back(R.variable(i));
  return Ideal<F>(R, std::move(vars));
}

// (I : f) = { a : a*f in I }, as a reduced Groebner basis.
template <class F>
Ideal<F> colon_ideal(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroArgumentError("colon by the zero polynomial");
  FreeModule<F> m1 = I.rank1();
  auto syz = syzygies_modulo(I.ring(), 1, wrap_polys(m1, {f}),
                             wrap_polys(m1, I.generators()));
  return Ideal<F>::from_gb(I.ring(), unwrap_polys(m1, syz));
}

// I restricted to the sub-ring without the variables selected by drop_mask:
// generators of I ∩ k[kept variables], returned over the same ring.
template <class F>
Ideal<F> eliminate(const Ideal<F>& I, std::vector<std::uint8_t> drop_mask) {
  const PolyRing<F>& R = I.ring();
  if (drop_mask.size() != R.arity())
    throw ArityError("elimination mask arity mismatch");
  PolyRing<F> Re = R.with_order(TermOrder::elim_mask(drop_mask));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(Re.from_terms(g.terms()));
  FreeModule<F> m1(Re, 1, ModuleOrder::top(Re.order()));
  auto G = unwrap_polys(m1, buchberger(m1, wrap_polys(m1, gens)));
  std::vector<Polynomial<F>> kept;
  for (const auto& g : G) {
    bool clean = true;
    for (const auto& t : g.terms())
      for (unsigned i = 0; i < drop_mask.size() && clean; ++i)
        if (drop_mask[i] && t.mono[i] > 0) clean = false;
    if (clean) kept.push_back(R.from_terms(g.terms()));
  }
  return Ideal<F>(R, std::move(kept));
}

namespace detail {

// Runs fn over the ring extended by a fresh variable t; `extra` may use t.
// The elimination mask selects only t.
template <class F>
Ideal<F> eliminate_fresh_var(
    const Ideal<F>& I, const std::vector<Polynomial<F>>& extra_over_ext,
    const PolyRing<F>& Re) {
  const PolyRing<F>& R = I.ring();
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(pad_poly(Re, g));
  for (const auto& e : extra_over_ext) gens.push_back(e);
  FreeModule<F> m1(Re, 1, ModuleOrder::top(Re.order()));
  auto G = unwrap_polys(m1, buchberger(m1, wrap_polys(m1, gens)));
  std::vector<Polynomial<F>> kept;
  for (const auto& g : G) {
    bool clean = std::all_of(g.terms().begin(), g.terms().end(),
                             [&](const Term<F>& t) {
                               return t.mono[Re.arity() - 1] == 0;
                             });
    if (clean) kept.push_back(restrict_poly(R, g));
  }
  return Ideal<F>(R, std::move(kept));
}

template <class F>
PolyRing<F> extend_for_elim(const PolyRing<F>& R) {
  std::vector<std::uint8_t> mask(R.arity(), 0);
  mask.push_back(1);
  return R.extended(R.fresh_var_name(), TermOrder::elim_mask(std::move(mask)));
}

}  // namespace detail

// I ∩ J through eliminating t from t·I + (1-t)·J.
template <class F>
Ideal<F> ideal_intersection(const Ideal<F>& I, const Ideal<F>& J) {
  const PolyRing<F>& R = I.ring();
  if (R != J.ring()) throw RingMismatchError("ideal intersection across rings");
  PolyRing<F> Re = detail::extend_for_elim(R);
  Polynomial<F> t = Re.variable(Re.arity() - 1);
  Polynomial<F> one_minus_t = Re.sub(Re.one(), t);
  std::vector<Polynomial<F>> extra;
  for (const auto& g : I.generators())
    extra.push_back(Re.mul(t, pad_poly(Re, g)));
  for (const auto& h : J.generators())
    extra.push_back(Re.mul(one_minus_t, pad_poly(Re, h)));
  return detail::eliminate_fresh_var(Ideal<F>(R, {}), extra, Re);
}

// (I : f^∞) through eliminating t from I + (t·f - 1).
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroArgumentError("saturation by the zero polynomial");
  PolyRing<F> Re = detail::extend_for_elim(I.ring());
  Polynomial<F> t = Re.variable(Re.arity() - 1);
  Polynomial<F> trick = Re.sub(Re.mul(t, pad_poly(Re, f)), Re.one());
  return detail::eliminate_fresh_var(I, {std::move(trick)}, Re);
}

// f ∈ √I  ⟺  1 ∈ I + (t·f - 1) in R[t].
template <class F>
bool radical_contains(const Ideal<F>& I, const Polynomial<F>& f) {
  const PolyRing<F>& R = I.ring();
  PolyRing<F> Re = R.extended(R.fresh_var_name(), TermOrder::grevlex());
  Polynomial<F> t = Re.variable(Re.arity() - 1);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : I.generators()) gens.push_back(pad_poly(Re, g));
  gens.push_back(Re.sub(Re.mul(t, pad_poly(Re, f)), Re.one()));
  Ideal<F> J(Re, std::move(gens));
  return J.contains(Re.one());
}

}  // namespace regseq
