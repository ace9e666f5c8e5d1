#pragma once

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "regseq/ideal.hpp"

namespace regseq {

// A submodule N of a free module R^rank, with a shared lazily computed
// reduced Groebner basis (term-over-position order over the ring's order,
// so the basis is canonical for the ring order).
template <class F>
class Submodule {
 public:
  using Poly = Polynomial<F>;
  using Vec = FreeElement<F>;

  Submodule(PolyRing<F> ring, unsigned rank, std::vector<Vec> gens)
      : amb_(std::move(ring), rank), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.rank() != rank)
        throw ArityError("submodule generator rank mismatch");
    std::erase_if(gens_, [](const Vec& v) { return v.is_zero(); });
  }

  static Submodule from_gb(PolyRing<F> ring, unsigned rank,
                           std::vector<Vec> gb) {
    Submodule N(std::move(ring), rank, gb);
    N.gb_ = std::make_shared<const std::vector<Vec>>(std::move(gb));
    return N;
  }

  const PolyRing<F>& ring() const { return amb_.ring(); }
  const FreeModule<F>& ambient() const { return amb_; }
  unsigned rank() const { return amb_.rank(); }
  const std::vector<Vec>& generators() const { return gens_; }

  const std::vector<Vec>& gb() const {
    if (!gb_)
      gb_ = std::make_shared<const std::vector<Vec>>(buchberger(amb_, gens_));
    return *gb_;
  }

  Vec nf(const Vec& v) const { return normal_form(amb_, v, gb()); }
  bool contains(const Vec& v) const { return nf(v).is_zero(); }
  bool contains_submodule(const Submodule& other) const {
    return std::all_of(other.generators().begin(), other.generators().end(),
                       [&](const Vec& g) { return contains(g); });
  }
  bool is_zero_module() const { return gb().empty(); }
  // Canonical equality through reduced Groebner bases.
  bool equals(const Submodule& other) const { return gb() == other.gb(); }

  Submodule plus(std::vector<Vec> extra) const {
    auto gens = gens_;
    gens.insert(gens.end(), std::make_move_iterator(extra.begin()),
                std::make_move_iterator(extra.end()));
    return Submodule(ring(), rank(), std::move(gens));
  }

 private:
  FreeModule<F> amb_;
  std::vector<Vec> gens_;
  mutable std::shared_ptr<const std::vector<Vec>> gb_;
};

// (N : f) = { v in R^rank : f*v in N }, via the syzygies of (f*e_i | N).
// Always contains N; equality says f is a non-zero divisor on R^rank / N.
template <class F>
Submodule<F> colon_submodule(const Submodule<F>& N, const Polynomial<F>& f) {
  if (f.is_zero()) throw ZeroArgumentError("colon by the zero polynomial");
  const PolyRing<F>& R = N.ring();
  const unsigned m = N.rank();
  std::vector<FreeElement<F>> h;
  h.reserve(m);
  for (unsigned i = 0; i < m; ++i)
    h.push_back(N.ambient().mul_poly(f, N.ambient().unit(i)));
  auto syz = syzygies_modulo(R, m, h, N.generators());
  return Submodule<F>::from_gb(R, m, std::move(syz));
}

// (N : I) = { v : g*v in N for every generator g of I }, through one stacked
// elimination: v must satisfy all conditions simultaneously, so the graph
// construction runs over s copies of the ambient module at once.
template <class F>
Submodule<F> colon_submodule_by_ideal(const Submodule<F>& N,
                                      const std::vector<Polynomial<F>>& gens) {
  const PolyRing<F>& R = N.ring();
  const unsigned m = N.rank();
  const unsigned s = static_cast<unsigned>(gens.size());
  if (s == 0) {
    // Vacuous condition: the colon by the zero ideal is the whole module.
    FreeModule<F> amb(R, m);
    std::vector<FreeElement<F>> units;
    for (unsigned i = 0; i < m; ++i) units.push_back(amb.unit(i));
    return Submodule<F>::from_gb(R, m, std::move(units));
  }
  FreeModule<F> stacked(R, s * m);
  std::vector<FreeElement<F>> h;
  h.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    std::vector<ModTerm<F>> ts;
    for (unsigned j = 0; j < s; ++j)
      for (const auto& t : gens[j].terms())
        ts.push_back(ModTerm<F>{j * m + i, t.mono, t.coeff});
    h.push_back(stacked.from_terms(std::move(ts)));
  }
  std::vector<FreeElement<F>> Ns;
  for (unsigned j = 0; j < s; ++j)
    for (const auto& n : N.generators()) {
      std::vector<ModTerm<F>> ts = n.terms();
      for (auto& t : ts) t.comp += j * m;
      Ns.push_back(stacked.from_terms(std::move(ts)));
    }
  auto syz = syzygies_modulo(R, s * m, h, Ns);
  return Submodule<F>::from_gb(R, m, std::move(syz));
}

}  // namespace regseq
