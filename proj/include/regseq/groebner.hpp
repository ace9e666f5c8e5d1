#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regseq/errors.hpp"
#include "regseq/free_element.hpp"

namespace regseq {

template <class F>
inline void check_degree_cap(const PolyRing<F>& R, const Monomial& m) {
  if (m.deg() > R.degree_cap())
    throw ResourceError("degree cap " + std::to_string(R.degree_cap()) +
                        " exceeded (reached total degree " +
                        std::to_string(m.deg()) + ")");
}

// Full division in a free module: v = sum_i q_i * G[i] + r where no term of
// r is divisible by any lead(G[i]) in the same component. If `quotients` is
// non-null it receives the q_i, indexed like G.
template <class F>
FreeElement<F> divide_full(const FreeModule<F>& M, const FreeElement<F>& v,
                           const std::vector<FreeElement<F>>& G,
                           std::vector<Polynomial<F>>* quotients = nullptr) {
  const F& k = M.field();
  const PolyRing<F>& R = M.ring();
  if (quotients) quotients->assign(G.size(), R.zero());
  FreeElement<F> p = v;
  std::vector<ModTerm<F>> rem;
  while (!p.is_zero()) {
    const ModTerm<F> lt = p.lead();
    check_degree_cap(R, lt.mono);
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero()) continue;
      const ModTerm<F>& gl = G[i].lead();
      if (gl.comp != lt.comp || !mono_divides(gl.mono, lt.mono)) continue;
      Monomial q = mono_div(lt.mono, gl.mono);
      typename F::Elem c = k.div(lt.coeff, gl.coeff);
      p = M.sub(p, M.mul_term(q, c, G[i]));
      if (quotients)
        (*quotients)[i] = R.add((*quotients)[i], R.term(std::move(q), c));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      p = FreeElement<F>::from_sorted(
          p.rank(), std::vector<ModTerm<F>>(p.terms().begin() + 1,
                                            p.terms().end()));
    }
  }
  // Popped leads strictly decrease, so rem is already sorted descending.
  return FreeElement<F>::from_sorted(v.rank(), std::move(rem));
}

template <class F>
FreeElement<F> normal_form(const FreeModule<F>& M, const FreeElement<F>& v,
                           const std::vector<FreeElement<F>>& G) {
  return divide_full(M, v, G,
                     static_cast<std::vector<Polynomial<F>>*>(nullptr));
}

template <class F>
bool reduces_to_zero(const FreeModule<F>& M, const FreeElement<F>& v,
                     const std::vector<FreeElement<F>>& G) {
  return normal_form(M, v, G).is_zero();
}

namespace detail {

struct SPair {
  std::size_t i, j;
  unsigned comp;
  Monomial lcm;
};

// Gebauer-Moeller update: appends the pairs involving basis[t] and prunes
// pairs made redundant by it. The coprime (product) criterion is only sound
// for ideals, so it is applied solely when the free module has rank 1.
template <class F>
void gm_update(const FreeModule<F>& M,
               const std::vector<FreeElement<F>>& basis, std::size_t t,
               std::vector<SPair>& pairs) {
  const ModTerm<F>& lt = basis[t].lead();
  std::vector<SPair> fresh;
  for (std::size_t i = 0; i < t; ++i) {
    if (basis[i].is_zero()) continue;
    const ModTerm<F>& li = basis[i].lead();
    if (li.comp != lt.comp) continue;
    fresh.push_back(SPair{i, t, lt.comp, mono_lcm(li.mono, lt.mono)});
  }

  // Criterion M: drop a new pair whose lcm is a proper multiple of another
  // new pair's lcm.
  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (fresh[b].lcm != fresh[a].lcm &&
          mono_divides(fresh[b].lcm, fresh[a].lcm)) {
        keep[a] = false;
        break;
      }
    }
  }
  // Criterion F: among equal lcms keep a single representative.
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    for (std::size_t b = a + 1; b < fresh.size(); ++b) {
      if (keep[b] && fresh[b].lcm == fresh[a].lcm) keep[b] = false;
    }
  }
  // Criterion B (ideals only): coprime leading monomials reduce to zero.
  if (M.rank() == 1) {
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      const Monomial& mi = basis[fresh[a].i].lead().mono;
      if (mono_coprime(mi, lt.mono)) keep[a] = false;
    }
  }

  // Prune old pairs strictly dominated by the new element.
  std::erase_if(pairs, [&](const SPair& p) {
    if (p.comp != lt.comp) return false;
    if (!mono_divides(lt.mono, p.lcm)) return false;
    const Monomial& mi = basis[p.i].lead().mono;
    const Monomial& mj = basis[p.j].lead().mono;
    return mono_lcm(mi, lt.mono) != p.lcm && mono_lcm(mj, lt.mono) != p.lcm;
  });

  for (std::size_t a = 0; a < fresh.size(); ++a)
    if (keep[a]) pairs.push_back(std::move(fresh[a]));
}

template <class F>
FreeElement<F> s_vector(const FreeModule<F>& M, const FreeElement<F>& f,
                        const FreeElement<F>& g, const Monomial& lcm) {
  const F& k = M.field();
  const ModTerm<F>& lf = f.lead();
  const ModTerm<F>& lg = g.lead();
  return M.sub(M.mul_term(mono_div(lcm, lf.mono), k.inv(lf.coeff), f),
               M.mul_term(mono_div(lcm, lg.mono), k.inv(lg.coeff), g));
}

}  // namespace detail

// Makes a Groebner basis minimal and reduced: monic, no lead divides
// another, every element fully reduced against the rest, sorted with the
// largest lead first. The result is the canonical basis of the submodule.
template <class F>
std::vector<FreeElement<F>> reduce_basis(const FreeModule<F>& M,
                                         std::vector<FreeElement<F>> G) {
  std::erase_if(G, [](const FreeElement<F>& g) { return g.is_zero(); });
  for (auto& g : G) g = M.monic(g);
  std::vector<bool> kept(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!kept[i]) continue;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || !kept[j]) continue;
      const auto& li = G[i].lead();
      const auto& lj = G[j].lead();
      if (li.comp != lj.comp || !mono_divides(lj.mono, li.mono)) continue;
      if (li.mono == lj.mono && i < j) continue;  // equal leads: keep first
      kept[i] = false;
      break;
    }
  }
  std::vector<FreeElement<F>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (kept[i]) minimal.push_back(std::move(G[i]));

  std::vector<FreeElement<F>> out(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FreeElement<F>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out[i] = normal_form(M, minimal[i], others);
    if (out[i].is_zero())
      throw InternalError("minimal Groebner element reduced to zero");
  }
  std::sort(out.begin(), out.end(),
            [&](const FreeElement<F>& a, const FreeElement<F>& b) {
              return M.compare(a.lead(), b.lead()) > 0;
            });
  return out;
}

// Buchberger's algorithm with the Gebauer-Moeller pair update and normal
// (smallest lcm first) selection. Returns the canonical reduced basis.
template <class F>
std::vector<FreeElement<F>> buchberger(const FreeModule<F>& M,
                                       std::vector<FreeElement<F>> gens) {
  const PolyRing<F>& R = M.ring();
  std::vector<FreeElement<F>> basis;
  std::vector<detail::SPair> pairs;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    check_degree_cap(R, g.lead().mono);
    basis.push_back(M.monic(std::move(g)));
    detail::gm_update(M, basis, basis.size() - 1, pairs);
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      if (M.order().compare(pairs[a].comp, pairs[a].lcm, pairs[best].comp,
                            pairs[best].lcm) < 0)
        best = a;
    }
    detail::SPair p = std::move(pairs[best]);
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    check_degree_cap(R, p.lcm);
    FreeElement<F> s = detail::s_vector(M, basis[p.i], basis[p.j], p.lcm);
    FreeElement<F> r = normal_form(M, s, basis);
    if (r.is_zero()) continue;
    check_degree_cap(R, r.lead().mono);
    basis.push_back(M.monic(std::move(r)));
    detail::gm_update(M, basis, basis.size() - 1, pairs);
  }
  return reduce_basis(M, std::move(basis));
}

// Schreyer syzygies of a Groebner basis G (in M's order): one generator per
// pair i<j with equal lead component. The result is itself a Groebner basis
// of ker(R^s -> M, e_i -> G[i]) under the returned module's Schreyer order,
// whose lead terms are (lcm/lm_i) e_i. Throws NotGroebnerError if some
// S-vector fails to reduce to zero.
template <class F>
std::pair<FreeModule<F>, std::vector<FreeElement<F>>> schreyer_syzygies(
    const FreeModule<F>& M, const std::vector<FreeElement<F>>& G) {
  const F& k = M.field();
  const PolyRing<F>& R = M.ring();
  std::vector<std::pair<unsigned, Monomial>> leads;
  leads.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero())
      throw PrecondError("schreyer_syzygies: zero basis element");
    leads.emplace_back(g.lead().comp, g.lead().mono);
  }
  auto parent = std::make_shared<const ModuleOrder>(M.order());
  FreeModule<F> S(R, static_cast<unsigned>(G.size()),
                  ModuleOrder::schreyer(std::move(leads), parent));

  std::vector<FreeElement<F>> syz;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const ModTerm<F>& li = G[i].lead();
      const ModTerm<F>& lj = G[j].lead();
      if (li.comp != lj.comp) continue;
      Monomial L = mono_lcm(li.mono, lj.mono);
      check_degree_cap(R, L);
      FreeElement<F> sv = detail::s_vector(M, G[i], G[j], L);
      std::vector<Polynomial<F>> q;
      FreeElement<F> r = divide_full(M, sv, G, &q);
      if (!r.is_zero())
        throw NotGroebnerError(
            "S-vector does not reduce to zero; input is not a Groebner basis");
      std::vector<ModTerm<F>> ts;
      ts.push_back(ModTerm<F>{static_cast<unsigned>(i),
                              mono_div(L, li.mono), k.inv(li.coeff)});
      ts.push_back(ModTerm<F>{static_cast<unsigned>(j), mono_div(L, lj.mono),
                              k.neg(k.inv(lj.coeff))});
      for (std::size_t t = 0; t < q.size(); ++t)
        for (const auto& qt : q[t].terms())
          ts.push_back(ModTerm<F>{static_cast<unsigned>(t), qt.mono,
                                  k.neg(qt.coeff)});
      syz.push_back(S.from_terms(std::move(ts)));
    }
  }
  return {std::move(S), std::move(syz)};
}

// Syzygies of h_1..h_t modulo a submodule N of the same free module R^m:
// the reduced Groebner basis (top order over the ambient ring order) of
//   { c in R^t : c_1 h_1 + ... + c_t h_t lies in <N> }.
// Computed by eliminating the first block of R^(m+t) from the graph
// generators h_i + e_(m+i) together with N + 0.
template <class F>
std::vector<FreeElement<F>> syzygies_modulo(
    const PolyRing<F>& R, unsigned m, const std::vector<FreeElement<F>>& h,
    const std::vector<FreeElement<F>>& N) {
  const unsigned t = static_cast<unsigned>(h.size());
  if (t == 0) return {};
  FreeModule<F> big(R, m + t, ModuleOrder::elim(R.order(), m));
  std::vector<FreeElement<F>> gens;
  gens.reserve(h.size() + N.size());
  auto embed = [&](const FreeElement<F>& v, bool tag, unsigned tag_comp) {
    if (v.rank() != m)
      throw ArityError("syzygies_modulo: element rank mismatch");
    std::vector<ModTerm<F>> ts = v.terms();
    if (tag)
      ts.push_back(
          ModTerm<F>{m + tag_comp, Monomial(R.arity()), R.field().one()});
    return big.from_terms(std::move(ts));
  };
  for (unsigned i = 0; i < t; ++i) gens.push_back(embed(h[i], true, i));
  for (const auto& n : N) gens.push_back(embed(n, false, 0));

  std::vector<FreeElement<F>> G = buchberger(big, std::move(gens));

  FreeModule<F> out_mod(R, t, ModuleOrder::top(R.order()));
  std::vector<FreeElement<F>> out;
  for (const auto& g : G) {
    bool lower = std::all_of(g.terms().begin(), g.terms().end(),
                             [&](const ModTerm<F>& x) { return x.comp >= m; });
    if (!lower) continue;
    std::vector<ModTerm<F>> ts = g.terms();
    for (auto& x : ts) x.comp -= m;
    out.push_back(out_mod.from_terms(std::move(ts)));
  }
  return out;
}

}  // namespace regseq
