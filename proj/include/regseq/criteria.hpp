#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regseq/depth_value.hpp"
#include "regseq/koszul.hpp"

namespace regseq {

// ---------------------------------------------------------------------------
// Prime candidates

template <class F>
struct PrimeCandidate {
  std::string name;
  Ideal<F> ideal;
  bool verified;  // structurally a variable-subset prime (or the zero ideal)

  static PrimeCandidate make(std::string nm, Ideal<F> I) {
    bool v = I.variable_subset().has_value();
    return PrimeCandidate{std::move(nm), std::move(I), v};
  }

  std::string label() const {
    if (!name.empty()) return name;
    if (ideal.generators().empty()) return "(0)";
    std::string out = "(";
    bool first = true;
    for (const auto& g : ideal.generators()) {
      if (!first) out += ", ";
      first = false;
      out += ideal.ring().to_string(g);
    }
    out += ")";
    return out;
  }
};

template <class F>
struct PrimeSet {
  std::vector<PrimeCandidate<F>> primes;
  bool complete;  // true when this is provably all of Ass
};

// ---------------------------------------------------------------------------
// Verdicts and witnesses

template <class F>
struct ZeroDivisorWitness {
  unsigned step;              // 1-based position in the sequence
  Polynomial<F> multiplier;   // the sequence entry at that step
  FreeElement<F> element;     // w with multiplier*w in N_{step-1}, w not in it
};

template <class F>
struct HomologyWitness {
  unsigned index;            // smallest i >= 1 with H_i(f; M) != 0
  FreeElement<F> cycle;      // ambient lift of a nonzero homology class
};

template <class F>
struct Verdict {
  bool holds;
  std::string criterion;  // "colon" or "koszul"
  std::optional<ZeroDivisorWitness<F>> zero_divisor;
  std::optional<HomologyWitness<F>> homology_witness;

  static Verdict pass(std::string crit) {
    return Verdict{true, std::move(crit), std::nullopt, std::nullopt};
  }
};

// ---------------------------------------------------------------------------
// Regularity

// Strong regularity: each f_i is a non-zerodivisor on M / (f_1..f_{i-1}) M,
// decided by colon modules: (N : f_i) = N.
template <class F>
Verdict<F> is_strongly_regular(const std::vector<Polynomial<F>>& f,
                               const FPModule<F>& M) {
  const PolyRing<F>& R = M.ring();
  const FreeModule<F>& amb = M.ambient();
  Submodule<F> N = M.relations();
  for (unsigned i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) {
      // 0 is a non-zerodivisor exactly on the zero module.
      for (unsigned a = 0; a < M.rank(); ++a) {
        FreeElement<F> w = N.nf(amb.unit(a));
        if (!w.is_zero())
          return Verdict<F>{false, "colon",
                            ZeroDivisorWitness<F>{i + 1, R.zero(), w},
                            std::nullopt};
      }
    } else {
      Submodule<F> C = colon_submodule(N, f[i]);
      for (const auto& g : C.generators()) {
        FreeElement<F> w = N.nf(g);
        if (!w.is_zero())
          return Verdict<F>{false, "colon",
                            ZeroDivisorWitness<F>{i + 1, f[i], w},
                            std::nullopt};
      }
      std::vector<FreeElement<F>> cut;
      for (unsigned a = 0; a < M.rank(); ++a)
        cut.push_back(amb.mul_poly(f[i], amb.unit(a)));
      N = N.plus(cut);
    }
  }
  return Verdict<F>::pass("colon");
}

// Regularity in the Koszul sense: H_i(f; M) = 0 for all i >= 1.
template <class F>
Verdict<F> is_regular(const std::vector<Polynomial<F>>& f,
                      const FPModule<F>& M) {
  KoszulComplex<F> K = build_koszul(f, M);
  for (unsigned i = 1; i <= K.length(); ++i) {
    Subquotient<F> H = koszul_homology(K, i);
    for (unsigned l = 0; l < H.module.rank(); ++l) {
      if (!H.module.relations()
               .nf(H.module.ambient().unit(l))
               .is_zero())
        return Verdict<F>{false, "koszul", std::nullopt,
                          HomologyWitness<F>{i, H.lifts[l]}};
    }
  }
  return Verdict<F>::pass("koszul");
}

// ---------------------------------------------------------------------------
// Support / depth at primes

namespace detail {

// M_p != 0, i.e. ann(M) contained in p.  For prime p this holds iff some
// component colon (relations : e_l) is contained in p, which avoids the
// ideal intersection.
template <class F>
bool localizes_nonzero(const FPModule<F>& M, const Ideal<F>& p) {
  for (unsigned l = 0; l < M.rank(); ++l) {
    Ideal<F> I = component_colon(M, l);
    bool inside = true;
    for (const auto& g : I.generators())
      if (!p.contains(g)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

}  // namespace detail

// depth of M_p over R_p: +infinity when M_p = 0, otherwise the least i
// with Ext^i(R/p, M) supported at p.
template <class F>
DepthValue local_depth(const FPModule<F>& M, const PrimeCandidate<F>& p) {
  if (!detail::localizes_nonzero(M, p.ideal)) return DepthValue::infinite();
  ExtTower<F> tower(p.ideal, M);
  const unsigned n = M.ring().arity();
  for (unsigned i = 0; i <= n; ++i) {
    if (detail::localizes_nonzero(tower.ext(i).module, p.ideal))
      return DepthValue::of(i);
  }
  throw InternalError(
      "local depth exceeded the variable count; candidate is likely not "
      "prime");
}

// depth over the irrelevant maximal ideal (x_1..x_n).
template <class F>
DepthValue depth_ext(const FPModule<F>& M) {
  return local_depth(
      M, PrimeCandidate<F>::make("", irrelevant_ideal(M.ring())));
}

template <class F>
struct Membership {
  bool in_supp;
  bool in_ass;
};

// p in Supp(M) iff ann(M) in p; p in Ass(M) iff additionally
// Hom(R/p, M) = Ext^0(R/p, M) is nonzero at p.
template <class F>
Membership<F> prime_membership(const FPModule<F>& M,
                               const PrimeCandidate<F>& p) {
  if (!detail::localizes_nonzero(M, p.ideal)) return {false, false};
  FPModule<F> hom = ExtTower<F>(p.ideal, M).ext(0).module;
  return {true, detail::localizes_nonzero(hom, p.ideal)};
}

// Complete associated primes of a module whose reduced relation basis is
// monomial: all associated primes are then generated by variable subsets,
// so the 2^n candidates are exhaustive.  Returned sorted by (size, mask).
template <class F>
PrimeSet<F> monomial_ass(const FPModule<F>& M) {
  const PolyRing<F>& R = M.ring();
  for (const auto& g : M.relations().gb())
    if (g.size() != 1)
      throw PrecondError(
          "associated-prime enumeration needs relations with a monomial "
          "reduced basis");
  const unsigned n = R.arity();
  if (n > 30)
    throw ResourceError("associated-prime enumeration over 30+ variables");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m)
    masks.push_back(m);
  std::sort(masks.begin(), masks.end(),
            [](std::uint32_t a, std::uint32_t b) {
              unsigned pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  PrimeSet<F> out{{}, true};
  for (std::uint32_t mask : masks) {
    std::vector<Polynomial<F>> gens;
    for (unsigned j = 0; j < n; ++j)
      if (mask & (std::uint32_t(1) << j)) gens.push_back(R.variable(j));
    PrimeCandidate<F> pc =
        PrimeCandidate<F>::make("", Ideal<F>(R, gens));
    if (prime_membership(M, pc).in_ass) out.primes.push_back(std::move(pc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross-checks

template <class F>
struct PrimeRow {
  PrimeCandidate<F> prime;
  bool in_supp;
  bool in_ass;
  std::optional<DepthValue> depth;  // depth of M at the prime, when in supp
};

template <class F>
struct TheoremReport {
  unsigned r;
  Verdict<F> regular;
  bool complete;            // the prime rows cover all of Ass(M/(f)M)
  std::vector<PrimeRow<F>> rows;
  bool iii_holds;           // depth >= r at every associated prime tested
  bool ii_consistent;       // depth >= r at every support prime tested
  bool consistent;
};

// Cross-validates the equivalence: (i) f is M-regular (Koszul) against
// (iii) depth_p(M) >= r for all p in Ass(M/(f)M), with (ii) over the
// support rows as a further consistency probe.  With a complete prime set
// the equivalence is asserted; with user candidates only refutations count.
template <class F>
TheoremReport<F> theorem_crosscheck(
    const std::vector<Polynomial<F>>& f, const FPModule<F>& M,
    const std::type_identity_t<
        std::optional<std::vector<PrimeCandidate<F>>>>& candidates,
    bool strict) {
  const unsigned r = static_cast<unsigned>(f.size());
  FPModule<F> Mbar = quotient_by_sequence(M, f);
  Verdict<F> reg = is_regular(f, M);

  PrimeSet<F> ps{{}, false};
  if (candidates.has_value())
    ps.primes = *candidates;
  else
    ps = monomial_ass(Mbar);
  if (strict && !ps.complete)
    throw PrecondError(
        "strict theorem check requires a complete associated-prime set");

  TheoremReport<F> rep{r, std::move(reg), ps.complete, {}, true, true, true};
  for (const auto& pc : ps.primes) {
    Membership<F> mem = prime_membership(Mbar, pc);
    PrimeRow<F> row{pc, mem.in_supp, mem.in_ass, std::nullopt};
    if (mem.in_supp) {
      row.depth = local_depth(M, pc);
      if (!row.depth->at_least(r)) {
        rep.ii_consistent = false;
        if (mem.in_ass) rep.iii_holds = false;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  if (rep.complete)
    rep.consistent = (rep.regular.holds == rep.iii_holds) &&
                     (rep.regular.holds == rep.ii_consistent);
  else
    rep.consistent =
        !rep.regular.holds || (rep.ii_consistent && rep.iii_holds);
  return rep;
}

template <class F>
struct Corollary2Report {
  bool hypothesis;   // Supp(M/(g)M) contained in Supp(M/(f)M)
  Verdict<F> f_verdict;
  std::optional<Verdict<F>> g_verdict;
  bool applicable;   // hypothesis holds and f is regular
  bool consistent;   // conclusion (g regular) verified when applicable
};

// Support comparison: if Supp(M/(g)M) subset of Supp(M/(f)M) and f is
// M-regular of the same length, then g must be M-regular.
template <class F>
Corollary2Report<F> corollary2_check(const std::vector<Polynomial<F>>& f,
                                     const std::vector<Polynomial<F>>& g,
                                     const FPModule<F>& M) {
  if (f.size() != g.size())
    throw PrecondError("support-comparison check needs equal lengths");
  Ideal<F> ann_f = annihilator(quotient_by_sequence(M, f));
  Ideal<F> ann_g = annihilator(quotient_by_sequence(M, g));
  bool hyp = true;
  for (const auto& a : ann_f.generators())
    if (!radical_contains(ann_g, a)) {
      hyp = false;
      break;
    }
  Corollary2Report<F> rep{hyp, is_regular(f, M), std::nullopt, false, true};
  rep.applicable = hyp && rep.f_verdict.holds;
  if (rep.applicable) {
    rep.g_verdict = is_regular(g, M);
    rep.consistent = rep.g_verdict->holds;
  }
  return rep;
}

template <class F>
struct SopReport {
  int dim;
  DepthValue depth;
  bool is_sop;          // the sequence cuts the dimension to zero
  bool is_cm;           // depth(M) == dim(M)
  std::optional<Verdict<F>> regular;
  bool consistent;      // regular whenever M is CM and f is a sop
};

// For a graded module with depth = dim, every homogeneous system of
// parameters must be regular.
template <class F>
SopReport<F> sop_regular_check(const std::vector<Polynomial<F>>& f,
                               const FPModule<F>& M) {
  if (!M.is_graded())
    throw UngradedError("system-of-parameters check needs a graded module");
  if (M.is_zero())
    throw PrecondError("system-of-parameters check needs a nonzero module");
  for (const auto& fj : f)
    if (!M.ring().is_homogeneous(fj))
      throw PrecondError(
          "system-of-parameters check needs homogeneous entries");
  const int d = krull_dimension(M);
  if (static_cast<int>(f.size()) != d)
    throw PrecondError("sequence length must equal the module dimension");
  SopReport<F> rep{d, depth_ext(M), false, false, std::nullopt, true};
  rep.is_sop = krull_dimension(quotient_by_sequence(M, f)) == 0;
  rep.is_cm = !rep.depth.is_infinite() &&
              static_cast<int>(rep.depth.value()) == d;
  if (rep.is_sop && rep.is_cm) {
    rep.regular = is_regular(f, M);
    rep.consistent = rep.regular->holds;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Witness revalidation (independent of the search that produced it)

template <class F>
bool revalidate_witness(const Verdict<F>& v,
                        const std::vector<Polynomial<F>>& f,
                        const FPModule<F>& M) {
  if (v.holds) return true;
  const PolyRing<F>& R = M.ring();
  const FreeModule<F>& amb = M.ambient();
  if (v.zero_divisor.has_value()) {
    const auto& w = *v.zero_divisor;
    if (w.step == 0 || w.step > f.size()) return false;
    Submodule<F> N = M.relations();
    for (unsigned k = 0; k + 1 < w.step; ++k) {
      if (f[k].is_zero()) continue;
      std::vector<FreeElement<F>> cut;
      for (unsigned a = 0; a < M.rank(); ++a)
        cut.push_back(amb.mul_poly(f[k], amb.unit(a)));
      N = N.plus(cut);
    }
    return N.contains(amb.mul_poly(w.multiplier, w.element)) &&
           !N.contains(w.element);
  }
  if (v.homology_witness.has_value()) {
    const auto& w = *v.homology_witness;
    if (w.index == 0 || w.index > f.size()) return false;
    KoszulComplex<F> K = build_koszul(f, M);
    const unsigned i = w.index;
    const ModuleMap<F>& d_i = K.cx.maps[i - 1];
    if (!K.cx.modules[i - 1].relations().contains(d_i.apply(w.cycle)))
      return false;
    std::vector<FreeElement<F>> walls;
    if (i < K.length())
      for (auto& c : K.cx.maps[i].columns()) walls.push_back(std::move(c));
    for (const auto& rho : K.cx.modules[i].relations().generators())
      walls.push_back(rho);
    Submodule<F> W(R, K.cx.modules[i].rank(), walls);
    return !W.contains(w.cycle);
  }
  return false;
}

}  // namespace regseq
