#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "regseq/submodule.hpp"

namespace regseq {

// All monomials of the given total degree, in a fixed deterministic order
// (first exponent descending, recursively).
inline void monomials_of_degree_rec(std::vector<unsigned>& exps, unsigned pos,
                                    unsigned remaining,
                                    std::vector<Monomial>& out) {
  if (pos + 1 == exps.size()) {
    exps[pos] = remaining;
    out.emplace_back(exps);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    exps[pos] = k;
    monomials_of_degree_rec(exps, pos + 1, remaining - k, out);
  }
}

inline std::vector<Monomial> monomials_of_degree(unsigned arity, unsigned deg) {
  if (arity == 0) {
    if (deg == 0) return {Monomial(std::vector<unsigned>{})};
    return {};
  }
  std::vector<Monomial> out;
  std::vector<unsigned> exps(arity, 0u);
  monomials_of_degree_rec(exps, 0, deg, out);
  return out;
}

// A finitely presented module M = R^rank / N, optionally graded by degree
// shifts on the ambient basis (deg(m * e_i) = deg(m) + shift[i]).
template <class F>
class FPModule {
 public:
  using Poly = Polynomial<F>;
  using Vec = FreeElement<F>;

  FPModule(PolyRing<F> ring, unsigned rank, std::vector<Vec> relations,
           std::optional<std::vector<long>> shifts = std::nullopt)
      : rel_(std::move(ring), rank, std::move(relations)),
        shifts_(std::move(shifts)) {
    if (shifts_) {
      if (shifts_->size() != rank)
        throw ArityError("grading shift count does not match ambient rank");
      for (const auto& g : rel_.generators())
        homogeneous_degree(g);  // throws if not homogeneous
    }
  }

  const PolyRing<F>& ring() const { return rel_.ring(); }
  unsigned rank() const { return rel_.rank(); }
  const Submodule<F>& relations() const { return rel_; }
  const FreeModule<F>& ambient() const { return rel_.ambient(); }

  bool is_graded() const { return shifts_.has_value(); }
  const std::vector<long>& shifts() const {
    if (!shifts_) throw UngradedError("module carries no grading");
    return *shifts_;
  }
  FPModule ungraded() const {
    FPModule m = *this;
    m.shifts_.reset();
    return m;
  }

  // Degree of a homogeneous element of the ambient module under the shifts.
  long homogeneous_degree(const Vec& v) const {
    if (!shifts_) throw UngradedError("module carries no grading");
    if (v.is_zero())
      throw ZeroArgumentError("degree of the zero element");
    long d = static_cast<long>(v.terms()[0].mono.deg()) +
             (*shifts_)[v.terms()[0].comp];
    for (const auto& t : v.terms())
      if (static_cast<long>(t.mono.deg()) + (*shifts_)[t.comp] != d)
        throw UngradedError("element is not homogeneous for the grading");
    return d;
  }

  bool is_zero() const {
    for (unsigned i = 0; i < rank(); ++i)
      if (!rel_.contains(ambient().unit(i))) return false;
    return true;
  }

  // rank x (#generators) matrix of the presentation: column j is the j-th
  // relation generator.
  std::vector<std::vector<Poly>> presentation_matrix() const {
    std::vector<std::vector<Poly>> mat(
        rank(), std::vector<Poly>(rel_.generators().size(), ring().zero()));
    for (std::size_t j = 0; j < rel_.generators().size(); ++j) {
      auto comps = ambient().to_components(rel_.generators()[j]);
      for (unsigned i = 0; i < rank(); ++i) mat[i][j] = comps[i];
    }
    return mat;
  }

 private:
  Submodule<F> rel_;
  std::optional<std::vector<long>> shifts_;
};

template <class F>
FPModule<F> present(PolyRing<F> ring, unsigned rank,
                    std::vector<FreeElement<F>> relations,
                    std::optional<std::vector<long>> shifts = std::nullopt) {
  return FPModule<F>(std::move(ring), rank, std::move(relations),
                     std::move(shifts));
}

// R/I as a cyclic module (graded with shift 0 when requested).
template <class F>
FPModule<F> cyclic_module(const Ideal<F>& I, bool graded = false) {
  FreeModule<F> m1(I.ring(), 1);
  std::optional<std::vector<long>> shifts;
  if (graded) shifts = std::vector<long>{0};
  return FPModule<F>(I.ring(), 1, wrap_polys(m1, I.generators()),
                     std::move(shifts));
}

template <class F>
FPModule<F> free_module(const PolyRing<F>& R, unsigned rank,
                        bool graded = false) {
  std::optional<std::vector<long>> shifts;
  if (graded) shifts = std::vector<long>(rank, 0);
  return FPModule<F>(R, rank, {}, std::move(shifts));
}

// M/(f_1..f_s)M: adds f_j * e_i to the relations. The grading survives iff
// every f_j is homogeneous.
template <class F>
FPModule<F> quotient_by_sequence(const FPModule<F>& M,
                                 const std::vector<Polynomial<F>>& f) {
  auto rels = M.relations().generators();
  bool keep_grading = M.is_graded();
  for (const auto& fj : f) {
    if (!M.ring().is_homogeneous(fj)) keep_grading = false;
    if (fj.is_zero()) continue;
    for (unsigned i = 0; i < M.rank(); ++i)
      rels.push_back(M.ambient().mul_poly(fj, M.ambient().unit(i)));
  }
  std::optional<std::vector<long>> shifts;
  if (keep_grading) shifts = M.shifts();
  return FPModule<F>(M.ring(), M.rank(), std::move(rels), std::move(shifts));
}

// The ideal of ring elements annihilating the component class of e_i.
template <class F>
Ideal<F> component_colon(const FPModule<F>& M, unsigned i) {
  const PolyRing<F>& R = M.ring();
  auto syz = syzygies_modulo(R, M.rank(),
                             std::vector<FreeElement<F>>{M.ambient().unit(i)},
                             M.relations().generators());
  FreeModule<F> m1(R, 1);
  return Ideal<F>::from_gb(R, unwrap_polys(m1, syz));
}

// ann(M) = the intersection of the per-component colons (relations : e_i).
template <class F>
Ideal<F> annihilator(const FPModule<F>& M) {
  const PolyRing<F>& R = M.ring();
  if (M.rank() == 0) return Ideal<F>(R, {R.one()});
  Ideal<F> acc = component_colon(M, 0);
  for (unsigned i = 1; i < M.rank(); ++i)
    acc = ideal_intersection(acc, component_colon(M, i));
  return acc;
}

// dim R/ann(M) via the initial ideal: the largest variable subset S such
// that no leading monomial of ann(M)'s Groebner basis is supported inside S.
// The zero module gets dimension -1.
template <class F>
int krull_dimension(const FPModule<F>& M) {
  Ideal<F> ann = annihilator(M);
  const auto& G = ann.gb();
  std::vector<Monomial> leads;
  for (const auto& g : G) {
    if (g.lead_monomial().is_one()) return -1;  // unit ideal: zero module
    leads.push_back(g.lead_monomial());
  }
  const unsigned n = M.ring().arity();
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool valid = true;
    for (const auto& L : leads) {
      bool inside = true;
      for (unsigned i = 0; i < n && inside; ++i)
        if (L[i] > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        valid = false;
        break;
      }
    }
    if (valid) best = std::max<int>(best, __builtin_popcountll(mask));
  }
  return best;
}

// Dimension over the field of the degree-d piece, by dense linear algebra
// on monomial bases (no Groebner machinery involved).
template <class F>
unsigned hilbert_function(const FPModule<F>& M, unsigned d) {
  if (!M.is_graded()) throw UngradedError("Hilbert function needs a grading");
  const PolyRing<F>& R = M.ring();
  const F& k = R.field();
  const auto& shifts = M.shifts();

  // Ambient basis of degree d: columns.
  std::map<std::pair<unsigned, std::vector<unsigned>>, std::size_t> col_of;
  std::size_t ncols = 0;
  for (unsigned i = 0; i < M.rank(); ++i) {
    long e = static_cast<long>(d) - shifts[i];
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(R.arity(), static_cast<unsigned>(e)))
      col_of[{i, m.exponents()}] = ncols++;
  }
  if (ncols == 0) return 0;

  // Rows: monomial multiples of the relation generators landing in degree d.
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto& rho : M.relations().generators()) {
    long delta = M.homogeneous_degree(rho);
    long e = static_cast<long>(d) - delta;
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(R.arity(), static_cast<unsigned>(e))) {
      std::vector<typename F::Elem> row(ncols, k.zero());
      for (const auto& t : rho.terms()) {
        auto it = col_of.find({t.comp, mono_mul(t.mono, m).exponents()});
        if (it == col_of.end())
          throw InternalError("graded bookkeeping out of range");
        row[it->second] = k.add(row[it->second], t.coeff);
      }
      rows.push_back(std::move(row));
    }
  }

  // Row rank by Gaussian elimination.
  std::size_t rank_count = 0;
  for (std::size_t col = 0; col < ncols && rank_count < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = rank_count; r < rows.size(); ++r)
      if (!k.is_zero(rows[r][col])) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank_count], rows[pivot]);
    typename F::Elem inv = k.inv(rows[rank_count][col]);
    for (std::size_t c = col; c < ncols; ++c)
      rows[rank_count][c] = k.mul(rows[rank_count][c], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank_count || k.is_zero(rows[r][col])) continue;
      typename F::Elem factor = rows[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        rows[r][c] = k.sub(rows[r][c], k.mul(factor, rows[rank_count][c]));
    }
    ++rank_count;
  }
  return static_cast<unsigned>(ncols - rank_count);
}

// The same presentation over the ring with one fresh variable appended —
// the flat base change R -> R[t].
template <class F>
FPModule<F> adjoin_variable(const FPModule<F>& M) {
  const PolyRing<F>& R = M.ring();
  if (R.order().kind() == OrderKind::block)
    throw PrecondError("cannot extend a ring carrying a block order");
  PolyRing<F> Re = R.extended(R.fresh_var_name(), R.order());
  FreeModule<F> amb(Re, M.rank());
  std::vector<FreeElement<F>> rels;
  for (const auto& g : M.relations().generators()) {
    std::vector<ModTerm<F>> ts;
    for (const auto& t : g.terms()) {
      std::vector<unsigned> e = t.mono.exponents();
      e.resize(Re.arity(), 0u);
      ts.push_back(ModTerm<F>{t.comp, Monomial(std::move(e)), t.coeff});
    }
    rels.push_back(amb.from_terms(std::move(ts)));
  }
  std::optional<std::vector<long>> shifts;
  if (M.is_graded()) shifts = M.shifts();
  return FPModule<F>(Re, M.rank(), std::move(rels), std::move(shifts));
}

// M^k with block-diagonal relations; block b occupies components
// [b*rank, (b+1)*rank).
template <class F>
FPModule<F> power_module(const FPModule<F>& M, unsigned kk) {
  const unsigned m = M.rank();
  FreeModule<F> amb(M.ring(), kk * m);
  std::vector<FreeElement<F>> rels;
  for (unsigned b = 0; b < kk; ++b)
    for (const auto& g : M.relations().generators()) {
      std::vector<ModTerm<F>> ts = g.terms();
      for (auto& t : ts) t.comp += b * m;
      rels.push_back(amb.from_terms(std::move(ts)));
    }
  std::optional<std::vector<long>> shifts;
  if (M.is_graded()) {
    shifts.emplace();
    for (unsigned b = 0; b < kk; ++b)
      shifts->insert(shifts->end(), M.shifts().begin(), M.shifts().end());
  }
  return FPModule<F>(M.ring(), kk * m, std::move(rels), std::move(shifts));
}

}  // namespace regseq
