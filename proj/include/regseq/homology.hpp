#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regseq/fpmodule.hpp"

namespace regseq {

// A map of finitely presented modules, given on ambient generators by a
// (target rank) x (source rank) polynomial matrix.
template <class F>
class ModuleMap {
 public:
  using Poly = Polynomial<F>;
  using Vec = FreeElement<F>;

  ModuleMap(FPModule<F> source, FPModule<F> target,
            std::vector<std::vector<Poly>> mat)
      : source_(std::move(source)),
        target_(std::move(target)),
        mat_(std::move(mat)) {
    if (source_.ring() != target_.ring())
      throw RingMismatchError("module map across different rings");
    if (mat_.size() != target_.rank())
      throw ArityError("module map matrix row count mismatch");
    for (const auto& row : mat_)
      if (row.size() != source_.rank())
        throw ArityError("module map matrix column count mismatch");
  }

  static ModuleMap zero(FPModule<F> source, FPModule<F> target) {
    std::vector<std::vector<Poly>> mat(
        target.rank(), std::vector<Poly>(source.rank(), target.ring().zero()));
    return ModuleMap(std::move(source), std::move(target), std::move(mat));
  }

  const FPModule<F>& source() const { return source_; }
  const FPModule<F>& target() const { return target_; }
  const std::vector<std::vector<Poly>>& matrix() const { return mat_; }

  // Image of source ambient e_j in the target ambient.
  Vec column(unsigned j) const {
    std::vector<Poly> comps;
    comps.reserve(target_.rank());
    for (unsigned i = 0; i < target_.rank(); ++i) comps.push_back(mat_[i][j]);
    return target_.ambient().from_components(comps);
  }

  std::vector<Vec> columns() const {
    std::vector<Vec> out;
    out.reserve(source_.rank());
    for (unsigned j = 0; j < source_.rank(); ++j) out.push_back(column(j));
    return out;
  }

  Vec apply(const Vec& v) const {
    const PolyRing<F>& R = source_.ring();
    auto vc = source_.ambient().to_components(v);
    std::vector<Poly> out(target_.rank(), R.zero());
    for (unsigned i = 0; i < target_.rank(); ++i)
      for (unsigned j = 0; j < source_.rank(); ++j)
        out[i] = R.add(out[i], R.mul(mat_[i][j], vc[j]));
    return target_.ambient().from_components(out);
  }

  // Well-defined: every source relation maps into the target relations.
  bool well_defined() const {
    for (const auto& rho : source_.relations().generators())
      if (!target_.relations().contains(apply(rho))) return false;
    return true;
  }

  // Zero as a map of the presented modules (not merely the zero matrix).
  bool is_zero_map() const {
    for (unsigned j = 0; j < source_.rank(); ++j)
      if (!target_.relations().contains(column(j))) return false;
    return true;
  }

 private:
  FPModule<F> source_;
  FPModule<F> target_;
  std::vector<std::vector<Poly>> mat_;
};

// outer ∘ inner.
template <class F>
ModuleMap<F> compose(const ModuleMap<F>& outer, const ModuleMap<F>& inner) {
  const PolyRing<F>& R = outer.target().ring();
  std::vector<std::vector<Polynomial<F>>> mat(
      outer.target().rank(),
      std::vector<Polynomial<F>>(inner.source().rank(), R.zero()));
  for (unsigned i = 0; i < outer.target().rank(); ++i)
    for (unsigned j = 0; j < inner.source().rank(); ++j)
      for (unsigned k = 0; k < outer.source().rank(); ++k)
        mat[i][j] = R.add(
            mat[i][j], R.mul(outer.matrix()[i][k], inner.matrix()[k][j]));
  return ModuleMap<F>(inner.source(), outer.target(), std::move(mat));
}

// A chain complex: maps[i] : modules[i+1] -> modules[i].
template <class F>
struct ChainComplex {
  std::vector<FPModule<F>> modules;
  std::vector<ModuleMap<F>> maps;

  std::vector<unsigned> ranks() const {
    std::vector<unsigned> out;
    for (const auto& m : modules) out.push_back(m.rank());
    return out;
  }

  // d ∘ d = 0, checked by membership of every composite column.
  bool differentials_compose_to_zero() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
      if (!compose(maps[i], maps[i + 1]).is_zero_map()) return false;
    return true;
  }
};

// A subquotient presented as an FPModule, together with ambient lifts of its
// generators into the module it was carved from.
template <class F>
struct Subquotient {
  FPModule<F> module;
  std::vector<FreeElement<F>> lifts;
};

namespace detail {

// Attaches a grading to a subquotient presentation when the lift degrees
// make every relation homogeneous; otherwise returns it ungraded.
template <class F>
FPModule<F> graded_if_possible(const PolyRing<F>& R, unsigned rank,
                               const std::vector<FreeElement<F>>& rels,
                               const FPModule<F>& source,
                               const std::vector<FreeElement<F>>& lifts) {
  if (source.is_graded()) {
    try {
      std::vector<long> shifts;
      shifts.reserve(lifts.size());
      for (const auto& z : lifts)
        shifts.push_back(source.homogeneous_degree(z));
      return FPModule<F>(R, rank, rels, std::move(shifts));
    } catch (const UngradedError&) {
    } catch (const ZeroArgumentError&) {
    }
  }
  return FPModule<F>(R, rank, rels);
}

}  // namespace detail

// Homology ker(down) / (im(up) + relations) at down.source (== up.target).
// Generator lifts land in the ambient module of down.source.
template <class F>
Subquotient<F> homology(const ModuleMap<F>& down, const ModuleMap<F>& up) {
  const FPModule<F>& C = down.source();
  const PolyRing<F>& R = C.ring();
  std::vector<FreeElement<F>> cycles =
      syzygies_modulo(R, down.target().rank(), down.columns(),
                      down.target().relations().generators());
  std::vector<FreeElement<F>> walls = up.columns();
  for (const auto& rho : C.relations().generators()) walls.push_back(rho);
  std::vector<FreeElement<F>> rels =
      syzygies_modulo(R, C.rank(), cycles, walls);
  FPModule<F> H = detail::graded_if_possible(
      R, static_cast<unsigned>(cycles.size()), rels, C, cycles);
  return Subquotient<F>{std::move(H), std::move(cycles)};
}

// ker(φ) as a presented module plus generator lifts into φ's source ambient.
template <class F>
Subquotient<F> kernel(const ModuleMap<F>& phi) {
  if (!phi.well_defined())
    throw PrecondError("kernel of an ill-defined module map");
  FPModule<F> zero_mod(phi.source().ring(), 0, {});
  return homology(phi, ModuleMap<F>::zero(zero_mod, phi.source()));
}

// Free resolution ... -> F_2 -> F_1 -> F_0 with F_0 the ambient of M and
// im(F_1 -> F_0) = relations(M), built by iterated syzygies of Groebner
// bases (each level's basis is a Groebner basis in the induced order, so
// the next level resolves its full kernel).
template <class F>
ChainComplex<F> free_resolution(const FPModule<F>& M, unsigned length) {
  const PolyRing<F>& R = M.ring();
  ChainComplex<F> cx;
  cx.modules.push_back(free_module(R, M.rank()));
  FreeModule<F> ctx = M.ambient();
  std::vector<FreeElement<F>> G = M.relations().gb();
  for (unsigned level = 1; level <= length; ++level) {
    const unsigned prev_rank = cx.modules.back().rank();
    const unsigned r = static_cast<unsigned>(G.size());
    FPModule<F> Fl = free_module(R, r);
    std::vector<std::vector<Polynomial<F>>> mat(
        prev_rank, std::vector<Polynomial<F>>(r, R.zero()));
    for (unsigned j = 0; j < r; ++j) {
      auto comps = ctx.with_rank(prev_rank).to_components(G[j]);
      for (unsigned i = 0; i < prev_rank; ++i) mat[i][j] = std::move(comps[i]);
    }
    cx.maps.emplace_back(Fl, cx.modules.back(), std::move(mat));
    cx.modules.push_back(std::move(Fl));
    if (level == length) break;
    if (G.empty()) {
      ctx = FreeModule<F>(R, 0);
      continue;  // all further levels are zero
    }
    auto [next_ctx, syz] = schreyer_syzygies(ctx, G);
    G = reduce_basis(next_ctx, syz);
    ctx = std::move(next_ctx);
  }
  return cx;
}

// Ext^i(R/I, M) computed from a cached free resolution of R/I: apply
// Hom(-, M) levelwise (Hom(R^r, M) = M^r, maps transposed) and take
// homology. Keeps the resolution so successive indices share work.
template <class F>
class ExtTower {
 public:
  ExtTower(Ideal<F> I, FPModule<F> M)
      : R_(M.ring()), M_(std::move(M)) {
    if (R_ != I.ring()) throw RingMismatchError("Ext across different rings");
    ctx_.emplace_back(R_, 1);
    levels_.push_back(wrap_polys(FreeModule<F>(R_, 1), I.gb()));
  }

  // Ranks r_j of the resolution of R/I: r_0 = 1, r_j = |levels_[j-1]|.
  unsigned rank_of(unsigned j) {
    if (j == 0) return 1;
    extend_to(j);
    return static_cast<unsigned>(levels_[j - 1].size());
  }

  Subquotient<F> ext(unsigned i) {
    extend_to(i + 1);
    FPModule<F> Ci = hom_component(i);
    FPModule<F> Ci1 = hom_component(i + 1);
    ModuleMap<F> down = hom_map(i + 1, std::move(Ci), Ci1);
    ModuleMap<F> up =
        i == 0 ? ModuleMap<F>::zero(FPModule<F>(R_, 0, {}), down.source())
               : hom_map(i, hom_component(i - 1), down.source());
    return homology(down, up);
  }

 private:
  // Ensure resolution levels 1..j exist (levels_[l-1] holds the Groebner
  // basis whose elements are the columns of d_l).
  void extend_to(unsigned j) {
    while (levels_.size() < j) {
      const auto& G = levels_.back();
      if (G.empty()) {
        ctx_.emplace_back(R_, 0);
        levels_.emplace_back();
        continue;
      }
      auto [next_ctx, syz] = schreyer_syzygies(ctx_.back(), G);
      levels_.push_back(reduce_basis(next_ctx, syz));
      ctx_.push_back(std::move(next_ctx));
    }
  }

  FPModule<F> hom_component(unsigned j) {
    return power_module(M_, rank_of(j));
  }

  // Hom(d_j, M) : M^{r_{j-1}} -> M^{r_j}, the transpose of d_j tensored
  // with the identity on M's ambient generators.
  ModuleMap<F> hom_map(unsigned j, FPModule<F> source, FPModule<F> target) {
    const unsigned m = M_.rank();
    const unsigned rj = rank_of(j);
    const unsigned rp = rank_of(j - 1);
    // d_j columns as components over R^{r_{j-1}}.
    std::vector<std::vector<Polynomial<F>>> A(
        rp, std::vector<Polynomial<F>>(rj, R_.zero()));
    for (unsigned l = 0; l < rj; ++l) {
      auto comps =
          ctx_[j - 1].with_rank(rp).to_components(levels_[j - 1][l]);
      for (unsigned b = 0; b < rp; ++b) A[b][l] = std::move(comps[b]);
    }
    std::vector<std::vector<Polynomial<F>>> B(
        rj * m, std::vector<Polynomial<F>>(rp * m, R_.zero()));
    for (unsigned l = 0; l < rj; ++l)
      for (unsigned b = 0; b < rp; ++b)
        for (unsigned a = 0; a < m; ++a) B[l * m + a][b * m + a] = A[b][l];
    return ModuleMap<F>(std::move(source), std::move(target), std::move(B));
  }

  PolyRing<F> R_;
  FPModule<F> M_;
  std::vector<FreeModule<F>> ctx_;
  std::vector<std::vector<FreeElement<F>>> levels_;
};

template <class F>
FPModule<F> ext_module(unsigned i, const Ideal<F>& I, const FPModule<F>& M) {
  return ExtTower<F>(I, M).ext(i).module;
}

}  // namespace regseq
