#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "regseq/depth_value.hpp"
#include "regseq/homology.hpp"

namespace regseq {

namespace detail {

inline std::vector<std::vector<std::uint32_t>> subsets_by_size(unsigned r) {
  std::vector<std::vector<std::uint32_t>> levels(r + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << r); ++mask)
    levels[std::popcount(mask)].push_back(mask);
  return levels;
}

}  // namespace detail

// The Koszul complex K(f; M).  Level i is M^{binom(r,i)}, one block per
// i-subset of {0..r-1} (blocks ordered by ascending bitmask).  The
// differential sends the block of S to sum over j in S of (-1)^{pos of j
// in S} f_j times the block of S \ {j}.  When M is graded and every f_j is
// a nonzero homogeneous polynomial, block shifts are twisted by
// sum_{j in S} deg f_j so the differentials are degree-preserving.
template <class F>
struct KoszulComplex {
  std::vector<Polynomial<F>> f;
  FPModule<F> base;
  ChainComplex<F> cx;  // cx.modules[i] = K_i, cx.maps[i-1] = d_i

  unsigned length() const { return static_cast<unsigned>(f.size()); }
};

template <class F>
KoszulComplex<F> build_koszul(const std::vector<Polynomial<F>>& f,
                              const FPModule<F>& M) {
  const PolyRing<F>& R = M.ring();
  const unsigned r = static_cast<unsigned>(f.size());
  if (r > 30) throw ResourceError("Koszul complex on more than 30 elements");
  const unsigned m = M.rank();

  bool graded = M.is_graded();
  std::vector<long> fdeg(r, 0);
  for (unsigned j = 0; j < r && graded; ++j) {
    if (f[j].is_zero() || !R.is_homogeneous(f[j]))
      graded = false;
    else
      fdeg[j] = f[j].total_degree();
  }

  auto levels = detail::subsets_by_size(r);
  KoszulComplex<F> K{f, M, {}};

  // Build each K_i: relations duplicated per block, shifts twisted.
  for (unsigned i = 0; i <= r; ++i) {
    const auto& blocks = levels[i];
    const unsigned rank = static_cast<unsigned>(blocks.size()) * m;
    FreeModule<F> amb(R, rank);
    std::vector<FreeElement<F>> rels;
    for (unsigned b = 0; b < blocks.size(); ++b) {
      for (const auto& rho : M.relations().generators()) {
        std::vector<ModTerm<F>> terms;
        for (const auto& t : rho.terms())
          terms.push_back(
              ModTerm<F>{t.comp + b * m, t.mono, t.coeff});
        rels.push_back(amb.from_terms(terms));
      }
    }
    if (graded) {
      std::vector<long> shifts;
      shifts.reserve(rank);
      for (std::uint32_t S : blocks) {
        long off = 0;
        for (unsigned j = 0; j < r; ++j)
          if (S & (std::uint32_t(1) << j)) off += fdeg[j];
        for (unsigned a = 0; a < m; ++a)
          shifts.push_back(M.shifts()[a] + off);
      }
      K.cx.modules.emplace_back(R, rank, rels, std::move(shifts));
    } else {
      K.cx.modules.emplace_back(R, rank, rels);
    }
  }

  // Differentials d_i : K_i -> K_{i-1}.
  for (unsigned i = 1; i <= r; ++i) {
    const auto& cols_blocks = levels[i];
    const auto& rows_blocks = levels[i - 1];
    const unsigned nrows = static_cast<unsigned>(rows_blocks.size()) * m;
    const unsigned ncols = static_cast<unsigned>(cols_blocks.size()) * m;
    std::vector<std::vector<Polynomial<F>>> mat(
        nrows, std::vector<Polynomial<F>>(ncols, R.zero()));
    for (unsigned bs = 0; bs < cols_blocks.size(); ++bs) {
      const std::uint32_t S = cols_blocks[bs];
      for (unsigned j = 0; j < r; ++j) {
        if (!(S & (std::uint32_t(1) << j))) continue;
        const std::uint32_t T = S & ~(std::uint32_t(1) << j);
        const unsigned bt = static_cast<unsigned>(
            std::lower_bound(rows_blocks.begin(), rows_blocks.end(), T) -
            rows_blocks.begin());
        const unsigned pos =
            std::popcount(S & ((std::uint32_t(1) << j) - 1));
        const Polynomial<F> entry = (pos % 2 == 0) ? f[j] : R.neg(f[j]);
        for (unsigned a = 0; a < m; ++a)
          mat[bt * m + a][bs * m + a] = entry;
      }
    }
    K.cx.maps.emplace_back(K.cx.modules[i], K.cx.modules[i - 1],
                           std::move(mat));
  }
  return K;
}

// H_i(K) = ker d_i / im d_{i+1}, with d_0 and d_{r+1} the zero maps.
template <class F>
Subquotient<F> koszul_homology(const KoszulComplex<F>& K, unsigned i) {
  const unsigned r = K.length();
  if (i > r) throw PrecondError("Koszul homology index out of range");
  const PolyRing<F>& R = K.base.ring();
  FPModule<F> zero_mod(R, 0, {});
  ModuleMap<F> down =
      i >= 1 ? K.cx.maps[i - 1]
             : ModuleMap<F>::zero(K.cx.modules[0], zero_mod);
  ModuleMap<F> up =
      i < r ? K.cx.maps[i]
            : ModuleMap<F>::zero(zero_mod, K.cx.modules[r]);
  return homology(down, up);
}

// depth(M) = n - max{ i : H_i(x_1..x_n; M) != 0 } for a nonzero graded
// module over k[x_1..x_n]; +infinity for the zero module.
template <class F>
DepthValue depth_via_koszul(const FPModule<F>& M) {
  if (M.is_zero()) return DepthValue::infinite();
  if (!M.is_graded())
    throw UngradedError("Koszul depth needs a graded module");
  const PolyRing<F>& R = M.ring();
  std::vector<Polynomial<F>> vars;
  for (unsigned i = 0; i < R.arity(); ++i) vars.push_back(R.variable(i));
  KoszulComplex<F> K = build_koszul(vars, M);
  for (unsigned i = R.arity() + 1; i-- > 0;) {
    if (!koszul_homology(K, i).module.is_zero())
      return DepthValue::of(R.arity() - i);
  }
  throw InternalError("all Koszul homology vanished on a nonzero module");
}

}  // namespace regseq
