#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "regseq.hpp"

namespace testsupport {

// Nullspace basis of the nrows x ncols matrix A over the field k, by plain
// Gaussian elimination.  Rows are dense coefficient vectors.
template <class F>
std::vector<std::vector<typename F::Elem>> nullspace(
    const F& k, std::vector<std::vector<typename F::Elem>> A,
    std::size_t ncols) {
  const std::size_t nrows = A.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t piv = rank;
    while (piv < nrows && k.is_zero(A[piv][col])) ++piv;
    if (piv == nrows) continue;
    std::swap(A[piv], A[rank]);
    auto inv = k.inv(A[rank][col]);
    for (std::size_t c = col; c < ncols; ++c)
      A[rank][c] = k.mul(A[rank][c], inv);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || k.is_zero(A[r][col])) continue;
      auto factor = A[r][col];
      for (std::size_t c = col; c < ncols; ++c)
        A[r][c] = k.sub(A[r][c], k.mul(factor, A[rank][c]));
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<typename F::Elem> v(ncols, k.zero());
    v[free_col] = k.one();
    for (std::size_t r = 0; r < rank; ++r)
      v[pivot_col[r]] = k.neg(A[r][free_col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// All ambient basis elements m*e_a with deg(m) <= maxdeg.
template <class F>
std::vector<regseq::FreeElement<F>> degree_basis(
    const regseq::FreeModule<F>& amb, unsigned maxdeg) {
  std::vector<regseq::FreeElement<F>> out;
  for (unsigned a = 0; a < amb.rank(); ++a)
    for (unsigned d = 0; d <= maxdeg; ++d)
      for (const auto& m :
           regseq::monomials_of_degree(amb.ring().arity(), d))
        out.push_back(amb.from_terms(
            {regseq::ModTerm<F>{a, m, amb.ring().field().one()}}));
  return out;
}

// Basis of { w in span(degree_basis) : image(w) = 0 } for a linear map
// given by its action on basis elements.
template <class F>
std::vector<regseq::FreeElement<F>> brute_solutions(
    const regseq::FreeModule<F>& amb, unsigned maxdeg,
    const std::function<regseq::FreeElement<F>(
        const regseq::FreeElement<F>&)>& image) {
  const F& k = amb.ring().field();
  std::vector<regseq::FreeElement<F>> basis = degree_basis(amb, maxdeg);
  std::vector<regseq::FreeElement<F>> images;
  images.reserve(basis.size());
  std::map<std::pair<unsigned, std::vector<unsigned>>, std::size_t> coord;
  for (const auto& b : basis) {
    images.push_back(image(b));
    for (const auto& t : images.back().terms())
      coord.emplace(std::make_pair(t.comp, t.mono.exponents()),
                    coord.size());
  }
  std::vector<std::vector<typename F::Elem>> A(
      coord.size(),
      std::vector<typename F::Elem>(basis.size(), k.zero()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& t : images[j].terms())
      A[coord.at(std::make_pair(t.comp, t.mono.exponents()))][j] = t.coeff;
  auto null = nullspace(k, std::move(A), basis.size());
  std::vector<regseq::FreeElement<F>> out;
  for (const auto& v : null) {
    regseq::FreeElement<F> w = amb.zero();
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (!k.is_zero(v[j])) w = amb.add(w, amb.scale(basis[j], v[j]));
    out.push_back(std::move(w));
  }
  return out;
}

// Membership with an explicit certificate: the division quotients are
// re-multiplied and compared, so a "true" answer does not rely on the
// division routine being correct.
template <class F>
bool certified_member(const regseq::FreeModule<F>& amb,
                      const regseq::FreeElement<F>& v,
                      const std::vector<regseq::FreeElement<F>>& G) {
  std::vector<regseq::Polynomial<F>> q;
  auto rem = regseq::divide_full(amb, v, G, &q);
  if (!rem.is_zero()) return false;
  regseq::FreeElement<F> acc = amb.zero();
  for (std::size_t i = 0; i < G.size(); ++i)
    acc = amb.add(acc, amb.mul_poly(q[i], G[i]));
  return acc == v;
}

// Count of standard monomials m*e_a of total degree d (with shifts) with
// respect to the reduced Groebner basis of the relation module; this is
// the Hilbert function computed the Groebner way.
template <class F>
std::size_t gb_standard_monomial_count(const regseq::FPModule<F>& M,
                                       long d) {
  const auto& R = M.ring();
  const auto& gb = M.relations().gb();
  std::size_t count = 0;
  for (unsigned a = 0; a < M.rank(); ++a) {
    long mdeg = d - M.shifts()[a];
    if (mdeg < 0) continue;
    for (const auto& m :
         regseq::monomials_of_degree(R.arity(), static_cast<unsigned>(mdeg))) {
      bool standard = true;
      for (const auto& g : gb) {
        const auto& lt = g.lead();
        if (lt.comp == a && regseq::mono_divides(lt.mono, m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
    }
  }
  return count;
}

}  // namespace testsupport
