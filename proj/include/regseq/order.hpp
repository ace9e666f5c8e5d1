#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regseq/errors.hpp"
#include "regseq/monomial.hpp"

namespace regseq {

enum class OrderKind { lex, grevlex, block };

// Comparison result convention used throughout: -1 (less), 0, +1 (greater).
enum class Cmp : int { LT = -1, EQ = 0, GT = 1 };

// A multiplicative total well-order on monomials. `block` compares the
// masked variables grevlex-first, then the rest grevlex; a Groebner basis
// under it eliminates the masked block.
class TermOrder {
 public:
  static TermOrder lex() { return TermOrder(OrderKind::lex, {}); }
  static TermOrder grevlex() { return TermOrder(OrderKind::grevlex, {}); }
  // Eliminates the first k of `arity` variables.
  static TermOrder elim_block(unsigned k, unsigned arity) {
    std::vector<std::uint8_t> mask(arity, 0);
    for (unsigned i = 0; i < k && i < arity; ++i) mask[i] = 1;
    return TermOrder(OrderKind::block, std::move(mask));
  }
  // Eliminates an arbitrary variable subset.
  static TermOrder elim_mask(std::vector<std::uint8_t> mask) {
    return TermOrder(OrderKind::block, std::move(mask));
  }

  OrderKind kind() const { return kind_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }

  int compare(const Monomial& a, const Monomial& b) const {
    check_arity(a, b);
    switch (kind_) {
      case OrderKind::lex:
        return cmp_lex(a, b);
      case OrderKind::grevlex:
        return cmp_grevlex_masked(a, b, nullptr, false);
      case OrderKind::block: {
        if (mask_.size() != a.arity())
          throw ArityError("block order mask arity mismatch");
        int c = cmp_grevlex_masked(a, b, &mask_, true);
        if (c != 0) return c;
        return cmp_grevlex_masked(a, b, &mask_, false);
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind_) {
      case OrderKind::lex:
        return "lex";
      case OrderKind::grevlex:
        return "grevlex";
      case OrderKind::block: {
        unsigned k = 0;
        for (auto m : mask_) k += m;
        return "block(" + std::to_string(k) + ")";
      }
    }
    return "?";
  }

  bool operator==(const TermOrder& o) const {
    return kind_ == o.kind_ && mask_ == o.mask_;
  }
  bool operator!=(const TermOrder& o) const { return !(*this == o); }

 private:
  TermOrder(OrderKind k, std::vector<std::uint8_t> mask)
      : kind_(k), mask_(std::move(mask)) {}

  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (unsigned i = 0; i < a.arity(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }

  // grevlex restricted to the variables selected by (mask, in_mask);
  // mask == nullptr selects everything.
  static int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                                const std::vector<std::uint8_t>* mask,
                                bool in_mask) {
    long da = 0, db = 0;
    for (unsigned i = 0; i < a.arity(); ++i) {
      if (mask && (((*mask)[i] != 0) != in_mask)) continue;
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (unsigned j = a.arity(); j-- > 0;) {
      if (mask && (((*mask)[j] != 0) != in_mask)) continue;
      if (a[j] != b[j]) return a[j] < b[j] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_;
  std::vector<std::uint8_t> mask_;
};

}  // namespace regseq
