#pragma once

#include <string>

#include "regseq/errors.hpp"

namespace regseq {

// Depth of a module: a non-negative integer, or +infinity (zero module,
// or localization vanishes).
class DepthValue {
 public:
  static DepthValue infinite() { return DepthValue(true, 0); }
  static DepthValue of(unsigned v) { return DepthValue(false, v); }

  bool is_infinite() const { return infinite_; }
  unsigned value() const {
    if (infinite_)
      throw PrecondError("infinite depth has no finite value");
    return value_;
  }

  bool at_least(unsigned r) const { return infinite_ || value_ >= r; }

  bool operator==(const DepthValue& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  bool operator!=(const DepthValue& o) const { return !(*this == o); }

  std::string str() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
  }

 private:
  DepthValue(bool inf, unsigned v) : infinite_(inf), value_(v) {}
  bool infinite_;
  unsigned value_;
};

}  // namespace regseq
