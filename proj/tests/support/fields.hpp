#pragma once

#include "regseq.hpp"

namespace testsupport {

template <class F>
F make_field();

template <>
inline regseq::GF make_field<regseq::GF>() {
  return regseq::GF(32003);
}

template <>
inline regseq::QQ make_field<regseq::QQ>() {
  return regseq::QQ();
}

}  // namespace testsupport
