#pragma once

#include <cmath>

namespace beamsym {

/// Running sum that also accumulates the absolute magnitude of every term.
/// `normalized()` is the scale-free residual |sum| / sum|term|; an all-zero
/// sum reports 0.
template <typename Scalar = double>
struct TermSum {
  Scalar value{0};
  Scalar scale{0};

  TermSum& operator+=(Scalar term) {
    using std::abs;
    value += term;
    scale += abs(term);
    return *this;
  }
  TermSum& operator-=(Scalar term) { return *this += -term; }

  Scalar normalized() const {
    using std::abs;
    return scale > Scalar(0) ? abs(value) / scale : Scalar(0);
  }
};

}  // namespace beamsym
