#pragma once

#include <algorithm>
#include <span>

#include "qcfrft/quaternion.hpp"

namespace qcfrft::testing {

// max |a - b| divided by max(peak |b|, 1e-300).
inline double max_scaled_diff(std::span<const Quaternion> a, std::span<const Quaternion> b) {
  double diff = 0.0, peak = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    diff = std::max(diff, qmodulus(a[n] - b[n]));
    peak = std::max(peak, qmodulus(b[n]));
  }
  return diff / std::max(peak, 1e-300);
}

inline double qdist(const Quaternion& a, const Quaternion& b) { return qmodulus(a - b); }

}  // namespace qcfrft::testing
