#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qcfrft/params.hpp"
#include "qcfrft/signal.hpp"

namespace qcfrft {

/// A spectrum was handed to an inversion with different angles.
class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// QCFrFT values on the induced frequency lattice: the value stored at u-index k
/// belongs to xi = (-M1^{-1} u1, -M2^{-1} u2).
struct SpectrumField {
  std::vector<Quaternion> values;
  LatticeSpec time;       // lattice of the transformed signal
  LatticeSpec base_freq;  // rectangular u lattice, frequency_lattice(time)
  ParamSet params;
  double cell_measure = 0.0;  // sin^2(g1) sin^2(g2) prod du

  Vec4 xi_at(std::size_t flat) const;
  /// Peak modulus over all stored values.
  double peak() const;
};

/// (-M1^{-1} u1, -M2^{-1} u2)
Vec4 induced_xi(const ParamSet& p, const Vec4& u);

/// Quadrature of the defining integral at arbitrary xi, kernel_i on the left and
/// kernel_j on the right of f. O(N^4) per point.
Quaternion qcfrft_direct_at(const QSignal4& f, const ParamSet& p, const Vec4& xi);
std::vector<Quaternion> qcfrft_direct(const QSignal4& f, const ParamSet& p, std::span<const Vec4> xi_points);

/// Chirp, two-sided QFT, chirp. Agrees with qcfrft_direct on the induced lattice.
SpectrumField qcfrft_fast(const QSignal4& f, const ParamSet& p);

/// Inversion integral over the induced lattice with measure sin^2(g1) sin^2(g2) du.
QSignal4 qcfrft_inverse(const SpectrumField& s);
/// As above, but throws ParameterMismatch unless s was computed with `expected`.
QSignal4 qcfrft_inverse(const SpectrumField& s, const ParamSet& expected);

}  // namespace qcfrft
