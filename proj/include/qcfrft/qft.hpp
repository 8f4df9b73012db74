#pragma once

#include <span>
#include <vector>

#include "qcfrft/signal.hpp"

namespace qcfrft {

/// Frequency lattice dual to `time`: same dims, du_a = 2 pi / (N_a delta_a),
/// centered the same way, so u_a(k) = (k - floor(N_a / 2)) du_a.
LatticeSpec frequency_lattice(const LatticeSpec& time);

/// Two-sided QFT by literal summation,
///   F(u) = sum_t (1/2pi) e^{-i t1.u1} f(t) (1/2pi) e^{-j t2.u2} * cell,
/// over the whole frequency lattice. O(N^8); intended as an oracle.
QSignal4 qft_direct(const QSignal4& f);

/// Same sum at one arbitrary frequency point.
Quaternion qft_direct_at(const QSignal4& f, const Vec4& u);

/// FFT evaluation of qft_direct (symplectic split into two {1,i}-valued fields,
/// centered complex DFTs per axis, recombination on the j side).
QSignal4 qft_fast(const QSignal4& f);

/// Exact inverse of qft_fast onto `time`. Throws LatticeMismatch when F does not
/// live on frequency_lattice(time).
QSignal4 qft_inverse(const QSignal4& F, const LatticeSpec& time);

namespace detail {

/// Unscaled two-sided sum
///   out(u) = sum_t e^{sl i t1.u1} f(t) e^{sr j t2.u2}
/// where t and u are centered index grids with t.u = 2 pi (n - h)(k - h) / N per axis.
/// The same routine maps frequency to time when the signs are flipped.
std::vector<Quaternion> two_sided_dft(std::span<const Quaternion> values, const Index4& dims, int left_sign,
                                      int right_sign);

}  // namespace detail
}  // namespace qcfrft
