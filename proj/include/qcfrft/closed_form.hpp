#pragma once

#include <complex>
#include <stdexcept>

#include "qcfrft/params.hpp"
#include "qcfrft/signal.hpp"

namespace qcfrft {

/// Largest |z| accepted by cerf.
inline constexpr double kCerfMaxModulus = 12.0;

/// Complex error function 2/sqrt(pi) int_0^z e^{-s^2} ds. Throws std::domain_error
/// for |z| > kCerfMaxModulus.
PlanarComplex cerf(PlanarComplex z);

/// e^{z^2} erfc(z) for Re z >= 0, bounded by 1/sqrt(pi) / |z| asymptotically.
PlanarComplex erfcx_right(PlanarComplex z);

/// Transform of e^{i a1 |t1|^2} e^{-A |t1|^2} e^{-B |t2|^2} e^{j a2 |t2|^2}:
/// (1/(4AB)) d0(g1) e^{-i a1 |xi1|^2} e^{-(|M1 xi1|^2 / A + |M2 xi2|^2 / B) / 4} d0(g2) e^{-j a2 |xi2|^2}.
/// Throws std::invalid_argument unless A, B > 0.
Quaternion gaussian_qcfrft(const ParamSet& p, double A, double B, const Vec4& xi);

/// int_lo^hi e^{-i a (t^2 + xi^2) + i t C} e^{-t^2} dt, as a complex number.
PlanarComplex gaussian_chirp_segment(double a, double xi, double C, double lo, double hi);

/// Short-time transform of f = e^{-|t|^2} with the window that is +1 on
/// [0, 1/2)^4, -1 on [1/2, 1)^4 and 0 elsewhere:
///   S = I(x, x + 1/2) J(x, x + 1/2) - I(x + 1/2, x + 1) J(x + 1/2, x + 1),
/// I the i-plane factor over the t1 box, J the j-plane factor over the t2 box.
Quaternion box_window_stqcfrft(const ParamSet& p, const Vec4& x, const Vec4& xi);

}  // namespace qcfrft
