#include "qcfrft/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace qcfrft {
namespace {

using LComplex = std::complex<long double>;

constexpr long double kSqrtPiL = 1.772453850905516027298167483341145183L;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// Below this |Re z| the Maclaurin series loses at most e^{2 x^2} ~ 3e5 of the
// long double precision; beyond it the continued fraction converges quickly.
constexpr double kSeriesRealLimit = 2.5;
// The continued fraction also handles any |z| above this.
constexpr double kFractionModulus = 6.0;

LComplex erf_series(LComplex z) {
  const LComplex z2 = z * z;
  LComplex term = z;  // (-1)^n z^{2n+1} / n!
  LComplex sum = z;
  for (int n = 1; n < 2000; ++n) {
    term *= -z2 / static_cast<long double>(n);
    const LComplex add = term / static_cast<long double>(2 * n + 1);
    sum += add;
    if (std::abs(add) <= 1e-22L * std::abs(sum)) {
      break;
    }
  }
  return sum * (2.0L / kSqrtPiL);
}

// sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))), Re z >= 0,
// evaluated with the modified Lentz method.
LComplex erfcx_fraction(LComplex z) {
  constexpr long double tiny = 1e-300L;
  LComplex f = z;
  if (std::abs(f) < tiny) {
    f = tiny;
  }
  LComplex c = f;
  LComplex d = 0.0L;
  for (int n = 1; n < 20000; ++n) {
    const long double an = 0.5L * n;
    d = z + an * d;
    if (std::abs(d) < tiny) {
      d = tiny;
    }
    c = z + an / c;
    if (std::abs(c) < tiny) {
      c = tiny;
    }
    d = 1.0L / d;
    const LComplex delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0L) < 1e-20L) {
      break;
    }
  }
  return 1.0L / (f * kSqrtPiL);
}

bool use_fraction(LComplex z) {
  return std::abs(z.real()) >= kSeriesRealLimit || std::abs(z) >= kFractionModulus;
}

double sq(const Vec2& v) { return v[0] * v[0] + v[1] * v[1]; }

// e^{-C^2/(4A^2)} erf(A t - D) with the Gaussian factor folded in before any
// large exponential is formed. A^2 = 1 + ia, D = iC/(2A).
PlanarComplex scaled_erf(double a, double C, PlanarComplex A, PlanarComplex D, double t) {
  const PlanarComplex z = A * t - D;
  const PlanarComplex A2(1.0, a);
  const PlanarComplex base = std::exp(-C * C / (4.0 * A2));
  // -C^2/(4A^2) - z^2 = -(1 + ia) t^2 + iCt
  const PlanarComplex integrand = std::exp(PlanarComplex(-t * t, -a * t * t + C * t));
  if (z.real() >= 0.0) {
    return base - integrand * erfcx_right(z);
  }
  return -base + integrand * erfcx_right(-z);
}

// Separable i-plane (or j-plane) block over [lo1, hi1) x [lo2, hi2).
PlanarComplex box_block(const CoupledPair& pair, const Vec2& xi, const Vec2& lo, const Vec2& hi) {
  const Vec2 c = pair.M.apply(xi);
  // d0 has the same planar components in either plane.
  const PlanarComplex d0(1.0, std::cos(pair.gamma) / pair.sin_gamma);
  return d0 / (2.0 * std::numbers::pi) * gaussian_chirp_segment(pair.a, xi[0], c[0], lo[0], hi[0]) *
         gaussian_chirp_segment(pair.a, xi[1], c[1], lo[1], hi[1]);
}

}  // namespace

PlanarComplex cerf(PlanarComplex z) {
  if (!(std::abs(z) <= kCerfMaxModulus)) {
    throw std::domain_error("cerf: |z| exceeds the supported region");
  }
  const LComplex zl(z.real(), z.imag());
  if (!use_fraction(zl)) {
    const LComplex w = erf_series(zl);
    return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
  }
  // Odd symmetry moves the argument into Re z >= 0.
  const bool flip = zl.real() < 0.0L;
  const LComplex u = flip ? -zl : zl;
  LComplex w = 1.0L - std::exp(-u * u) * erfcx_fraction(u);
  if (flip) {
    w = -w;
  }
  return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

PlanarComplex erfcx_right(PlanarComplex z) {
  if (z.real() < 0.0) {
    throw std::domain_error("erfcx_right: needs Re z >= 0");
  }
  const LComplex zl(z.real(), z.imag());
  LComplex w;
  if (use_fraction(zl)) {
    w = erfcx_fraction(zl);
  } else {
    w = std::exp(zl * zl) * (1.0L - erf_series(zl));
  }
  return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

Quaternion gaussian_qcfrft(const ParamSet& p, double A, double B, const Vec4& xi) {
  if (!(A > 0.0) || !(B > 0.0)) {
    throw std::invalid_argument("gaussian_qcfrft: A and B must be positive");
  }
  const Vec2 xi1 = first_half(xi), xi2 = second_half(xi);
  const double env = std::exp(-(sq(p.left.M.apply(xi1)) / A + sq(p.right.M.apply(xi2)) / B) / 4.0);
  return p.left.d0 * exp_i(-p.left.a * sq(xi1)) * (env / (4.0 * A * B)) * p.right.d0 * exp_j(-p.right.a * sq(xi2));
}

PlanarComplex gaussian_chirp_segment(double a, double xi, double C, double lo, double hi) {
  const PlanarComplex A = std::sqrt(PlanarComplex(1.0, a));
  const PlanarComplex D = PlanarComplex(0.0, C) / (2.0 * A);
  const PlanarComplex bracket = scaled_erf(a, C, A, D, hi) - scaled_erf(a, C, A, D, lo);
  return std::exp(PlanarComplex(0.0, -a * xi * xi)) * kSqrtPi / (2.0 * A) * bracket;
}

Quaternion box_window_stqcfrft(const ParamSet& p, const Vec4& x, const Vec4& xi) {
  const Vec2 x1 = first_half(x), x2 = second_half(x);
  const Vec2 xi1 = first_half(xi), xi2 = second_half(xi);
  const auto shifted = [](const Vec2& v, double s) { return Vec2{v[0] + s, v[1] + s}; };

  const PlanarComplex i_first = box_block(p.left, xi1, x1, shifted(x1, 0.5));
  const PlanarComplex i_second = box_block(p.left, xi1, shifted(x1, 0.5), shifted(x1, 1.0));
  const PlanarComplex j_first = box_block(p.right, xi2, x2, shifted(x2, 0.5));
  const PlanarComplex j_second = box_block(p.right, xi2, shifted(x2, 0.5), shifted(x2, 1.0));

  return Quaternion::in_i(i_first) * Quaternion::in_j(j_first) -
         Quaternion::in_i(i_second) * Quaternion::in_j(j_second);
}

}  // namespace qcfrft
