#include "qcfrft/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcfrft {
namespace {

CoupledPair derive_pair(double alpha, double beta, Side side) {
  CoupledPair p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = 0.5 * (alpha + beta);
  p.delta = 0.5 * (alpha - beta);
  p.sin_gamma = std::sin(p.gamma);
  if (!(std::abs(p.sin_gamma) > kMinSinGamma)) {
    throw InvalidAngles("alpha + beta = " + std::to_string(alpha + beta) + " lies in 2*pi*Z (|sin gamma| <= 1e-12)");
  }
  const double cos_gamma = std::cos(p.gamma);
  p.a = 0.5 * cos_gamma;
  p.b = std::cos(p.delta) / p.sin_gamma;
  p.c = std::sin(p.delta) / p.sin_gamma;

  // u e^{-u gamma} = sin(gamma) + u cos(gamma)
  const PlanarComplex d0(1.0, cos_gamma / p.sin_gamma);
  const PlanarComplex d = d0 / (2.0 * std::numbers::pi);
  p.d0 = side == Side::i ? Quaternion::in_i(d0) : Quaternion::in_j(d0);
  p.d = side == Side::i ? Quaternion::in_i(d) : Quaternion::in_j(d);

  p.M = Mat2{p.b, p.c, -p.c, p.b};
  p.detM = p.b * p.b + p.c * p.c;
  p.Minv = Mat2{p.b / p.detM, -p.c / p.detM, p.c / p.detM, p.b / p.detM};
  return p;
}

double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

}  // namespace

ParamSet derive_params(double alpha1, double beta1, double alpha2, double beta2) {
  return ParamSet{derive_pair(alpha1, beta1, Side::i), derive_pair(alpha2, beta2, Side::j)};
}

bool same_angles(const ParamSet& a, const ParamSet& b) {
  return a.left.alpha == b.left.alpha && a.left.beta == b.left.beta && a.right.alpha == b.right.alpha &&
         a.right.beta == b.right.beta;
}

double kernel_phase(const CoupledPair& pair, const Vec2& t, const Vec2& xi) {
  return pair.a * (dot(t, t) + dot(xi, xi)) - dot(t, pair.M.apply(xi));
}

Quaternion kernel_i(const ParamSet& p, const Vec2& t1, const Vec2& xi1) {
  return p.left.d * exp_i(-kernel_phase(p.left, t1, xi1));
}

Quaternion kernel_j(const ParamSet& p, const Vec2& t2, const Vec2& xi2) {
  return p.right.d * exp_j(-kernel_phase(p.right, t2, xi2));
}

Quaternion kernel_shift_factor(const ParamSet& p, Side side, const Vec2& k, const Vec2& t, const Vec2& xi) {
  const CoupledPair& pair = side == Side::i ? p.left : p.right;
  const double phase = pair.a * (dot(k, k) + 2.0 * dot(t, k)) - dot(k, pair.M.apply(xi));
  return side == Side::i ? exp_i(-phase) : exp_j(-phase);
}

}  // namespace qcfrft
