#pragma once

#include <stdexcept>

#include "qcfrft/quaternion.hpp"
#include "qcfrft/signal.hpp"

namespace qcfrft {

/// An angle pair with alpha + beta too close to 2*pi*Z (|sin(gamma)| <= 1e-12).
class InvalidAngles : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kMinSinGamma = 1e-12;

struct Mat2 {
  double m00 = 1.0, m01 = 0.0;
  double m10 = 0.0, m11 = 1.0;

  Vec2 apply(const Vec2& v) const { return {m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1]}; }
  double det() const { return m00 * m11 - m01 * m10; }
};

/// One coupled angle pair and every constant its kernel needs.
struct CoupledPair {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;  // (alpha + beta) / 2
  double delta = 0.0;  // (alpha - beta) / 2
  double sin_gamma = 1.0;
  double a = 0.0;  // cos(gamma) / 2
  double b = 1.0;  // cos(delta) / sin(gamma)
  double c = 0.0;  // sin(delta) / sin(gamma)
  Quaternion d;    // u e^{-u gamma} / (2 pi sin gamma), in the pair's plane
  Quaternion d0;   // 2 pi d
  Mat2 M;          // [[b, c], [-c, b]]
  Mat2 Minv;
  double detM = 1.0;  // b^2 + c^2 = 1 / sin^2(gamma)
};

/// Left pair lives in the {1,i} plane and acts on t1 = (t_1, t_2); the right
/// pair lives in the {1,j} plane and acts on t2 = (t_3, t_4).
struct ParamSet {
  CoupledPair left;
  CoupledPair right;
};

enum class Side { i, j };

/// Throws InvalidAngles when |sin((alpha_m + beta_m) / 2)| <= 1e-12 for either pair.
ParamSet derive_params(double alpha1, double beta1, double alpha2, double beta2);

/// Angles agree exactly.
bool same_angles(const ParamSet& a, const ParamSet& b);

/// a (|t|^2 + |xi|^2) - t . M xi
double kernel_phase(const CoupledPair& pair, const Vec2& t, const Vec2& xi);

/// d1 e^{-i {a1 (|t1|^2 + |xi1|^2) - t1 . M1 xi1}}; lies in the {1,i} plane.
Quaternion kernel_i(const ParamSet& p, const Vec2& t1, const Vec2& xi1);
/// d2 e^{-j {a2 (|t2|^2 + |xi2|^2) - t2 . M2 xi2}}; lies in the {1,j} plane.
Quaternion kernel_j(const ParamSet& p, const Vec2& t2, const Vec2& xi2);

/// e^{-u {a (|k|^2 + 2 t . k) - k . M xi}}, so that
/// kernel(t + k, xi) = factor * kernel(t, xi) on the chosen side.
Quaternion kernel_shift_factor(const ParamSet& p, Side side, const Vec2& k, const Vec2& t, const Vec2& xi);

inline Vec2 first_half(const Vec4& v) { return {v[0], v[1]}; }
inline Vec2 second_half(const Vec4& v) { return {v[2], v[3]}; }

}  // namespace qcfrft
