#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace qcfrft {

/// Element of the complex plane spanned by {1, u} for a fixed unit u (i or j).
using PlanarComplex = std::complex<double>;

/// Hamilton quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  /// Embeds a + b u into the {1,i} plane.
  static Quaternion in_i(PlanarComplex c) { return {c.real(), c.imag(), 0.0, 0.0}; }
  /// Embeds a + b u into the {1,j} plane.
  static Quaternion in_j(PlanarComplex c) { return {c.real(), 0.0, c.imag(), 0.0}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product; i j = k, j k = i, k i = j.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr Quaternion qconj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double scalar_part(const Quaternion& q) { return q.w; }

constexpr double norm_squared(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double qmodulus(const Quaternion& q) { return std::sqrt(norm_squared(q)); }

/// Multiplicative inverse conj(q) / |q|^2; undefined for q = 0.
constexpr Quaternion qinverse(const Quaternion& q) { return qconj(q) * (1.0 / norm_squared(q)); }

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// Cayley-Dickson halves: q = first + second * j, both halves in the {1,i} plane.
struct SymplecticPair {
  PlanarComplex first;
  PlanarComplex second;
};

/// w + x i + (y + z i) j, since i j = k.
constexpr SymplecticPair symplectic_split(const Quaternion& q) {
  return {PlanarComplex(q.w, q.x), PlanarComplex(q.y, q.z)};
}

constexpr Quaternion symplectic_join(const SymplecticPair& p) {
  return {p.first.real(), p.first.imag(), p.second.real(), p.second.imag()};
}

/// e^{i theta}.
inline Quaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }
/// e^{j theta}.
inline Quaternion exp_j(double theta) { return {std::cos(theta), 0.0, std::sin(theta), 0.0}; }

}  // namespace qcfrft
