#include "qcfrft/transform.hpp"

#include <algorithm>
#include <numbers>

#include "qcfrft/qft.hpp"

namespace qcfrft {
namespace {

double sq(const Vec2& v) { return v[0] * v[0] + v[1] * v[1]; }

Vec2 neg(const Vec2& v) { return {-v[0], -v[1]}; }

}  // namespace

Vec4 induced_xi(const ParamSet& p, const Vec4& u) {
  const Vec2 xi1 = neg(p.left.Minv.apply(first_half(u)));
  const Vec2 xi2 = neg(p.right.Minv.apply(second_half(u)));
  return {xi1[0], xi1[1], xi2[0], xi2[1]};
}

Vec4 SpectrumField::xi_at(std::size_t flat) const { return induced_xi(params, base_freq.point(flat)); }

double SpectrumField::peak() const {
  double m = 0.0;
  for (const auto& q : values) {
    m = std::max(m, qmodulus(q));
  }
  return m;
}

Quaternion qcfrft_direct_at(const QSignal4& f, const ParamSet& p, const Vec4& xi) {
  const auto& lat = f.lattice();
  const std::size_t n1 = lat.dims[0] * lat.dims[1];
  const std::size_t n2 = lat.dims[2] * lat.dims[3];
  const Vec2 xi1 = first_half(xi);
  const Vec2 xi2 = second_half(xi);

  // The kernels only depend on the planar halves of t.
  std::vector<Quaternion> left(n1), right(n2);
  for (std::size_t a = 0; a < n1; ++a) {
    const Vec2 t1{lat.coordinate(0, a / lat.dims[1]), lat.coordinate(1, a % lat.dims[1])};
    left[a] = kernel_i(p, t1, xi1);
  }
  for (std::size_t b = 0; b < n2; ++b) {
    const Vec2 t2{lat.coordinate(2, b / lat.dims[3]), lat.coordinate(3, b % lat.dims[3])};
    right[b] = kernel_j(p, t2, xi2);
  }
  Quaternion acc;
  for (std::size_t n = 0; n < f.size(); ++n) {
    acc += left[n / n2] * f[n] * right[n % n2];
  }
  return acc * lat.cell_measure();
}

std::vector<Quaternion> qcfrft_direct(const QSignal4& f, const ParamSet& p, std::span<const Vec4> xi_points) {
  std::vector<Quaternion> out;
  out.reserve(xi_points.size());
  for (const auto& xi : xi_points) {
    out.push_back(qcfrft_direct_at(f, p, xi));
  }
  return out;
}

SpectrumField qcfrft_fast(const QSignal4& f, const ParamSet& p) {
  const auto& lat = f.lattice();
  std::vector<Quaternion> chirped(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Vec4 t = lat.point(n);
    chirped[n] = exp_i(-p.left.a * sq(first_half(t))) * f[n] * exp_j(-p.right.a * sq(second_half(t)));
  }
  const QSignal4 spectrum = qft_fast(QSignal4(lat, std::move(chirped)));

  SpectrumField out;
  out.time = lat;
  out.base_freq = spectrum.lattice();
  out.params = p;
  out.cell_measure = out.base_freq.cell_measure() / (p.left.detM * p.right.detM);
  out.values.resize(spectrum.size());
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const Vec4 xi = out.xi_at(k);
    const Quaternion left = p.left.d0 * exp_i(-p.left.a * sq(first_half(xi)));
    const Quaternion right = p.right.d0 * exp_j(-p.right.a * sq(second_half(xi)));
    out.values[k] = left * spectrum[k] * right;
  }
  return out;
}

QSignal4 qcfrft_inverse(const SpectrumField& s) {
  const ParamSet& p = s.params;
  if (s.values.size() != s.base_freq.size()) {
    throw std::invalid_argument("qcfrft_inverse: spectrum length does not match its lattice");
  }
  const Quaternion left_d0_inv = qinverse(p.left.d0);
  const Quaternion right_d0_inv = qinverse(p.right.d0);
  std::vector<Quaternion> stripped(s.values.size());
  for (std::size_t k = 0; k < stripped.size(); ++k) {
    const Vec4 xi = s.xi_at(k);
    stripped[k] = left_d0_inv * exp_i(p.left.a * sq(first_half(xi))) * s.values[k] *
                  exp_j(p.right.a * sq(second_half(xi))) * right_d0_inv;
  }
  const QSignal4 chirped = qft_inverse(QSignal4(s.base_freq, std::move(stripped)), s.time);

  const auto& lat = s.time;
  std::vector<Quaternion> out(chirped.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    const Vec4 t = lat.point(n);
    out[n] = exp_i(p.left.a * sq(first_half(t))) * chirped[n] * exp_j(p.right.a * sq(second_half(t)));
  }
  return QSignal4(lat, std::move(out));
}

QSignal4 qcfrft_inverse(const SpectrumField& s, const ParamSet& expected) {
  if (!same_angles(s.params, expected)) {
    throw ParameterMismatch("qcfrft_inverse: spectrum was computed with different angles");
  }
  return qcfrft_inverse(s);
}

}  // namespace qcfrft
