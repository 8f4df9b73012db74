#include "qcfrft/short_time.hpp"

#include <algorithm>
#include <string>

namespace qcfrft {
namespace {

void require_stride(const LatticeSpec& lat, const Index4& stride) {
  for (int a = 0; a < 4; ++a) {
    if (stride[a] == 0 || lat.dims[a] % stride[a] != 0) {
      throw std::invalid_argument("stride " + std::to_string(stride[a]) + " does not divide dimension " +
                                  std::to_string(lat.dims[a]) + " on axis " + std::to_string(a + 1));
    }
  }
}

}  // namespace

Window::Window(QSignal4 g) : g_(std::move(g)), norm_(lp_norm(g_, 2.0)) {
  if (!(norm_ > 0.0)) {
    throw ZeroWindow("window has zero L2 norm");
  }
}

Index4 TimeFreqField::position_dims() const {
  Index4 out{};
  for (int a = 0; a < 4; ++a) {
    out[a] = time.dims[a] / stride[a];
  }
  return out;
}

std::size_t TimeFreqField::position_count() const {
  const Index4 pd = position_dims();
  return pd[0] * pd[1] * pd[2] * pd[3];
}

Index4 TimeFreqField::position_index(std::size_t m) const {
  const Index4 pd = position_dims();
  Index4 idx{};
  for (int a = 3; a >= 0; --a) {
    idx[a] = time.center(a) % stride[a] + (m % pd[a]) * stride[a];
    m /= pd[a];
  }
  return idx;
}

double TimeFreqField::peak() const {
  double m = 0.0;
  for (const auto& q : values) {
    m = std::max(m, qmodulus(q));
  }
  return m;
}

QSignal4 windowed(const QSignal4& f, const Window& g, const Index4& x_index) {
  const auto& lat = f.lattice();
  require_same_lattice(lat, g.lattice(), "windowed");
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < out.size(); ++n) {
    const Index4 shifted = lat.circular_difference(lat.unflatten(n), x_index);
    out[n] = f[n] * qconj(g.signal().at(shifted));
  }
  return QSignal4(lat, std::move(out));
}

TimeFreqField stqcfrft_compute(const QSignal4& f, const Window& g, const ParamSet& p, const Index4& stride) {
  const auto& lat = f.lattice();
  require_same_lattice(lat, g.lattice(), "stqcfrft_compute");
  require_stride(lat, stride);

  TimeFreqField out;
  out.time = lat;
  out.stride = stride;
  out.params = p;
  out.x_cell = 1.0;
  for (int a = 0; a < 4; ++a) {
    out.x_cell *= static_cast<double>(stride[a]) * lat.delta[a];
  }
  const std::size_t positions = out.position_count();
  out.values.reserve(positions * lat.size());
  for (std::size_t m = 0; m < positions; ++m) {
    SpectrumField s = qcfrft_fast(windowed(f, g, out.position_index(m)), p);
    if (m == 0) {
      out.base_freq = s.base_freq;
      out.xi_cell = s.cell_measure;
    }
    out.values.insert(out.values.end(), s.values.begin(), s.values.end());
  }
  return out;
}

Quaternion stqcfrft_direct_at(const QSignal4& f, const Window& g, const ParamSet& p, const Index4& x_index,
                              const Vec4& xi) {
  return qcfrft_direct_at(windowed(f, g, x_index), p, xi);
}

QSignal4 stqcfrft_reconstruct(const TimeFreqField& s, const Window& g) {
  const auto& lat = s.time;
  require_same_lattice(lat, g.lattice(), "stqcfrft_reconstruct");
  if (s.stride != Index4{1, 1, 1, 1}) {
    throw std::invalid_argument("stqcfrft_reconstruct needs every window position (stride 1)");
  }
  const std::size_t nf = s.base_freq.size();
  if (s.values.size() != s.position_count() * nf) {
    throw std::invalid_argument("stqcfrft_reconstruct: field length does not match its lattices");
  }

  // The inner xi sum is the QCFrFT inversion of each slice: it returns f(t) conj(g(t - x)).
  std::vector<Quaternion> acc(lat.size());
  SpectrumField slice;
  slice.time = lat;
  slice.base_freq = s.base_freq;
  slice.params = s.params;
  slice.cell_measure = s.xi_cell;
  for (std::size_t m = 0; m < s.position_count(); ++m) {
    const auto first = s.values.begin() + static_cast<std::ptrdiff_t>(m * nf);
    slice.values.assign(first, first + static_cast<std::ptrdiff_t>(nf));
    const QSignal4 h = qcfrft_inverse(slice);
    const Index4 x = s.position_index(m);
    for (std::size_t n = 0; n < acc.size(); ++n) {
      acc[n] += h[n] * g.signal().at(lat.circular_difference(lat.unflatten(n), x));
    }
  }
  const double scale = s.x_cell / (g.norm() * g.norm());
  for (auto& q : acc) {
    q = q * scale;
  }
  return QSignal4(lat, std::move(acc));
}

Vec4 translation_xi_shift(const ParamSet& p, const Vec4& l) {
  const Vec2 s1 = p.left.Minv.apply(first_half(l));
  const Vec2 s2 = p.right.Minv.apply(second_half(l));
  return {2 * p.left.a * s1[0], 2 * p.left.a * s1[1], 2 * p.right.a * s2[0], 2 * p.right.a * s2[1]};
}

}  // namespace qcfrft
