#include "qcfrft/qft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace qcfrft {
namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW's planner is not thread-safe; execution of an existing plan is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  // In-place rank-1 transform along `axis` of a row-major 4-D array, batched
  // over the other three axes.
  fftw_plan get(const Index4& dims, int axis, int sign) {
    const auto key = std::make_tuple(dims, axis, sign);
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) {
      return it->second;
    }
    std::array<int, 4> stride{};
    stride[3] = 1;
    for (int a = 2; a >= 0; --a) {
      stride[a] = stride[a + 1] * static_cast<int>(dims[a + 1]);
    }
    fftw_iodim transform{static_cast<int>(dims[axis]), stride[axis], stride[axis]};
    fftw_iodim batch[3];
    int nb = 0;
    for (int a = 0; a < 4; ++a) {
      if (a != axis) {
        batch[nb++] = fftw_iodim{static_cast<int>(dims[a]), stride[a], stride[a]};
      }
    }
    const std::size_t total = dims[0] * dims[1] * dims[2] * dims[3];
    auto* scratch = fftw_alloc_complex(total);
    fftw_plan plan = fftw_plan_guru_dft(1, &transform, 3, batch, scratch, scratch,
                                        sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) {
      fftw_destroy_plan(plan);
    }
  }

  std::mutex mutex_;
  std::map<std::tuple<Index4, int, int>, fftw_plan> plans_;
};

// e^{sign i 2 pi m / N} with m reduced mod N first, so large products keep full accuracy.
cplx root_of_unity(long long m, long long n, int sign) {
  const long long r = ((m % n) + n) % n;
  const double angle = sign * kTwoPi * static_cast<double>(r) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

// out[k] = sum_n in[n] e^{sign i 2 pi (n - h)(k - h) / N} along one axis, in place.
void centered_dft_axis(std::vector<cplx>& data, const Index4& dims, int axis, int sign) {
  const auto n = static_cast<long long>(dims[axis]);
  const long long h = n / 2;
  std::vector<cplx> pre(n), post(n);
  for (long long m = 0; m < n; ++m) {
    pre[m] = root_of_unity(-h * m, n, sign);
    post[m] = root_of_unity(h * h - h * m, n, sign);
  }
  std::size_t inner = 1;
  for (int a = axis + 1; a < 4; ++a) {
    inner *= dims[a];
  }
  const std::size_t len = static_cast<std::size_t>(n);
  auto apply = [&](const std::vector<cplx>& table) {
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
      data[flat] *= table[(flat / inner) % len];
    }
  };
  apply(pre);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(PlanCache::instance().get(dims, axis, sign), buf, buf);
  apply(post);
}

}  // namespace

LatticeSpec frequency_lattice(const LatticeSpec& time) {
  Vec4 du{};
  for (int a = 0; a < 4; ++a) {
    du[a] = kTwoPi / (static_cast<double>(time.dims[a]) * time.delta[a]);
  }
  return LatticeSpec::make(time.dims, du);
}

namespace detail {

std::vector<Quaternion> two_sided_dft(std::span<const Quaternion> values, const Index4& dims, int left_sign,
                                      int right_sign) {
  const std::size_t total = values.size();
  std::vector<cplx> c1(total), c2(total);
  for (std::size_t n = 0; n < total; ++n) {
    const auto halves = symplectic_split(values[n]);
    c1[n] = halves.first;
    c2[n] = halves.second;
  }
  // Axes 1, 2 always carry the left sign. On axes 3, 4 the j-kernel is split
  // into cos and sin parts, obtained from the two sign choices.
  for (auto* c : {&c1, &c2}) {
    centered_dft_axis(*c, dims, 0, left_sign);
    centered_dft_axis(*c, dims, 1, left_sign);
  }
  std::vector<cplx> q1 = c1, q2 = c2;
  for (auto* c : {&c1, &c2}) {
    centered_dft_axis(*c, dims, 2, left_sign);
    centered_dft_axis(*c, dims, 3, left_sign);
  }
  for (auto* c : {&q1, &q2}) {
    centered_dft_axis(*c, dims, 2, -left_sign);
    centered_dft_axis(*c, dims, 3, -left_sign);
  }
  // c e^{sr j th} = (c1 cos - sr c2 sin) + (c2 cos + sr c1 sin) j, and with the
  // left kernel applied: sum cos -> (P + Q)/2, sum sin -> -i sl (P - Q)/2.
  const cplx sin_factor(0.0, -0.5 * left_sign);
  std::vector<Quaternion> out(total);
  for (std::size_t n = 0; n < total; ++n) {
    const cplx cos1 = 0.5 * (c1[n] + q1[n]);
    const cplx cos2 = 0.5 * (c2[n] + q2[n]);
    const cplx sin1 = sin_factor * (c1[n] - q1[n]);
    const cplx sin2 = sin_factor * (c2[n] - q2[n]);
    const cplx first = cos1 - static_cast<double>(right_sign) * sin2;
    const cplx second = cos2 + static_cast<double>(right_sign) * sin1;
    out[n] = symplectic_join({first, second});
  }
  return out;
}

}  // namespace detail

Quaternion qft_direct_at(const QSignal4& f, const Vec4& u) {
  const auto& lat = f.lattice();
  const double scale = lat.cell_measure() / (4.0 * std::numbers::pi * std::numbers::pi);
  Quaternion acc;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const Vec4 t = lat.point(n);
    const Quaternion left = exp_i(-(t[0] * u[0] + t[1] * u[1]));
    const Quaternion right = exp_j(-(t[2] * u[2] + t[3] * u[3]));
    acc += left * f[n] * right;
  }
  return acc * scale;
}

QSignal4 qft_direct(const QSignal4& f) {
  const LatticeSpec freq = frequency_lattice(f.lattice());
  std::vector<Quaternion> out(freq.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = qft_direct_at(f, freq.point(k));
  }
  return QSignal4(freq, std::move(out));
}

QSignal4 qft_fast(const QSignal4& f) {
  const auto& lat = f.lattice();
  const double scale = lat.cell_measure() / (4.0 * std::numbers::pi * std::numbers::pi);
  auto out = detail::two_sided_dft(f.values(), lat.dims, -1, -1);
  for (auto& q : out) {
    q *= scale;
  }
  return QSignal4(frequency_lattice(lat), std::move(out));
}

QSignal4 qft_inverse(const QSignal4& F, const LatticeSpec& time) {
  const LatticeSpec expected = frequency_lattice(time);
  bool consistent = F.lattice().dims == time.dims;
  for (int a = 0; a < 4 && consistent; ++a) {
    consistent = std::abs(F.lattice().delta[a] - expected.delta[a]) <= 1e-12 * expected.delta[a];
  }
  if (!consistent) {
    throw LatticeMismatch("qft_inverse: spectrum lattice " + describe(F.lattice()) +
                          " is not dual to " + describe(time));
  }
  const double scale = F.lattice().cell_measure() / (4.0 * std::numbers::pi * std::numbers::pi);
  auto out = detail::two_sided_dft(F.values(), time.dims, +1, +1);
  for (auto& q : out) {
    q *= scale;
  }
  return QSignal4(time, std::move(out));
}

}  // namespace qcfrft
