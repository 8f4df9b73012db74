#include "qcfrft/signal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcfrft {

LatticeSpec LatticeSpec::make(const Index4& dims, const Vec4& delta) {
  for (int a = 0; a < 4; ++a) {
    if (dims[a] == 0) {
      throw std::invalid_argument("lattice dims must be positive");
    }
    if (!(delta[a] > 0.0) || !std::isfinite(delta[a])) {
      throw std::invalid_argument("lattice spacings must be positive and finite");
    }
  }
  return LatticeSpec{dims, delta};
}

std::string describe(const LatticeSpec& lattice) {
  std::ostringstream os;
  os << lattice.dims[0] << "x" << lattice.dims[1] << "x" << lattice.dims[2] << "x" << lattice.dims[3]
     << " delta=(" << lattice.delta[0] << "," << lattice.delta[1] << "," << lattice.delta[2] << ","
     << lattice.delta[3] << ")";
  return os.str();
}

QSignal4::QSignal4(LatticeSpec lattice, std::vector<Quaternion> data)
    : lattice_(LatticeSpec::make(lattice.dims, lattice.delta)), data_(std::move(data)) {
  if (data_.size() != lattice_.size()) {
    throw std::invalid_argument("signal data length " + std::to_string(data_.size()) +
                                " does not match lattice size " + std::to_string(lattice_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), [](const Quaternion& q) { return is_finite(q); })) {
    throw std::invalid_argument("signal contains non-finite samples");
  }
}

QSignal4 QSignal4::zeros(const LatticeSpec& lattice) {
  return QSignal4(lattice, std::vector<Quaternion>(lattice.size()));
}

QSignal4 QSignal4::sample(const LatticeSpec& lattice, const std::function<Quaternion(const Vec4&)>& fn) {
  std::vector<Quaternion> data(lattice.size());
  for (std::size_t n = 0; n < data.size(); ++n) {
    data[n] = fn(lattice.point(n));
  }
  return QSignal4(lattice, std::move(data));
}

double lp_norm(std::span<const Quaternion> values, double cell_measure, double p) {
  if (!(p >= 1.0)) {
    throw std::invalid_argument("lp_norm requires p >= 1");
  }
  if (std::isinf(p)) {
    double peak = 0.0;
    for (const auto& q : values) {
      peak = std::max(peak, qmodulus(q));
    }
    return peak;
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (const auto& q : values) {
      acc += norm_squared(q);
    }
    return std::sqrt(acc * cell_measure);
  }
  for (const auto& q : values) {
    acc += std::pow(qmodulus(q), p);
  }
  return std::pow(acc * cell_measure, 1.0 / p);
}

double lp_norm(const QSignal4& f, double p) { return lp_norm(f.values(), f.lattice().cell_measure(), p); }

void require_same_lattice(const LatticeSpec& a, const LatticeSpec& b, const char* what) {
  if (!(a == b)) {
    throw LatticeMismatch(std::string(what) + ": lattices differ (" + describe(a) + " vs " + describe(b) + ")");
  }
}

Quaternion inner_product(const QSignal4& f, const QSignal4& g) {
  require_same_lattice(f.lattice(), g.lattice(), "inner_product");
  Quaternion acc;
  for (std::size_t n = 0; n < f.size(); ++n) {
    acc += f[n] * qconj(g[n]);
  }
  return acc * f.lattice().cell_measure();
}

double sc_inner(const QSignal4& f, const QSignal4& g) { return scalar_part(inner_product(f, g)); }

QSignal4 scaled(const QSignal4& f, double s) {
  std::vector<Quaternion> out(f.values().begin(), f.values().end());
  for (auto& q : out) {
    q *= s;
  }
  return QSignal4(f.lattice(), std::move(out));
}

QSignal4 left_multiplied(const Quaternion& q, const QSignal4& f) {
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = q * f[n];
  }
  return QSignal4(f.lattice(), std::move(out));
}

QSignal4 right_multiplied(const QSignal4& f, const Quaternion& q) {
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f[n] * q;
  }
  return QSignal4(f.lattice(), std::move(out));
}

QSignal4 added(const QSignal4& f, const QSignal4& g) {
  require_same_lattice(f.lattice(), g.lattice(), "added");
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f[n] + g[n];
  }
  return QSignal4(f.lattice(), std::move(out));
}

QSignal4 circular_translate(const QSignal4& f, const Index4& shift) {
  const auto& lat = f.lattice();
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f.at(lat.circular_difference(lat.unflatten(n), shift));
  }
  return QSignal4(lat, std::move(out));
}

QSignal4 reflected(const QSignal4& f) {
  const auto& lat = f.lattice();
  std::vector<Quaternion> out(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    out[n] = f.at(lat.reflect(lat.unflatten(n)));
  }
  return QSignal4(lat, std::move(out));
}

}  // namespace qcfrft
