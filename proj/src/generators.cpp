#include "qcfrft/generators.hpp"

#include <cmath>

namespace qcfrft {

Quaternion random_quaternion(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double w = normal(rng);
  const double x = normal(rng);
  const double y = normal(rng);
  const double z = normal(rng);
  return {w, x, y, z};
}

QSignal4 random_enveloped_signal(const LatticeSpec& lattice, Rng& rng) {
  std::vector<Quaternion> data(lattice.size());
  for (std::size_t n = 0; n < data.size(); ++n) {
    const Vec4 t = lattice.point(n);
    const double r2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
    data[n] = random_quaternion(rng) * std::exp(-0.5 * r2);
  }
  return QSignal4(lattice, std::move(data));
}

QSignal4 random_signal(const LatticeSpec& lattice, Rng& rng) {
  std::vector<Quaternion> data(lattice.size());
  for (auto& q : data) {
    q = random_quaternion(rng);
  }
  return QSignal4(lattice, std::move(data));
}

QSignal4 gaussian_signal(const LatticeSpec& lattice, double width, const Quaternion& amplitude) {
  const double s = 1.0 / (2.0 * width * width);
  return QSignal4::sample(lattice, [&](const Vec4& t) {
    const double r2 = t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3];
    return amplitude * std::exp(-s * r2);
  });
}

ParamSet random_params(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.2, 2.9);
  for (;;) {
    const double a1 = angle(rng), b1 = angle(rng), a2 = angle(rng), b2 = angle(rng);
    if (std::abs(std::sin(0.5 * (a1 + b1))) >= 0.2 && std::abs(std::sin(0.5 * (a2 + b2))) >= 0.2) {
      return derive_params(a1, b1, a2, b2);
    }
  }
}

}  // namespace qcfrft
