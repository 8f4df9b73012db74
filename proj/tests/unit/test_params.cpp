#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qcfrft/generators.hpp"
#include "qcfrft/params.hpp"
#include "test_support.hpp"

using namespace qcfrft;
using qcfrft::testing::qdist;

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 random_vec2(Rng& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  const double a = u(rng);
  const double b = u(rng);
  return {a, b};
}

// One-dimensional kernel of the same family with delta = 0:
// sqrt(d) e^{-i (cos g / 2)(t^2 + u^2) + i t u / sin g}.
std::complex<double> frft_kernel_1d(double gamma, double t, double u) {
  const std::complex<double> d = std::complex<double>(0.0, 1.0) * std::exp(std::complex<double>(0.0, -gamma)) /
                                 (2.0 * kPi * std::sin(gamma));
  const double phase = -0.5 * std::cos(gamma) * (t * t + u * u) + t * u / std::sin(gamma);
  return std::sqrt(d) * std::exp(std::complex<double>(0.0, phase));
}

}  // namespace

TEST_CASE("derive_params at the Fourier point") {
  const auto p = derive_params(kPi / 2, kPi / 2, kPi / 2, kPi / 2);
  CHECK(p.left.gamma == doctest::Approx(kPi / 2));
  CHECK(std::abs(p.left.a) < 1e-16);
  CHECK(p.left.b == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.left.c == 0.0);
  CHECK(qdist(p.left.d, Quaternion(1.0 / (2.0 * kPi))) < 1e-16);
  CHECK(qdist(p.right.d, Quaternion(1.0 / (2.0 * kPi))) < 1e-16);
}

TEST_CASE("derive_params at alpha=pi/2, beta=pi/6") {
  const auto p = derive_params(kPi / 2, kPi / 6, 1.0, 1.0);
  CHECK(p.left.gamma == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(p.left.delta == doctest::Approx(kPi / 6).epsilon(1e-15));
  CHECK(p.left.a == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(p.left.b == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p.left.c == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  // d0 = 2 pi d
  CHECK(qdist(p.left.d0, p.left.d * (2.0 * kPi)) < 1e-15);
}

TEST_CASE("derive_params rejects angle sums in 2 pi Z") {
  CHECK_THROWS_AS(derive_params(kPi, kPi, 1.0, 1.0), InvalidAngles);
  CHECK_THROWS_AS(derive_params(1.0, 1.0, 0.0, 0.0), InvalidAngles);
  CHECK_THROWS_AS(derive_params(1.0, 1.0, 3 * kPi, kPi), InvalidAngles);
  CHECK_NOTHROW(derive_params(kPi, kPi - 1e-6, 1.0, 1.0));
}

TEST_CASE("derived matrix invariants") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng);
    for (const auto* pair : {&p.left, &p.right}) {
      const double expected = 1.0 / (pair->sin_gamma * pair->sin_gamma);
      CHECK(std::abs(pair->detM - expected) <= 1e-12 * expected);
      CHECK(std::abs(pair->M.det() - expected) <= 1e-12 * expected);
      const Vec2 e1 = pair->M.apply(pair->Minv.apply({1.0, 0.0}));
      const Vec2 e2 = pair->M.apply(pair->Minv.apply({0.0, 1.0}));
      CHECK(std::abs(e1[0] - 1.0) < 1e-12);
      CHECK(std::abs(e1[1]) < 1e-12);
      CHECK(std::abs(e2[0]) < 1e-12);
      CHECK(std::abs(e2[1] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("kernel values at the origin") {
  const auto p = derive_params(kPi / 2, kPi / 6, kPi / 3, kPi / 3);
  CHECK(kernel_i(p, {0, 0}, {0, 0}) == p.left.d);
  CHECK(kernel_j(p, {0, 0}, {0, 0}) == p.right.d);
  // gamma1 = pi/3: i e^{-i pi/3} / (2 pi sin(pi/3))
  const Quaternion k0 = kernel_i(p, {0, 0}, {0, 0});
  CHECK(k0.w == doctest::Approx(0.159154943091895).epsilon(1e-13));
  CHECK(k0.x == doctest::Approx(0.0918881492369653).epsilon(1e-13));
  CHECK(k0.y == 0.0);
  CHECK(k0.z == 0.0);
}

TEST_CASE("kernels reduce to planar Fourier kernels at gamma = pi/2") {
  const auto p = derive_params(kPi / 2, kPi / 2, kPi / 2, kPi / 2);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec2 t = random_vec2(rng, 3.0), xi = random_vec2(rng, 3.0);
    const double dot = t[0] * xi[0] + t[1] * xi[1];
    CHECK(qdist(kernel_i(p, t, xi), exp_i(dot) * (1.0 / (2 * kPi))) < 1e-14);
    CHECK(qdist(kernel_j(p, t, xi), exp_j(dot) * (1.0 / (2 * kPi))) < 1e-14);
  }
}

TEST_CASE("kernel planes, modulus, commutation, parity") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_params(rng);
    const Vec2 t = random_vec2(rng, 3.0), xi = random_vec2(rng, 3.0);
    const Vec2 t2 = random_vec2(rng, 3.0), xi2 = random_vec2(rng, 3.0);
    const Quaternion ki = kernel_i(p, t, xi);
    const Quaternion kj = kernel_j(p, t, xi);
    CHECK(ki.y == 0.0);
    CHECK(ki.z == 0.0);
    CHECK(kj.x == 0.0);
    CHECK(kj.z == 0.0);
    CHECK(std::abs(qmodulus(kj) - qmodulus(p.right.d)) <= 1e-12 * qmodulus(p.right.d));
    CHECK(std::abs(qmodulus(ki) - qmodulus(p.left.d)) <= 1e-12 * qmodulus(p.left.d));

    const Quaternion ki2 = kernel_i(p, t2, xi2);
    const Quaternion kj2 = kernel_j(p, t2, xi2);
    const Quaternion zi = Quaternion::in_i({1.3, -0.4});
    const Quaternion zj = Quaternion::in_j({-0.2, 2.1});
    CHECK(qdist(ki * ki2, ki2 * ki) < 1e-14);
    CHECK(qdist(ki * zi, zi * ki) < 1e-14);
    CHECK(qdist(kj * kj2, kj2 * kj) < 1e-14);
    CHECK(qdist(kj * zj, zj * kj) < 1e-14);

    const Vec2 mt{-t[0], -t[1]}, mxi{-xi[0], -xi[1]};
    CHECK(qdist(kernel_i(p, mt, xi), kernel_i(p, t, mxi)) <= 1e-12 * qmodulus(p.left.d));
    CHECK(qdist(kernel_j(p, mt, xi), kernel_j(p, t, mxi)) <= 1e-12 * qmodulus(p.right.d));

    // Conjugate kernel is the inversion kernel: conj(K) K = |d|^2.
    CHECK(qdist(qconj(ki) * ki, Quaternion(norm_squared(p.left.d))) <= 1e-14);
  }
}

TEST_CASE("equal angles give a tensor product of 1-D kernels") {
  Rng rng(12);
  std::uniform_real_distribution<double> angle(0.3, 2.8);
  for (int trial = 0; trial < 100; ++trial) {
    const double g1 = angle(rng), g2 = angle(rng);
    const auto p = derive_params(g1, g1, g2, g2);
    const Vec2 t = random_vec2(rng, 2.0), xi = random_vec2(rng, 2.0);
    const auto expected_i = frft_kernel_1d(g1, t[0], xi[0]) * frft_kernel_1d(g1, t[1], xi[1]);
    const auto expected_j = frft_kernel_1d(g2, t[0], xi[0]) * frft_kernel_1d(g2, t[1], xi[1]);
    CHECK(qdist(kernel_i(p, t, xi), Quaternion::in_i(expected_i)) < 1e-12);
    CHECK(qdist(kernel_j(p, t, xi), Quaternion::in_j(expected_j)) < 1e-12);
  }
}

TEST_CASE("kernel shift factor") {
  Rng rng(13);
  const auto p0 = random_params(rng);
  CHECK(kernel_shift_factor(p0, Side::i, {0, 0}, {1, 2}, {3, 4}) == Quaternion(1.0));
  CHECK(kernel_shift_factor(p0, Side::j, {0, 0}, {1, 2}, {3, 4}) == Quaternion(1.0));

  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_params(rng);
    const Vec2 k = random_vec2(rng, 2.0), t = random_vec2(rng, 2.0), xi = random_vec2(rng, 2.0);
    const Vec2 tk{t[0] + k[0], t[1] + k[1]};
    CHECK(qdist(kernel_i(p, tk, xi), kernel_shift_factor(p, Side::i, k, t, xi) * kernel_i(p, t, xi)) <=
          1e-12 * qmodulus(p.left.d));
    CHECK(qdist(kernel_j(p, tk, xi), kernel_shift_factor(p, Side::j, k, t, xi) * kernel_j(p, t, xi)) <=
          1e-12 * qmodulus(p.right.d));
  }

  // a = 0: only the frequency phase e^{u k.M xi} remains.
  const auto f = derive_params(kPi / 2, kPi / 2, 2.0, kPi - 2.0);
  const Vec2 k{0.3, -0.7}, xi{1.1, 0.4};
  const Vec2 mxi = f.left.M.apply(xi);
  CHECK(qdist(kernel_shift_factor(f, Side::i, k, {5, 5}, xi), exp_i(k[0] * mxi[0] + k[1] * mxi[1])) < 1e-14);
  const Vec2 mxi2 = f.right.M.apply(xi);
  CHECK(qdist(kernel_shift_factor(f, Side::j, k, {-3, 2}, xi), exp_j(k[0] * mxi2[0] + k[1] * mxi2[1])) < 1e-14);
}
