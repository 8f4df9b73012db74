#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "qcfrft/closed_form.hpp"
#include "qcfrft/generators.hpp"
#include "qcfrft/transform.hpp"
#include "test_support.hpp"

using namespace qcfrft;
using qcfrft::testing::qdist;

namespace {

constexpr double kPi = std::numbers::pi;

using Sample = std::pair<PlanarComplex, PlanarComplex>;

// 40-digit mpmath values of erf.
const Sample kErfReference[] = {
    {{0.5, 0.5}, {0.6426129148548205283194, 0.4578813944351922158421}},
    {{1, 0}, {0.8427007929497148693412, 0.0}},
    {{0, 1}, {0.0, 1.650425758797542876025}},
    {{2.4, 3.1}, {7.791769475374867005424, -0.3509250699989411355651}},
    {{-2.6, 0.4}, {-1.000165188701292399197, 0.0002194390316326115050597}},
    {{3, -2}, {0.9989632788568172688804, 0.00001154672437929060340631}},
    {{0.1, 5.9}, {115660414090006.3996766, 50031874240896.65015605}},
    {{-5, 5}, {-0.9303796037430951158536, 0.03893619089512137895395}},
    {{6, 0}, {0.9999999999999999784803, 0.0}},
    {{0, 6}, {0.0, 411275145582823.8709717}},
    {{1.5, -11.5}, {2.623957862134891740824e+54, 1.377792523108718569567e+55}},
    {{8, 8}, {1.049851754157031847582, 0.001187002553565359286279}},
    {{-0.3, -7.7}, {3.756366953994519486686e+24, 4.987971210827666245668e+23}},
    {{11, 3}, {1.0, -2.2663089068147884351e-45}},
    {{2.5, 0}, {0.9995930479825550410604, 0.0}},
    {{2.49, 9}, {9.931936156655820033872e+30, 1.567519466705774879687e+31}},
    {{0.382355, 7.402662}, {-2.611046462288263436951e+22, 3.262851902669906271563e+22}},
    {{-8.85087, 3.347649}, {-1.0, 3.035695133238063979655e-32}},
    {{-7.776829, 4.128596}, {-1.000000000000000000003, 8.373543862622757031692e-21}},
    {{0.337142, -0.073976}, {0.3683517723441613738923, -0.07460954020444930516189}},
    {{6.656831, 9.039272}, {280916672087283.5793485, 828999959799969.7829662}},
    {{-8.121118, -6.998656}, {-0.9999999993651426240255, -2.14859139191906453626e-9}},
    {{-0.120182, -5.580628}, {-3289581441842.174685153, -845929450712.510323198}},
    {{5.784901, 2.899238}, {1.000000000000960582954, 6.003073290101678067956e-13}},
};

// 40-digit mpmath values of e^{z^2} erfc(z).
const Sample kErfcxReference[] = {
    {{0, 0}, {1.0, 0.0}},
    {{0.5, 3}, {0.03712636605469234466712, -0.192983755300362088391}},
    {{2.4, -6}, {0.03341163646472304112263, 0.08148238869593197282089}},
    {{3, 4}, {0.06979096164964831005233, -0.08934000024036491536236}},
    {{0.01, 7}, {0.0001188591962508004282571, -0.08144733265413506177918}},
    {{0.2, 0.1}, {0.802566687320899664872, -0.08002860355152477720855}},
    {{5.5, -1}, {0.0979582901030438772608, 0.01727983832548315238927}},
};

double sq(const Vec2& v) { return v[0] * v[0] + v[1] * v[1]; }

// 8-point Gauss-Legendre nodes and weights on [-1, 1].
constexpr double kGlNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                                0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr double kGlWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                                  0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// Composite Gauss-Legendre over [lo, hi] with `panels` panels.
template <class F>
auto gauss_legendre(F fn, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  decltype(fn(lo)) acc{};
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * h;
    for (int n = 0; n < 8; ++n) {
      acc += fn(mid + 0.5 * h * kGlNodes[n]) * (0.5 * h * kGlWeights[n]);
    }
  }
  return acc;
}

// Non-separated 4-D quadrature of kernel_i f conj(g(t - x)) kernel_j over the window support.
Quaternion box_window_quadrature(const ParamSet& p, const Vec4& x, const Vec4& xi) {
  Quaternion total;
  for (int half = 0; half < 2; ++half) {
    const double lo = 0.5 * half;
    const double sign = half == 0 ? 1.0 : -1.0;
    Quaternion acc;
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        for (int c = 0; c < 8; ++c) {
          for (int d = 0; d < 8; ++d) {
            const Vec4 t{x[0] + lo + 0.25 * (1 + kGlNodes[a]), x[1] + lo + 0.25 * (1 + kGlNodes[b]),
                         x[2] + lo + 0.25 * (1 + kGlNodes[c]), x[3] + lo + 0.25 * (1 + kGlNodes[d])};
            const double w = kGlWeights[a] * kGlWeights[b] * kGlWeights[c] * kGlWeights[d] / 256.0;
            const double f = std::exp(-(t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3]));
            acc += kernel_i(p, first_half(t), first_half(xi)) * (f * sign * w) *
                   kernel_j(p, second_half(t), second_half(xi));
          }
        }
      }
    }
    total += acc;
  }
  return total;
}

}  // namespace

TEST_CASE("cerf special values") {
  CHECK(cerf({0, 0}) == PlanarComplex(0, 0));
  CHECK(std::abs(cerf({1, 0}) - PlanarComplex(0.8427007929497149, 0)) <= 1e-15);
  const auto ei = cerf({0, 1});
  CHECK(ei.real() == 0.0);
  CHECK(ei.imag() == doctest::Approx(1.650425758797543).epsilon(1e-15));
}

TEST_CASE("cerf against extended precision references") {
  for (const auto& [z, expected] : kErfReference) {
    const double err = std::abs(cerf(z) - expected) / std::max(1.0, std::abs(expected));
    INFO("z = " << z.real() << " + " << z.imag() << "i");
    CHECK(err <= 1e-13);
  }
  for (const auto& [z, expected] : kErfcxReference) {
    INFO("z = " << z.real() << " + " << z.imag() << "i");
    CHECK(std::abs(erfcx_right(z) - expected) <= 1e-14);
  }
}

TEST_CASE("cerf symmetries and region") {
  Rng rng(31);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int trial = 0; trial < 500; ++trial) {
    const PlanarComplex z(u(rng), u(rng));
    if (std::abs(z) > kCerfMaxModulus) {
      continue;
    }
    const PlanarComplex w = cerf(z);
    const double scale = std::max(1.0, std::abs(w));
    CHECK(std::abs(cerf(-z) + w) <= 1e-12 * scale);
    CHECK(std::abs(cerf(std::conj(z)) - std::conj(w)) <= 1e-12 * scale);
  }
  CHECK_THROWS_AS(cerf({12.5, 0}), std::domain_error);
  CHECK_THROWS_AS(cerf({9, 9}), std::domain_error);
  CHECK_THROWS_AS(erfcx_right({-0.1, 0}), std::domain_error);
}

TEST_CASE("gaussian_qcfrft examples") {
  const auto fourier = derive_params(kPi / 2, kPi / 2, kPi / 2, kPi / 2);
  CHECK(qdist(gaussian_qcfrft(fourier, 1, 1, {0, 0, 0, 0}), Quaternion(0.25)) <= 1e-15);
  const Vec4 xi{0.3, -1.2, 2.0, 0.7};
  const double r2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3];
  CHECK(qdist(gaussian_qcfrft(fourier, 1, 1, xi), Quaternion(0.25 * std::exp(-r2 / 4))) <= 1e-15);
  CHECK_THROWS_AS(gaussian_qcfrft(fourier, 0, 1, xi), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_qcfrft(fourier, 1, -2, xi), std::invalid_argument);
}

TEST_CASE("gaussian_qcfrft shape for tensor-product angles") {
  // alpha = beta: M = I / sin(gamma), so |value| = |d0|^2 / (4 A^2) e^{-|xi|^2 / (4 A sin^2 gamma)}.
  const auto p = derive_params(1.2, 1.2, 1.2, 1.2);
  const double s2 = std::sin(1.2) * std::sin(1.2);
  const double d0sq = 1.0 / s2;  // |1 + i cot|^2
  for (double r : {0.0, 0.5, 1.0, 2.5}) {
    const Vec4 xi{r, 0, 0, 0};
    const double expected = d0sq / (4 * 1.5 * 1.5) * std::exp(-r * r / (4 * 1.5 * s2));
    CHECK(qmodulus(gaussian_qcfrft(p, 1.5, 1.5, xi)) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("gaussian_qcfrft matches direct quadrature of the chirped Gaussian") {
  Rng rng(32);
  const auto lat = LatticeSpec::cube(16, 0.5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int trial = 0; trial < 2; ++trial) {
    const auto p = random_params(rng);
    const auto f = QSignal4::sample(lat, [&](const Vec4& t) {
      const double r1 = sq(first_half(t)), r2 = sq(second_half(t));
      return exp_i(p.left.a * r1) * std::exp(-r1 - r2) * exp_j(p.right.a * r2);
    });
    for (int k = 0; k < 3; ++k) {
      const Vec4 xi{u(rng), u(rng), u(rng), u(rng)};
      const Quaternion expected = gaussian_qcfrft(p, 1, 1, xi);
      CHECK(qdist(qcfrft_direct_at(f, p, xi), expected) <= 1e-6 * qmodulus(expected));
    }
  }
}

TEST_CASE("chirp segment against Gauss-Legendre") {
  Rng rng(33);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double a = 0.5 * u(rng), xi = 3 * u(rng), C = 8 * u(rng), lo = 2 * u(rng);
    const double hi = lo + 0.5;
    const auto integrand = [&](double t) {
      return std::exp(PlanarComplex(-t * t, -a * (t * t + xi * xi) + t * C));
    };
    const PlanarComplex expected = gauss_legendre(integrand, lo, hi, 16);
    CHECK(std::abs(gaussian_chirp_segment(a, xi, C, lo, hi) - expected) <= 1e-12);
  }
  // Large linear phase pushes the erf arguments far from the real axis.
  const auto integrand = [](double t) { return std::exp(PlanarComplex(-t * t, -0.4 * t * t + 40 * t)); };
  CHECK(std::abs(gaussian_chirp_segment(0.4, 0.0, 40.0, 0.2, 0.7) - gauss_legendre(integrand, 0.2, 0.7, 64)) <=
        1e-12);
}

TEST_CASE("box window at the Fourier angles, x = 0, xi = 0") {
  const auto p = derive_params(kPi / 2, kPi / 2, kPi / 2, kPi / 2);
  const double first = 0.5 * std::sqrt(kPi) * std::erf(0.5);
  const double second = 0.5 * std::sqrt(kPi) * (std::erf(1.0) - std::erf(0.5));
  const double expected = (std::pow(first, 4) - std::pow(second, 4)) / (4 * kPi * kPi);
  const auto integrand = [](double t) { return std::exp(-t * t); };
  CHECK(gauss_legendre(integrand, 0.0, 0.5, 4) == doctest::Approx(first).epsilon(1e-14));
  CHECK(qdist(box_window_stqcfrft(p, {0, 0, 0, 0}, {0, 0, 0, 0}), Quaternion(expected)) <= 1e-15);
}

TEST_CASE("box window decays when the window is far out") {
  Rng rng(34);
  const auto p = random_params(rng);
  CHECK(qmodulus(box_window_stqcfrft(p, {6, 6, 6, 6}, {1, 2, -1, 0.5})) <= 1e-10);
  CHECK(qmodulus(box_window_stqcfrft(p, {-8, 0, 0, 0}, {0, 0, 0, 0})) <= 1e-10);
}

TEST_CASE("box window equals a non-separated 4-D quadrature") {
  Rng rng(35);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = random_params(rng);
    const Vec4 x{u(rng), u(rng), u(rng), u(rng)};
    const Vec4 xi{2 * u(rng), 2 * u(rng), 2 * u(rng), 2 * u(rng)};
    const Quaternion closed = box_window_stqcfrft(p, x, xi);
    const Quaternion quad = box_window_quadrature(p, x, xi);
    CHECK(qdist(closed, quad) <= 1e-12 * std::max(qmodulus(quad), 1e-3));
  }
}
