#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcfrft/generators.hpp"
#include "qcfrft/qft.hpp"
#include "test_support.hpp"

using namespace qcfrft;
using qcfrft::testing::max_scaled_diff;
using qcfrft::testing::qdist;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("frequency lattice spacing") {
  const auto f = frequency_lattice(LatticeSpec::make({4, 5, 6, 8}, {0.5, 1.0, 0.25, 2.0}));
  CHECK(f.dims == Index4{4, 5, 6, 8});
  CHECK(f.delta[0] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(f.delta[1] == doctest::Approx(2 * kPi / 5).epsilon(1e-15));
  CHECK(f.delta[2] == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
  CHECK(f.delta[3] == doctest::Approx(kPi / 8).epsilon(1e-15));
}

TEST_CASE("delta spike at the origin has a flat spectrum") {
  const auto lat = LatticeSpec::cube(4, 0.5);
  auto data = std::vector<Quaternion>(lat.size());
  data[lat.flatten({2, 2, 2, 2})] = Quaternion(1.0);
  const QSignal4 f(lat, data);
  const double expected = lat.cell_measure() / (4 * kPi * kPi);
  for (const auto& F : {qft_fast(f), qft_direct(f)}) {
    for (const auto& q : F.values()) {
      CHECK(qdist(q, Quaternion(expected)) <= 1e-14 * expected);
    }
  }
}

TEST_CASE("spike away from the origin carries the two-sided phases") {
  const auto lat = LatticeSpec::cube(4, 1.0);
  std::vector<Quaternion> data(lat.size());
  const Index4 at{3, 1, 0, 2};
  data[lat.flatten(at)] = Quaternion{0.3, -1.0, 0.5, 2.0};
  const QSignal4 f(lat, data);
  const Vec4 t = lat.point(lat.flatten(at));
  const auto F = qft_fast(f);
  const auto& flat = F.lattice();
  for (std::size_t k = 0; k < F.size(); k += 7) {
    const Vec4 u = flat.point(k);
    const Quaternion expected = exp_i(-(t[0] * u[0] + t[1] * u[1])) * data[lat.flatten(at)] *
                                exp_j(-(t[2] * u[2] + t[3] * u[3])) * (1.0 / (4 * kPi * kPi));
    CHECK(qdist(F[k], expected) <= 1e-13);
  }
}

TEST_CASE("fast and direct agree on random signals") {
  Rng rng(17);
  const std::vector<LatticeSpec> lattices = {
      LatticeSpec::cube(4, 0.5), LatticeSpec::cube(5, 0.7), LatticeSpec::make({3, 4, 5, 2}, {0.4, 0.9, 1.3, 0.6})};
  for (const auto& lat : lattices) {
    const auto f = random_signal(lat, rng);
    CHECK(max_scaled_diff(qft_fast(f).values(), qft_direct(f).values()) <= 1e-12);
  }
}

TEST_CASE("direct evaluation at an arbitrary point matches the full field") {
  Rng rng(18);
  const auto f = random_signal(LatticeSpec::cube(3, 0.8), rng);
  const auto F = qft_direct(f);
  for (std::size_t k = 0; k < F.size(); k += 11) {
    CHECK(qdist(qft_direct_at(f, F.lattice().point(k)), F[k]) <= 1e-13);
  }
}

namespace {

// Max deviation of qft_fast(e^{-|t|^2/2}) from e^{-|u|^2/2}; the peak is 1.
double gaussian_qft_error(const LatticeSpec& lat) {
  const auto F = qft_fast(gaussian_signal(lat, 1.0));
  const auto& flat = F.lattice();
  double err = 0.0;
  for (std::size_t k = 0; k < F.size(); ++k) {
    const Vec4 u = flat.point(k);
    const double r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    err = std::max(err, qdist(F[k], Quaternion(std::exp(-0.5 * r2))));
  }
  return err;
}

}  // namespace

TEST_CASE("Gaussian maps to a Gaussian") {
  // 16^4 at 0.5 stops at |t| = 4, where the missing sample 0.5 e^{-8} costs
  // about 7e-5 per axis, four axes in all. 24^4 pushes the cut to |t| = 6.
  CHECK(gaussian_qft_error(LatticeSpec::cube(16, 0.5)) <= 5e-4);
  CHECK(gaussian_qft_error(LatticeSpec::cube(24, 0.5)) <= 1e-6);
}

TEST_CASE("Plancherel and round trip") {
  Rng rng(19);
  for (const auto& lat : {LatticeSpec::cube(4, 0.5), LatticeSpec::make({5, 3, 4, 6}, {0.7, 1.1, 0.5, 0.3})}) {
    const auto f = random_signal(lat, rng);
    const auto F = qft_fast(f);
    const double nf = lp_norm(f, 2.0);
    const double nF = lp_norm(F, 2.0);
    CHECK(std::abs(nF - nf) <= 1e-12 * nf);
    const auto back = qft_inverse(F, lat);
    CHECK(max_scaled_diff(back.values(), f.values()) <= 1e-12);
  }
}

TEST_CASE("inverse rejects a mismatched lattice") {
  const auto F = qft_fast(QSignal4::zeros(LatticeSpec::cube(4, 0.5)));
  CHECK_THROWS_AS(qft_inverse(F, LatticeSpec::cube(4, 1.0)), LatticeMismatch);
  CHECK_THROWS_AS(qft_inverse(F, LatticeSpec::cube(3, 0.5)), LatticeMismatch);
}
