#include "qcfrft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "qcfrft/generators.hpp"
#include "qcfrft/qft.hpp"
#include "qcfrft/transform.hpp"

namespace qcfrft {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIdentityTol = 1e-10;
constexpr double kExactTol = 1e-12;
constexpr double kReconstructTol = 1e-8;
constexpr double kMassTol = 1e-9;

// Counts kept small so `verify --suite all` stays interactive.
constexpr int kRandomSignals = 5;
constexpr int kRandomParams = 3;
constexpr std::size_t kShortTimeMax = 6;
constexpr std::size_t kPropertiesMax = 5;

double max_scaled_diff(std::span<const Quaternion> a, std::span<const Quaternion> b) {
  double diff = 0.0, peak = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    diff = std::max(diff, qmodulus(a[n] - b[n]));
    peak = std::max(peak, qmodulus(b[n]));
  }
  return peak > 0.0 ? diff / peak : diff;
}

ParamSet equal_angles(double gamma) { return derive_params(gamma, gamma, gamma, gamma); }

QSignal4 unit(const QSignal4& f) { return scaled(f, 1.0 / lp_norm(f, 2.0)); }

class Suite {
 public:
  Suite(const VerifyOptions& o, VerifyReport& r) : opt_(o), rep_(r), rng_(o.seed) {}

  void run(const std::string& name) {
    if (name == "parseval") parseval();
    else if (name == "roundtrip") roundtrip();
    else if (name == "hy") hy();
    else if (name == "renyi") renyi();
    else if (name == "lieb") lieb();
    else if (name == "support") support();
    else if (name == "entropy") entropy();
    else if (name == "properties") properties();
  }

 private:
  LatticeSpec grid(std::size_t n) const { return LatticeSpec::cube(n, verify_spacing(n)); }
  LatticeSpec main_grid() const { return grid(opt_.size); }
  LatticeSpec short_grid() const { return grid(std::min(opt_.size, kShortTimeMax)); }
  LatticeSpec odd_grid() const {
    const std::size_t n = std::min(opt_.size % 2 == 1 ? opt_.size : opt_.size - 1, kPropertiesMax);
    return grid(std::max<std::size_t>(n, 3));
  }

  ParamSet params() { return perturbed(random_params(rng_), opt_.perturb_kernel); }
  ParamSet fixed(double gamma) const { return perturbed(equal_angles(gamma), opt_.perturb_kernel); }

  void add(VerifyRecord r) {
    const bool ok = std::visit([](const auto& x) { return x.holds; }, r);
    rep_.pass = rep_.pass && ok;
    rep_.results.push_back(std::move(r));
  }

  void parseval() {
    const auto lat = main_grid();
    for (int k = 0; k < kRandomParams; ++k) {
      const ParamSet p = params();
      for (int s = 0; s < kRandomSignals; ++s) {
        const auto f = random_enveloped_signal(lat, rng_);
        const auto g = random_enveloped_signal(lat, rng_);
        add(make_residual("parseval_inner", parseval_residual(f, g, p), kIdentityTol, {{"trial", s}}));
        const double nf = lp_norm(f, 2.0);
        const auto sf = qcfrft_fast(f, p);
        const double ns = lp_norm(sf.values, sf.cell_measure, 2.0);
        add(make_residual("parseval_norm", std::abs(ns * ns - nf * nf) / (nf * nf), kIdentityTol, {{"trial", s}}));
      }
    }
  }

  void roundtrip() {
    const auto lat = main_grid();
    for (int k = 0; k < kRandomParams; ++k) {
      const ParamSet p = params();
      for (int s = 0; s < kRandomSignals; ++s) {
        const auto f = random_enveloped_signal(lat, rng_);
        add(make_residual("qcfrft_roundtrip", max_scaled_diff(qcfrft_inverse(qcfrft_fast(f, p)).values(), f.values()),
                          kIdentityTol, {{"trial", s}}));
        add(make_residual("qft_roundtrip", max_scaled_diff(qft_inverse(qft_fast(f), lat).values(), f.values()),
                          kIdentityTol, {{"trial", s}}));
      }
    }
  }

  void hy() {
    const auto lat = main_grid();
    for (int k = 0; k < kRandomParams; ++k) {
      const ParamSet p = params();
      for (int s = 0; s < kRandomSignals; ++s) {
        const auto f = random_enveloped_signal(lat, rng_);
        for (double e : {1.0, 4.0 / 3.0, 2.0}) {
          const auto r = hy_check(f, p, e);
          if (e == 2.0) {
            add(make_residual("hausdorff_young_equality", std::abs(r.lhs - r.rhs) / r.rhs, kIdentityTol, r.context));
          }
          add(r);
        }
      }
    }
  }

  void renyi() {
    const auto lat = main_grid();
    std::vector<QSignal4> signals{unit(gaussian_signal(lat, 1.0))};
    for (int s = 0; s < 2; ++s) {
      signals.push_back(unit(random_enveloped_signal(lat, rng_)));
    }
    for (double gamma : {kPi / 2, kPi / 3}) {
      const ParamSet p = fixed(gamma);
      for (const auto& f : signals) {
        // The entropy bounds assume unit mass on both sides.
        const double mass = density_of(qcfrft_fast(f, p)).mass();
        add(make_residual("spectrum_mass", std::abs(mass - 1.0), kMassTol, {{"gamma", gamma}}));
        if (std::abs(mass - 1.0) > kMassTol) {
          continue;
        }
        for (double a0 : {0.6, 0.75, 0.9}) {
          add(renyi_up_report(f, p, a0));
        }
        add(shannon_up_report(f, p));
      }
    }
  }

  void lieb() {
    const auto lat = short_grid();
    for (int s = 0; s < kRandomSignals; ++s) {
      const ParamSet p = params();
      const auto f = random_enveloped_signal(lat, rng_);
      const Window g(random_enveloped_signal(lat, rng_));
      const auto field = stqcfrft_compute(f, g, p);
      const double nf = lp_norm(f, 2.0);
      const auto eq = lieb_inequality_report(field, nf, g.norm(), 2.0);
      add(make_residual("lieb_equality", std::abs(eq.lhs - eq.rhs) / eq.rhs, kIdentityTol, eq.context));
      for (double q : {2.5, 3.0, 4.0}) {
        add(lieb_inequality_report(field, nf, g.norm(), q));
      }
    }
  }

  void support() {
    const auto lat = short_grid();
    const auto f = gaussian_signal(lat, 1.0);
    const Window g(gaussian_signal(lat, 1.0));
    for (const ParamSet& p : {fixed(kPi / 2), params()}) {
      const auto field = stqcfrft_compute(f, g, p);
      for (double eps : {0.0, 0.1, 0.5}) {
        for (double q : {2.5, 3.0, 4.0}) {
          add(lieb_support_report(field, eps, q));
        }
      }
    }
    add(make_residual("lieb_support_limit", std::abs(lieb_support_constant(2.0 + 1e-9) - std::exp(4.0)), 1e-6,
                      {{"q", 2.0 + 1e-9}}));
  }

  void entropy() {
    const auto lat = short_grid();
    const auto gauss = unit(gaussian_signal(lat, 1.0));
    const auto rough = unit(random_enveloped_signal(lat, rng_));
    const auto narrow = unit(gaussian_signal(lat, 0.7));
    const std::vector<std::pair<QSignal4, QSignal4>> pairs{{gauss, gauss}, {rough, gauss}, {gauss, narrow}};
    for (double gamma : {kPi / 2, kPi / 3, 2 * kPi / 5}) {
      const ParamSet p = fixed(gamma);
      for (const auto& [f, g] : pairs) {
        const auto field = stqcfrft_compute(f, Window(g), p);
        const double mass = density_of(field).mass();
        add(make_residual("field_mass", std::abs(mass - 1.0), kMassTol, {{"gamma", gamma}}));
        if (std::abs(mass - 1.0) <= kMassTol) {
          add(stqcfrft_entropy_report(field, lp_norm(f, 2.0), lp_norm(g, 2.0)));
        }
      }
    }
  }

  void properties() {
    const auto lat = odd_grid();
    const ParamSet p = params();
    const auto f = random_enveloped_signal(lat, rng_);
    const auto h = random_enveloped_signal(lat, rng_);
    const auto graw = random_enveloped_signal(lat, rng_);
    const Window g(graw);
    const Window g2(random_enveloped_signal(lat, rng_));

    add(make_residual("energy_identity", energy_identity_residual(f, g, p), kIdentityTol));
    add(make_residual("inner_product_relation", inner_product_relation_residual(f, h, g, g2, p), kIdentityTol));

    const auto field = stqcfrft_compute(f, g, p);
    add(make_residual("reconstruction", max_scaled_diff(stqcfrft_reconstruct(field, g).values(), f.values()),
                      kReconstructTol));

    const double bound = g.norm() * lp_norm(f, 2.0) /
                         (4 * kPi * kPi * std::abs(p.left.sin_gamma) * std::abs(p.right.sin_gamma));
    add(make_report("boundedness", field.peak(), bound, Bound::upper));

    // Left i-linearity in f.
    const Quaternion li = Quaternion::in_i({0.6, -1.3});
    const Quaternion mi = Quaternion::in_i({-0.4, 0.9});
    const auto fh = stqcfrft_compute(h, g, p);
    const auto combo = stqcfrft_compute(added(left_multiplied(li, f), left_multiplied(mi, h)), g, p);
    std::vector<Quaternion> expected(combo.values.size());
    for (std::size_t n = 0; n < expected.size(); ++n) {
      expected[n] = li * field.values[n] + mi * fh.values[n];
    }
    add(make_residual("linearity", max_scaled_diff(combo.values, expected), kExactTol));

    // Anti-linearity in g with j-plane coefficients.
    const Quaternion lj = Quaternion::in_j({1.1, 0.2});
    const auto anti = stqcfrft_compute(f, Window(left_multiplied(lj, graw)), p);
    for (std::size_t n = 0; n < expected.size(); ++n) {
      expected[n] = field.values[n] * qconj(lj);
    }
    add(make_residual("anti_linearity", max_scaled_diff(anti.values, expected), kExactTol));

    // Parity: S_{Pg}(Pf)(x, xi) = S_g f(-x, -xi).
    const auto par = stqcfrft_compute(reflected(f), Window(reflected(graw)), p);
    for (std::size_t m = 0; m < par.position_count(); ++m) {
      const std::size_t mr = lat.flatten(lat.reflect(par.position_index(m)));
      for (std::size_t k = 0; k < lat.size(); ++k) {
        expected[m * lat.size() + k] = field.at(mr, lat.flatten(lat.reflect(lat.unflatten(k))));
      }
    }
    add(make_residual("parity", max_scaled_diff(par.values, expected), kExactTol));

    // Circular translation covariance of |S| at gamma = pi/2 on both sides.
    const ParamSet flat = perturbed(derive_params(kPi / 2, kPi / 2, 2.1, kPi - 2.1), opt_.perturb_kernel);
    Index4 shift{};
    for (int a = 0; a < 4; ++a) {
      shift[a] = (lat.center(a) + static_cast<std::size_t>(a) + 1) % lat.dims[a];
    }
    const auto moved = stqcfrft_compute(circular_translate(f, shift), g, flat);
    const auto base = stqcfrft_compute(f, g, flat);
    double err = 0.0;
    for (std::size_t m = 0; m < moved.position_count(); ++m) {
      const std::size_t ml = lat.flatten(lat.circular_difference(moved.position_index(m), shift));
      for (std::size_t k = 0; k < lat.size(); ++k) {
        err = std::max(err, std::abs(qmodulus(moved.at(m, k)) - qmodulus(base.at(ml, k))));
      }
    }
    add(make_residual("translation_covariance", err / base.peak(), kExactTol));

    // Kernel shift identity, both sides.
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double shift_err = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const Vec2 k{u(rng_), u(rng_)}, t{u(rng_), u(rng_)}, xi{u(rng_), u(rng_)};
      const Vec2 tk{t[0] + k[0], t[1] + k[1]};
      shift_err = std::max(shift_err, qmodulus(kernel_i(p, tk, xi) - kernel_shift_factor(p, Side::i, k, t, xi) *
                                                                       kernel_i(p, t, xi)) / qmodulus(p.left.d));
      shift_err = std::max(shift_err, qmodulus(kernel_j(p, tk, xi) - kernel_shift_factor(p, Side::j, k, t, xi) *
                                                                       kernel_j(p, t, xi)) / qmodulus(p.right.d));
    }
    add(make_residual("kernel_shift", shift_err, kExactTol));
  }

  const VerifyOptions& opt_;
  VerifyReport& rep_;
  Rng rng_;
};

}  // namespace

ResidualRecord make_residual(std::string name, double residual, double tolerance,
                             std::map<std::string, double> context) {
  ResidualRecord r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.holds = residual <= tolerance;
  r.context = std::move(context);
  return r;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"parseval", "roundtrip", "hy",         "renyi",
                                              "lieb",     "support",   "entropy",    "properties"};
  return names;
}

double verify_spacing(std::size_t n) { return std::min(1.0, 8.0 / static_cast<double>(n)); }

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& names = verify_suites();
  if (options.suite != "all" && std::find(names.begin(), names.end(), options.suite) == names.end()) {
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  }
  if (options.size < 2) {
    throw std::invalid_argument("verify needs --size >= 2");
  }
  VerifyReport rep;
  rep.suite = options.suite;
  rep.seed = options.seed;
  rep.grid = LatticeSpec::cube(options.size, verify_spacing(options.size));
  rep.generator =
      "mt19937_64(seed); components i.i.d. N(0,1) times exp(-|t|^2/2); angles uniform in [0.2, 2.9] with "
      "|sin gamma| >= 0.2";
  Suite suite(options, rep);
  if (options.suite == "all") {
    for (const auto& n : names) {
      suite.run(n);
    }
  } else {
    suite.run(options.suite);
  }
  return rep;
}

double parseval_residual(const QSignal4& f, const QSignal4& g, const ParamSet& p) {
  const auto sf = qcfrft_fast(f, p);
  const auto sg = qcfrft_fast(g, p);
  long double acc = 0.0L;
  for (std::size_t k = 0; k < sf.values.size(); ++k) {
    acc += scalar_part(sf.values[k] * qconj(sg.values[k]));
  }
  const double rhs = static_cast<double>(acc) * sf.cell_measure;
  return std::abs(sc_inner(f, g) - rhs) / (lp_norm(f, 2.0) * lp_norm(g, 2.0));
}

double energy_identity_residual(const QSignal4& f, const Window& g, const ParamSet& p) {
  const auto s = stqcfrft_compute(f, g, p);
  long double acc = 0.0L;
  for (const auto& q : s.values) {
    acc += norm_squared(q);
  }
  const double energy = static_cast<double>(acc) * s.x_cell * s.xi_cell;
  const double expected = std::pow(lp_norm(f, 2.0) * g.norm(), 2);
  return std::abs(energy - expected) / expected;
}

double inner_product_relation_residual(const QSignal4& f, const QSignal4& h, const Window& g1, const Window& g2,
                                       const ParamSet& p) {
  const auto& lat = f.lattice();
  const auto s1 = stqcfrft_compute(f, g1, p);
  const auto s2 = stqcfrft_compute(h, g2, p);
  long double lhs = 0.0L;
  for (std::size_t n = 0; n < s1.values.size(); ++n) {
    lhs += scalar_part(s1.values[n] * qconj(s2.values[n]));
  }
  Quaternion Q;
  for (std::size_t n = 0; n < lat.size(); ++n) {
    Q += qconj(g1.signal()[n]) * g2.signal()[n];
  }
  Q = Q * lat.cell_measure();
  long double rhs = 0.0L;
  for (std::size_t n = 0; n < lat.size(); ++n) {
    rhs += scalar_part(f[n] * Q * qconj(h[n]));
  }
  const double l = static_cast<double>(lhs) * s1.x_cell * s1.xi_cell;
  const double r = static_cast<double>(rhs) * lat.cell_measure();
  return std::abs(l - r) / (lp_norm(f, 2.0) * lp_norm(h, 2.0) * g1.norm() * g2.norm());
}

ParamSet perturbed(ParamSet p, double eps) {
  if (eps != 0.0) {
    p.left.d0 = p.left.d0 * (1.0 + eps);
    p.left.d = p.left.d * (1.0 + eps);
  }
  return p;
}

}  // namespace qcfrft
