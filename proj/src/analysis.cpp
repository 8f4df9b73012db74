#include "qcfrft/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcfrft {
namespace {

constexpr double kMassTolerance = 1e-9;

void require_unit_mass(const DensityField& density) {
  const double m = density.mass();
  if (!(std::abs(m - 1.0) <= kMassTolerance)) {
    throw UnnormalizedDensity("density mass is " + std::to_string(m) + ", expected 1");
  }
}

// |sin g1|^{e} |sin g2|^{e}
double sine_factor(const ParamSet& p, double e) {
  return std::pow(std::abs(p.left.sin_gamma), e) * std::pow(std::abs(p.right.sin_gamma), e);
}

QSignal4 unit_normalized(const QSignal4& f) {
  const double n = lp_norm(f, 2.0);
  if (!(n > 0.0)) {
    throw std::invalid_argument("entropy bounds need a nonzero signal");
  }
  return scaled(f, 1.0 / n);
}

std::map<std::string, double> angle_context(const ParamSet& p) {
  return {{"gamma1", p.left.gamma}, {"delta1", p.left.delta}, {"gamma2", p.right.gamma}, {"delta2", p.right.delta}};
}

DensityField squared_moduli(std::span<const Quaternion> values, double cell) {
  DensityField d;
  d.values.reserve(values.size());
  for (const auto& q : values) {
    d.values.push_back(norm_squared(q));
  }
  d.cell_measure = cell;
  return d;
}

}  // namespace

InequalityReport make_report(std::string name, double lhs, double rhs, Bound bound,
                             std::map<std::string, double> context) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = bound == Bound::upper ? rhs - lhs : lhs - rhs;
  r.slack = 1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
  r.holds = r.margin >= -r.slack;
  r.context = std::move(context);
  return r;
}

double DensityField::mass() const {
  long double acc = 0.0L;
  for (double v : values) {
    acc += v;
  }
  return static_cast<double>(acc) * cell_measure;
}

DensityField density_of(const QSignal4& f) { return squared_moduli(f.values(), f.lattice().cell_measure()); }

DensityField density_of(const SpectrumField& s) { return squared_moduli(s.values, s.cell_measure); }

DensityField density_of(const TimeFreqField& s) { return squared_moduli(s.values, s.x_cell * s.xi_cell); }

double ap_constant(double p) {
  if (!(p >= 1.0 && p <= 2.0)) {
    throw std::invalid_argument("ap_constant: p must lie in [1, 2]");
  }
  if (p == 1.0) {
    return 1.0;
  }
  const double q = p / (p - 1.0);
  return std::sqrt(std::pow(p, 1.0 / p) / std::pow(q, 1.0 / q));
}

InequalityReport hy_check(const QSignal4& f, const ParamSet& p, double exp_p) {
  const double ap = ap_constant(exp_p);
  const double q = exp_p == 1.0 ? kInf : exp_p / (exp_p - 1.0);
  const double two_over_q = exp_p == 1.0 ? 0.0 : 2.0 / q;
  const SpectrumField s = qcfrft_fast(f, p);
  const double lhs = lp_norm(s.values, s.cell_measure, q);
  const double rhs = sine_factor(p, two_over_q - 1.0) * std::pow(ap, 4) * lp_norm(f, exp_p);
  auto ctx = angle_context(p);
  ctx["p"] = exp_p;
  return make_report("hausdorff_young", lhs, rhs, Bound::upper, std::move(ctx));
}

double renyi_entropy(const DensityField& density, double s) {
  if (!(s > 0.0) || s == 1.0) {
    throw std::invalid_argument("renyi_entropy: order must be positive and different from 1");
  }
  require_unit_mass(density);
  long double acc = 0.0L;
  for (double v : density.values) {
    if (v > 0.0) {
      acc += std::pow(static_cast<long double>(v), static_cast<long double>(s));
    }
  }
  return std::log(static_cast<double>(acc) * density.cell_measure) / (1.0 - s);
}

double shannon_entropy(const DensityField& density) {
  require_unit_mass(density);
  long double acc = 0.0L;
  for (double v : density.values) {
    if (v > 0.0) {
      acc -= static_cast<long double>(v) * std::log(static_cast<long double>(v));
    }
  }
  return static_cast<double>(acc) * density.cell_measure;
}

InequalityReport renyi_up_report(const QSignal4& f, const ParamSet& p, double alpha0) {
  if (!(alpha0 > 0.5 && alpha0 < 1.0)) {
    throw std::invalid_argument("renyi_up_report: alpha0 must lie in (1/2, 1)");
  }
  const double beta0 = 1.0 / (2.0 - 1.0 / alpha0);
  const QSignal4 unit = unit_normalized(f);
  const SpectrumField s = qcfrft_fast(unit, p);
  const double lhs = renyi_entropy(density_of(unit), alpha0) + renyi_entropy(density_of(s), beta0);
  const double rhs = 2.0 / (alpha0 - 1.0) * std::log(2.0 * alpha0) + 2.0 / (beta0 - 1.0) * std::log(2.0 * beta0) +
                     2.0 * std::log(std::abs(p.left.sin_gamma * p.right.sin_gamma));
  auto ctx = angle_context(p);
  ctx["alpha0"] = alpha0;
  ctx["beta0"] = beta0;
  return make_report("renyi_up", lhs, rhs, Bound::lower, std::move(ctx));
}

InequalityReport shannon_up_report(const QSignal4& f, const ParamSet& p) {
  const QSignal4 unit = unit_normalized(f);
  const SpectrumField s = qcfrft_fast(unit, p);
  const double lhs = shannon_entropy(density_of(unit)) + shannon_entropy(density_of(s));
  const double rhs = 2.0 * std::log(std::exp(2.0) / 4.0 * std::abs(p.left.sin_gamma * p.right.sin_gamma));
  return make_report("shannon_up", lhs, rhs, Bound::lower, angle_context(p));
}

InequalityReport lieb_inequality_report(const QSignal4& f, const Window& g, const ParamSet& p, double q) {
  if (!(q >= 2.0)) {
    throw std::invalid_argument("lieb_inequality_report: q must be at least 2");
  }
  return lieb_inequality_report(stqcfrft_compute(f, g, p), lp_norm(f, 2.0), g.norm(), q);
}

InequalityReport lieb_inequality_report(const TimeFreqField& s, double norm_f, double norm_g, double q) {
  if (!(q >= 2.0)) {
    throw std::invalid_argument("lieb_inequality_report: q must be at least 2");
  }
  if (s.stride != Index4{1, 1, 1, 1}) {
    throw std::invalid_argument("lieb_inequality_report needs a stride-1 field");
  }
  const double lhs = lp_norm(s.values, s.x_cell * s.xi_cell, q);
  const double rhs = sine_factor(s.params, 2.0 / q - 1.0) * std::pow(2.0 / q, 4.0 / q) * norm_g * norm_f;
  auto ctx = angle_context(s.params);
  ctx["q"] = q;
  return make_report("lieb", lhs, rhs, Bound::upper, std::move(ctx));
}

double concentration_support(const TimeFreqField& s, double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("concentration_support: eps must lie in [0, 1]");
  }
  std::vector<double> energy;
  energy.reserve(s.values.size());
  for (const auto& q : s.values) {
    energy.push_back(norm_squared(q));
  }
  std::sort(energy.begin(), energy.end());
  long double total = 0.0L;
  for (double e : energy) {
    total += e;
  }
  // Drop the weakest cells while the dropped energy stays within eps^2 of the total.
  const long double budget = static_cast<long double>(eps) * eps * total * (1.0L + 1e-15L);
  long double dropped = 0.0L;
  std::size_t removed = 0;
  while (removed < energy.size() && dropped + energy[removed] <= budget) {
    dropped += energy[removed];
    ++removed;
  }
  return static_cast<double>(energy.size() - removed) * s.x_cell * s.xi_cell;
}

double lieb_support_constant(double q) {
  if (!(q >= 2.0)) {
    throw std::invalid_argument("lieb_support_constant: q must be at least 2");
  }
  if (q == 2.0) {
    return std::exp(4.0);
  }
  const double h = q - 2.0;
  return std::exp(8.0 * std::log1p(0.5 * h) / h);
}

InequalityReport lieb_support_report(const TimeFreqField& s, double eps, double q) {
  if (!(q > 2.0)) {
    throw std::invalid_argument("lieb_support_report: q must exceed 2");
  }
  const double lhs = concentration_support(s, eps);
  const double rhs = sine_factor(s.params, 2.0) * std::pow(1.0 - eps * eps, q / (q - 2.0)) * lieb_support_constant(q);
  auto ctx = angle_context(s.params);
  ctx["eps"] = eps;
  ctx["q"] = q;
  return make_report("lieb_support", lhs, rhs, Bound::lower, std::move(ctx));
}

InequalityReport stqcfrft_entropy_report(const QSignal4& f, const Window& g, const ParamSet& p) {
  const double nf = lp_norm(f, 2.0);
  if (!(std::abs(nf * g.norm() - 1.0) <= kMassTolerance)) {
    throw UnnormalizedDensity("stqcfrft_entropy_report needs ||f|| ||g|| = 1");
  }
  return stqcfrft_entropy_report(stqcfrft_compute(f, g, p), nf, g.norm());
}

InequalityReport stqcfrft_entropy_report(const TimeFreqField& s, double norm_f, double norm_g) {
  if (!(std::abs(norm_f * norm_g - 1.0) <= kMassTolerance)) {
    throw UnnormalizedDensity("stqcfrft_entropy_report needs ||f|| ||g|| = 1");
  }
  if (s.stride != Index4{1, 1, 1, 1}) {
    throw std::invalid_argument("stqcfrft_entropy_report needs a stride-1 field");
  }
  const double lhs = shannon_entropy(density_of(s));
  const double rhs = 2.0 * (2.0 + std::log(std::abs(s.params.left.sin_gamma * s.params.right.sin_gamma)));
  return make_report("stqcfrft_entropy", lhs, rhs, Bound::lower, angle_context(s.params));
}

}  // namespace qcfrft
