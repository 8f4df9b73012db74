#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcfrft/params.hpp"
#include "qcfrft/short_time.hpp"
#include "qcfrft/signal.hpp"
#include "qcfrft/transform.hpp"

namespace qcfrft {

/// Which side of the inequality lhs sits on.
enum class Bound {
  upper,  // lhs <= rhs, margin = rhs - lhs
  lower,  // lhs >= rhs, margin = lhs - rhs
};

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double slack = 0.0;  // 1e-9 max(|lhs|, |rhs|, 1)
  bool holds = false;  // margin >= -slack
  std::map<std::string, double> context;
};

InequalityReport make_report(std::string name, double lhs, double rhs, Bound bound,
                             std::map<std::string, double> context = {});

/// A density was expected to carry unit mass.
class UnnormalizedDensity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonnegative samples with a common cell measure.
struct DensityField {
  std::vector<double> values;
  double cell_measure = 0.0;

  double mass() const;
};

/// |f|^2, |S f|^2 and |S_g f|^2 with the matching cell measures.
DensityField density_of(const QSignal4& f);
DensityField density_of(const SpectrumField& s);
DensityField density_of(const TimeFreqField& s);

/// (p^{1/p} / q^{1/q})^{1/2} with 1/p + 1/q = 1; p in [1, 2].
double ap_constant(double p);

/// ||S f||_q <= |sin g1|^{2/q - 1} |sin g2|^{2/q - 1} A_p^4 ||f||_p.
InequalityReport hy_check(const QSignal4& f, const ParamSet& p, double exp_p);

/// (1 / (1 - s)) ln(sum P^s cell). Needs unit mass within 1e-9, s > 0, s != 1.
double renyi_entropy(const DensityField& density, double s);
/// -sum P ln P cell with 0 ln 0 = 0. Needs unit mass within 1e-9.
double shannon_entropy(const DensityField& density);

/// H_{a0}(|f|^2) + H_{b0}(|S f|^2) >= (2/(a0-1)) ln(2 a0) + (2/(b0-1)) ln(2 b0) + 2 ln|sin g1 sin g2|
/// with b0 = 1 / (2 - 1/a0) and f rescaled to unit L2 norm. Needs 1/2 < a0 < 1.
InequalityReport renyi_up_report(const QSignal4& f, const ParamSet& p, double alpha0);
/// E(|f|^2) + E(|S f|^2) >= 2 ln(e^2 / 4 |sin g1 sin g2|), f rescaled to unit norm.
InequalityReport shannon_up_report(const QSignal4& f, const ParamSet& p);

/// ||S_g f||_q over (x, xi) <= |sin g1|^{2/q - 1} |sin g2|^{2/q - 1} (2/q)^{4/q} ||g|| ||f||, q >= 2.
InequalityReport lieb_inequality_report(const QSignal4& f, const Window& g, const ParamSet& p, double q);
/// Same with a precomputed stride-1 field and the two norms.
InequalityReport lieb_inequality_report(const TimeFreqField& s, double norm_f, double norm_g, double q);

/// Measure of the smallest cell set outside which at most eps^2 of the energy lies.
double concentration_support(const TimeFreqField& s, double eps);

/// (q/2)^{8/(q-2)} for q > 2; q = 2 gives the limit e^4.
double lieb_support_constant(double q);

/// |Omega| >= |sin g1|^2 |sin g2|^2 (1 - eps^2)^{q/(q-2)} (q/2)^{8/(q-2)}, q > 2.
InequalityReport lieb_support_report(const TimeFreqField& s, double eps, double q);

/// -sum |S|^2 ln |S|^2 >= 2 (2 + ln|sin g1 sin g2|). Needs ||f|| ||g|| = 1 within 1e-9.
InequalityReport stqcfrft_entropy_report(const QSignal4& f, const Window& g, const ParamSet& p);
InequalityReport stqcfrft_entropy_report(const TimeFreqField& s, double norm_f, double norm_g);

}  // namespace qcfrft
