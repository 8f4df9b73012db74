#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qcfrft/analysis.hpp"
#include "qcfrft/params.hpp"
#include "qcfrft/short_time.hpp"
#include "qcfrft/signal.hpp"

namespace qcfrft {

/// An identity checked numerically: holds when residual <= tolerance.
struct ResidualRecord {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  std::map<std::string, double> context;
};

ResidualRecord make_residual(std::string name, double residual, double tolerance,
                             std::map<std::string, double> context = {});

using VerifyRecord = std::variant<InequalityReport, ResidualRecord>;

struct VerifyOptions {
  std::string suite = "all";
  std::size_t size = 6;
  std::uint64_t seed = 42;
  /// Test fixture: scales the left kernel constant of every ParamSet by (1 + eps).
  double perturb_kernel = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  LatticeSpec grid;
  std::string generator;
  std::vector<VerifyRecord> results;
  bool pass = true;
};

/// parseval, roundtrip, hy, renyi, lieb, support, entropy, properties, all.
const std::vector<std::string>& verify_suites();

/// Spacing used for an N^4 verification grid: min(1, 8 / N).
double verify_spacing(std::size_t n);

/// Throws std::invalid_argument for an unknown suite or size < 2.
VerifyReport run_verify(const VerifyOptions& options);

/// Scalar-part Parseval residual |Sc<f,g> - Sc<Sf,Sg>| / (||f|| ||g||).
double parseval_residual(const QSignal4& f, const QSignal4& g, const ParamSet& p);
/// | sum |S|^2 x_cell xi_cell - ||f||^2 ||g||^2 | / (||f||^2 ||g||^2) at stride 1.
double energy_identity_residual(const QSignal4& f, const Window& g, const ParamSet& p);
/// Residual of Sc<S_{g1} f, S_{g2} h> = Sc sum f Q conj(h), Q = sum conj(g1) g2, at stride 1.
double inner_product_relation_residual(const QSignal4& f, const QSignal4& h, const Window& g1, const Window& g2,
                                       const ParamSet& p);

/// ParamSet with d and d0 of the left pair scaled by (1 + eps).
ParamSet perturbed(ParamSet p, double eps);

}  // namespace qcfrft
