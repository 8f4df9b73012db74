#pragma once

#include <stdexcept>
#include <vector>

#include "qcfrft/params.hpp"
#include "qcfrft/signal.hpp"
#include "qcfrft/transform.hpp"

namespace qcfrft {

/// Window with zero L2 norm.
class ZeroWindow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Analysis window g. Shares the lattice of the signals it is applied to.
class Window {
 public:
  /// Throws ZeroWindow when lp_norm(g, 2) == 0.
  explicit Window(QSignal4 g);

  const QSignal4& signal() const { return g_; }
  const LatticeSpec& lattice() const { return g_.lattice(); }
  double norm() const { return norm_; }

 private:
  QSignal4 g_;
  double norm_ = 0.0;
};

/// S(x, xi) for window positions x on a strided copy of the signal lattice.
/// Position m along axis a sits at index (h_a mod s_a) + m s_a, so the origin is
/// always one of the positions. values[m * base_freq.size() + k] holds the value
/// at position m and frequency index k.
struct TimeFreqField {
  std::vector<Quaternion> values;
  LatticeSpec time;
  Index4 stride{1, 1, 1, 1};
  LatticeSpec base_freq;
  ParamSet params;
  double x_cell = 0.0;   // prod s_a delta_a
  double xi_cell = 0.0;  // as in SpectrumField

  Index4 position_dims() const;
  std::size_t position_count() const;
  /// Time-lattice index of window position m.
  Index4 position_index(std::size_t m) const;
  Vec4 x_at(std::size_t m) const { return time.point(position_index(m)); }
  Vec4 xi_at(std::size_t k) const { return induced_xi(params, base_freq.point(k)); }
  const Quaternion& at(std::size_t m, std::size_t k) const { return values[m * base_freq.size() + k]; }
  double peak() const;
};

/// t -> f(t) conj(g(t - x)) with the window shifted circularly to position x.
QSignal4 windowed(const QSignal4& f, const Window& g, const Index4& x_index);

/// qcfrft_fast of the windowed signal at every strided position. Each stride
/// component must divide the matching lattice dimension.
TimeFreqField stqcfrft_compute(const QSignal4& f, const Window& g, const ParamSet& p,
                               const Index4& stride = {1, 1, 1, 1});

/// Direct quadrature at one position and an arbitrary xi.
Quaternion stqcfrft_direct_at(const QSignal4& f, const Window& g, const ParamSet& p, const Index4& x_index,
                              const Vec4& xi);

/// f(t) = (1 / ||g||^2) sum_x sum_xi conj(K_i) S(x, xi) conj(K_j) g(t - x) x_cell xi_cell.
/// Requires stride 1 and the window lattice to match S.time.
QSignal4 stqcfrft_reconstruct(const TimeFreqField& s, const Window& g);

/// (2 a1 M1^{-1} l1, 2 a2 M2^{-1} l2): |S(tau_l f)(x, xi)| = |S f(x - l, xi - shift)|.
Vec4 translation_xi_shift(const ParamSet& p, const Vec4& l);

}  // namespace qcfrft
