#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcfrft/quaternion.hpp"

namespace qcfrft {

using Vec2 = std::array<double, 2>;
using Vec4 = std::array<double, 4>;
using Index4 = std::array<std::size_t, 4>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Two inputs were sampled on incompatible lattices.
class LatticeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Centered uniform 4-D sampling lattice. The coordinate of index n on axis a
/// is (n - floor(N_a / 2)) * delta_a, so the origin is always a sample.
struct LatticeSpec {
  Index4 dims{1, 1, 1, 1};
  Vec4 delta{1.0, 1.0, 1.0, 1.0};

  /// Throws std::invalid_argument on zero dims or non-positive spacings.
  static LatticeSpec make(const Index4& dims, const Vec4& delta);
  static LatticeSpec cube(std::size_t n, double spacing) {
    return make({n, n, n, n}, {spacing, spacing, spacing, spacing});
  }

  std::size_t size() const { return dims[0] * dims[1] * dims[2] * dims[3]; }
  double cell_measure() const { return delta[0] * delta[1] * delta[2] * delta[3]; }
  std::size_t center(int axis) const { return dims[axis] / 2; }

  double coordinate(int axis, std::size_t n) const {
    return (static_cast<double>(n) - static_cast<double>(center(axis))) * delta[axis];
  }

  /// Row-major with axis 4 varying fastest.
  std::size_t flatten(const Index4& idx) const {
    return ((idx[0] * dims[1] + idx[1]) * dims[2] + idx[2]) * dims[3] + idx[3];
  }
  Index4 unflatten(std::size_t flat) const {
    Index4 idx{};
    for (int a = 3; a >= 0; --a) {
      idx[a] = flat % dims[a];
      flat /= dims[a];
    }
    return idx;
  }
  Vec4 point(const Index4& idx) const {
    return {coordinate(0, idx[0]), coordinate(1, idx[1]), coordinate(2, idx[2]), coordinate(3, idx[3])};
  }
  Vec4 point(std::size_t flat) const { return point(unflatten(flat)); }

  /// Index of the sample at coordinate(idx) - coordinate(shift) on the sampled torus.
  Index4 circular_difference(const Index4& idx, const Index4& shift) const {
    Index4 out{};
    for (int a = 0; a < 4; ++a) {
      out[a] = (idx[a] + dims[a] + center(a) - shift[a]) % dims[a];
    }
    return out;
  }
  /// Index of the sample at -coordinate(idx) on the sampled torus.
  Index4 reflect(const Index4& idx) const {
    Index4 out{};
    for (int a = 0; a < 4; ++a) {
      out[a] = (2 * center(a) + dims[a] - idx[a]) % dims[a];
    }
    return out;
  }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

std::string describe(const LatticeSpec& lattice);

/// Quaternion-valued field sampled on a LatticeSpec. Immutable once built.
class QSignal4 {
 public:
  QSignal4() = default;
  /// Throws std::invalid_argument if the data length differs from lattice.size()
  /// or any component is not finite.
  QSignal4(LatticeSpec lattice, std::vector<Quaternion> data);

  static QSignal4 zeros(const LatticeSpec& lattice);
  static QSignal4 sample(const LatticeSpec& lattice, const std::function<Quaternion(const Vec4&)>& fn);

  const LatticeSpec& lattice() const { return lattice_; }
  std::span<const Quaternion> values() const { return data_; }
  std::size_t size() const { return data_.size(); }
  const Quaternion& operator[](std::size_t flat) const { return data_[flat]; }
  const Quaternion& at(const Index4& idx) const { return data_[lattice_.flatten(idx)]; }

  /// Moves the samples out, leaving this signal empty.
  std::vector<Quaternion> release() && { return std::move(data_); }

 private:
  LatticeSpec lattice_;
  std::vector<Quaternion> data_;
};

/// (sum |v|^p * cell)^(1/p); p = kInf gives the sample max. Throws for p < 1.
double lp_norm(std::span<const Quaternion> values, double cell_measure, double p);
double lp_norm(const QSignal4& f, double p);

/// sum f * conj(g) * cell. Throws LatticeMismatch.
Quaternion inner_product(const QSignal4& f, const QSignal4& g);
double sc_inner(const QSignal4& f, const QSignal4& g);

void require_same_lattice(const LatticeSpec& a, const LatticeSpec& b, const char* what);

/// Elementwise helpers used across the transforms.
QSignal4 scaled(const QSignal4& f, double s);
QSignal4 left_multiplied(const Quaternion& q, const QSignal4& f);
QSignal4 right_multiplied(const QSignal4& f, const Quaternion& q);
QSignal4 added(const QSignal4& f, const QSignal4& g);
/// Circular shift: out(t) = f(t - shift) with shift given as a lattice index offset from center.
QSignal4 circular_translate(const QSignal4& f, const Index4& shift);
/// out(t) = f(-t); exact on odd dims, circular otherwise.
QSignal4 reflected(const QSignal4& f);

}  // namespace qcfrft
