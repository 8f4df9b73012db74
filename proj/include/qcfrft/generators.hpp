#pragma once

#include <cstdint>
#include <random>

#include "qcfrft/params.hpp"
#include "qcfrft/signal.hpp"

namespace qcfrft {

using Rng = std::mt19937_64;

/// Components i.i.d. standard normal, times the envelope e^{-|t|^2 / 2}.
QSignal4 random_enveloped_signal(const LatticeSpec& lattice, Rng& rng);

/// Components i.i.d. standard normal with no envelope.
QSignal4 random_signal(const LatticeSpec& lattice, Rng& rng);

/// e^{-|t|^2 / (2 width^2)} times a fixed quaternion amplitude.
QSignal4 gaussian_signal(const LatticeSpec& lattice, double width, const Quaternion& amplitude = Quaternion(1.0));

/// Angles drawn uniformly from [0.2, 2.9]; rejects draws with |sin gamma| < 0.2
/// so the constants stay well conditioned.
ParamSet random_params(Rng& rng);

Quaternion random_quaternion(Rng& rng);

}  // namespace qcfrft
