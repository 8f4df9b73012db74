#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcfrft/params.hpp"
#include "qcfrft/short_time.hpp"
#include "qcfrft/signal.hpp"
#include "qcfrft/transform.hpp"

namespace qcfrft {

/// Malformed or inconsistent signal file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SignalKind { qsig4, qspec, qtf };
enum class Encoding { b64le_f64, json };

struct AngleRecord {
  std::array<double, 2> alpha{};
  std::array<double, 2> beta{};

  ParamSet derive() const { return derive_params(alpha[0], beta[0], alpha[1], beta[1]); }
};

/// In-memory form of the JSON container. `lattice` is always the time lattice;
/// spectra live on frequency_lattice(lattice).
struct SignalFile {
  SignalKind kind = SignalKind::qsig4;
  LatticeSpec lattice;
  std::optional<AngleRecord> angles;
  std::optional<Index4> stride;
  std::vector<Quaternion> data;
};

std::string base64_encode(const std::vector<unsigned char>& bytes);
/// Throws FormatError on characters outside the alphabet or bad padding.
std::vector<unsigned char> base64_decode(const std::string& text);

std::string serialize(const SignalFile& file, Encoding encoding = Encoding::b64le_f64);
/// Validates every invariant of the container; throws FormatError.
SignalFile parse_signal_file(const std::string& text);

SignalFile read_signal_file(const std::string& path);
/// Writes to a temporary sibling and renames it into place.
void write_text_atomically(const std::string& path, const std::string& text);
void write_signal_file(const std::string& path, const SignalFile& file, Encoding encoding = Encoding::b64le_f64);

SignalFile to_file(const QSignal4& f);
SignalFile to_file(const SpectrumField& s, const AngleRecord& angles);
SignalFile to_file(const TimeFreqField& s, const AngleRecord& angles);

/// Each throws FormatError when the file holds another kind.
QSignal4 signal_from(const SignalFile& file);
SpectrumField spectrum_from(const SignalFile& file);
TimeFreqField time_freq_from(const SignalFile& file);

}  // namespace qcfrft
