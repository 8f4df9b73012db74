#include "qcfrft/io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "qcfrft/qft.hpp"

namespace qcfrft {
namespace {

using nlohmann::json;

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

const char* kind_name(SignalKind k) {
  switch (k) {
    case SignalKind::qsig4:
      return "qsig4";
    case SignalKind::qspec:
      return "qspec";
    case SignalKind::qtf:
      return "qtf";
  }
  return "";
}

SignalKind parse_kind(const std::string& s) {
  if (s == "qsig4") return SignalKind::qsig4;
  if (s == "qspec") return SignalKind::qspec;
  if (s == "qtf") return SignalKind::qtf;
  throw FormatError("unknown kind '" + s + "'");
}

std::vector<unsigned char> pack_le(const std::vector<Quaternion>& data) {
  std::vector<unsigned char> bytes;
  bytes.reserve(data.size() * 32);
  for (const auto& q : data) {
    for (double v : {q.w, q.x, q.y, q.z}) {
      const auto bits = std::bit_cast<std::uint64_t>(v);
      for (int b = 0; b < 8; ++b) {
        bytes.push_back(static_cast<unsigned char>(bits >> (8 * b)));
      }
    }
  }
  return bytes;
}

std::vector<double> unpack_le(const std::vector<unsigned char>& bytes) {
  if (bytes.size() % 8 != 0) {
    throw FormatError("binary payload is not a whole number of 64-bit values");
  }
  std::vector<double> out(bytes.size() / 8);
  for (std::size_t n = 0; n < out.size(); ++n) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= static_cast<std::uint64_t>(bytes[8 * n + b]) << (8 * b);
    }
    out[n] = std::bit_cast<double>(bits);
  }
  return out;
}

template <std::size_t N, class T>
std::array<T, N> fixed_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != N) {
    throw FormatError(std::string("field '") + key + "' must be an array of " + std::to_string(N) + " numbers");
  }
  std::array<T, N> out{};
  for (std::size_t n = 0; n < N; ++n) {
    const auto& v = j[key][n];
    if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_unsigned()) {
        throw FormatError(std::string("field '") + key + "' must hold positive integers");
      }
    } else if (!v.is_number()) {
      throw FormatError(std::string("field '") + key + "' must hold numbers");
    }
    out[n] = v.template get<T>();
  }
  return out;
}

std::size_t expected_samples(const SignalFile& f) {
  if (f.kind != SignalKind::qtf) {
    return f.lattice.size();
  }
  std::size_t positions = 1;
  for (int a = 0; a < 4; ++a) {
    positions *= f.lattice.dims[a] / (*f.stride)[a];
  }
  return positions * f.lattice.size();
}

}  // namespace

std::string base64_encode(const std::vector<unsigned char>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t n = 0;
  for (; n + 2 < bytes.size(); n += 3) {
    const std::uint32_t v = (bytes[n] << 16) | (bytes[n + 1] << 8) | bytes[n + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  if (n + 1 == bytes.size()) {
    const std::uint32_t v = bytes[n] << 16;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += "==";
  } else if (n + 2 == bytes.size()) {
    const std::uint32_t v = (bytes[n] << 16) | (bytes[n + 1] << 8);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<unsigned char> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) {
    throw FormatError("base64 payload length is not a multiple of 4");
  }
  int table[256];
  std::fill(std::begin(table), std::end(table), -1);
  for (int n = 0; n < 64; ++n) {
    table[static_cast<unsigned char>(kAlphabet[n])] = n;
  }
  std::vector<unsigned char> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t n = 0; n < text.size(); n += 4) {
    const bool last = n + 4 == text.size();
    int pad = 0;
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) {
      const char c = text[n + k];
      if (c == '=' && last && k >= 2) {
        ++pad;
        v <<= 6;
        continue;
      }
      const int d = table[static_cast<unsigned char>(c)];
      if (d < 0 || pad > 0) {
        throw FormatError("invalid base64 payload");
      }
      v = (v << 6) | static_cast<std::uint32_t>(d);
    }
    out.push_back(static_cast<unsigned char>(v >> 16));
    if (pad < 2) out.push_back(static_cast<unsigned char>(v >> 8));
    if (pad < 1) out.push_back(static_cast<unsigned char>(v));
  }
  return out;
}

std::string serialize(const SignalFile& file, Encoding encoding) {
  json j;
  j["version"] = 1;
  j["kind"] = kind_name(file.kind);
  j["dims"] = file.lattice.dims;
  j["delta"] = file.lattice.delta;
  if (file.angles) {
    j["params"] = {{"alpha", file.angles->alpha}, {"beta", file.angles->beta}};
  }
  if (file.stride) {
    j["stride"] = *file.stride;
  }
  if (encoding == Encoding::b64le_f64) {
    j["encoding"] = "b64le-f64";
    j["data"] = base64_encode(pack_le(file.data));
  } else {
    j["encoding"] = "json";
    json arr = json::array();
    for (const auto& q : file.data) {
      arr.push_back(q.w);
      arr.push_back(q.x);
      arr.push_back(q.y);
      arr.push_back(q.z);
    }
    j["data"] = std::move(arr);
  }
  return j.dump() + "\n";
}

SignalFile parse_signal_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw FormatError("signal file must be a JSON object");
  }
  if (!j.contains("version") || j["version"] != 1) {
    throw FormatError("unsupported or missing version (expected 1)");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw FormatError("missing kind");
  }
  SignalFile f;
  f.kind = parse_kind(j["kind"].get<std::string>());
  try {
    f.lattice = LatticeSpec::make(fixed_array<4, std::size_t>(j, "dims"), fixed_array<4, double>(j, "delta"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (j.contains("params")) {
    const auto& p = j["params"];
    if (!p.is_object()) {
      throw FormatError("params must be an object");
    }
    f.angles = AngleRecord{fixed_array<2, double>(p, "alpha"), fixed_array<2, double>(p, "beta")};
    try {
      (void)f.angles->derive();
    } catch (const InvalidAngles& e) {
      throw FormatError(e.what());
    }
  }
  if (f.kind != SignalKind::qsig4 && !f.angles) {
    throw FormatError(std::string(kind_name(f.kind)) + " files must carry params");
  }
  if (j.contains("stride")) {
    f.stride = fixed_array<4, std::size_t>(j, "stride");
    for (int a = 0; a < 4; ++a) {
      if ((*f.stride)[a] == 0 || f.lattice.dims[a] % (*f.stride)[a] != 0) {
        throw FormatError("stride must divide dims on every axis");
      }
    }
  }
  if (f.kind == SignalKind::qtf && !f.stride) {
    f.stride = Index4{1, 1, 1, 1};
  }

  if (!j.contains("encoding") || !j["encoding"].is_string()) {
    throw FormatError("missing encoding");
  }
  const std::string enc = j["encoding"].get<std::string>();
  if (!j.contains("data")) {
    throw FormatError("missing data");
  }
  std::vector<double> flat;
  if (enc == "b64le-f64") {
    if (!j["data"].is_string()) {
      throw FormatError("b64le-f64 data must be a string");
    }
    flat = unpack_le(base64_decode(j["data"].get<std::string>()));
  } else if (enc == "json") {
    if (!j["data"].is_array()) {
      throw FormatError("json data must be an array of numbers");
    }
    for (const auto& v : j["data"]) {
      if (!v.is_number()) {
        throw FormatError("json data must be an array of numbers");
      }
      flat.push_back(v.get<double>());
    }
  } else {
    throw FormatError("unknown encoding '" + enc + "'");
  }

  const std::size_t samples = expected_samples(f);
  if (flat.size() != 4 * samples) {
    throw FormatError("payload holds " + std::to_string(flat.size()) + " values, expected " +
                      std::to_string(4 * samples) + " for " + describe(f.lattice));
  }
  f.data.resize(samples);
  for (std::size_t n = 0; n < samples; ++n) {
    f.data[n] = {flat[4 * n], flat[4 * n + 1], flat[4 * n + 2], flat[4 * n + 3]};
    if (!is_finite(f.data[n])) {
      throw FormatError("payload contains a non-finite value at sample " + std::to_string(n));
    }
  }
  return f;
}

SignalFile read_signal_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_signal_file(buf.str());
}

void write_text_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write '" + tmp + "'");
    }
    out << text;
    out.flush();
    if (!out) {
      throw std::runtime_error("write to '" + tmp + "' failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into '" + path + "': " + ec.message());
  }
}

void write_signal_file(const std::string& path, const SignalFile& file, Encoding encoding) {
  write_text_atomically(path, serialize(file, encoding));
}

SignalFile to_file(const QSignal4& f) {
  SignalFile out;
  out.kind = SignalKind::qsig4;
  out.lattice = f.lattice();
  out.data.assign(f.values().begin(), f.values().end());
  return out;
}

SignalFile to_file(const SpectrumField& s, const AngleRecord& angles) {
  SignalFile out;
  out.kind = SignalKind::qspec;
  out.lattice = s.time;
  out.angles = angles;
  out.data = s.values;
  return out;
}

SignalFile to_file(const TimeFreqField& s, const AngleRecord& angles) {
  SignalFile out;
  out.kind = SignalKind::qtf;
  out.lattice = s.time;
  out.angles = angles;
  out.stride = s.stride;
  out.data = s.values;
  return out;
}

QSignal4 signal_from(const SignalFile& file) {
  if (file.kind != SignalKind::qsig4) {
    throw FormatError(std::string("expected a qsig4 file, got ") + kind_name(file.kind));
  }
  return QSignal4(file.lattice, file.data);
}

SpectrumField spectrum_from(const SignalFile& file) {
  if (file.kind != SignalKind::qspec) {
    throw FormatError(std::string("expected a qspec file, got ") + kind_name(file.kind));
  }
  SpectrumField s;
  s.time = file.lattice;
  s.base_freq = frequency_lattice(file.lattice);
  s.params = file.angles->derive();
  s.cell_measure = s.base_freq.cell_measure() / (s.params.left.detM * s.params.right.detM);
  s.values = file.data;
  return s;
}

TimeFreqField time_freq_from(const SignalFile& file) {
  if (file.kind != SignalKind::qtf) {
    throw FormatError(std::string("expected a qtf file, got ") + kind_name(file.kind));
  }
  TimeFreqField s;
  s.time = file.lattice;
  s.stride = *file.stride;
  s.base_freq = frequency_lattice(file.lattice);
  s.params = file.angles->derive();
  s.x_cell = 1.0;
  for (int a = 0; a < 4; ++a) {
    s.x_cell *= static_cast<double>(s.stride[a]) * s.time.delta[a];
  }
  s.xi_cell = s.base_freq.cell_measure() / (s.params.left.detM * s.params.right.detM);
  s.values = file.data;
  return s;
}

}  // namespace qcfrft
