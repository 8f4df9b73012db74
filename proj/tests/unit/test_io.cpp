#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <limits>
#include <numbers>
#include <span>

#include <json.hpp>

#include "qcfrft/generators.hpp"
#include "qcfrft/io.hpp"

using namespace qcfrft;

namespace {

constexpr double kPi = std::numbers::pi;

bool bit_identical(std::span<const Quaternion> a, std::span<const Quaternion> b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(Quaternion)) == 0;
}

const AngleRecord kAngles{{kPi / 2, kPi / 3}, {kPi / 6, kPi / 3}};

}  // namespace

TEST_CASE("base64 round trip and rejection") {
  CHECK(base64_encode({}) == "");
  CHECK(base64_encode({'f', 'o', 'o', 'b'}) == "Zm9vYg==");
  CHECK(base64_decode("Zm9vYmE=") == std::vector<unsigned char>{'f', 'o', 'o', 'b', 'a'});
  std::vector<unsigned char> bytes(256);
  for (int n = 0; n < 256; ++n) {
    bytes[n] = static_cast<unsigned char>(n);
  }
  CHECK(base64_decode(base64_encode(bytes)) == bytes);
  CHECK_THROWS_AS(base64_decode("Zm9v!mE="), FormatError);
  CHECK_THROWS_AS(base64_decode("Zm9"), FormatError);
}

TEST_CASE("write then read is bit-identical for every kind") {
  Rng rng(1);
  const auto lat = LatticeSpec::make({3, 2, 4, 2}, {0.5, 0.25, 1.0 / 3.0, 0.7});
  const auto f = random_signal(lat, rng);
  const ParamSet p = kAngles.derive();

  const auto sig = parse_signal_file(serialize(to_file(f)));
  CHECK(sig.kind == SignalKind::qsig4);
  CHECK(bit_identical(sig.data, f.values()));
  CHECK(sig.lattice.delta == lat.delta);

  const auto spec = qcfrft_fast(f, p);
  const auto back = spectrum_from(parse_signal_file(serialize(to_file(spec, kAngles))));
  CHECK(bit_identical(back.values, spec.values));
  CHECK(back.cell_measure == spec.cell_measure);

  const auto lat2 = LatticeSpec::cube(2, 0.5);
  const auto tf = stqcfrft_compute(random_signal(lat2, rng), Window(random_signal(lat2, rng)), p);
  const auto tf_back = time_freq_from(parse_signal_file(serialize(to_file(tf, kAngles))));
  CHECK(bit_identical(tf_back.values, tf.values));
  CHECK(tf_back.stride == tf.stride);
}

TEST_CASE("json encoding keeps values through text") {
  Rng rng(2);
  const auto f = random_signal(LatticeSpec::cube(2, 1.0), rng);
  const std::string text = serialize(to_file(f), Encoding::json);
  CHECK(nlohmann::json::parse(text).at("encoding") == "json");
  CHECK(bit_identical(signal_from(parse_signal_file(text)).values(), f.values()));
}

TEST_CASE("malformed containers are rejected") {
  Rng rng(3);
  const auto f = random_signal(LatticeSpec::cube(2, 1.0), rng);
  const auto good = nlohmann::json::parse(serialize(to_file(f)));
  const auto broken = [&](auto edit) {
    auto j = good;
    edit(j);
    return j.dump();
  };
  CHECK_NOTHROW(parse_signal_file(good.dump()));
  CHECK_THROWS_AS(parse_signal_file("{"), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["version"] = 2; })), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["kind"] = "qwav"; })), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["dims"] = {2, 2, 2}; })), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["dims"] = {2, 2, 2, 3}; })), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["delta"] = {1, 1, 0, 1}; })), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["encoding"] = "hex"; })), FormatError);
  CHECK_THROWS_AS(parse_signal_file(broken([](auto& j) { j["kind"] = "qspec"; })), FormatError);

  // Non-finite payload.
  std::vector<Quaternion> values(f.values().begin(), f.values().end());
  values[5].z = std::numeric_limits<double>::infinity();
  auto file = to_file(f);
  file.data = values;
  CHECK_THROWS_AS(parse_signal_file(serialize(file)), FormatError);

  // Angles whose sum is a multiple of 2 pi.
  auto bad_angles = nlohmann::json::parse(serialize(to_file(qcfrft_fast(f, kAngles.derive()), kAngles)));
  bad_angles["params"]["alpha"] = {kPi, 1.0};
  bad_angles["params"]["beta"] = {kPi, 1.0};
  CHECK_THROWS_AS(parse_signal_file(bad_angles.dump()), FormatError);
}

TEST_CASE("kind accessors refuse the wrong kind") {
  Rng rng(4);
  const auto file = to_file(random_signal(LatticeSpec::cube(2, 1.0), rng));
  CHECK_THROWS_AS(spectrum_from(file), FormatError);
  CHECK_THROWS_AS(time_freq_from(file), FormatError);
}

TEST_CASE("atomic write leaves no temporary behind") {
  const auto dir = std::filesystem::temp_directory_path() / "qcfrft_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "f.json").string();
  Rng rng(5);
  const auto f = random_signal(LatticeSpec::cube(2, 1.0), rng);
  write_signal_file(path, to_file(f));
  write_signal_file(path, to_file(f));
  CHECK(bit_identical(signal_from(read_signal_file(path)).values(), f.values()));
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  CHECK_THROWS_AS(read_signal_file((dir / "missing.json").string()), FormatError);
  std::filesystem::remove_all(dir);
}
