#include "qcfrft/cli.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include <CLI11.hpp>

#include "qcfrft/closed_form.hpp"
#include "qcfrft/io.hpp"
#include "qcfrft/qft.hpp"
#include "qcfrft/short_time.hpp"
#include "qcfrft/transform.hpp"
#include "qcfrft/version.hpp"

namespace qcfrft {
namespace {

using nlohmann::json;

constexpr double kExampleTol = 1e-6;

struct AngleFlags {
  std::vector<double> alpha;
  std::vector<double> beta;

  void attach(CLI::App* app, bool required) {
    auto* a = app->add_option("--alpha", alpha, "alpha1,alpha2 in radians")->delimiter(',')->expected(2);
    auto* b = app->add_option("--beta", beta, "beta1,beta2 in radians")->delimiter(',')->expected(2);
    if (required) {
      a->required();
      b->required();
    }
  }
  AngleRecord record() const { return AngleRecord{{alpha[0], alpha[1]}, {beta[0], beta[1]}}; }
};

Encoding parse_encoding(const std::string& s) { return s == "json" ? Encoding::json : Encoding::b64le_f64; }

json lattice_json(const LatticeSpec& l) { return {{"dims", l.dims}, {"delta", l.delta}}; }

json angle_json(const AngleRecord& a) { return {{"alpha", a.alpha}, {"beta", a.beta}}; }

int finish(const json& report, bool pass, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_text_atomically(path, text);
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

// Window of the erf example: +1 on [0, 1/2)^4, -1 on [1/2, 1)^4.
Quaternion bipolar_box(const Vec4& t) {
  bool first = true, second = true;
  for (double c : t) {
    first = first && c >= 0.0 && c < 0.5;
    second = second && c >= 0.5 && c < 1.0;
  }
  return Quaternion(first ? 1.0 : second ? -1.0 : 0.0);
}

}  // namespace

json to_json(const InequalityReport& r) {
  return {{"type", "inequality"}, {"name", r.name},   {"lhs", r.lhs},         {"rhs", r.rhs},
          {"margin", r.margin},   {"slack", r.slack}, {"holds", r.holds},     {"context", r.context}};
}

json to_json(const ResidualRecord& r) {
  return {{"type", "residual"},       {"name", r.name},   {"residual", r.residual},
          {"tolerance", r.tolerance}, {"holds", r.holds}, {"context", r.context}};
}

json to_json(const VerifyReport& r) {
  json results = json::array();
  for (const auto& rec : r.results) {
    results.push_back(std::visit([](const auto& x) { return to_json(x); }, rec));
  }
  return {{"suite", r.suite},         {"seed", r.seed},        {"grid", lattice_json(r.grid)},
          {"generator", r.generator}, {"results", results},    {"pass", r.pass}};
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion coupled fractional Fourier transforms on 4-D lattices", "qcfrft"};
  app.require_subcommand(1);

  // forward
  auto* forward = app.add_subcommand("forward", "qsig4 -> qspec");
  std::string fwd_in, fwd_out, method = "fast", encoding = "b64le-f64";
  AngleFlags fwd_angles;
  forward->add_option("--in", fwd_in, "input qsig4 file")->required();
  forward->add_option("--out", fwd_out, "output qspec file")->required();
  fwd_angles.attach(forward, true);
  forward->add_option("--method", method, "fast or direct")->check(CLI::IsMember({"fast", "direct"}));
  forward->add_option("--encoding", encoding)->check(CLI::IsMember({"b64le-f64", "json"}));

  // inverse
  auto* inverse = app.add_subcommand("inverse", "qspec -> qsig4");
  std::string inv_in, inv_out;
  inverse->add_option("--in", inv_in, "input qspec file")->required();
  inverse->add_option("--out", inv_out, "output qsig4 file")->required();
  inverse->add_option("--encoding", encoding)->check(CLI::IsMember({"b64le-f64", "json"}));

  // stft
  auto* stft = app.add_subcommand("stft", "qsig4 + window -> qtf");
  std::string st_in, st_window, st_out;
  std::vector<std::size_t> stride{1, 1, 1, 1};
  AngleFlags st_angles;
  stft->add_option("--in", st_in, "input qsig4 file")->required();
  stft->add_option("--window", st_window, "window qsig4 file")->required();
  stft->add_option("--out", st_out, "output qtf file")->required();
  st_angles.attach(stft, true);
  stft->add_option("--stride", stride, "s1,s2,s3,s4; each must divide the matching dimension")
      ->delimiter(',')
      ->expected(4);
  stft->add_option("--encoding", encoding)->check(CLI::IsMember({"b64le-f64", "json"}));

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "qtf + window -> qsig4");
  std::string rc_in, rc_window, rc_out;
  reconstruct->add_option("--in", rc_in, "input qtf file (stride 1)")->required();
  reconstruct->add_option("--window", rc_window, "window qsig4 file")->required();
  reconstruct->add_option("--out", rc_out, "output qsig4 file")->required();
  reconstruct->add_option("--encoding", encoding)->check(CLI::IsMember({"b64le-f64", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites on seeded signals");
  VerifyOptions vopt;
  std::string report_path;
  std::vector<std::string> suites = verify_suites();
  suites.push_back("all");
  verify->add_option("--suite", vopt.suite, "suite name")->check(CLI::IsMember(suites));
  verify->add_option("--size", vopt.size, "lattice size N (N^4 samples)")->check(CLI::Range(2, 64));
  verify->add_option("--seed", vopt.seed, "generator seed");
  verify->add_option("--report", report_path, "write the JSON report here instead of stdout");
  verify->add_option("--perturb-kernel", vopt.perturb_kernel, "test fixture: scale the left kernel constant")
      ->group("Fixtures");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "entropy uncertainty reports for a qsig4 file");
  std::string en_in;
  AngleFlags en_angles;
  std::optional<double> renyi;
  entropy->add_option("--in", en_in, "input qsig4 file")->required();
  en_angles.attach(entropy, true);
  entropy->add_option("--renyi", renyi, "also report the Renyi bound at this alpha0 in (1/2, 1)");

  // example
  auto* example = app.add_subcommand("example", "closed form vs numeric transform");
  std::string which;
  std::size_t ex_size = 16;
  double ex_delta = 0.5, ex_A = 1.0, ex_B = 1.0;
  std::uint64_t ex_seed = 7;
  AngleFlags ex_angles;
  std::string ex_report;
  example->add_option("which", which, "gaussian or boxwindow")
      ->required()
      ->check(CLI::IsMember({"gaussian", "boxwindow"}));
  example->add_option("--size", ex_size, "lattice size N")->check(CLI::Range(2, 64));
  example->add_option("--delta", ex_delta, "lattice spacing")->check(CLI::PositiveNumber);
  example->add_option("--A", ex_A, "gaussian: exponent on t1")->check(CLI::PositiveNumber);
  example->add_option("--B", ex_B, "gaussian: exponent on t2")->check(CLI::PositiveNumber);
  example->add_option("--seed", ex_seed, "seed for the sampled xi points");
  example->add_option("--report", ex_report, "write the JSON report here instead of stdout");
  ex_angles.attach(example, false);

  // info
  auto* info = app.add_subcommand("info", "version, or a summary of a signal file");
  std::string info_in;
  info->add_option("--in", info_in, "signal file to describe");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*forward) {
      const QSignal4 f = signal_from(read_signal_file(fwd_in));
      const AngleRecord angles = fwd_angles.record();
      const ParamSet p = angles.derive();
      SpectrumField s = qcfrft_fast(f, p);
      if (method == "direct") {
        std::vector<Vec4> xs(s.values.size());
        for (std::size_t k = 0; k < xs.size(); ++k) {
          xs[k] = s.xi_at(k);
        }
        s.values = qcfrft_direct(f, p, xs);
      }
      write_signal_file(fwd_out, to_file(s, angles), parse_encoding(encoding));
      return kExitOk;
    }
    if (*inverse) {
      const SignalFile file = read_signal_file(inv_in);
      write_signal_file(inv_out, to_file(qcfrft_inverse(spectrum_from(file))), parse_encoding(encoding));
      return kExitOk;
    }
    if (*stft) {
      const QSignal4 f = signal_from(read_signal_file(st_in));
      const Window g(signal_from(read_signal_file(st_window)));
      const AngleRecord angles = st_angles.record();
      const Index4 s{stride[0], stride[1], stride[2], stride[3]};
      write_signal_file(st_out, to_file(stqcfrft_compute(f, g, angles.derive(), s), angles),
                        parse_encoding(encoding));
      return kExitOk;
    }
    if (*reconstruct) {
      const TimeFreqField s = time_freq_from(read_signal_file(rc_in));
      const Window g(signal_from(read_signal_file(rc_window)));
      write_signal_file(rc_out, to_file(stqcfrft_reconstruct(s, g)), parse_encoding(encoding));
      return kExitOk;
    }
    if (*verify) {
      const VerifyReport rep = run_verify(vopt);
      json j = to_json(rep);
      if (vopt.perturb_kernel != 0.0) {
        j["perturb_kernel"] = vopt.perturb_kernel;
      }
      return finish(j, rep.pass, report_path, out);
    }
    if (*entropy) {
      const QSignal4 f = signal_from(read_signal_file(en_in));
      const AngleRecord angles = en_angles.record();
      const ParamSet p = angles.derive();
      json results = json::array();
      bool pass = true;
      std::vector<InequalityReport> reports{shannon_up_report(f, p)};
      if (renyi) {
        reports.push_back(renyi_up_report(f, p, *renyi));
      }
      for (const auto& r : reports) {
        pass = pass && r.holds;
        results.push_back(to_json(r));
      }
      const json j{{"input", en_in}, {"grid", lattice_json(f.lattice())}, {"params", angle_json(angles)},
                   {"results", results}, {"pass", pass}};
      return finish(j, pass, "", out);
    }
    if (*example) {
      const double pi = std::numbers::pi;
      AngleRecord angles{{pi / 2, pi / 3}, {pi / 6, pi / 3}};
      if (!ex_angles.alpha.empty() || !ex_angles.beta.empty()) {
        if (ex_angles.alpha.size() != 2 || ex_angles.beta.size() != 2) {
          throw std::invalid_argument("--alpha and --beta must be given together");
        }
        angles = ex_angles.record();
      }
      const ParamSet p = angles.derive();
      const LatticeSpec lat = LatticeSpec::cube(ex_size, ex_delta);
      json points = json::array();
      double worst = 0.0;
      if (which == "gaussian") {
        const auto f = QSignal4::sample(lat, [&](const Vec4& t) {
          const double r1 = t[0] * t[0] + t[1] * t[1], r2 = t[2] * t[2] + t[3] * t[3];
          return exp_i(p.left.a * r1) * std::exp(-ex_A * r1 - ex_B * r2) * exp_j(p.right.a * r2);
        });
        std::mt19937_64 rng(ex_seed);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int k = 0; k < 20; ++k) {
          const Vec4 xi{u(rng), u(rng), u(rng), u(rng)};
          const Quaternion closed = gaussian_qcfrft(p, ex_A, ex_B, xi);
          const Quaternion numeric = qcfrft_direct_at(f, p, xi);
          const double rel = qmodulus(numeric - closed) / qmodulus(closed);
          worst = std::max(worst, rel);
          points.push_back({{"xi", xi}, {"relative_error", rel}});
        }
      } else {
        if (ex_size % 2 != 0) {
          throw std::invalid_argument("boxwindow needs an even --size");
        }
        const auto f = QSignal4::sample(lat, [](const Vec4& t) {
          return Quaternion(std::exp(-(t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3])));
        });
        const Window g(QSignal4::sample(lat, bipolar_box));
        const std::size_t half = ex_size / 2;
        const TimeFreqField s = stqcfrft_compute(f, g, p, {half, half, half, half});
        std::mt19937_64 rng(ex_seed);
        std::uniform_int_distribution<std::size_t> pos(0, s.position_count() - 1);
        for (int k = 0; k < 5; ++k) {
          const std::size_t m = pos(rng);
          // xi from the central half of the induced lattice.
          Index4 idx{};
          for (int a = 0; a < 4; ++a) {
            std::uniform_int_distribution<std::size_t> c(lat.center(a) - ex_size / 4, lat.center(a) + ex_size / 4 - 1);
            idx[a] = c(rng);
          }
          const std::size_t kf = s.base_freq.flatten(idx);
          const Quaternion closed = box_window_stqcfrft(p, s.x_at(m), s.xi_at(kf));
          const double rel = qmodulus(s.at(m, kf) - closed) / qmodulus(closed);
          worst = std::max(worst, rel);
          points.push_back({{"x", s.x_at(m)}, {"xi", s.xi_at(kf)}, {"relative_error", rel}});
        }
      }
      const bool pass = worst <= kExampleTol;
      const json j{{"example", which},      {"grid", lattice_json(lat)}, {"params", angle_json(angles)},
                   {"points", points},      {"max_relative_error", worst}, {"tolerance", kExampleTol},
                   {"pass", pass}};
      return finish(j, pass, ex_report, out);
    }
    if (*info) {
      json j{{"name", "qcfrft"}, {"version", kVersion}, {"formats", {"qsig4", "qspec", "qtf"}},
             {"encodings", {"b64le-f64", "json"}}, {"suites", verify_suites()}};
      if (!info_in.empty()) {
        const SignalFile file = read_signal_file(info_in);
        double peak = 0.0;
        for (const auto& q : file.data) {
          peak = std::max(peak, qmodulus(q));
        }
        const char* kinds[] = {"qsig4", "qspec", "qtf"};
        json d{{"kind", kinds[static_cast<int>(file.kind)]}, {"grid", lattice_json(file.lattice)},
               {"samples", file.data.size()}, {"peak", peak}};
        if (file.angles) d["params"] = angle_json(*file.angles);
        if (file.stride) d["stride"] = *file.stride;
        j["file"] = d;
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "qcfrft: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace qcfrft
