#include "gaussq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "gaussq/errors.hpp"
#include "gaussq/fock.hpp"
#include "gaussq/io.hpp"
#include "gaussq/triangle.hpp"

namespace gaussq::cli {

void SweepConfig::validate() const {
  if (!(n >= 0.0) || !std::isfinite(n)) throw UsageError("--N must be a finite number >= 0");
  if (!(k_min > 0.0) || !std::isfinite(k_min)) throw UsageError("--k-min must be positive");
  if (!(k_max > k_min) || !std::isfinite(k_max)) throw UsageError("--k-max must exceed --k-min");
  if (steps < 2) throw UsageError("--steps must be at least 2");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw UsageError("--hbar must be positive");
}

std::vector<double> SweepConfig::grid() const {
  std::vector<double> ks(steps);
  const double last = steps - 1;
  // Convex combination so both endpoints, and round interior points, come out exact.
  for (int i = 0; i < steps; ++i) ks[i] = (k_min * (last - i) + k_max * i) / last;
  return ks;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_sweep_csv(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  out << kSweepHeader << '\n';
  for (double k : cfg.grid()) {
    const InfoTriangle t = triangle(cfg.n, k, cfg.hbar).in(cfg.base);
    out << format_number(k) << ',' << format_number(t.h_in.value()) << ','
        << format_number(t.h_out.value()) << ',' << format_number(t.h_exch.value()) << ','
        << format_number(t.mutual_value()) << ',' << format_number(t.loss_value()) << ','
        << format_number(t.noise_value()) << ',' << format_number(t.coherent_value()) << '\n';
  }
}

void write_triangle_json(double n, double k, LogBase base, double hbar, std::ostream& out) {
  out << triangle_to_json(n, k, triangle(n, k, hbar).in(base)).dump(2) << '\n';
}

bool VerifyReport::all_ok() const {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return !rows.empty();
}

VerifyReport run_verify(double n, const std::vector<double>& ks, int dim, double tol) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw UsageError("--N must be a finite number >= 0");
  if (dim < 2) throw UsageError("--dim must be at least 2");
  VerifyReport report;
  for (double k : ks) {
    if (!(k > 0.0 && k < 1.0)) throw UsageError("verify needs every k in (0, 1)");
    VerifyRow row;
    row.k = k;
    row.out_closed = closed_form_output_entropy(n, k);
    row.exch_closed = closed_form_exchange_entropy(n, k);
    try {
      const auto oracle = fock::attenuation_oracle(n, k, dim);
      row.out_oracle = oracle.h_out;
      row.exch_oracle = oracle.h_exch;
      row.ok = std::abs(row.out_oracle - row.out_closed) <= tol &&
               std::abs(row.exch_oracle - row.exch_closed) <= tol;
    } catch (const TruncationError& e) {
      row.error = std::string("truncation-error: ") + e.what();
    }
    report.rows.push_back(row);
  }
  return report;
}

void write_verify_report(const VerifyReport& report, LogBase base, std::ostream& out) {
  auto f = [base](double nats) { return format_number(convert_nats(nats, base)); };
  out << "k,H_out_closed,H_out_oracle,H_out_err,H_exch_closed,H_exch_oracle,H_exch_err,status\n";
  for (const auto& r : report.rows) {
    out << format_number(r.k) << ',' << f(r.out_closed) << ',';
    if (r.error.empty()) {
      out << f(r.out_oracle) << ',' << f(std::abs(r.out_oracle - r.out_closed)) << ','
          << f(r.exch_closed) << ',' << f(r.exch_oracle) << ','
          << f(std::abs(r.exch_oracle - r.exch_closed)) << ',' << (r.ok ? "ok" : "FAIL") << '\n';
    } else {
      out << ",," << f(r.exch_closed) << ",,," << r.error << '\n';
    }
  }
}

namespace {

void write_entropy_json(const std::string& path, LogBase base, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open state file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("state file is not valid JSON: ") + e.what());
  }
  const GaussianState state = state_from_json(doc);
  nlohmann::json result;
  result["entropy"] = entropy(state).in(base).value();
  result["symplectic_spectrum"] = symplectic_spectrum(state).values;
  result["pure"] = is_pure(state);
  result["base"] = base_name(base);
  out << result.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian-state entropies and the attenuation/amplification channel"};
  app.require_subcommand(1);

  std::string out_path;
  bool bits = false;
  SweepConfig sweep_cfg;
  double n = 1.0, k = 1.0, hbar = 1.0;
  std::vector<double> verify_ks{0.3, 0.5, 0.7, 0.9};
  int dim = 60;
  std::string state_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--bits", bits, "Report entropies in bits instead of nats");
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  auto* sweep = app.add_subcommand("sweep", "CSV of the information triangle over a k grid");
  sweep->add_option("--N", sweep_cfg.n, "Mean photon number of the input")->capture_default_str();
  sweep->add_option("--k-min", sweep_cfg.k_min, "Smallest k")->capture_default_str();
  sweep->add_option("--k-max", sweep_cfg.k_max, "Largest k")->capture_default_str();
  sweep->add_option("--steps", sweep_cfg.steps, "Number of grid points")->capture_default_str();
  sweep->add_option("--hbar", sweep_cfg.hbar, "Planck constant")->capture_default_str();
  add_common(sweep);

  auto* tri = app.add_subcommand("triangle", "Information triangle JSON for one (N, k)");
  tri->add_option("--N", n, "Mean photon number of the input")->capture_default_str();
  tri->add_option("--k", k, "Channel coefficient")->required();
  tri->add_option("--hbar", hbar, "Planck constant")->capture_default_str();
  add_common(tri);

  auto* verify = app.add_subcommand("verify", "Compare closed forms with the Fock-space oracle");
  verify->add_option("--N", n, "Mean photon number of the input")->capture_default_str();
  verify->add_option("--k", verify_ks, "Comma-separated attenuator coefficients in (0, 1)")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--dim", dim, "Fock truncation per mode")->capture_default_str();
  add_common(verify);

  auto* ent = app.add_subcommand("entropy", "Entropy of a Gaussian state read from JSON");
  ent->add_option("--state", state_path, "State document {s, hbar, m, alpha}")->required();
  add_common(ent);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const LogBase base = bits ? LogBase::bits : LogBase::nats;
  sweep_cfg.base = base;

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    sink = file.get();
  }

  try {
    if (*sweep) {
      write_sweep_csv(sweep_cfg, *sink);
    } else if (*tri) {
      if (!(n >= 0.0)) throw UsageError("--N must be >= 0");
      if (!(hbar > 0.0)) throw UsageError("--hbar must be positive");
      write_triangle_json(n, k, base, hbar, *sink);
    } else if (*verify) {
      const VerifyReport report = run_verify(n, verify_ks, dim);
      write_verify_report(report, base, *sink);
      if (!report.all_ok()) return kExitFailure;
    } else if (*ent) {
      write_entropy_json(state_path, base, *sink);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace gaussq::cli
