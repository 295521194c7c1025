#pragma once

// Command implementations behind the `gaussq` tool. Kept in a library so the
// tests can drive them without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

#include "gaussq/entropy.hpp"

namespace gaussq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

// Bad command-line values; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  double n = 1.0;
  double k_min = 0.01;
  double k_max = 3.0;
  int steps = 300;
  LogBase base = LogBase::nats;
  double hbar = 1.0;

  // Throws UsageError.
  void validate() const;
  // steps points from k_min to k_max inclusive.
  std::vector<double> grid() const;
};

inline constexpr const char* kSweepHeader = "k,H_in,H_out,H_exch,I,L,N_noise,coherent";

// %.12g, with -0 printed as 0.
std::string format_number(double v);

void write_sweep_csv(const SweepConfig& cfg, std::ostream& out);

void write_triangle_json(double n, double k, LogBase base, double hbar, std::ostream& out);

struct VerifyRow {
  double k = 0.0;
  double out_closed = 0.0, out_oracle = 0.0;
  double exch_closed = 0.0, exch_oracle = 0.0;
  bool ok = false;
  std::string error;  // set when the oracle refused to run
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  bool all_ok() const;
};

inline constexpr double kVerifyTolerance = 2e-3;

VerifyReport run_verify(double n, const std::vector<double>& ks, int dim,
                        double tol = kVerifyTolerance);
void write_verify_report(const VerifyReport& report, LogBase base, std::ostream& out);

// Full command line, argv[0] included. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gaussq::cli
