#pragma once

// Entropy triple (input, output, exchange) and the information quantities
// built from it.

#include "gaussq/channels.hpp"
#include "gaussq/purification.hpp"

namespace gaussq {

// All quantities are stored in nats; `base` selects the reporting unit.
struct InfoTriangle {
  EntropyValue h_in, h_out, h_exch;
  double mutual_i = 0.0;  // h_in + h_out - h_exch
  double loss = 0.0;      // h_in + h_exch - h_out
  double noise = 0.0;     // h_out + h_exch - h_in
  double coherent = 0.0;  // h_out - h_exch
  LogBase base = LogBase::nats;

  InfoTriangle in(LogBase b) const;
  // Quantities in the reporting unit.
  double mutual_value() const { return convert_nats(mutual_i, base); }
  double loss_value() const { return convert_nats(loss, base); }
  double noise_value() const { return convert_nats(noise, base); }
  double coherent_value() const { return convert_nats(coherent, base); }
};

InfoTriangle make_triangle(double h_in, double h_out, double h_exch);

// Elementary input with mean photon number n through T_k.
InfoTriangle triangle(double n, double k, double hbar = 1.0);

// C₁₂ = H(ρ₁) + H(ρ₂) - H(ρ₁₂), in nats.
double mutual_correlation(const BipartiteGaussianState& bi);

// Root of k -> coherent(n, k) on (0, 1), by bisection.
double coherent_zero_crossing(double n, double tol = 1e-10);

}  // namespace gaussq
