#pragma once

// One-mode attenuation / amplification channel with a vacuum environment:
// a -> k a + √|1 - k²| a₀.

#include "gaussq/entropy.hpp"
#include "gaussq/purification.hpp"

namespace gaussq {

enum class ChannelKind { attenuator, identity, amplifier };

class GaussianChannel {
 public:
  // k must be positive and finite.
  explicit GaussianChannel(double k);

  double k() const { return k_; }
  ChannelKind kind() const { return kind_; }

  // Mean photon number of the output for an elementary input with mean n.
  double output_photon_number(double n) const;

 private:
  double k_;
  ChannelKind kind_;
};

// Closed forms for an elementary input with mean photon number n. Nats.
double closed_form_output_entropy(double n, double k);
double closed_form_exchange_entropy(double n, double k);

// α -> k²α + (ħ|1 - k²|/2) I on a zero-mean one-mode state.
GaussianState apply(const GaussianChannel& ch, const GaussianState& state);

struct ExtendedOutput {
  BipartiteGaussianState bi_out;
  CMatrix complex_form;  // 2 x 2
};

// (T ⊗ Id) on the purification of an elementary one-mode state.
ExtendedOutput extended_apply(const GaussianChannel& ch, const GaussianState& state);

// Eigenvalues of the extended-channel complex matrix; lambda1 is the one of
// smaller modulus (modulus 1/2), lambda2 the other.
struct ExchangeEigenvalues {
  Complex lambda1;
  Complex lambda2;
};
ExchangeEigenvalues exchange_eigenvalues(const GaussianChannel& ch, const GaussianState& state);

// H(ρ, T_k). Returns the closed form; the eigenvalue route is checked against
// it and a disagreement beyond 1e-9 raises NumericalFailure.
EntropyValue entropy_exchange(const GaussianChannel& ch, const GaussianState& state);

// H(T_k[ρ]). Elementary inputs return the closed form after checking it
// against the general entropy of apply(ch, state); other inputs return the
// general value.
EntropyValue output_entropy(const GaussianChannel& ch, const GaussianState& state);

// Mean photon number of a one-mode state with α ∝ I; throws UnsupportedInput
// for anything else.
double elementary_photon_number(const GaussianState& state);

}  // namespace gaussq
