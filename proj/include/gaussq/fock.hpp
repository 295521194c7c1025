#pragma once

// Brute-force checks in a truncated Fock basis: thermal states, the two-mode
// squeezed vacuum, a beamsplitter dilation of the attenuator and direct von
// Neumann entropies. Nothing here uses the Gaussian formulas.

#include <vector>

#include <Eigen/SparseCore>

#include "gaussq/symplectic.hpp"

namespace gaussq::fock {

inline constexpr double kDefaultDeficitBound = 1e-8;

// Density matrix on `modes` modes, each truncated to levels 0..dim-1. Basis
// index is n_0 * dim^(modes-1) + ... + n_{modes-1}; mode 0 is the system.
struct FockDensityMatrix {
  int dim = 0;
  int modes = 1;
  Eigen::SparseMatrix<Complex> data;
  // Probability mass lost to the truncation; trace(data) = 1 - trace_deficit.
  double trace_deficit = 0.0;

  CMatrix dense() const { return CMatrix(data); }
  double trace() const;
};

// p_n = Nⁿ / (N+1)ⁿ⁺¹ for n < dim. Throws TruncationError when the lost mass
// (N/(N+1))^dim exceeds max_deficit.
FockDensityMatrix thermal_fock(double n, int dim, double max_deficit = kDefaultDeficitBound);

// Σ √p_n |n, n⟩ as a rank-one two-mode density matrix (system, reference).
FockDensityMatrix tmsv_fock(double n, int dim, double max_deficit = kDefaultDeficitBound);

// Beamsplitter unitaries exp(θ(a†b - ab†)), cos θ = k, one per total photon
// number sector n < dim, in the basis |j, n-j⟩ (system j, ancilla n-j).
std::vector<Matrix> beamsplitter_sectors(double k, int dim);

// Mixes the system mode (mode 0) of `rho12` with a vacuum ancilla at
// transmissivity k and traces the ancilla out. The reference mode is left
// alone, so on a purification this yields the (T ⊗ Id) output.
FockDensityMatrix beamsplitter_attenuate(const FockDensityMatrix& rho12, double k);

// Reduced state of one mode of a two-mode density matrix.
FockDensityMatrix reduce(const FockDensityMatrix& rho, int keep_mode);

// -Σ λ log λ over the eigenvalues, diagonalizing each connected block of the
// sparsity pattern separately. Eigenvalues below 1e-14 are dropped; one below
// -1e-10 throws InvalidArgument.
double vn_entropy_fock(const FockDensityMatrix& rho);

struct AttenuationOracle {
  double h_in = 0.0;
  double h_out = 0.0;
  double h_exch = 0.0;
};

// Input, output and exchange entropies (nats) for an elementary input with
// mean photon number n through the attenuator k in (0, 1].
AttenuationOracle attenuation_oracle(double n, double k, int dim);

}  // namespace gaussq::fock
