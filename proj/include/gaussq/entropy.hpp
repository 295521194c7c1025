#pragma once

// Von Neumann entropy of Gaussian states from the spectrum of Δ⁻¹α.

#include <functional>
#include <vector>

#include "gaussq/symplectic.hpp"

namespace gaussq {

enum class LogBase { nats, bits };

struct EntropyValue {
  double nats = 0.0;
  LogBase base = LogBase::nats;

  // The value in `base` units.
  double value() const;
  EntropyValue in(LogBase b) const { return {nats, b}; }
};

// Converts a quantity held in nats to `base`.
double convert_nats(double nats, LogBase base);

// Tolerances shared by the eigenvalue routines.
inline constexpr double kPairTol = 1e-8;       // relative to the spectral radius
inline constexpr double kClampTol = 1e-8;      // a_j in [1/2 - tol, 1/2] -> 1/2
inline constexpr double kConditionGuard = 1e8;

// g(x) = (x+1)log(x+1) - x log x, with g(0) = 0.
double g(double x);

// G(a²) = (a + 1/2)log(a + 1/2) - (a - 1/2)log(a - 1/2), evaluated directly
// from that expression.
double big_g(double a_sq);

// M = T diag(λ) T⁻¹ for a diagonalizable M.
struct Eigendecomposition {
  CVector values;
  CMatrix vectors;
  double condition = 1.0;  // 2-norm condition number of `vectors`
};

// Eigenvalues closer than kPairTol * spectral radius are treated as one
// cluster whose eigenspace is the numerical null space of (M - λI). Throws
// NumericalFailure for defective clusters or when the basis condition number
// exceeds kConditionGuard.
Eigendecomposition diagonalize(const CMatrix& m);

// T diag(f(λ_j)) T⁻¹.
CMatrix spectral_function(const Eigendecomposition& eig, const std::function<Complex(Complex)>& f);

// abs M = T diag(|λ_j|) T⁻¹.
CMatrix abs_matrix(const CMatrix& m);
// Real input with conjugate-paired spectrum; the result is real.
Matrix abs_matrix(const Matrix& m);

struct SymplecticSpectrum {
  std::vector<double> values;  // a_j, descending, each >= 1/2
};

// The s moduli a_j of the eigenvalues ±i a_j of Δ⁻¹α.
SymplecticSpectrum symplectic_spectrum(const GaussianState& state);
SymplecticSpectrum symplectic_spectrum(const Matrix& delta_inv_alpha);

// Σ g(a_j - 1/2).
EntropyValue entropy(const GaussianState& state);

// ½ Sp g(abs(Δ⁻¹α) - I/2), through the abs matrix. Nats.
double entropy_abs_formula(const GaussianState& state);
// ½ Sp G(-(Δ⁻¹α)²). Nats.
double entropy_big_g_formula(const GaussianState& state);
// Sp g(N) for a gauge-invariant state with mode matrix N. Nats.
double gauge_invariant_entropy(const ComplexModeMatrix& n);

}  // namespace gaussq
