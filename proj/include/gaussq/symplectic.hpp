#pragma once

// Gaussian state data: commutation matrix, correlation matrix, mean, the
// real <-> complex mode representation and the quantum characteristic
// function.
//
// Canonical vectors are ordered R = [q_1..q_s; p_1..p_s], so every 2s x 2s
// matrix is a 2 x 2 arrangement of s x s blocks.

#include <complex>

#include <Eigen/Dense>

namespace gaussq {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Absolute tolerance for accepting and symmetrizing slightly asymmetric input.
inline constexpr double kSymmetryTol = 1e-10;
// Residual bound for the purity criterion (Δ⁻¹α)² = -I/4.
inline constexpr double kPurityTol = 1e-8;

// Uncertainty-validation tolerance; scales with the size of α.
double psd_tolerance(const Matrix& alpha);

class CommutationContext {
 public:
  // Canonical Δ = [[0, ħI], [-ħI, 0]].
  static CommutationContext canonical(int s, double hbar = 1.0);
  // Arbitrary skew-symmetric invertible Δ (e.g. -Δ for a reference system,
  // or the block-diagonal Δ₁₂ of a bipartite system).
  static CommutationContext from_matrix(const Matrix& delta, double hbar);

  int s() const { return s_; }
  int dim() const { return 2 * s_; }
  double hbar() const { return hbar_; }
  const Matrix& delta() const { return delta_; }
  const Matrix& delta_inverse() const { return delta_inv_; }

  // The same system with Δ replaced by -Δ.
  CommutationContext conjugate() const;

 private:
  CommutationContext(int s, double hbar, Matrix delta);

  int s_;
  double hbar_;
  Matrix delta_;
  Matrix delta_inv_;
};

inline CommutationContext make_context(int s, double hbar = 1.0) {
  return CommutationContext::canonical(s, hbar);
}

class GaussianState {
 public:
  const CommutationContext& ctx() const { return ctx_; }
  int s() const { return ctx_.s(); }
  const Vector& mean() const { return m_; }
  const Matrix& alpha() const { return alpha_; }

  // Δ⁻¹α, the dimensionless matrix every entropy formula is built on.
  Matrix delta_inv_alpha() const { return ctx_.delta_inverse() * alpha_; }

 private:
  friend GaussianState make_gaussian_state(const CommutationContext&, const Vector&,
                                           const Matrix&);
  friend GaussianState make_state_unchecked(const CommutationContext&, Vector, Matrix);
  GaussianState(CommutationContext ctx, Vector m, Matrix alpha)
      : ctx_(std::move(ctx)), m_(std::move(m)), alpha_(std::move(alpha)) {}

  CommutationContext ctx_;
  Vector m_;
  Matrix alpha_;
};

// Validates symmetry and α - (i/2)Δ >= 0. Throws InvalidArgument on shape or
// asymmetry problems and InvalidState on an uncertainty violation.
GaussianState make_gaussian_state(const CommutationContext& ctx, const Vector& m,
                                  const Matrix& alpha);

// Skips validation; alpha must already be exactly symmetric. Used where the
// matrix is known valid by construction (partial states, channel outputs).
GaussianState make_state_unchecked(const CommutationContext& ctx, Vector m, Matrix alpha);

// Smallest eigenvalue of the Hermitian matrix α - (i/2)Δ.
double uncertainty_margin(const Matrix& alpha, const Matrix& delta);

// Smallest eigenvalue of Δ⁻¹α(Δ⁻¹)ᵀ - α⁻¹/4, the matrix Heisenberg
// uncertainty relation; nonnegative exactly for valid, invertible α.
double heisenberg_margin(const Matrix& alpha, const Matrix& delta);

// ‖(Δ⁻¹α)² + I/4‖_∞ (max-abs entry).
double purity_residual(const GaussianState& state);
bool is_pure(const GaussianState& state, double tol = kPurityTol);

// An s x s complex matrix standing for a 2s x 2s real matrix [[A, -B], [B, A]].
struct ComplexModeMatrix {
  CMatrix data;
  int s() const { return static_cast<int>(data.rows()); }
};

// State with m = 0 and α = ħ[[ReN + I/2, -ImN], [ImN, ReN + I/2]].
// N must be Hermitian positive semidefinite.
GaussianState gauge_invariant_state(const CommutationContext& ctx, const ComplexModeMatrix& n);

// Elementary one-mode state with mean photon number n: α = ħ(n + 1/2)I.
GaussianState elementary_state(double n, double hbar = 1.0);

ComplexModeMatrix real_to_complex(const Matrix& m, double tol = 1e-10);
Matrix complex_to_real(const ComplexModeMatrix& c);

// exp(i mᵀz - zᵀαz / 2)
Complex characteristic_function(const GaussianState& state, const Vector& z);

}  // namespace gaussq
