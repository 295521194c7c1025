#pragma once

// Gaussian purification ρ₁₂ of a zero-mean Gaussian state, with the
// reference system carrying the conjugate commutation matrix -Δ.

#include "gaussq/symplectic.hpp"

namespace gaussq {

class BipartiteGaussianState {
 public:
  // Validates alpha12 against Δ₁₂ = blockdiag(Δ, -Δ) where Δ comes from `side`.
  BipartiteGaussianState(const CommutationContext& side, Matrix alpha12);

  int s() const { return side_.s(); }
  const CommutationContext& side_ctx() const { return side_; }
  const CommutationContext& ctx12() const { return ctx12_; }
  const Matrix& alpha12() const { return alpha12_; }

  // The whole 4s x 4s system as a single Gaussian state over Δ₁₂.
  GaussianState joint() const;

 private:
  CommutationContext side_;
  CommutationContext ctx12_;
  Matrix alpha12_;
};

// α₁₂ = [[α, Δ√X], [-Δ√X, α]] with X = -(Δ⁻¹α)² - I/4.
// Throws UnsupportedInput for a nonzero mean, InvalidState when X has a
// negative eigenvalue beyond tolerance.
BipartiteGaussianState purify(const GaussianState& state);

// side 1: the system block over Δ; side 2: the reference block over -Δ.
GaussianState partial_state(const BipartiteGaussianState& bi, int side);

// Principal square root of a symmetric / Hermitian PSD matrix. Eigenvalues in
// [-tol * max(1, ‖M‖), 0) are clamped to zero; anything more negative throws
// InvalidArgument.
Matrix matrix_sqrt_psd(const Matrix& m, double tol = 1e-9);
CMatrix matrix_sqrt_psd(const CMatrix& m, double tol = 1e-9);

// Δ₁₂⁻¹α₁₂ written block-by-block in the complex mode representation: a
// 2s x 2s complex matrix. For a one-mode gauge-invariant input this is
// [[i(N+½), √(N²+N)], [√(N²+N), -i(N+½)]].
CMatrix complex_block_form(const BipartiteGaussianState& bi, double tol = 1e-9);

}  // namespace gaussq
