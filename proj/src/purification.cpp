#include "gaussq/purification.hpp"

#include <cmath>
#include <sstream>

#include "gaussq/entropy.hpp"
#include "gaussq/errors.hpp"

namespace gaussq {

namespace {

CommutationContext make_ctx12(const CommutationContext& side) {
  const int d = side.dim();
  Matrix delta12 = Matrix::Zero(2 * d, 2 * d);
  delta12.topLeftCorner(d, d) = side.delta();
  delta12.bottomRightCorner(d, d) = -side.delta();
  return CommutationContext::from_matrix(delta12, side.hbar());
}

template <typename M>
M sqrt_psd_impl(const M& m, double tol) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix_sqrt_psd needs a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) {
    std::ostringstream msg;
    msg << "matrix_sqrt_psd: operand is not symmetric (max deviation " << asym << ")";
    throw InvalidArgument(msg.str());
  }
  const M h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<M> es(h);
  auto ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -tol * scale) {
      std::ostringstream msg;
      msg << "matrix_sqrt_psd: negative eigenvalue " << ev[i];
      throw InvalidArgument(msg.str());
    }
    ev[i] = std::sqrt(std::max(ev[i], 0.0));
  }
  const auto& v = es.eigenvectors();
  return v * ev.asDiagonal() * v.adjoint();
}

}  // namespace

BipartiteGaussianState::BipartiteGaussianState(const CommutationContext& side, Matrix alpha12)
    : side_(side), ctx12_(make_ctx12(side)) {
  const int d = ctx12_.dim();
  alpha12_ = make_gaussian_state(ctx12_, Vector::Zero(d), alpha12).alpha();
}

GaussianState BipartiteGaussianState::joint() const {
  return make_state_unchecked(ctx12_, Vector::Zero(ctx12_.dim()), alpha12_);
}

Matrix matrix_sqrt_psd(const Matrix& m, double tol) { return sqrt_psd_impl(m, tol); }

CMatrix matrix_sqrt_psd(const CMatrix& m, double tol) { return sqrt_psd_impl(m, tol); }

BipartiteGaussianState purify(const GaussianState& state) {
  if (state.mean().cwiseAbs().maxCoeff() != 0.0)
    throw UnsupportedInput("purification requires a zero-mean state");

  const int d = state.ctx().dim();
  const Matrix m = state.delta_inv_alpha();
  const Matrix x = -(m * m) - 0.25 * Matrix::Identity(d, d);
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());

  Matrix root;
  if ((x - x.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTol * scale) {
    try {
      root = matrix_sqrt_psd(x);
    } catch (const InvalidArgument& e) {
      throw InvalidState(std::string("purification: ") + e.what());
    }
  } else {
    // X = f(Δ⁻¹α) with f(±ia) = √(a² - 1/4); take the root in that eigenbasis.
    const Eigendecomposition eig = diagonalize(CMatrix(m.cast<Complex>()));
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      if (std::abs(eig.values[i]) < 0.5 - kClampTol)
        throw InvalidState("purification: symplectic eigenvalue below 1/2");
    }
    const CMatrix c = spectral_function(eig, [](Complex z) {
      return Complex(std::sqrt(std::max(std::norm(z) - 0.25, 0.0)), 0.0);
    });
    if (c.imag().cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, c.cwiseAbs().maxCoeff()))
      throw NumericalFailure("purification: square root of X is not real");
    root = c.real();
  }

  const Matrix cross = state.ctx().delta() * root;
  Matrix alpha12(2 * d, 2 * d);
  alpha12 << state.alpha(), cross, -cross, state.alpha();

  const double asym = (alpha12 - alpha12.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9 * std::max(1.0, alpha12.cwiseAbs().maxCoeff())) {
    std::ostringstream msg;
    msg << "purification: alpha12 is not symmetric (max deviation " << asym << ")";
    throw NumericalFailure(msg.str());
  }
  // Symmetrize the cross blocks only so the diagonal blocks stay bit-identical to α.
  const Matrix c_sym = 0.5 * (cross - cross.transpose());
  alpha12.topRightCorner(d, d) = c_sym;
  alpha12.bottomLeftCorner(d, d) = -c_sym;
  return BipartiteGaussianState(state.ctx(), std::move(alpha12));
}

GaussianState partial_state(const BipartiteGaussianState& bi, int side) {
  const int d = bi.side_ctx().dim();
  if (side == 1)
    return make_state_unchecked(bi.side_ctx(), Vector::Zero(d), bi.alpha12().topLeftCorner(d, d));
  if (side == 2)
    return make_state_unchecked(bi.side_ctx().conjugate(), Vector::Zero(d),
                                bi.alpha12().bottomRightCorner(d, d));
  throw InvalidArgument("side must be 1 or 2");
}

CMatrix complex_block_form(const BipartiteGaussianState& bi, double tol) {
  const int d = bi.side_ctx().dim();
  const int s = bi.s();
  const Matrix k = bi.ctx12().delta_inverse() * bi.alpha12();
  CMatrix out(2 * s, 2 * s);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.block(r * s, c * s, s, s) = real_to_complex(k.block(r * d, c * d, d, d), tol).data;
  return out;
}

}  // namespace gaussq
