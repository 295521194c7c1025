#include "gaussq/symplectic.hpp"

#include <cmath>
#include <sstream>

#include "gaussq/errors.hpp"

namespace gaussq {

namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double inf_norm(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

double psd_tolerance(const Matrix& alpha) { return 1e-9 * (1.0 + inf_norm(alpha)); }

CommutationContext::CommutationContext(int s, double hbar, Matrix delta)
    : s_(s), hbar_(hbar), delta_(std::move(delta)) {
  delta_inv_ = delta_.inverse();
}

CommutationContext CommutationContext::canonical(int s, double hbar) {
  if (s < 1) throw InvalidArgument("mode count s must be >= 1");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidArgument("hbar must be positive");
  Matrix delta = Matrix::Zero(2 * s, 2 * s);
  delta.topRightCorner(s, s) = hbar * Matrix::Identity(s, s);
  delta.bottomLeftCorner(s, s) = -hbar * Matrix::Identity(s, s);
  CommutationContext ctx(s, hbar, std::move(delta));
  // Exact inverse of the canonical form; avoids LU rounding on ħ != 1.
  ctx.delta_inv_ = -ctx.delta_ / (hbar * hbar);
  return ctx;
}

CommutationContext CommutationContext::from_matrix(const Matrix& delta, double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidArgument("hbar must be positive");
  if (delta.rows() != delta.cols() || delta.rows() == 0 || delta.rows() % 2 != 0)
    throw InvalidArgument("commutation matrix must be square with even, nonzero dimension");
  if (!delta.allFinite()) throw InvalidArgument("commutation matrix has non-finite entries");
  const double skew = max_abs(delta + delta.transpose());
  if (skew > kSymmetryTol * std::max(1.0, max_abs(delta)))
    throw InvalidArgument("commutation matrix is not skew-symmetric");
  Eigen::FullPivLU<Matrix> lu(delta);
  if (!lu.isInvertible()) throw InvalidArgument("commutation matrix is singular");
  const Matrix skewed = 0.5 * (delta - delta.transpose());
  return CommutationContext(static_cast<int>(delta.rows() / 2), hbar, skewed);
}

CommutationContext CommutationContext::conjugate() const {
  CommutationContext ctx(*this);
  ctx.delta_ = -delta_;
  ctx.delta_inv_ = -delta_inv_;
  return ctx;
}

double uncertainty_margin(const Matrix& alpha, const Matrix& delta) {
  CMatrix h = alpha.cast<Complex>() - Complex(0.0, 0.5) * delta.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double heisenberg_margin(const Matrix& alpha, const Matrix& delta) {
  const Matrix di = delta.inverse();
  Matrix h = di * alpha * di.transpose() - 0.25 * alpha.inverse();
  h = 0.5 * (h + h.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

GaussianState make_gaussian_state(const CommutationContext& ctx, const Vector& m,
                                  const Matrix& alpha) {
  const int d = ctx.dim();
  if (alpha.rows() != d || alpha.cols() != d)
    throw InvalidArgument("correlation matrix must be 2s x 2s");
  if (m.size() != d) throw InvalidArgument("mean vector must have length 2s");
  if (!alpha.allFinite() || !m.allFinite())
    throw InvalidArgument("state data has non-finite entries");

  const double asym = max_abs(alpha - alpha.transpose());
  if (asym > kSymmetryTol * std::max(1.0, max_abs(alpha))) {
    std::ostringstream msg;
    msg << "correlation matrix is not symmetric (max deviation " << asym << ")";
    throw InvalidArgument(msg.str());
  }
  Matrix sym = 0.5 * (alpha + alpha.transpose());

  const double margin = uncertainty_margin(sym, ctx.delta());
  if (margin < -psd_tolerance(sym)) {
    std::ostringstream msg;
    msg << "uncertainty relation violated: min eigenvalue of alpha - (i/2)Delta is " << margin;
    throw InvalidState(msg.str());
  }
  return GaussianState(ctx, m, std::move(sym));
}

GaussianState make_state_unchecked(const CommutationContext& ctx, Vector m, Matrix alpha) {
  return GaussianState(ctx, std::move(m), std::move(alpha));
}

double purity_residual(const GaussianState& state) {
  const Matrix da = state.delta_inv_alpha();
  const Matrix r = da * da + 0.25 * Matrix::Identity(da.rows(), da.cols());
  return max_abs(r);
}

bool is_pure(const GaussianState& state, double tol) { return purity_residual(state) <= tol; }

GaussianState gauge_invariant_state(const CommutationContext& ctx, const ComplexModeMatrix& n) {
  const int s = ctx.s();
  if (n.data.rows() != s || n.data.cols() != s)
    throw InvalidArgument("mode matrix N must be s x s");
  if (!n.data.allFinite()) throw InvalidArgument("mode matrix N has non-finite entries");

  const double scale = std::max(1.0, n.data.cwiseAbs().maxCoeff());
  const double herm = (n.data - n.data.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kSymmetryTol * scale) {
    std::ostringstream msg;
    msg << "mode matrix N is not Hermitian (max deviation " << herm << ")";
    throw InvalidArgument(msg.str());
  }
  const CMatrix h = 0.5 * (n.data + n.data.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-9 * scale) {
    std::ostringstream msg;
    msg << "mode matrix N has negative eigenvalue " << min_eig;
    throw InvalidArgument(msg.str());
  }

  const Matrix re = h.real();
  const Matrix im = h.imag();
  const Matrix diag = re + 0.5 * Matrix::Identity(s, s);
  Matrix alpha(2 * s, 2 * s);
  alpha << diag, -im, im, diag;
  alpha *= ctx.hbar();
  return make_gaussian_state(ctx, Vector::Zero(2 * s), alpha);
}

GaussianState elementary_state(double n, double hbar) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw InvalidArgument("mean photon number must be >= 0");
  const auto ctx = CommutationContext::canonical(1, hbar);
  return make_gaussian_state(ctx, Vector::Zero(2), hbar * (n + 0.5) * Matrix::Identity(2, 2));
}

ComplexModeMatrix real_to_complex(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
    throw InvalidArgument("real_to_complex needs a square matrix of even dimension");
  const int s = static_cast<int>(m.rows() / 2);
  const Matrix a1 = m.topLeftCorner(s, s);
  const Matrix a2 = m.bottomRightCorner(s, s);
  const Matrix minus_b = m.topRightCorner(s, s);
  const Matrix b = m.bottomLeftCorner(s, s);

  const double dev = std::max(max_abs(a1 - a2), max_abs(minus_b + b));
  if (dev > tol * std::max(1.0, max_abs(m))) {
    std::ostringstream msg;
    msg << "matrix lacks [[A, -B], [B, A]] block structure (max deviation " << dev << ")";
    throw InvalidArgument(msg.str());
  }
  ComplexModeMatrix out;
  out.data.resize(s, s);
  out.data.real() = 0.5 * (a1 + a2);
  out.data.imag() = 0.5 * (b - minus_b);
  return out;
}

Matrix complex_to_real(const ComplexModeMatrix& c) {
  const int s = c.s();
  const Matrix a = c.data.real();
  const Matrix b = c.data.imag();
  Matrix out(2 * s, 2 * s);
  out << a, -b, b, a;
  return out;
}

Complex characteristic_function(const GaussianState& state, const Vector& z) {
  if (z.size() != state.ctx().dim()) throw InvalidArgument("z must have length 2s");
  const double quad = z.dot(state.alpha() * z);
  const double phase = state.mean().dot(z);
  return std::exp(Complex(-0.5 * quad, phase));
}

}  // namespace gaussq
