#include "gaussq/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gaussq/errors.hpp"

namespace gaussq {

namespace {

// x log x with the 0 log 0 = 0 convention.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double spectral_radius(const CVector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

}  // namespace

double convert_nats(double nats, LogBase base) {
  return base == LogBase::bits ? nats / std::numbers::ln2 : nats;
}

double EntropyValue::value() const { return convert_nats(nats, base); }

double g(double x) {
  if (!(x >= 0.0)) {
    std::ostringstream msg;
    msg << "g(x) requires x >= 0, got " << x;
    throw InvalidArgument(msg.str());
  }
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;
  // (x+1)log(x+1) - x log x = log(1+x) + x log(1 + 1/x); no cancellation.
  if (x < 1e-200) return x * (1.0 - std::log(x));
  return std::log1p(x) + x * std::log1p(1.0 / x);
}

double big_g(double a_sq) {
  if (!(a_sq >= 0.25 - kClampTol)) {
    std::ostringstream msg;
    msg << "G(a^2) requires a^2 >= 1/4, got " << a_sq;
    throw InvalidArgument(msg.str());
  }
  const double a = std::sqrt(std::max(a_sq, 0.25));
  return xlogx(a + 0.5) - xlogx(a - 0.5);
}

Eigendecomposition diagonalize(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("diagonalize needs a square matrix");
  const Eigen::Index n = m.rows();
  Eigendecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  if (n == 0) return out;

  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  if (es.info() != Eigen::Success) throw NumericalFailure("eigenvalue iteration did not converge");
  const CVector lambda = es.eigenvalues();
  const double radius = spectral_radius(lambda);
  const double cluster_tol = kPairTol * radius;
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  const double null_tol = 1e-6 * std::max(1.0, norm);

  std::vector<bool> used(n, false);
  Eigen::Index col = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (used[i]) continue;
    std::vector<Eigen::Index> members{i};
    used[i] = true;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!used[j] && std::abs(lambda[j] - lambda[i]) <= cluster_tol) {
        members.push_back(j);
        used[j] = true;
      }
    }
    Complex center(0.0, 0.0);
    for (auto idx : members) center += lambda[idx];
    center /= static_cast<double>(members.size());

    const auto k = static_cast<Eigen::Index>(members.size());
    const CMatrix shifted = m - center * CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
    const double worst = svd.singularValues()[n - k];
    if (worst > null_tol) {
      std::ostringstream msg;
      msg << "matrix is defective near eigenvalue " << center << " (null-space residual "
          << worst << ")";
      throw NumericalFailure(msg.str());
    }
    out.vectors.middleCols(col, k) = svd.matrixV().rightCols(k);
    out.values.segment(col, k).setConstant(center);
    col += k;
  }

  Eigen::JacobiSVD<CMatrix> svd_t(out.vectors);
  const auto& sv = svd_t.singularValues();
  out.condition = sv[n - 1] > 0.0 ? sv[0] / sv[n - 1] : std::numeric_limits<double>::infinity();
  if (!(out.condition <= kConditionGuard)) {
    std::ostringstream msg;
    msg << "eigenbasis is ill-conditioned (condition estimate " << out.condition << ")";
    throw NumericalFailure(msg.str());
  }
  return out;
}

CMatrix spectral_function(const Eigendecomposition& eig,
                          const std::function<Complex(Complex)>& f) {
  CVector fv(eig.values.size());
  for (Eigen::Index i = 0; i < fv.size(); ++i) fv[i] = f(eig.values[i]);
  const CMatrix inv = eig.vectors.fullPivLu().inverse();
  return eig.vectors * fv.asDiagonal() * inv;
}

CMatrix abs_matrix(const CMatrix& m) {
  return spectral_function(diagonalize(m), [](Complex z) { return Complex(std::abs(z), 0.0); });
}

Matrix abs_matrix(const Matrix& m) {
  const CMatrix c = abs_matrix(CMatrix(m.cast<Complex>()));
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if (c.imag().cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw NumericalFailure("abs of a real matrix came out complex; spectrum is not conjugate-paired");
  return c.real();
}

SymplecticSpectrum symplectic_spectrum(const Matrix& delta_inv_alpha) {
  const Eigen::Index d = delta_inv_alpha.rows();
  if (d != delta_inv_alpha.cols() || d == 0 || d % 2 != 0)
    throw InvalidArgument("symplectic spectrum needs a 2s x 2s matrix");
  Eigen::EigenSolver<Matrix> es(delta_inv_alpha, false);
  if (es.info() != Eigen::Success) throw NumericalFailure("eigenvalue iteration did not converge");
  const CVector ev = es.eigenvalues();
  const double tol = kPairTol * spectral_radius(ev);

  std::vector<double> upper, lower;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(ev[i].real()) > tol) {
      std::ostringstream msg;
      msg << "eigenvalue " << ev[i] << " of Delta^-1 alpha is not purely imaginary";
      throw NumericalFailure(msg.str());
    }
    (ev[i].imag() > 0.0 ? upper : lower).push_back(std::abs(ev[i].imag()));
  }
  if (upper.size() != lower.size())
    throw NumericalFailure("eigenvalues of Delta^-1 alpha are not paired as +-i a_j");
  std::sort(upper.begin(), upper.end(), std::greater<>());
  std::sort(lower.begin(), lower.end(), std::greater<>());

  SymplecticSpectrum out;
  for (std::size_t j = 0; j < upper.size(); ++j) {
    if (std::abs(upper[j] - lower[j]) > tol) {
      std::ostringstream msg;
      msg << "unpaired eigenvalues +i" << upper[j] << " / -i" << lower[j];
      throw NumericalFailure(msg.str());
    }
    double a = 0.5 * (upper[j] + lower[j]);
    if (a < 0.5 - kClampTol) {
      std::ostringstream msg;
      msg << "symplectic eigenvalue " << a << " is below 1/2";
      throw InvalidState(msg.str());
    }
    out.values.push_back(std::max(a, 0.5));
  }
  return out;
}

SymplecticSpectrum symplectic_spectrum(const GaussianState& state) {
  return symplectic_spectrum(state.delta_inv_alpha());
}

EntropyValue entropy(const GaussianState& state) {
  double h = 0.0;
  for (double a : symplectic_spectrum(state).values) h += g(a - 0.5);
  return {h, LogBase::nats};
}

double entropy_abs_formula(const GaussianState& state) {
  const Matrix abs_m = abs_matrix(state.delta_inv_alpha());
  const Eigen::Index d = abs_m.rows();
  const Matrix shifted = abs_m - 0.5 * Matrix::Identity(d, d);
  Eigen::EigenSolver<Matrix> es(shifted, false);
  double h = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    const double x = es.eigenvalues()[i].real();
    if (x < -kClampTol) throw InvalidState("abs(Delta^-1 alpha) has an eigenvalue below 1/2");
    h += g(std::max(x, 0.0));
  }
  return 0.5 * h;
}

double entropy_big_g_formula(const GaussianState& state) {
  const Matrix m = state.delta_inv_alpha();
  const Matrix sq = -(m * m);
  Eigen::EigenSolver<Matrix> es(sq, false);
  double h = 0.0;
  for (Eigen::Index i = 0; i < sq.rows(); ++i) h += big_g(es.eigenvalues()[i].real());
  return 0.5 * h;
}

double gauge_invariant_entropy(const ComplexModeMatrix& n) {
  const CMatrix h = 0.5 * (n.data + n.data.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  double out = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double x = es.eigenvalues()[i];
    if (x < -1e-9 * scale) throw InvalidArgument("mode matrix N has a negative eigenvalue");
    out += g(std::max(x, 0.0));
  }
  return out;
}

}  // namespace gaussq
