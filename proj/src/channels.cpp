#include "gaussq/channels.hpp"

#include <cmath>
#include <sstream>

#include "gaussq/errors.hpp"

namespace gaussq {

namespace {

void require_one_mode_zero_mean(const GaussianState& state) {
  if (state.s() != 1) throw UnsupportedInput("the channel acts on one mode only");
  if (state.mean().cwiseAbs().maxCoeff() != 0.0)
    throw UnsupportedInput("the channel is implemented for zero-mean states only");
}

void check_agreement(const char* what, double general, double closed) {
  if (std::abs(general - closed) > 1e-9 * std::max(1.0, std::abs(closed))) {
    std::ostringstream msg;
    msg << what << ": closed form " << closed << " disagrees with general route " << general;
    throw NumericalFailure(msg.str());
  }
}

}  // namespace

GaussianChannel::GaussianChannel(double k) : k_(k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    std::ostringstream msg;
    msg << "channel coefficient k must be positive and finite, got " << k;
    throw InvalidArgument(msg.str());
  }
  kind_ = k < 1.0 ? ChannelKind::attenuator
                  : (k > 1.0 ? ChannelKind::amplifier : ChannelKind::identity);
}

double GaussianChannel::output_photon_number(double n) const {
  const double k2 = k_ * k_;
  switch (kind_) {
    case ChannelKind::attenuator: return k2 * n;
    case ChannelKind::identity: return n;
    case ChannelKind::amplifier: return k2 * n + (k2 - 1.0);
  }
  return n;
}

double closed_form_output_entropy(double n, double k) {
  return g(GaussianChannel(k).output_photon_number(n));
}

double closed_form_exchange_entropy(double n, double k) {
  const GaussianChannel ch(k);
  const double k2 = k * k;
  switch (ch.kind()) {
    case ChannelKind::attenuator: return g((1.0 - k2) * n);
    case ChannelKind::identity: return 0.0;
    case ChannelKind::amplifier: return g((k2 - 1.0) * (n + 1.0));
  }
  return 0.0;
}

double elementary_photon_number(const GaussianState& state) {
  require_one_mode_zero_mean(state);
  const Matrix& a = state.alpha();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (std::abs(a(0, 1)) > 1e-12 * scale || std::abs(a(0, 0) - a(1, 1)) > 1e-12 * scale)
    throw UnsupportedInput("input is not an elementary (alpha proportional to I) state");
  const double n = 0.5 * (a(0, 0) + a(1, 1)) / state.ctx().hbar() - 0.5;
  return std::max(n, 0.0);
}

GaussianState apply(const GaussianChannel& ch, const GaussianState& state) {
  require_one_mode_zero_mean(state);
  const double k2 = ch.k() * ch.k();
  const double noise = 0.5 * state.ctx().hbar() * std::abs(1.0 - k2);
  Matrix out = k2 * state.alpha() + noise * Matrix::Identity(2, 2);
  return make_gaussian_state(state.ctx(), state.mean(), out);
}

ExtendedOutput extended_apply(const GaussianChannel& ch, const GaussianState& state) {
  elementary_photon_number(state);
  const BipartiteGaussianState bi = purify(state);
  const Matrix& a12 = bi.alpha12();
  Matrix out = a12;
  out.topLeftCorner(2, 2) = apply(ch, partial_state(bi, 1)).alpha();
  out.topRightCorner(2, 2) *= ch.k();
  out.bottomLeftCorner(2, 2) *= ch.k();
  BipartiteGaussianState bi_out(state.ctx(), std::move(out));
  CMatrix form = complex_block_form(bi_out);
  return {std::move(bi_out), std::move(form)};
}

ExchangeEigenvalues exchange_eigenvalues(const GaussianChannel& ch, const GaussianState& state) {
  const ExtendedOutput ext = extended_apply(ch, state);
  Eigen::ComplexEigenSolver<CMatrix> es(ext.complex_form, false);
  if (es.info() != Eigen::Success) throw NumericalFailure("2x2 eigenvalue iteration failed");
  Complex l1 = es.eigenvalues()[0];
  Complex l2 = es.eigenvalues()[1];
  if (std::abs(l2) < std::abs(l1)) std::swap(l1, l2);
  return {l1, l2};
}

EntropyValue entropy_exchange(const GaussianChannel& ch, const GaussianState& state) {
  const double n = elementary_photon_number(state);
  const ExchangeEigenvalues ev = exchange_eigenvalues(ch, state);
  const double m1 = std::abs(ev.lambda1);
  const double m2 = std::abs(ev.lambda2);
  if (std::abs(m1 - 0.5) > 1e-9 * std::max(1.0, m2)) {
    std::ostringstream msg;
    msg << "entropy exchange: |lambda1| = " << m1 << ", expected 1/2";
    throw NumericalFailure(msg.str());
  }
  const double via_eigen = g(std::max(m1 - 0.5, 0.0)) + g(std::max(m2 - 0.5, 0.0));
  const double closed = closed_form_exchange_entropy(n, ch.k());
  check_agreement("entropy exchange", via_eigen, closed);
  return {closed, LogBase::nats};
}

EntropyValue output_entropy(const GaussianChannel& ch, const GaussianState& state) {
  const GaussianState out = apply(ch, state);
  const double general = entropy(out).nats;
  double n = 0.0;
  try {
    n = elementary_photon_number(state);
  } catch (const UnsupportedInput&) {
    return {general, LogBase::nats};
  }
  const double closed = closed_form_output_entropy(n, ch.k());
  check_agreement("output entropy", general, closed);
  return {closed, LogBase::nats};
}

}  // namespace gaussq
