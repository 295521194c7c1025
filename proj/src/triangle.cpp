#include "gaussq/triangle.hpp"

#include <cmath>
#include <sstream>

#include "gaussq/errors.hpp"

namespace gaussq {

InfoTriangle InfoTriangle::in(LogBase b) const {
  InfoTriangle t = *this;
  t.base = b;
  t.h_in.base = t.h_out.base = t.h_exch.base = b;
  return t;
}

InfoTriangle make_triangle(double h_in, double h_out, double h_exch) {
  InfoTriangle t;
  t.h_in = {h_in, LogBase::nats};
  t.h_out = {h_out, LogBase::nats};
  t.h_exch = {h_exch, LogBase::nats};
  t.mutual_i = h_in + h_out - h_exch;
  t.loss = h_in + h_exch - h_out;
  t.noise = h_out + h_exch - h_in;
  t.coherent = h_out - h_exch;
  return t;
}

InfoTriangle triangle(double n, double k, double hbar) {
  const GaussianState input = elementary_state(n, hbar);
  const GaussianChannel ch(k);
  return make_triangle(entropy(input).nats, output_entropy(ch, input).nats,
                       entropy_exchange(ch, input).nats);
}

double mutual_correlation(const BipartiteGaussianState& bi) {
  return entropy(partial_state(bi, 1)).nats + entropy(partial_state(bi, 2)).nats -
         entropy(bi.joint()).nats;
}

double coherent_zero_crossing(double n, double tol) {
  if (!(n > 0.0) || !std::isfinite(n))
    throw InvalidArgument("coherent_zero_crossing needs a positive mean photon number");
  auto coherent = [n](double k) { return triangle(n, k).coherent; };

  double lo = 1e-6, hi = 1.0 - 1e-6;
  double f_lo = coherent(lo), f_hi = coherent(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    std::ostringstream msg;
    msg << "no sign change of the coherent information on [" << lo << ", " << hi << "]";
    throw NumericalFailure(msg.str());
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = coherent(mid);
    if (f_mid == 0.0) return mid;
    (f_mid < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace gaussq
