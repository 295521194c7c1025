#include "gaussq/fock.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "gaussq/errors.hpp"

namespace gaussq::fock {

namespace {

using Triplet = Eigen::Triplet<Complex>;

void check_photon_number(double n, int dim) {
  if (!(n >= 0.0) || !std::isfinite(n)) throw InvalidArgument("mean photon number must be >= 0");
  if (dim < 2) throw InvalidArgument("Fock truncation dim must be >= 2");
}

double deficit_or_throw(double n, int dim, double max_deficit) {
  const double deficit = std::pow(n / (n + 1.0), dim);
  if (deficit > max_deficit) {
    std::ostringstream msg;
    msg << "truncation dim=" << dim << " loses mass " << deficit << " > " << max_deficit
        << " for N=" << n;
    throw TruncationError(msg.str());
  }
  return deficit;
}

std::vector<double> thermal_weights(double n, int dim) {
  std::vector<double> p(dim);
  const double ratio = n / (n + 1.0);
  p[0] = 1.0 / (n + 1.0);
  for (int i = 1; i < dim; ++i) p[i] = p[i - 1] * ratio;
  return p;
}

// Union-find over basis indices.
struct Components {
  std::vector<int> parent;
  explicit Components(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

double FockDensityMatrix::trace() const {
  double t = 0.0;
  for (int k = 0; k < data.outerSize(); ++k)
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(data, k); it; ++it)
      if (it.row() == it.col()) t += it.value().real();
  return t;
}

FockDensityMatrix thermal_fock(double n, int dim, double max_deficit) {
  check_photon_number(n, dim);
  FockDensityMatrix rho;
  rho.dim = dim;
  rho.modes = 1;
  rho.trace_deficit = deficit_or_throw(n, dim, max_deficit);
  const auto p = thermal_weights(n, dim);
  std::vector<Triplet> t;
  for (int i = 0; i < dim; ++i)
    if (p[i] != 0.0) t.emplace_back(i, i, p[i]);
  rho.data.resize(dim, dim);
  rho.data.setFromTriplets(t.begin(), t.end());
  return rho;
}

FockDensityMatrix tmsv_fock(double n, int dim, double max_deficit) {
  check_photon_number(n, dim);
  FockDensityMatrix rho;
  rho.dim = dim;
  rho.modes = 2;
  rho.trace_deficit = deficit_or_throw(n, dim, max_deficit);
  const auto p = thermal_weights(n, dim);
  std::vector<Triplet> t;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const double v = std::sqrt(p[a] * p[b]);
      if (v != 0.0) t.emplace_back(a * dim + a, b * dim + b, v);
    }
  }
  rho.data.resize(dim * dim, dim * dim);
  rho.data.setFromTriplets(t.begin(), t.end());
  return rho;
}

std::vector<Matrix> beamsplitter_sectors(double k, int dim) {
  if (!(k > 0.0 && k <= 1.0)) throw InvalidArgument("beamsplitter transmissivity must be in (0, 1]");
  if (dim < 1) throw InvalidArgument("Fock truncation dim must be >= 1");
  const double theta = std::acos(k);
  std::vector<Matrix> sectors;
  sectors.reserve(dim);
  for (int n = 0; n < dim; ++n) {
    Matrix gen = Matrix::Zero(n + 1, n + 1);
    for (int j = 0; j < n; ++j) {
      // a†b |j, n-j⟩ = √((j+1)(n-j)) |j+1, n-j-1⟩
      const double amp = theta * std::sqrt(static_cast<double>((j + 1) * (n - j)));
      gen(j + 1, j) += amp;
      gen(j, j + 1) -= amp;
    }
    Matrix u = gen.exp();
    const double dev =
        (u.transpose() * u - Matrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff();
    if (dev > 1e-9) {
      std::ostringstream msg;
      msg << "beamsplitter sector " << n << " deviates from unitarity by " << dev;
      throw NumericalFailure(msg.str());
    }
    sectors.push_back(std::move(u));
  }
  return sectors;
}

FockDensityMatrix beamsplitter_attenuate(const FockDensityMatrix& rho12, double k) {
  if (rho12.modes != 2) throw InvalidArgument("beamsplitter_attenuate needs a two-mode state");
  const int dim = rho12.dim;

  // Top-level population of either mode signals that the truncation clips the state.
  for (int mode = 0; mode < 2; ++mode) {
    const FockDensityMatrix r = reduce(rho12, mode);
    const double top = r.data.coeff(dim - 1, dim - 1).real();
    if (top > 1e-8) {
      std::ostringstream msg;
      msg << "top Fock level of mode " << mode << " holds population " << top << " > 1e-8";
      throw TruncationError(msg.str());
    }
  }

  const auto sectors = beamsplitter_sectors(k, dim);
  // Kraus element K_m |n⟩ = ⟨n-m, m| U |n, 0⟩ |n-m⟩; the column of |n, 0⟩ is j = n.
  auto kraus = [&](int m, int n) { return sectors[n](n - m, n); };

  std::vector<Triplet> t;
  for (int outer = 0; outer < rho12.data.outerSize(); ++outer) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(rho12.data, outer); it; ++it) {
      const int a = static_cast<int>(it.row()) / dim, r = static_cast<int>(it.row()) % dim;
      const int b = static_cast<int>(it.col()) / dim, rp = static_cast<int>(it.col()) % dim;
      for (int m = 0; m <= std::min(a, b); ++m) {
        const Complex v = kraus(m, a) * it.value() * kraus(m, b);
        t.emplace_back((a - m) * dim + r, (b - m) * dim + rp, v);
      }
    }
  }
  FockDensityMatrix out;
  out.dim = dim;
  out.modes = 2;
  out.trace_deficit = rho12.trace_deficit;
  out.data.resize(dim * dim, dim * dim);
  out.data.setFromTriplets(t.begin(), t.end());
  return out;
}

FockDensityMatrix reduce(const FockDensityMatrix& rho, int keep_mode) {
  if (rho.modes != 2) throw InvalidArgument("reduce needs a two-mode state");
  if (keep_mode != 0 && keep_mode != 1) throw InvalidArgument("keep_mode must be 0 or 1");
  const int dim = rho.dim;
  std::vector<Triplet> t;
  for (int outer = 0; outer < rho.data.outerSize(); ++outer) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(rho.data, outer); it; ++it) {
      const int a = static_cast<int>(it.row()) / dim, r = static_cast<int>(it.row()) % dim;
      const int b = static_cast<int>(it.col()) / dim, rp = static_cast<int>(it.col()) % dim;
      if (keep_mode == 0 && r == rp) t.emplace_back(a, b, it.value());
      if (keep_mode == 1 && a == b) t.emplace_back(r, rp, it.value());
    }
  }
  FockDensityMatrix out;
  out.dim = dim;
  out.modes = 1;
  out.trace_deficit = rho.trace_deficit;
  out.data.resize(dim, dim);
  out.data.setFromTriplets(t.begin(), t.end());
  return out;
}

double vn_entropy_fock(const FockDensityMatrix& rho) {
  const int size = static_cast<int>(rho.data.rows());
  if (rho.data.cols() != size) throw InvalidArgument("density matrix must be square");

  Components comp(size);
  double scale = 0.0;
  for (int outer = 0; outer < rho.data.outerSize(); ++outer) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(rho.data, outer); it; ++it) {
      if (it.value() == Complex(0.0, 0.0)) continue;
      comp.unite(static_cast<int>(it.row()), static_cast<int>(it.col()));
      scale = std::max(scale, std::abs(it.value()));
    }
  }

  std::vector<std::vector<int>> blocks(size);
  for (int i = 0; i < size; ++i) blocks[comp.find(i)].push_back(i);
  std::vector<int> local(size, -1);
  for (const auto& members : blocks)
    for (std::size_t j = 0; j < members.size(); ++j) local[members[j]] = static_cast<int>(j);

  std::vector<CMatrix> dense(size);
  for (int i = 0; i < size; ++i) {
    const auto& members = blocks[i];
    if (!members.empty()) {
      const auto m = static_cast<Eigen::Index>(members.size());
      dense[i] = CMatrix::Zero(m, m);
    }
  }
  for (int outer = 0; outer < rho.data.outerSize(); ++outer) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(rho.data, outer); it; ++it) {
      if (it.value() == Complex(0.0, 0.0)) continue;
      const int root = comp.find(static_cast<int>(it.row()));
      dense[root](local[it.row()], local[it.col()]) += it.value();
    }
  }

  double h = 0.0;
  for (int i = 0; i < size; ++i) {
    if (blocks[i].empty()) continue;
    const CMatrix& blk = dense[i];
    if (blk.size() == 1 && blk(0, 0) == Complex(0.0, 0.0)) continue;
    const double herm = (blk - blk.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12 * std::max(1.0, scale))
      throw InvalidArgument("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (blk + blk.adjoint()), Eigen::EigenvaluesOnly);
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      const double lambda = es.eigenvalues()[j];
      if (lambda < -1e-10) {
        std::ostringstream msg;
        msg << "density matrix has negative eigenvalue " << lambda;
        throw InvalidArgument(msg.str());
      }
      if (lambda >= 1e-14) h -= lambda * std::log(lambda);
    }
  }
  return h;
}

AttenuationOracle attenuation_oracle(double n, double k, int dim) {
  const FockDensityMatrix rho12 = tmsv_fock(n, dim);
  const FockDensityMatrix out = beamsplitter_attenuate(rho12, k);
  AttenuationOracle r;
  r.h_in = vn_entropy_fock(reduce(rho12, 0));
  r.h_out = vn_entropy_fock(reduce(out, 0));
  r.h_exch = vn_entropy_fock(out);
  return r;
}

}  // namespace gaussq::fock
