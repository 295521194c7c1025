#include <doctest.h>

#include <random>

#include "gaussq/errors.hpp"
#include "gaussq/symplectic.hpp"
#include "oracles.hpp"

using namespace gaussq;
using doctest::Approx;

TEST_CASE("canonical commutation matrix") {
  SUBCASE("one mode") {
    const auto ctx = make_context(1, 1.0);
    Matrix expected(2, 2);
    expected << 0, 1, -1, 0;
    CHECK(ctx.delta() == expected);
  }
  SUBCASE("two modes") {
    const auto ctx = make_context(2, 1.0);
    const Matrix& d = ctx.delta();
    CHECK(d(0, 2) == 1.0);
    CHECK(d(1, 3) == 1.0);
    CHECK(d(2, 0) == -1.0);
    CHECK(d(3, 1) == -1.0);
    CHECK(d.cwiseAbs().sum() == 4.0);
  }
  SUBCASE("hbar scaling") {
    const auto ctx = make_context(1, 2.0);
    Matrix expected(2, 2);
    expected << 0, 2, -2, 0;
    CHECK(ctx.delta() == expected);
    CHECK(oracle::max_abs(ctx.delta() * ctx.delta_inverse() - Matrix::Identity(2, 2)) == 0.0);
  }
  SUBCASE("skew-symmetric and invertible for several sizes") {
    for (int s = 1; s <= 4; ++s) {
      const auto ctx = make_context(s, 0.7);
      CHECK(oracle::max_abs(ctx.delta() + ctx.delta().transpose()) == 0.0);
      CHECK(std::abs(ctx.delta().determinant()) > 0.0);
    }
  }
  SUBCASE("rejects bad arguments") {
    CHECK_THROWS_AS(make_context(0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(make_context(1, 0.0), InvalidArgument);
    CHECK_THROWS_AS(make_context(1, -1.0), InvalidArgument);
  }
  SUBCASE("from_matrix validates") {
    Matrix sym(2, 2);
    sym << 0, 1, 1, 0;
    CHECK_THROWS_AS(CommutationContext::from_matrix(sym, 1.0), InvalidArgument);
    CHECK_THROWS_AS(CommutationContext::from_matrix(Matrix::Zero(2, 2), 1.0), InvalidArgument);
    const auto conj = make_context(2).conjugate();
    CHECK(conj.delta() == -make_context(2).delta());
  }
}

TEST_CASE("make_gaussian_state validation") {
  const auto ctx = make_context(1);
  SUBCASE("vacuum sits on the boundary and validates") {
    const auto st = make_gaussian_state(ctx, Vector::Zero(2), 0.5 * Matrix::Identity(2, 2));
    CHECK(is_pure(st));
    CHECK(uncertainty_margin(st.alpha(), ctx.delta()) == Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("alpha = I/4 violates the uncertainty relation") {
    // Eigen-oracle for α - (i/2)Δ = [[1/4, -i/2], [i/2, 1/4]]: 1/4 ± 1/2.
    const auto [lo, hi] = oracle::hermitian2_eigenvalues(0.25, {0.0, -0.5}, 0.25);
    CHECK(lo == Approx(-0.25));
    CHECK(hi == Approx(0.75));
    CHECK(uncertainty_margin(0.25 * Matrix::Identity(2, 2), ctx.delta()) == Approx(lo));
    CHECK_THROWS_AS(make_gaussian_state(ctx, Vector::Zero(2), 0.25 * Matrix::Identity(2, 2)),
                    InvalidState);
    try {
      make_gaussian_state(ctx, Vector::Zero(2), 0.25 * Matrix::Identity(2, 2));
    } catch (const InvalidState& e) {
      CHECK(std::string(e.what()).find("-0.25") != std::string::npos);
    }
  }
  SUBCASE("elementary state N = 1") {
    const auto st = make_gaussian_state(ctx, Vector::Zero(2), 1.5 * Matrix::Identity(2, 2));
    CHECK_FALSE(is_pure(st));
  }
  SUBCASE("small asymmetry is symmetrized, large asymmetry rejected") {
    Matrix a = 1.5 * Matrix::Identity(2, 2);
    a(0, 1) = 1e-12;
    const auto st = make_gaussian_state(ctx, Vector::Zero(2), a);
    CHECK(st.alpha()(0, 1) == st.alpha()(1, 0));
    a(0, 1) = 1e-3;
    CHECK_THROWS_AS(make_gaussian_state(ctx, Vector::Zero(2), a), InvalidArgument);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(make_gaussian_state(ctx, Vector::Zero(3), Matrix::Identity(2, 2)),
                    InvalidArgument);
    CHECK_THROWS_AS(make_gaussian_state(ctx, Vector::Zero(2), Matrix::Identity(3, 3)),
                    InvalidArgument);
  }
}

TEST_CASE("gauge-invariant states") {
  SUBCASE("N = 0 is the vacuum") {
    const auto st = gauge_invariant_state(make_context(1, 2.0), {CMatrix::Zero(1, 1)});
    CHECK(oracle::max_abs(st.alpha() - Matrix::Identity(2, 2)) == 0.0);  // ħ/2 · I with ħ = 2
    CHECK(is_pure(st));
  }
  SUBCASE("N = 1") {
    CMatrix n(1, 1);
    n << 1.0;
    const auto st = gauge_invariant_state(make_context(1), {n});
    CHECK(oracle::max_abs(st.alpha() - 1.5 * Matrix::Identity(2, 2)) == 0.0);
  }
  SUBCASE("two modes with complex coupling: blocks assembled by hand") {
    CMatrix n(2, 2);
    n << Complex(1, 0), Complex(0, 0.5), Complex(0, -0.5), Complex(1, 0);
    const auto st = gauge_invariant_state(make_context(2), {n});
    Matrix expected(4, 4);
    // [[ReN + I/2, -ImN], [ImN, ReN + I/2]], ImN = [[0, 1/2], [-1/2, 0]]
    expected << 1.5, 0, 0, -0.5,
                0, 1.5, 0.5, 0,
                0, 0.5, 1.5, 0,
                -0.5, 0, 0, 1.5;
    CHECK(oracle::max_abs(st.alpha() - expected) == 0.0);
  }
  SUBCASE("rejects non-Hermitian or negative N") {
    CMatrix n(2, 2);
    n << 1, 0.5, 0, 1;
    CHECK_THROWS_AS(gauge_invariant_state(make_context(2), {n}), InvalidArgument);
    CMatrix neg(1, 1);
    neg << -0.1;
    CHECK_THROWS_AS(gauge_invariant_state(make_context(1), {neg}), InvalidArgument);
    CHECK_THROWS_AS(gauge_invariant_state(make_context(2), {CMatrix::Zero(1, 1)}),
                    InvalidArgument);
  }
}

TEST_CASE("real <-> complex correspondence") {
  SUBCASE("identity") {
    const auto c = real_to_complex(Matrix::Identity(2, 2));
    CHECK(c.data(0, 0) == Complex(1, 0));
    CHECK(complex_to_real(c) == Matrix::Identity(2, 2));
  }
  SUBCASE("Delta^-1 alpha of the N = 1 state is 1.5i") {
    const auto st = elementary_state(1.0);
    const auto c = real_to_complex(st.delta_inv_alpha());
    CHECK(c.data(0, 0).real() == Approx(0.0));
    CHECK(c.data(0, 0).imag() == Approx(1.5));
    Matrix expected(2, 2);
    expected << 0, -1.5, 1.5, 0;
    CHECK(oracle::max_abs(complex_to_real(c) - expected) == 0.0);
  }
  SUBCASE("pure B block") {
    Matrix m(2, 2);
    m << 0, -1, 1, 0;
    CHECK(real_to_complex(m).data(0, 0) == Complex(0, 1));
  }
  SUBCASE("Delta^-1 alpha <-> i(N + I/2) for a multi-mode gauge-invariant state") {
    std::mt19937_64 rng(7);
    const auto rnd = oracle::random_mode_matrix(3, 4.0, rng);
    const auto st = gauge_invariant_state(make_context(3, 1.3), rnd.n);
    const CMatrix expected = Complex(0, 1) * (rnd.n.data + 0.5 * CMatrix::Identity(3, 3));
    CHECK(oracle::max_abs(real_to_complex(st.delta_inv_alpha()).data - expected) < 1e-12);
    // ½ Sp [[A, -B], [B, A]] = Sp(A + iB); here Sp α / ħ over 2 = Sp(N + I/2).
    const Complex tr = real_to_complex(st.alpha() / 1.3).data.trace();
    CHECK(tr.real() == Approx(0.5 * st.alpha().trace() / 1.3));
  }
  SUBCASE("rejects matrices without the block structure") {
    Matrix m(2, 2);
    m << 1, 0, 0, 2;
    CHECK_THROWS_AS(real_to_complex(m), InvalidArgument);
    CHECK_THROWS_AS(real_to_complex(Matrix::Identity(3, 3)), InvalidArgument);
  }
}

TEST_CASE("correspondence is an algebra isomorphism (random property)") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 100; ++trial) {
    const int s = 1 + trial % 4;
    ComplexModeMatrix c1{CMatrix(s, s)}, c2{CMatrix(s, s)};
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        c1.data(i, j) = {nd(rng), nd(rng)};
        c2.data(i, j) = {nd(rng), nd(rng)};
      }
    const Matrix r1 = complex_to_real(c1), r2 = complex_to_real(c2);
    // Product and sum, with a direct real matrix multiply as the oracle.
    CHECK(oracle::max_abs(complex_to_real({c1.data * c2.data}) - r1 * r2) < 1e-12);
    CHECK(oracle::max_abs(complex_to_real({c1.data + c2.data}) - (r1 + r2)) < 1e-12);
    CHECK(oracle::max_abs(real_to_complex(r1 * r2).data - c1.data * c2.data) < 1e-12);
    // Round trip and half-trace.
    CHECK(oracle::max_abs(real_to_complex(r1).data - c1.data) == 0.0);
    CHECK(0.5 * r1.trace() == Approx(c1.data.trace().real()));
  }
}

TEST_CASE("characteristic function") {
  const auto st = elementary_state(1.0);
  Vector z0 = Vector::Zero(2);
  CHECK(characteristic_function(st, z0) == Complex(1.0, 0.0));

  Vector z(2);
  z << 1.0, 0.0;
  const Complex v = characteristic_function(st, z);
  CHECK(v.real() == Approx(std::exp(-0.75)));
  CHECK(v.imag() == Approx(0.0));

  Vector m(2);
  m << 1.0, 0.0;
  const auto shifted = make_gaussian_state(st.ctx(), m, st.alpha());
  const Complex w = characteristic_function(shifted, z);
  const Complex expected = std::exp(Complex(0, 1)) * std::exp(-0.75);
  CHECK(std::abs(w - expected) < 1e-15);

  CHECK_THROWS_AS(characteristic_function(st, Vector::Zero(3)), InvalidArgument);
}

TEST_CASE("characteristic function modulus bound (random property)") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    const int s = 1 + trial % 3;
    const auto rnd = oracle::random_mode_matrix(s, 3.0, rng);
    const auto base = gauge_invariant_state(make_context(s), rnd.n);
    const Matrix sym = oracle::random_symplectic(s, rng);
    Vector m(2 * s);
    for (int i = 0; i < 2 * s; ++i) m[i] = nd(rng);
    const auto st = make_gaussian_state(base.ctx(), m, sym * base.alpha() * sym.transpose());
    Vector z(2 * s);
    for (int i = 0; i < 2 * s; ++i) z[i] = nd(rng);
    CHECK(std::abs(characteristic_function(st, z)) < 1.0);
    CHECK(std::abs(characteristic_function(st, Vector::Zero(2 * s))) == 1.0);
  }
}

TEST_CASE("uncertainty relation forms agree (random property)") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int s = 1 + trial % 3;
    const auto rnd = oracle::random_mode_matrix(s, 5.0, rng);
    // Keep clear of the boundary so α⁻¹ is well defined and the margin is strict.
    CMatrix n = rnd.n.data + 0.05 * CMatrix::Identity(s, s);
    const auto ctx = make_context(s, 0.5 + trial * 0.02);
    const auto base = gauge_invariant_state(ctx, {n});
    const Matrix sym = oracle::random_symplectic(s, rng);
    const auto st = make_gaussian_state(ctx, Vector::Zero(2 * s), sym * base.alpha() * sym.transpose());

    // α - (i/2)Δ ⪰ 0 and its transpose α + (i/2)Δ ⪰ 0.
    CHECK(uncertainty_margin(st.alpha(), ctx.delta()) > 0.0);
    CHECK(uncertainty_margin(st.alpha(), -ctx.delta()) > 0.0);

    // Heisenberg form Δ⁻¹α(Δ⁻¹)ᵀ - ¼α⁻¹ ⪰ 0. Written with Δ⁻¹ untransposed the
    // same matrix is negated, since Δ⁻¹ is antisymmetric.
    CHECK(heisenberg_margin(st.alpha(), ctx.delta()) >= -1e-9 * (1.0 + st.alpha().norm()));
    const Matrix& di = ctx.delta_inverse();
    Matrix h = di * st.alpha() * di + 0.25 * st.alpha().inverse();
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    CHECK(es.eigenvalues().maxCoeff() <= 1e-9 * (1.0 + h.norm()));
  }
}

TEST_CASE("Heisenberg margin is zero for pure states and negative for violations") {
  const auto ctx = make_context(1);
  CHECK(heisenberg_margin(0.5 * Matrix::Identity(2, 2), ctx.delta()) == Approx(0.0));
  // α = cI: margin c - 1/(4c)
  CHECK(heisenberg_margin(1.5 * Matrix::Identity(2, 2), ctx.delta()) == Approx(1.5 - 1.0 / 6.0));
  CHECK(heisenberg_margin(0.25 * Matrix::Identity(2, 2), ctx.delta()) < 0.0);
}

TEST_CASE("purity criterion") {
  CHECK(is_pure(elementary_state(0.0)));
  for (double n : {1e-3, 0.5, 1.0, 4.0}) CHECK_FALSE(is_pure(elementary_state(n)));

  // Squeezed vacua are pure.
  std::mt19937_64 rng(5);
  for (int s = 1; s <= 3; ++s) {
    const auto ctx = make_context(s, 1.7);
    const Matrix sym = oracle::random_symplectic(s, rng);
    const Matrix a = sym * (0.5 * 1.7 * Matrix::Identity(2 * s, 2 * s)) * sym.transpose();
    CHECK(is_pure(make_gaussian_state(ctx, Vector::Zero(2 * s), a)));
  }
}
