#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussq/channels.hpp"
#include "gaussq/cli.hpp"
#include "gaussq/entropy.hpp"
#include "gaussq/errors.hpp"
#include "gaussq/fock.hpp"
#include "gaussq/purification.hpp"
#include "gaussq/symplectic.hpp"
#include "gaussq/triangle.hpp"

namespace py = pybind11;
using namespace gaussq;

namespace {

LogBase base_of(bool bits) { return bits ? LogBase::bits : LogBase::nats; }

py::dict triangle_dict(const InfoTriangle& t) {
  py::dict d;
  d["h_in"] = t.h_in.in(t.base).value();
  d["h_out"] = t.h_out.in(t.base).value();
  d["h_exch"] = t.h_exch.in(t.base).value();
  d["mutual"] = t.mutual_value();
  d["loss"] = t.loss_value();
  d["noise"] = t.noise_value();
  d["coherent"] = t.coherent_value();
  d["base"] = t.base == LogBase::bits ? "bits" : "nats";
  return d;
}

const char* kind_name(ChannelKind k) {
  switch (k) {
    case ChannelKind::attenuator: return "attenuator";
    case ChannelKind::identity: return "identity";
    case ChannelKind::amplifier: return "amplifier";
  }
  return "";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gaussian-state entropies, purification and the attenuation/amplification channel";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> base_exc(m, "GaussqError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base_exc.ptr());
  py::register_exception<InvalidState>(m, "InvalidState", base_exc.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base_exc.ptr());
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", base_exc.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base_exc.ptr());

  // symplectic core
  py::class_<CommutationContext>(m, "CommutationContext")
      .def_property_readonly("s", &CommutationContext::s)
      .def_property_readonly("hbar", &CommutationContext::hbar)
      .def_property_readonly("delta", &CommutationContext::delta)
      .def_property_readonly("delta_inverse", &CommutationContext::delta_inverse)
      .def("conjugate", &CommutationContext::conjugate);
  m.def("make_context", &make_context, py::arg("s"), py::arg("hbar") = 1.0);

  py::class_<GaussianState>(m, "GaussianState")
      .def_property_readonly("s", &GaussianState::s)
      .def_property_readonly("ctx", &GaussianState::ctx)
      .def_property_readonly("mean", &GaussianState::mean)
      .def_property_readonly("alpha", &GaussianState::alpha)
      .def("delta_inv_alpha", &GaussianState::delta_inv_alpha);
  m.def("make_gaussian_state", &make_gaussian_state, py::arg("ctx"), py::arg("m"),
        py::arg("alpha"));
  m.def(
      "gauge_invariant_state",
      [](const CommutationContext& ctx, const CMatrix& n) {
        return gauge_invariant_state(ctx, ComplexModeMatrix{n});
      },
      py::arg("ctx"), py::arg("n_matrix"));
  m.def("elementary_state", &elementary_state, py::arg("n"), py::arg("hbar") = 1.0);
  m.def(
      "real_to_complex", [](const Matrix& mat) { return real_to_complex(mat).data; },
      py::arg("m"));
  m.def(
      "complex_to_real", [](const CMatrix& c) { return complex_to_real(ComplexModeMatrix{c}); },
      py::arg("c"));
  m.def("characteristic_function", &characteristic_function, py::arg("state"), py::arg("z"));
  m.def("is_pure", &is_pure, py::arg("state"), py::arg("tol") = kPurityTol);
  m.def("purity_residual", &purity_residual, py::arg("state"));
  m.def("uncertainty_margin", &uncertainty_margin, py::arg("alpha"), py::arg("delta"));

  // entropy engine
  m.def("g", &g, py::arg("x"));
  m.def("big_g", &big_g, py::arg("a_sq"));
  m.def(
      "abs_matrix", [](const CMatrix& mat) { return abs_matrix(mat); }, py::arg("m"));
  m.def(
      "symplectic_spectrum",
      [](const GaussianState& s) { return symplectic_spectrum(s).values; }, py::arg("state"));
  m.def(
      "entropy", [](const GaussianState& s, bool bits) { return entropy(s).in(base_of(bits)).value(); },
      py::arg("state"), py::arg("bits") = false);
  m.def("entropy_abs_formula", &entropy_abs_formula, py::arg("state"));
  m.def("entropy_big_g_formula", &entropy_big_g_formula, py::arg("state"));
  m.def(
      "gauge_invariant_entropy",
      [](const CMatrix& n) { return gauge_invariant_entropy(ComplexModeMatrix{n}); },
      py::arg("n_matrix"));

  // purification
  py::class_<BipartiteGaussianState>(m, "BipartiteGaussianState")
      .def_property_readonly("s", &BipartiteGaussianState::s)
      .def_property_readonly("alpha12", &BipartiteGaussianState::alpha12)
      .def_property_readonly("ctx12", &BipartiteGaussianState::ctx12)
      .def("joint", &BipartiteGaussianState::joint);
  m.def("purify", &purify, py::arg("state"));
  m.def("partial_state", &partial_state, py::arg("bi"), py::arg("side"));
  m.def("complex_block_form", &complex_block_form, py::arg("bi"), py::arg("tol") = 1e-9);
  m.def(
      "matrix_sqrt_psd", [](const CMatrix& mat) { return matrix_sqrt_psd(mat); }, py::arg("m"));

  // channels
  py::class_<GaussianChannel>(m, "GaussianChannel")
      .def(py::init<double>(), py::arg("k"))
      .def_property_readonly("k", &GaussianChannel::k)
      .def_property_readonly("kind", [](const GaussianChannel& c) { return kind_name(c.kind()); });
  m.def("apply", &apply, py::arg("channel"), py::arg("state"));
  m.def(
      "extended_apply",
      [](const GaussianChannel& ch, const GaussianState& s) {
        auto out = extended_apply(ch, s);
        return py::make_tuple(out.bi_out, out.complex_form);
      },
      py::arg("channel"), py::arg("state"));
  m.def(
      "exchange_eigenvalues",
      [](const GaussianChannel& ch, const GaussianState& s) {
        auto ev = exchange_eigenvalues(ch, s);
        return py::make_tuple(ev.lambda1, ev.lambda2);
      },
      py::arg("channel"), py::arg("state"));
  m.def(
      "entropy_exchange",
      [](const GaussianChannel& ch, const GaussianState& s, bool bits) {
        return entropy_exchange(ch, s).in(base_of(bits)).value();
      },
      py::arg("channel"), py::arg("state"), py::arg("bits") = false);
  m.def(
      "output_entropy",
      [](const GaussianChannel& ch, const GaussianState& s, bool bits) {
        return output_entropy(ch, s).in(base_of(bits)).value();
      },
      py::arg("channel"), py::arg("state"), py::arg("bits") = false);

  // information triangle
  m.def(
      "triangle",
      [](double n, double k, double hbar, bool bits) {
        return triangle_dict(triangle(n, k, hbar).in(base_of(bits)));
      },
      py::arg("n"), py::arg("k"), py::arg("hbar") = 1.0, py::arg("bits") = false);
  m.def("mutual_correlation", &mutual_correlation, py::arg("bi"));
  m.def("coherent_zero_crossing", &coherent_zero_crossing, py::arg("n"), py::arg("tol") = 1e-10);
  m.def(
      "sweep_csv",
      [](double n, double k_min, double k_max, int steps, bool bits, double hbar) {
        cli::SweepConfig cfg{n, k_min, k_max, steps, base_of(bits), hbar};
        std::ostringstream out;
        try {
          cli::write_sweep_csv(cfg, out);
        } catch (const cli::UsageError& e) {
          throw py::value_error(e.what());
        }
        return out.str();
      },
      py::arg("n") = 1.0, py::arg("k_min") = 0.01, py::arg("k_max") = 3.0, py::arg("steps") = 300,
      py::arg("bits") = false, py::arg("hbar") = 1.0);

  // Fock-space oracle
  auto fm = m.def_submodule("fock", "Truncated Fock-space oracle");
  py::class_<fock::FockDensityMatrix>(fm, "FockDensityMatrix")
      .def_readonly("dim", &fock::FockDensityMatrix::dim)
      .def_readonly("modes", &fock::FockDensityMatrix::modes)
      .def_readonly("trace_deficit", &fock::FockDensityMatrix::trace_deficit)
      .def("dense", &fock::FockDensityMatrix::dense)
      .def("trace", &fock::FockDensityMatrix::trace);
  fm.def("thermal_fock", &fock::thermal_fock, py::arg("n"), py::arg("dim"),
         py::arg("max_deficit") = fock::kDefaultDeficitBound);
  fm.def("tmsv_fock", &fock::tmsv_fock, py::arg("n"), py::arg("dim"),
         py::arg("max_deficit") = fock::kDefaultDeficitBound);
  fm.def("beamsplitter_attenuate", &fock::beamsplitter_attenuate, py::arg("rho12"), py::arg("k"));
  fm.def("reduce", &fock::reduce, py::arg("rho"), py::arg("keep_mode"));
  fm.def("vn_entropy", &fock::vn_entropy_fock, py::arg("rho"));
  fm.def(
      "attenuation_oracle",
      [](double n, double k, int dim) {
        auto r = fock::attenuation_oracle(n, k, dim);
        py::dict d;
        d["h_in"] = r.h_in;
        d["h_out"] = r.h_out;
        d["h_exch"] = r.h_exch;
        return d;
      },
      py::arg("n"), py::arg("k"), py::arg("dim") = 60);
}
