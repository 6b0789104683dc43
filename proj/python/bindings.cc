// Copyright 2026 The wtlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <optional>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wtl/channel.h"
#include "wtl/codec.h"
#include "wtl/construction_a.h"
#include "wtl/errors.h"
#include "wtl/experiment.h"
#include "wtl/gaussian.h"
#include "wtl/lattice.h"
#include "wtl/rng.h"
#include "wtl/sampler.h"
#include "wtl/security.h"

namespace py = pybind11;

namespace wtl {
namespace {

CovarianceSpec SpreadFrom(const py::object& spread, int n) {
  if (py::isinstance<py::float_>(spread) || py::isinstance<py::int_>(spread)) {
    return CovarianceSpec::Spherical(n, spread.cast<double>());
  }
  return CovarianceSpec::FromHermitian(spread.cast<CMatrix>());
}

py::dict FlatnessDict(const FlatnessResult& r) {
  py::dict d;
  d["epsilon"] = r.epsilon;
  d["tail_bound"] = r.tail_bound;
  d["points"] = r.points;
  d["route"] = r.route == FlatnessRoute::kPrimal ? "primal" : "dual";
  return d;
}

FlatnessRoute RouteFrom(const std::string& name) {
  if (name == "auto") return FlatnessRoute::kAuto;
  if (name == "dual") return FlatnessRoute::kDual;
  if (name == "primal") return FlatnessRoute::kPrimal;
  Fail(ErrorCode::kInvalidArgument, "route must be auto, dual or primal");
}

}  // namespace
}  // namespace wtl

PYBIND11_MODULE(_wtlattice, m) {
  using namespace wtl;
  m.doc() = "Nested lattice wiretap coding: lattices, flatness, codes, security.";

  static py::exception<Error> error(m, "WtlError");
  static py::exception<TruncationError> truncation(m, "TruncationError",
                                                   error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const TruncationError& e) {
      PyErr_SetObject(truncation.ptr(),
                      py::make_tuple(e.what(), e.partial_sum(), e.tail_bound())
                          .ptr());
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(),
                      py::make_tuple(e.what(), std::string(ErrorCodeName(e.code())))
                          .ptr());
    }
  });

  py::class_<Lattice>(m, "Lattice")
      .def_static("from_complex_generator", &Lattice::FromComplexGenerator,
                  py::arg("generator"))
      .def_static("from_real_generator", &Lattice::FromRealGenerator,
                  py::arg("generator"))
      .def_static("gaussian_integers", &Lattice::GaussianIntegers, py::arg("n"),
                  py::arg("scale") = 1.0)
      .def_property_readonly("complex_dim", &Lattice::complex_dim)
      .def_property_readonly("volume", &Lattice::volume)
      .def_property_readonly("complex_generator", &Lattice::complex_generator)
      .def_property_readonly("real_generator", &Lattice::real_generator)
      .def("dual", &Lattice::Dual)
      .def("scaled", &Lattice::Scaled, py::arg("c"))
      .def("transformed", &Lattice::Transformed, py::arg("a"))
      .def("contains", &Lattice::Contains, py::arg("y"),
           py::arg("tol") = kMembershipTol)
      .def("closest_point",
           [](const Lattice& l, const CVector& y) {
             return ClosestPoint(y, l).coords;
           },
           py::arg("y"))
      .def("mod", [](const Lattice& l, const CVector& y) { return ModLattice(y, l); },
           py::arg("y"))
      .def("__repr__", [](const Lattice& l) {
        return "<Lattice complex_dim=" + std::to_string(l.complex_dim()) +
               " volume=" + std::to_string(l.volume()) + ">";
      });

  m.def("flatness_factor",
        [](const Lattice& l, const py::object& spread, double tol,
           const std::string& route) {
          return FlatnessDict(FlatnessFactor(
              l, SpreadFrom(spread, l.complex_dim()), tol, RouteFrom(route)));
        },
        py::arg("lattice"), py::arg("spread"), py::arg("tol") = kDefaultSeriesTol,
        py::arg("route") = "auto",
        "Flatness factor at a scalar sigma or a Hermitian covariance.");
  m.def("theta_series",
        [](const Lattice& l, double tau) {
          return 1.0 + ThetaSeries(l, tau).nonzero_sum;
        },
        py::arg("lattice"), py::arg("tau"));
  m.def("smoothing_parameter", &SmoothingParameter, py::arg("lattice"),
        py::arg("epsilon"));
  m.def("vnr",
        [](const Lattice& l, const py::object& spread) {
          return Vnr(l, SpreadFrom(spread, l.complex_dim()));
        },
        py::arg("lattice"), py::arg("spread"));
  m.def("sample_discrete_gaussian",
        [](const Lattice& l, const CVector& center, const py::object& spread,
           int64_t n, uint64_t seed) {
          const LatticeGaussianSampler sampler(l, SpreadFrom(spread, l.complex_dim()));
          Rng rng(seed);
          CMatrix out(n, l.complex_dim());
          for (int64_t i = 0; i < n; ++i) {
            out.row(i) = sampler.Sample(center, rng).coords.transpose();
          }
          return out;
        },
        py::arg("lattice"), py::arg("center"), py::arg("spread"), py::arg("n"),
        py::arg("seed"), "n draws from D_{lattice + center}, one per row.");

  py::class_<NestedPair>(m, "NestedPair")
      .def_readonly("p", &NestedPair::p)
      .def_readonly("n_a", &NestedPair::n_a)
      .def_readonly("t", &NestedPair::t)
      .def_readonly("lattice_b", &NestedPair::lattice_b)
      .def_readonly("lattice_e", &NestedPair::lattice_e)
      .def_readonly("rate", &NestedPair::rate)
      .def_property_readonly("k_b", &NestedPair::k_b)
      .def_property_readonly("k_e", &NestedPair::k_e)
      .def_property_readonly("num_messages", &NestedPair::num_messages)
      .def("coset_encode",
           [](const NestedPair& p, int64_t msg) { return CosetEncode(msg, p); },
           py::arg("m"))
      .def("coset_decode",
           [](const NestedPair& p, const CVector& x) { return CosetDecode(x, p); },
           py::arg("lattice_point"));
  m.def("sample_nested_pair",
        [](int64_t p, int n_a, int t, int k_b, int k_e, uint64_t seed) {
          Rng rng(seed);
          return SampleNestedPair(p, n_a, t, k_b, k_e, rng);
        },
        py::arg("p"), py::arg("n_a"), py::arg("t"), py::arg("k_b"),
        py::arg("k_e"), py::arg("seed"));

  py::class_<WiretapEncoder>(m, "WiretapEncoder")
      .def(py::init<NestedPair, double>(), py::arg("pair"), py::arg("sigma_s"))
      .def("encode",
           [](const WiretapEncoder& e, int64_t msg, uint64_t seed) {
             Rng rng(seed);
             return e.Encode(msg, rng);
           },
           py::arg("m"), py::arg("seed"));
  py::class_<DecoderState>(m, "DecoderState")
      .def_readonly("f_b", &DecoderState::f_b)
      .def_readonly("r_b", &DecoderState::r_b)
      .def_readonly("snr_b", &DecoderState::snr_b);
  m.def("mmse_gdfe", &MmseGdfe, py::arg("h_b"), py::arg("snr_b"));
  py::class_<WiretapDecoder>(m, "WiretapDecoder")
      .def(py::init<const NestedPair&, const DecoderState&>(), py::arg("pair"),
           py::arg("state"))
      .def("decode", &WiretapDecoder::Decode, py::arg("y_b"));

  m.def("leakage_bound", &LeakageBound, py::arg("epsilon"), py::arg("rate"),
        py::arg("n_e"), py::arg("t"));
  m.def("achievable_rate", &AchievableRate, py::arg("c_b"), py::arg("c_e"),
        py::arg("n_a"), py::arg("alpha") = std::nullopt);
  m.def("check_secrecy",
        [](const Lattice& l, const CMatrix& h_e, double sigma_s, double sigma_e,
           int t) {
          const VnrCheck c = CheckSecrecy(l, h_e, sigma_s, sigma_e, t);
          py::dict d;
          d["gamma"] = c.gamma;
          d["pass_vnr"] = c.pass_vnr;
          d["pass_volume"] = c.pass_volume;
          return d;
        },
        py::arg("lattice_e"), py::arg("h_e"), py::arg("sigma_s"),
        py::arg("sigma_e"), py::arg("t"));

  m.def("config_hash",
        [](const std::string& text) { return ConfigHash(ParseConfig(text)); },
        py::arg("config_text"));
  m.def("run_experiment",
        [](const std::string& text) {
          const SimulationReport r = RunExperiment(ParseConfig(text), false);
          return py::make_tuple(SummaryJson(r), TrialsCsv(r));
        },
        py::arg("config_text"),
        "Runs without writing files; returns (summary JSON, trials CSV).");
}
