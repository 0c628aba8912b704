#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pensemble/closed_forms.hpp"
#include "pensemble/energy.hpp"
#include "pensemble/errors.hpp"
#include "pensemble/io.hpp"
#include "pensemble/kernel.hpp"
#include "pensemble/montecarlo.hpp"
#include "pensemble/sampler.hpp"
#include "pensemble/special_functions.hpp"
#include "pensemble/sphere_lift.hpp"

namespace py = pybind11;
using namespace pensemble;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

// Rows of a (n, m) complex array.
std::vector<CVector> rows(const ComplexArray& a) {
  if (a.ndim() != 2) throw DomainError("expected a 2-D complex array of points");
  auto v = a.unchecked<2>();
  std::vector<CVector> out(static_cast<std::size_t>(v.shape(0)));
  for (py::ssize_t i = 0; i < v.shape(0); ++i) {
    for (py::ssize_t j = 0; j < v.shape(1); ++j) out[i].push_back(v(i, j));
  }
  return out;
}

std::vector<ProjectivePoint> projective(const ComplexArray& a) {
  std::vector<ProjectivePoint> out;
  for (CVector& r : rows(a)) out.emplace_back(std::move(r));
  return out;
}

ComplexArray to_array(const std::vector<CVector>& pts, std::size_t width) {
  ComplexArray a({pts.size(), width});
  auto m = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) m(i, j) = pts[i][j];
  }
  return a;
}

ComplexArray to_array(const std::vector<ProjectivePoint>& pts, std::size_t width) {
  std::vector<CVector> v;
  for (const ProjectivePoint& p : pts) v.emplace_back(p.coords().begin(), p.coords().end());
  return to_array(v, width);
}

py::dict as_dict(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(dump_json(j, -1));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Projective ensemble: sampling, sphere lift, energies and exact expectations";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PointAtInfinity>(m, "PointAtInfinity", PyExc_ValueError);
  py::register_exception<RejectionBudgetExceeded>(m, "RejectionBudgetExceeded", PyExc_RuntimeError);
  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

  m.def("fubini_sin_distance",
        [](const CVector& p, const CVector& q) {
          return fubini_sin_distance(ProjectivePoint(p), ProjectivePoint(q));
        },
        py::arg("p"), py::arg("q"));
  m.def("chart_to_projective",
        [](const CVector& z) {
          const ProjectivePoint p = chart_to_projective(ChartPoint{z});
          return CVector(p.coords().begin(), p.coords().end());
        },
        py::arg("z"));
  m.def("projective_to_chart", [](const CVector& p) { return projective_to_chart(ProjectivePoint(p)).z; },
        py::arg("p"));
  m.def("chart_jacobian", [](const CVector& z, int d) { return chart_jacobian(ChartPoint{z}, d); },
        py::arg("z"), py::arg("d"));

  m.def("rank", [](int d, int L) { return KernelParams(d, L).r(); }, py::arg("d"), py::arg("L"));
  m.def("enumerate_multi_indices", &enumerate_multi_indices, py::arg("d"), py::arg("L"));
  m.def("basis_coefficient",
        [](const MultiIndex& alpha, int d, int L) { return basis_coefficient(alpha, KernelParams(d, L)); },
        py::arg("alpha"), py::arg("d"), py::arg("L"));
  m.def("feature_vector",
        [](const CVector& z, int d, int L) { return feature_vector(ChartPoint{z}, KernelParams(d, L)); },
        py::arg("z"), py::arg("d"), py::arg("L"));
  m.def("kernel_eval",
        [](const CVector& z, const CVector& w, int d, int L) {
          return kernel_eval(ChartPoint{z}, ChartPoint{w}, KernelParams(d, L));
        },
        py::arg("z"), py::arg("w"), py::arg("d"), py::arg("L"));
  m.def("projective_kernel_magnitude",
        [](const CVector& p, const CVector& q, int d, int L) {
          return projective_kernel_magnitude(ProjectivePoint(p), ProjectivePoint(q), KernelParams(d, L));
        },
        py::arg("p"), py::arg("q"), py::arg("d"), py::arg("L"));

  m.def("sample_projective_ensemble",
        [](int d, int L, std::uint64_t seed) {
          const ProjectiveSample s = sample_projective_ensemble(SamplerConfig{KernelParams(d, L), seed});
          return to_array(s.points, static_cast<std::size_t>(d + 1));
        },
        py::arg("d"), py::arg("L"), py::arg("seed"),
        "Exact sample of the projective ensemble as an (r, d+1) array of unit representatives.");
  m.def("lift_to_sphere",
        [](const ComplexArray& points, int k, std::uint64_t seed) {
          const std::vector<ProjectivePoint> pts = projective(points);
          if (pts.empty()) throw DomainError("lift_to_sphere: no points");
          ProjectiveSample s{pts, KernelParams(static_cast<int>(pts.front().dim()), 0), seed};
          Rng rng = make_rng(seed);
          const SphereConfiguration c = lift_to_sphere(s, k, rng);
          return to_array(c.points, pts.front().dim() + 1);
        },
        py::arg("points"), py::arg("k"), py::arg("seed"));

  m.def("riesz_energy",
        [](const ComplexArray& points, double s) {
          return riesz_energy(realify(projective(points)), s).value;
        },
        py::arg("points"), py::arg("s"), "Riesz s-energy of unit vectors viewed in R^{2d+2}.");
  m.def("projective_riesz_energy",
        [](const ComplexArray& points, double s) { return projective_riesz_energy(projective(points), s).value; },
        py::arg("points"), py::arg("s"));
  m.def("projective_log_energy",
        [](const ComplexArray& points) { return projective_log_energy(projective(points)).value; },
        py::arg("points"));
  m.def("green_energy",
        [](const ComplexArray& points, int d) { return green_energy(projective(points), d).value; },
        py::arg("points"), py::arg("d"));

  m.def("log_gamma", &log_gamma);
  m.def("digamma", &digamma);
  m.def("beta", &beta);
  m.def("continuous_sphere_energy", &continuous_sphere_energy, py::arg("dim"), py::arg("s"));
  m.def("expected_projective_riesz",
        [](int d, int L, double s) { return as_dict(to_json(expected_projective_riesz(d, L, s))); },
        py::arg("d"), py::arg("L"), py::arg("s"));
  m.def("expected_projective_log",
        [](int d, int L) { return as_dict(to_json(expected_projective_log(d, L))); }, py::arg("d"),
        py::arg("L"));
  m.def("expected_sphere_2energy_exact",
        [](int d, int L, int k) { return as_dict(to_json(expected_sphere_2energy_exact(d, L, k))); },
        py::arg("d"), py::arg("L"), py::arg("k"));
  m.def("expected_green_energy",
        [](int d, int L) { return as_dict(to_json(expected_green_energy(d, L))); }, py::arg("d"),
        py::arg("L"));
  m.def("bound_constants", [](int d) { return as_dict(to_json(bound_constants(d))); }, py::arg("d"));
  m.def("quadrature_expected_projective_riesz",
        [](int d, int L, double s) { return quadrature_expected_projective_riesz(d, L, s); },
        py::arg("d"), py::arg("L"), py::arg("s"));

  m.def("run_experiment",
        [](int d, int L, int k, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
          ExperimentConfig c;
          c.d = d;
          c.L = L;
          c.k = k;
          c.trials = trials;
          c.master_seed = seed;
          c.threads = threads;
          ExperimentReport rep;
          {
            py::gil_scoped_release release;
            rep = run_experiment(c);
          }
          return as_dict(to_json(rep));
        },
        py::arg("d"), py::arg("L"), py::arg("k") = 0, py::arg("trials") = 1000, py::arg("seed") = 0,
        py::arg("threads") = 1);
  m.def("figure1",
        [](int d_max) {
          py::list out;
          for (const Figure1Row& r : emit_figure1_data(d_max)) {
            out.append(py::make_tuple(r.d, r.projective_bound, r.harmonic_bound));
          }
          return out;
        },
        py::arg("d_max"));
}
