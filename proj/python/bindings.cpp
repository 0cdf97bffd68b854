// Python module casimir._core.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "casimir/geometry.hpp"
#include "casimir/pair_thermal.hpp"
#include "casimir/pair_zero_t.hpp"
#include "casimir/response.hpp"
#include "casimir/sweep.hpp"
#include "casimir/version.hpp"

namespace py = pybind11;
using namespace casimir;

namespace {

py::dict to_dict(const SweepResult& r) {
  py::dict metadata;
  for (const auto& [k, v] : r.metadata) metadata[py::str(k)] = v;
  py::list rows;
  for (const auto& row : r.rows) {
    py::list line;
    for (double v : row.values) line.append(v);
    line.append(row.status);
    rows.append(line);
  }
  py::dict out;
  out["metadata"] = metadata;
  out["columns"] = r.columns;
  out["rows"] = rows;
  out["diagnostics"] = r.diagnostics;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Casimir-Polder and van der Waals interactions of two-level atoms";
  m.attr("__version__") = kVersion;
  m.attr("UNITS") = std::string(UnitSystem::kDescription);

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error);
  py::register_exception<DegeneracyError>(m, "DegeneracyError", error);
  py::register_exception<PoleError>(m, "PoleError", error);
  py::register_exception<ConfigError>(m, "ConfigError", error);

  py::enum_<PairState>(m, "PairState")
      .value("ground", PairState::ground)
      .value("a_excited", PairState::a_excited);
  py::enum_<LifshitzVariant>(m, "LifshitzVariant")
      .value("tan", LifshitzVariant::as_printed_tan)
      .value("tanh", LifshitzVariant::tanh_variant);

  py::class_<AtomSpecies>(m, "AtomSpecies")
      .def(py::init(&AtomSpecies::make), py::arg("omega"), py::arg("d2"),
           py::arg("gamma") = 0.0)
      .def_property_readonly("omega", &AtomSpecies::omega)
      .def_property_readonly("d2", &AtomSpecies::d2)
      .def_property_readonly("gamma", &AtomSpecies::gamma)
      .def(py::self == py::self)
      .def("__repr__", [](const AtomSpecies& s) {
        std::ostringstream os;
        os << "AtomSpecies(omega=" << s.omega() << ", d2=" << s.d2()
           << ", gamma=" << s.gamma() << ")";
        return os.str();
      });

  py::class_<Medium>(m, "Medium")
      .def(py::init(&Medium::make), py::arg("species"), py::arg("density"))
      .def_property_readonly("species", &Medium::species)
      .def_property_readonly("density", &Medium::density);

  py::class_<ThermalContext>(m, "ThermalContext")
      .def(py::init(&ThermalContext::make), py::arg("temperature"),
           py::arg("n_max") = ThermalContext::kDefaultMaxModes,
           py::arg("tail_tol") = ThermalContext::kDefaultTailTol)
      .def_property_readonly("temperature", &ThermalContext::temperature)
      .def_property_readonly("tail_tol", &ThermalContext::tail_tol)
      .def("matsubara_frequency", &ThermalContext::matsubara_frequency);

  py::class_<AbsorptionModel>(m, "AbsorptionModel")
      .def_static("from_rate", &AbsorptionModel::from_rate, py::arg("gamma_ph"))
      .def_static("transparent", &AbsorptionModel::transparent)
      .def_property_readonly("gamma_ph", &AbsorptionModel::gamma_ph)
      .def_property_readonly("l_ph", &AbsorptionModel::l_ph);

  py::class_<PairPotentialBreakdown>(m, "PairPotentialBreakdown")
      .def_readonly("non_resonant", &PairPotentialBreakdown::non_resonant)
      .def_readonly("resonant", &PairPotentialBreakdown::resonant)
      .def_readonly("total", &PairPotentialBreakdown::total)
      .def_readonly("separation", &PairPotentialBreakdown::separation);

  py::class_<MatsubaraSum>(m, "MatsubaraSum")
      .def_readonly("value", &MatsubaraSum::value)
      .def_readonly("last_mode", &MatsubaraSum::last_mode)
      .def_readonly("tail_bound", &MatsubaraSum::tail_bound);

  py::class_<HalfSpaceGeometry>(m, "HalfSpaceGeometry")
      .def(py::init(&HalfSpaceGeometry::make), py::arg("z0"), py::arg("medium"),
           py::arg("absorption") = std::nullopt)
      .def_property_readonly("z0", &HalfSpaceGeometry::z0)
      .def("absorption", &HalfSpaceGeometry::absorption);

  py::class_<SlabPairGeometry>(m, "SlabPairGeometry")
      .def(py::init(&SlabPairGeometry::make), py::arg("gap"), py::arg("medium_a"),
           py::arg("medium_b"), py::arg("l_ph_a") = std::nullopt,
           py::arg("l_ph_b") = std::nullopt)
      .def_property_readonly("gap", &SlabPairGeometry::gap)
      .def_property_readonly("l_ph_a", &SlabPairGeometry::l_ph_a)
      .def_property_readonly("l_ph_b", &SlabPairGeometry::l_ph_b)
      .def("with_gap", &SlabPairGeometry::with_gap);

  py::class_<ForceBreakdown>(m, "ForceBreakdown")
      .def_readonly("lifshitz", &ForceBreakdown::lifshitz)
      .def_readonly("resonant_correction", &ForceBreakdown::resonant_correction)
      .def_readonly("total", &ForceBreakdown::total)
      .def_readonly("variant", &ForceBreakdown::variant);

  m.def("alpha_iu", &alpha_iu, py::arg("species"), py::arg("u"));
  m.def("alpha_static", &alpha_static, py::arg("species"));
  m.def("photon_lifetime", &photon_lifetime, py::arg("medium"));

  m.def("u_nonresonant_integral",
        [](const AtomSpecies& a, const AtomSpecies& b, double r) {
          return u_nonresonant_integral(a, b, r);
        },
        py::arg("a"), py::arg("b"), py::arg("R"));
  m.def("u_resonant", &u_resonant, py::arg("a"), py::arg("b"), py::arg("R"),
        py::arg("state"));
  m.def("u_london", &u_london, py::arg("a"), py::arg("b"), py::arg("R"));
  m.def("u_casimir_polder", &u_casimir_polder, py::arg("a"), py::arg("b"),
        py::arg("R"));
  m.def("u_resonant_near_limit", &u_resonant_near_limit, py::arg("a"),
        py::arg("b"), py::arg("R"));
  m.def("u_resonant_far_limit", &u_resonant_far_limit, py::arg("a"),
        py::arg("b"), py::arg("R"));
  m.def("pair_potential", &pair_potential, py::arg("a"), py::arg("b"),
        py::arg("R"), py::arg("state"));

  m.def("matsubara_nonresonant_sum", &matsubara_nonresonant_sum, py::arg("a"),
        py::arg("b"), py::arg("R"), py::arg("ctx"),
        py::arg("zero_mode_weight") = 0.5);
  m.def("u_thermal_nonresonant", &u_thermal_nonresonant, py::arg("a"),
        py::arg("b"), py::arg("R"), py::arg("ctx"));
  m.def("u_thermal_resonant", &u_thermal_resonant, py::arg("a"), py::arg("b"),
        py::arg("R"), py::arg("ctx"), py::arg("absorption"), py::arg("state"));
  m.def("pair_potential_thermal", &pair_potential_thermal, py::arg("a"),
        py::arg("b"), py::arg("R"), py::arg("ctx"), py::arg("absorption"),
        py::arg("state"));

  m.def("divergence_probe", &divergence_probe, py::arg("geom"), py::arg("a"),
        py::arg("cutoff"));
  m.def("u_atom_halfspace_regularized", &u_atom_halfspace_regularized,
        py::arg("geom"), py::arg("a"), py::arg("ctx"), py::arg("state"),
        py::arg("r_max") = std::numeric_limits<double>::infinity());
  m.def("geometry_factor",
        py::overload_cast<double, double, double>(&geometry_factor),
        py::arg("L"), py::arg("l_ph_a"), py::arg("l_ph_b"));
  m.def("geometry_factor", py::overload_cast<double, double>(&geometry_factor),
        py::arg("L"), py::arg("l_ph"));
  m.def("lifshitz_force", &lifshitz_force, py::arg("geom"), py::arg("ctx"),
        py::arg("variant") = LifshitzVariant::as_printed_tan);
  m.def("slab_force", &slab_force, py::arg("geom"), py::arg("ctx"),
        py::arg("state"), py::arg("variant") = LifshitzVariant::as_printed_tan);
  m.def("slab_force_sign_changes", &slab_force_sign_changes, py::arg("geom"),
        py::arg("ctx"), py::arg("state"), py::arg("variant"), py::arg("gap_min"),
        py::arg("gap_max"), py::arg("points"));

  m.def("run_sweep",
        [](const std::string& text) { return to_dict(run_sweep(parse_config_text(text))); },
        py::arg("config_text"),
        "Runs a sweep from config text; returns metadata, columns, rows and "
        "diagnostics.");
  m.def("sweep_csv",
        [](const std::string& text) {
          std::ostringstream os;
          write_csv(os, run_sweep(parse_config_text(text)));
          return os.str();
        },
        py::arg("config_text"));
  m.def("eval_point",
        [](const std::string& text, double x) {
          return format_point_report(eval_point(parse_config_text(text), x));
        },
        py::arg("config_text"), py::arg("x"));
}
