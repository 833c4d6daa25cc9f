#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galton/analytic.hpp"
#include "galton/checkerboard.hpp"
#include "galton/oracle.hpp"
#include "galton/spectral_map.hpp"
#include "galton/traversal.hpp"

namespace py = pybind11;
using namespace galton;

PYBIND11_MODULE(pygalton, m) {
  m.doc() = "Landau-Zener Galton-board hyperpolarization simulator";

  py::class_<PowerLawModel>(m, "PowerLawModel")
      .def(py::init<>())
      .def_readwrite("alpha", &PowerLawModel::alpha)
      .def_readwrite("p_exp", &PowerLawModel::p_exp)
      .def_readwrite("phi", &PowerLawModel::phi);

  py::class_<SpinSystemConfig>(m, "SpinSystemConfig")
      .def(py::init<>())
      .def_readwrite("n_nuclei", &SpinSystemConfig::n_nuclei)
      .def_readwrite("a_par", &SpinSystemConfig::a_par)
      .def_readwrite("a_perp", &SpinSystemConfig::a_perp)
      .def_readwrite("b0", &SpinSystemConfig::b0)
      .def_readwrite("gamma_n", &SpinSystemConfig::gamma_n)
      .def_readwrite("gamma_e_b0", &SpinSystemConfig::gamma_e_b0)
      .def_readwrite("delta", &SpinSystemConfig::delta)
      .def_readwrite("rabi", &SpinSystemConfig::rabi)
      .def_readwrite("model", &SpinSystemConfig::model)
      .def("larmor", &SpinSystemConfig::larmor)
      .def("validate", &SpinSystemConfig::validate);

  py::class_<ManifoldFrequencies>(m, "ManifoldFrequencies")
      .def_readonly("omega0", &ManifoldFrequencies::omega0)
      .def_readonly("omega1", &ManifoldFrequencies::omega1)
      .def_readonly("phi", &ManifoldFrequencies::phi);

  m.def("effective_frequencies", &effective_frequencies);
  m.def("eigenenergy_m0", &eigenenergy_m0);
  m.def("eigenenergy_m1_at_zero", &eigenenergy_m1_at_zero);
  m.def("perturbative_gap",
        py::overload_cast<const SpinSystemConfig&, NuclearStateIndex,
                          NuclearStateIndex>(&perturbative_gap));
  m.def("exact_gap_scan", &exact_gap_scan, py::arg("cfg"), py::arg("state_m0"),
        py::arg("state_m1"), py::arg("scan_halfwidth"), py::arg("n_samples"));

  py::class_<Checkerboard>(m, "Checkerboard")
      .def_readonly("n_nuclei", &Checkerboard::n_nuclei)
      .def_readonly("size", &Checkerboard::size)
      .def_readonly("col_energy", &Checkerboard::col_energy)
      .def_readonly("row_energy", &Checkerboard::row_energy)
      .def_readonly("center", &Checkerboard::center)
      .def_readonly("k_states", &Checkerboard::k_states)
      .def_readonly("l_states", &Checkerboard::l_states)
      .def("gap", &Checkerboard::gap)
      .def("frequency", &Checkerboard::frequency)
      .def("energy", &Checkerboard::energy);

  py::class_<TunnelingTable>(m, "TunnelingTable")
      .def_readonly("size", &TunnelingTable::size)
      .def_readwrite("eta", &TunnelingTable::eta)
      .def_readonly("sweep_rate", &TunnelingTable::sweep_rate)
      .def("at", py::overload_cast<int, int>(&TunnelingTable::at, py::const_))
      .def("set",
           [](TunnelingTable& t, int k, int l, double v) { t.at(k, l) = v; });

  py::class_<SymmetryReport>(m, "SymmetryReport")
      .def_readonly("max_coord_violation", &SymmetryReport::max_coord_violation)
      .def_readonly("max_gap_violation", &SymmetryReport::max_gap_violation)
      .def_readonly("ok", &SymmetryReport::ok);

  m.def("build_checkerboard", &build_checkerboard);
  m.def("verify_symmetries", &verify_symmetries);
  m.def("tunneling_table", &tunneling_table);
  m.def("uniform_table", &uniform_table);

  py::enum_<SweepDirection>(m, "SweepDirection")
      .value("low_to_high", SweepDirection::low_to_high)
      .value("high_to_low", SweepDirection::high_to_low);

  py::class_<SweepWindow>(m, "SweepWindow")
      .def(py::init<double, double>(), py::arg("f0"), py::arg("bandwidth"))
      .def_readwrite("f0", &SweepWindow::f0)
      .def_readwrite("bandwidth", &SweepWindow::bandwidth);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("direction", &SweepSpec::direction)
      .def_readwrite("window", &SweepSpec::window)
      .def_readwrite("rate", &SweepSpec::rate)
      .def_readwrite("allow_degenerate", &SweepSpec::allow_degenerate);

  py::class_<StatePopulations>(m, "StatePopulations")
      .def(py::init<>())
      .def_static("zero", &StatePopulations::zero)
      .def_static("mixed", &StatePopulations::mixed)
      .def_static("unit_rows", &StatePopulations::unit_rows)
      .def_readwrite("m0", &StatePopulations::m0)
      .def_readwrite("m1", &StatePopulations::m1)
      .def("total", &StatePopulations::total);

  py::enum_<SignConvention>(m, "SignConvention")
      .value("a_par_positive", SignConvention::a_par_positive)
      .value("a_par_negative", SignConvention::a_par_negative);

  m.def("propagate", &propagate);
  m.def("laser_reset", &laser_reset);
  m.def("polarization", &polarization, py::arg("pops"),
        py::arg("convention") = SignConvention::a_par_positive);
  m.def("path_probability", &path_probability);
  m.def("traversal_probability", &traversal_probability);
  m.def("accumulate_sweeps", &accumulate_sweeps);

  py::class_<RatchetParams>(m, "RatchetParams")
      .def(py::init<>())
      .def_readwrite("eta_small", &RatchetParams::eta_small)
      .def_readwrite("eta_large", &RatchetParams::eta_large)
      .def_readwrite("w_l", &RatchetParams::w_l)
      .def_readwrite("omega_r", &RatchetParams::omega_r)
      .def_readwrite("t_total", &RatchetParams::t_total);

  py::class_<BinomialParams>(m, "BinomialParams")
      .def(py::init<>())
      .def_readwrite("n_nuclei", &BinomialParams::n_nuclei)
      .def_readwrite("p_down", &BinomialParams::p_down)
      .def_readwrite("q_right", &BinomialParams::q_right);

  m.def("ratchet_single_sweep", &ratchet_single_sweep, py::arg("params"),
        py::arg("convention") = SignConvention::a_par_positive);
  m.def("ratchet_net", &ratchet_net, py::arg("params"),
        py::arg("convention") = SignConvention::a_par_positive);
  m.def("binomial_forward", &binomial_forward);
  m.def("binomial_reverse", &binomial_reverse);

  py::class_<PathEnumeration>(m, "PathEnumeration")
      .def_readonly("paths", &PathEnumeration::paths)
      .def_readonly("probabilities", &PathEnumeration::probabilities);

  m.def("enumerate_paths", &enumerate_paths);
  m.def("brute_force_traversal", &brute_force_traversal);

  py::class_<DosSpec>(m, "DosSpec")
      .def_static("gaussian_fwhm", &DosSpec::gaussian_fwhm)
      .def_static("gaussian_sigma", &DosSpec::gaussian_sigma)
      .def_static("from_levels", &DosSpec::from_levels)
      .def_readonly("mean", &DosSpec::mean)
      .def_readonly("sigma", &DosSpec::sigma)
      .def("density", &DosSpec::density);

  py::class_<DosBoardOptions>(m, "DosBoardOptions")
      .def(py::init<>())
      .def_readwrite("tilt_scale", &DosBoardOptions::tilt_scale)
      .def_readwrite("p_exp", &DosBoardOptions::p_exp)
      .def_readwrite("sample_seed", &DosBoardOptions::sample_seed);

  py::class_<SpectralProfile>(m, "SpectralProfile")
      .def_readonly("centers", &SpectralProfile::centers)
      .def_readonly("polarization_fwd", &SpectralProfile::polarization_fwd)
      .def_readonly("polarization_rev", &SpectralProfile::polarization_rev)
      .def_readonly("bandwidth", &SpectralProfile::bandwidth)
      .def_readonly("max_conservation_error",
                    &SpectralProfile::max_conservation_error);

  py::class_<ScanDirections>(m, "ScanDirections")
      .def(py::init<>())
      .def_readwrite("forward", &ScanDirections::forward)
      .def_readwrite("reverse", &ScanDirections::reverse);

  m.def("place_levels_by_dos", &place_levels_by_dos, py::arg("n_nuclei"),
        py::arg("dos"), py::arg("opts") = DosBoardOptions{});
  m.def("scan_profile", &scan_profile, py::arg("board"), py::arg("table"),
        py::arg("bandwidth"), py::arg("centers"),
        py::arg("directions") = ScanDirections{}, py::arg("threads") = 1);
  m.def("correlation_with_dos", &correlation_with_dos);
  m.def("profile_fwhm", &profile_fwhm);
}
