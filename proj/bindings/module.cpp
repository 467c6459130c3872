#include <cstdint>
#include <utility>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "splinedict/adapt.hpp"
#include "splinedict/bspline.hpp"
#include "splinedict/dictionary.hpp"
#include "splinedict/errors.hpp"
#include "splinedict/partition.hpp"
#include "splinedict/pursuit.hpp"
#include "splinedict/signalio.hpp"

namespace py = pybind11;
using namespace splinedict;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Redundant B-spline dictionaries and greedy sparse approximation";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    py::class_<Partition>(m, "Partition")
        .def(py::init<std::vector<double>>(), py::arg("points"))
        .def_static("uniform", &Partition::uniform, py::arg("c"), py::arg("d"), py::arg("step"))
        .def_property_readonly("points", &Partition::points)
        .def_property_readonly("c", &Partition::c)
        .def_property_readonly("d", &Partition::d)
        .def_property_readonly("interior_count", &Partition::interior_count)
        .def("__len__", &Partition::size)
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__repr__", [](const Partition& p) {
            return "Partition(" + std::to_string(p.size()) + " points on [" +
                   std::to_string(p.c()) + ", " + std::to_string(p.d()) + "])";
        });

    m.def("round_robin_subpartitions", &round_robin_subpartitions, py::arg("partition"),
          py::arg("n"));
    m.def(
        "union_partitions",
        [](const std::vector<Partition>& parts) { return union_partitions(parts); },
        py::arg("partitions"));
    m.def("subdivide", &subdivide, py::arg("partition"), py::arg("level"));

    py::class_<SplineBasis>(m, "SplineBasis")
        .def(py::init<Partition, int>(), py::arg("partition"), py::arg("order"))
        .def("__len__", &SplineBasis::size)
        .def_property_readonly("size", &SplineBasis::size)
        .def("evaluate", &SplineBasis::evaluate, py::arg("j"), py::arg("x"))
        .def(
            "evaluate_all",
            [](const SplineBasis& b, double x) {
                std::vector<double> out(b.size());
                b.evaluate_all(x, out);
                return out;
            },
            py::arg("x"))
        .def("support", &SplineBasis::support, py::arg("j"));

    py::class_<SampledMatrix>(m, "SampledMatrix")
        .def_readonly("values", &SampledMatrix::values)
        .def_readonly("grid", &SampledMatrix::grid);

    py::class_<AtomRef>(m, "AtomRef")
        .def_readonly("subpartition", &AtomRef::subpartition)
        .def_readonly("index", &AtomRef::index);

    py::class_<SplineDictionary>(m, "SplineDictionary")
        .def(py::init<Partition, std::vector<Partition>, int>(), py::arg("parent"),
             py::arg("subpartitions"), py::arg("order"))
        .def_static("cardinal", &SplineDictionary::cardinal, py::arg("c"), py::arg("d"),
                    py::arg("b"), py::arg("bprime"), py::arg("order"))
        .def_property_readonly("order", &SplineDictionary::order)
        .def_property_readonly("parent", &SplineDictionary::parent)
        .def_property_readonly("subpartition_count", &SplineDictionary::subpartition_count)
        .def("subpartition_basis", &SplineDictionary::subpartition_basis, py::arg("j"),
             py::return_value_policy::reference_internal)
        .def_property_readonly("atom_count", &SplineDictionary::atom_count)
        .def_property_readonly("space_dimension", &SplineDictionary::space_dimension)
        .def("atom", &SplineDictionary::atom, py::arg("idx"))
        .def("evaluate_atom", &SplineDictionary::evaluate_atom, py::arg("idx"), py::arg("x"))
        .def("atom_support", &SplineDictionary::atom_support, py::arg("idx"))
        .def("__len__", &SplineDictionary::atom_count);

    m.def(
        "sample_basis",
        [](const SplineBasis& b, const std::vector<double>& grid) { return sample(b, grid); },
        py::arg("basis"), py::arg("grid"));
    m.def(
        "sample_dictionary",
        [](const SplineDictionary& d, const std::vector<double>& grid) {
            return sample(d, grid);
        },
        py::arg("dictionary"), py::arg("grid"));
    m.def(
        "span_rank",
        [](const SplineDictionary& d, const std::vector<double>& grid) {
            return span_rank(d, grid);
        },
        py::arg("dictionary"), py::arg("grid"));
    m.def("numerical_rank", &numerical_rank, py::arg("matrix"));
    m.def(
        "dictionary_metadata_json",
        [](const SplineDictionary& d) { return dictionary_metadata(d).dump(2); },
        py::arg("dictionary"));

    py::class_<SampledSignal>(m, "SampledSignal")
        .def(py::init<std::vector<double>, double, double>(), py::arg("values"), py::arg("c"),
             py::arg("d"))
        .def_readonly("values", &SampledSignal::values)
        .def_readonly("c", &SampledSignal::c)
        .def_readonly("d", &SampledSignal::d)
        .def_property_readonly("h", &SampledSignal::h)
        .def("grid", &SampledSignal::grid)
        .def("norm", &SampledSignal::norm)
        .def("__len__", &SampledSignal::size);

    m.def("chirp", &chirp, py::arg("x"));
    m.def("gen_chirp", &gen_chirp, py::arg("samples"));

    py::class_<PiecewiseConstantPhase>(m, "PiecewiseConstantPhase")
        .def(py::init([](std::vector<double> breakpoints, std::vector<double> levels) {
                 return PiecewiseConstantPhase{std::move(breakpoints), std::move(levels)};
             }),
             py::arg("breakpoints"), py::arg("levels"))
        .def_readonly("breakpoints", &PiecewiseConstantPhase::breakpoints)
        .def_readonly("levels", &PiecewiseConstantPhase::levels)
        .def("value", &PiecewiseConstantPhase::value, py::arg("x"));

    m.def("random_phase", &random_phase, py::arg("c"), py::arg("d"), py::arg("pieces"),
          py::arg("seed"));
    m.def(
        "gen_phased_cosine",
        [](std::size_t samples, const PiecewiseConstantPhase& phase, double c, double d) {
            return gen_phased_cosine(samples, phase, c, d);
        },
        py::arg("samples"), py::arg("phase"), py::arg("c"), py::arg("d"));
    m.def(
        "gen_phased_cosine",
        [](std::size_t samples, std::uint64_t seed) { return gen_phased_cosine(samples, seed); },
        py::arg("samples"), py::arg("seed"));

    py::enum_<CurvatureVariant>(m, "CurvatureVariant")
        .value("Minus", CurvatureVariant::Minus)
        .value("Plus", CurvatureVariant::Plus);

    py::class_<CurvatureKnots>(m, "CurvatureKnots")
        .def_readonly("knots", &CurvatureKnots::knots)
        .def_readonly("nonfinite_count", &CurvatureKnots::nonfinite_count);

    m.def("curvature_knots", &curvature_knots, py::arg("signal"), py::arg("variant"));
    m.def("curvature_profile", &curvature_profile, py::arg("signal"), py::arg("variant"));
    m.def("adapt_partition", &adapt_partition, py::arg("signal"), py::arg("level"),
          py::arg("variant") = CurvatureVariant::Minus);

    py::class_<PursuitProblem>(m, "PursuitProblem")
        .def(py::init<Eigen::MatrixXd, Eigen::VectorXd, double>(), py::arg("atoms"),
             py::arg("signal"), py::arg("tol"))
        .def_static("build", &PursuitProblem::build, py::arg("atoms"), py::arg("signal"),
                    py::arg("tol"))
        .def_property_readonly("columns", &PursuitProblem::columns)
        .def_property_readonly("signal", &PursuitProblem::signal)
        .def_property_readonly("column_norms", &PursuitProblem::column_norms)
        .def_property_readonly("tol", &PursuitProblem::tol)
        .def_property_readonly("atom_count", &PursuitProblem::atom_count)
        .def_property_readonly("sample_count", &PursuitProblem::sample_count);

    py::class_<StageLog>(m, "StageLog")
        .def_readonly("oomp_atoms", &StageLog::oomp_atoms)
        .def_readonly("oomp_residual", &StageLog::oomp_residual)
        .def_readonly("stagnated", &StageLog::stagnated)
        .def_readonly("oomp_residual_history", &StageLog::oomp_residual_history)
        .def_readonly("total_swaps", &StageLog::total_swaps)
        .def_readonly("total_pruned", &StageLog::total_pruned)
        .def_readonly("refine_rounds", &StageLog::refine_rounds);

    py::class_<AtomicDecomposition>(m, "AtomicDecomposition")
        .def_readonly("gamma", &AtomicDecomposition::gamma)
        .def_readonly("coeffs", &AtomicDecomposition::coeffs)
        .def_readonly("residual_norm", &AtomicDecomposition::residual_norm)
        .def_readonly("stage_log", &AtomicDecomposition::stage_log)
        .def_property_readonly("k", &AtomicDecomposition::k);

    m.def("oomp", &oomp, py::arg("problem"));
    m.def("least_squares_decomposition", &least_squares_decomposition, py::arg("problem"),
          py::arg("gamma"));
    m.def("swap_refine", &swap_refine, py::arg("decomposition"), py::arg("problem"));
    m.def("boomp_prune", &boomp_prune, py::arg("decomposition"), py::arg("problem"),
          py::arg("budget"));
    m.def("sparse_approximate", &sparse_approximate, py::arg("problem"));
    m.def(
        "reconstruct",
        [](const AtomicDecomposition& dec, const SplineDictionary& dict,
           const std::vector<double>& grid) { return reconstruct(dec, dict, grid); },
        py::arg("decomposition"), py::arg("dictionary"), py::arg("grid"));

    m.def("load_signal", &load_signal, py::arg("path"), py::arg("c"), py::arg("d"));
    m.def("save_signal", &save_signal, py::arg("signal"), py::arg("path"));
    m.def("load_partition", &load_partition, py::arg("path"));
    m.def("save_partition", &save_partition, py::arg("partition"), py::arg("path"));
}
