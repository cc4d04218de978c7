#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hazvis/asympt.hpp"
#include "hazvis/curvedist.hpp"
#include "hazvis/distmodel.hpp"
#include "hazvis/hazest.hpp"
#include "hazvis/kernelset.hpp"
#include "hazvis/sampler.hpp"
#include "hazvis/vebench/config.hpp"
#include "hazvis/vebench/emit.hpp"
#include "hazvis/vebench/engine.hpp"
#include "hazvis/vebench/scenario.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace hazvis;

namespace {

Norm parse_norm(const py::object& p) {
    if (py::isinstance<py::str>(p)) {
        const auto s = p.cast<std::string>();
        if (s == "inf" || s == "linf") return Norm::linf;
        if (s == "1" || s == "l1") return Norm::l1;
        if (s == "2" || s == "l2") return Norm::l2;
    } else if (py::isinstance<py::float_>(p) && std::isinf(p.cast<double>())) {
        return Norm::linf;
    } else if (py::isinstance<py::int_>(p)) {
        const int v = p.cast<int>();
        if (v == 1) return Norm::l1;
        if (v == 2) return Norm::l2;
    }
    throw py::value_error("p must be 1, 2 or inf");
}

Direction parse_direction(const std::string& d) {
    if (d == "est_to_truth" || d == "eh") return Direction::est_to_truth;
    if (d == "truth_to_est" || d == "he") return Direction::truth_to_est;
    throw py::value_error("direction must be 'est_to_truth' or 'truth_to_est'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kernel hazard estimation and visual error criteria";

    py::class_<LifetimeModel>(m, "LifetimeModel")
        .def_property_readonly("name", &LifetimeModel::name)
        .def_property_readonly("params", &LifetimeModel::params)
        .def_property_readonly("support_end", &LifetimeModel::support_end)
        .def("cdf", &LifetimeModel::cdf)
        .def("survival", &LifetimeModel::survival)
        .def("pdf", &LifetimeModel::pdf)
        .def("hazard", &LifetimeModel::hazard)
        .def("hazard_d1", &LifetimeModel::hazard_d1)
        .def("hazard_d2", &LifetimeModel::hazard_d2)
        .def("quantile", &LifetimeModel::quantile)
        .def("__repr__", [](const LifetimeModel& model) { return "<LifetimeModel " + model.name() + ">"; });

    m.def("make_model", &make_model, py::arg("name"), py::arg("params") = ParamMap{});
    m.def("catalog", &catalog);
    m.def("inverse_transform", &inverse_transform, py::arg("model"), py::arg("u"));

    py::class_<CensoredSample>(m, "CensoredSample")
        .def(py::init<std::vector<double>, std::vector<std::uint8_t>>(), py::arg("x"), py::arg("delta"))
        .def_property_readonly("x", [](const CensoredSample& s) { return std::vector<double>(s.x().begin(), s.x().end()); })
        .def_property_readonly("delta",
                               [](const CensoredSample& s) {
                                   return std::vector<int>(s.delta().begin(), s.delta().end());
                               })
        .def("__len__", &CensoredSample::size);
    m.def("generate", &generate, py::arg("failure"), py::arg("censor"), py::arg("n"), py::arg("seed"));

    py::class_<KernelSpec>(m, "KernelSpec")
        .def_property_readonly("name", [](const KernelSpec& k) { return std::string(k.name()); })
        .def_property_readonly("alpha", &KernelSpec::alpha)
        .def_property_readonly("beta", &KernelSpec::beta)
        .def("value", &KernelSpec::value)
        .def("derivative", &KernelSpec::derivative);
    m.def("builtin_kernel", &builtin_kernel, py::arg("name"));

    py::class_<Bandwidth>(m, "Bandwidth")
        .def_static("fixed", &Bandwidth::fixed)
        .def_static("from_schedule", &Bandwidth::from_schedule, py::arg("c0"), py::arg("n"))
        .def_readonly("value", &Bandwidth::value);

    py::class_<CurveGraph>(m, "CurveGraph")
        .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("xs"), py::arg("ys"))
        .def_property_readonly("xs", [](const CurveGraph& g) { return std::vector<double>(g.xs().begin(), g.xs().end()); })
        .def_property_readonly("ys", [](const CurveGraph& g) { return std::vector<double>(g.ys().begin(), g.ys().end()); })
        .def("__len__", &CurveGraph::size);

    m.def("estimate", &estimate, py::arg("sample"), py::arg("kernel"), py::arg("b"), py::arg("x"));
    m.def("estimate_d1", &estimate_d1, py::arg("sample"), py::arg("kernel"), py::arg("b"), py::arg("x"));
    m.def(
        "estimate_on_grid",
        [](const CensoredSample& s, const KernelSpec& k, const Bandwidth& b, const std::vector<double>& grid) {
            return estimate_on_grid(s, k, b, grid);
        },
        py::arg("sample"), py::arg("kernel"), py::arg("b"), py::arg("grid"));
    m.def(
        "hazard_graph", [](const LifetimeModel& model, const std::vector<double>& grid) { return hazard_graph(model, grid); },
        py::arg("model"), py::arg("grid"));
    m.def("default_tau", &default_tau, py::arg("failure"), py::arg("censor"), py::arg("level") = 0.05);

    m.def(
        "point_to_graph", [](double x, double y, const CurveGraph& g) { return point_to_graph({x, y}, g); },
        py::arg("x"), py::arg("y"), py::arg("graph"));
    m.def(
        "ve",
        [](const std::string& direction, const py::object& p, const CurveGraph& est, const CurveGraph& truth) {
            return ve(parse_direction(direction), parse_norm(p), est, truth);
        },
        py::arg("direction"), py::arg("p"), py::arg("est"), py::arg("truth"));
    m.def(
        "se", [](const py::object& p, const CurveGraph& est, const CurveGraph& truth) { return se(parse_norm(p), est, truth); },
        py::arg("p"), py::arg("est"), py::arg("truth"));
    m.def(
        "lp", [](const py::object& p, const CurveGraph& est, const CurveGraph& truth) { return lp(parse_norm(p), est, truth); },
        py::arg("p"), py::arg("est"), py::arg("truth"));

    py::class_<ErrorReport>(m, "ErrorReport")
        .def_readonly("l1", &ErrorReport::l1)
        .def_readonly("l2", &ErrorReport::l2)
        .def_readonly("linf", &ErrorReport::linf)
        .def_readonly("ve1_eh", &ErrorReport::ve1_eh)
        .def_readonly("ve1_he", &ErrorReport::ve1_he)
        .def_readonly("ve2_eh", &ErrorReport::ve2_eh)
        .def_readonly("ve2_he", &ErrorReport::ve2_he)
        .def_readonly("veinf_eh", &ErrorReport::veinf_eh)
        .def_readonly("veinf_he", &ErrorReport::veinf_he)
        .def_readonly("se1", &ErrorReport::se1)
        .def_readonly("se2", &ErrorReport::se2)
        .def_readonly("seinf", &ErrorReport::seinf);
    m.def("error_report", &error_report, py::arg("est"), py::arg("truth"));

    auto make_spec = [](const LifetimeModel& failure, const LifetimeModel& censor, const KernelSpec& kernel,
                        std::size_t n, double b, double lo, double hi) {
        return AsymptoticSpec{failure, censor, kernel, n, Bandwidth::fixed(b), {lo, hi}};
    };
    m.def(
        "mise_asymptotic",
        [make_spec](const LifetimeModel& f, const LifetimeModel& g, const KernelSpec& k, std::size_t n, double b,
                    double lo, double hi) { return mise_asymptotic(make_spec(f, g, k, n, b, lo, hi)); },
        py::arg("failure"), py::arg("censor"), py::arg("kernel"), py::arg("n"), py::arg("b"), py::arg("lo"),
        py::arg("hi"));
    m.def(
        "weighted_mise_asymptotic",
        [make_spec](const LifetimeModel& f, const LifetimeModel& g, const KernelSpec& k, std::size_t n, double b,
                    double lo, double hi) { return weighted_mise_asymptotic(make_spec(f, g, k, n, b, lo, hi)); },
        py::arg("failure"), py::arg("censor"), py::arg("kernel"), py::arg("n"), py::arg("b"), py::arg("lo"),
        py::arg("hi"));
    m.def("bridge_weight", &bridge_weight, py::arg("failure"), py::arg("x"));
    m.def("dn_normalizer", &dn_normalizer, py::arg("failure"), py::arg("x0"), py::arg("est_value"),
          py::arg("true_value"));

    py::class_<vebench::RankingReport>(m, "RankingReport")
        .def_readonly("shift", &vebench::RankingReport::shift)
        .def_readonly("l2_shifted", &vebench::RankingReport::l2_shifted)
        .def_readonly("l2_oversmoothed", &vebench::RankingReport::l2_oversmoothed)
        .def_readonly("se2_shifted", &vebench::RankingReport::se2_shifted)
        .def_readonly("se2_oversmoothed", &vebench::RankingReport::se2_oversmoothed)
        .def_property_readonly("reversal", &vebench::RankingReport::reversal);
    m.def(
        "scenario_bimodal",
        [](std::optional<double> shift) {
            vebench::BimodalScenarioParams params;
            if (shift) params.shift = *shift;
            return vebench::scenario_bimodal(params);
        },
        py::arg("shift") = py::none());

    // Runs an experiment from JSON config text; writes the CSV outputs when
    // out_dir is given and returns the summary rows as dicts.
    m.def(
        "run_experiment",
        [](const std::string& config_json, std::size_t threads, std::optional<std::string> out_dir) {
            const vebench::ExperimentConfig config = vebench::parse_config(config_json);
            vebench::AggregateResult result;
            {
                py::gil_scoped_release release;
                result = vebench::run(config, {threads, {}, {}});
                if (out_dir) vebench::emit(result, *out_dir);
            }
            py::list rows;
            for (const auto& row : result.summary) {
                py::dict d;
                d["n"] = row.n;
                d["criterion"] = row.criterion;
                d["mean"] = row.mean;
                d["stderr"] = row.stderr_mean;
                d["target"] = row.target ? py::cast(*row.target) : py::none();
                d["target_kind"] = row.target_kind;
                rows.append(d);
            }
            return rows;
        },
        py::arg("config_json"), py::arg("threads") = 0, py::arg("out_dir") = py::none());

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
