#include "sasv/adcf.hpp"
#include "sasv/eer.hpp"
#include "sasv/error.hpp"
#include "sasv/formats.hpp"
#include "sasv/tandem.hpp"
#include "sasv/trialdata.hpp"
#include "sasv/version.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace sasv;

namespace {

using Scores = py::array_t<double, py::array::c_style | py::array::forcecast>;
using Labels = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

TrialClass label_at(const std::int64_t* labels, py::ssize_t i) {
    const auto v = labels[i];
    if (v < 0 || v > 2) {
        throw ParseError("label " + std::to_string(v) + " at index " + std::to_string(i) +
                         " is not 0 (target), 1 (nontarget) or 2 (spoof)");
    }
    return static_cast<TrialClass>(v);
}

void check_lengths(py::ssize_t a, py::ssize_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatchError(std::string(what) + " has " + std::to_string(a) + " entries, labels have " +
                                     std::to_string(b));
    }
}

ScoreSet to_score_set(const Scores& scores, const Labels& labels) {
    check_lengths(scores.size(), labels.size(), "scores");
    const double* s = scores.data();
    const std::int64_t* l = labels.data();
    std::vector<double> per[3];
    for (py::ssize_t i = 0; i < scores.size(); ++i) per[static_cast<int>(label_at(l, i))].push_back(s[i]);
    return ScoreSet(std::move(per[0]), std::move(per[1]), std::move(per[2]));
}

DualScoreSet to_dual_set(const Scores& asv, const Scores& cm, const Labels& labels) {
    check_lengths(asv.size(), labels.size(), "asv scores");
    check_lengths(cm.size(), labels.size(), "cm scores");
    const double* a = asv.data();
    const double* c = cm.data();
    const std::int64_t* l = labels.data();
    std::vector<DualScore> trials;
    trials.reserve(static_cast<std::size_t>(labels.size()));
    for (py::ssize_t i = 0; i < labels.size(); ++i) trials.push_back({label_at(l, i), a[i], c[i]});
    return DualScoreSet(std::move(trials));
}

GateOrder parse_order(const std::string& order) {
    if (order == "cm-first" || order == "cm_first") return GateOrder::CmFirst;
    if (order == "asv-first" || order == "asv_first") return GateOrder::AsvFirst;
    throw ParseError("unknown gate order '" + order + "' (expected cm-first or asv-first)");
}

} // namespace

PYBIND11_MODULE(_sasvmetrics, m) {
    m.doc() = "Native kernels of the sasvmetrics package.";
    m.attr("__version__") = std::string(kVersion);

    static py::handle sasv_error = py::exception<Error>(m, "SasvError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = py::reinterpret_borrow<py::object>(sasv_error)(e.name() + ": " + e.what());
            err.attr("name") = e.name();
            PyErr_SetObject(sasv_error.ptr(), err.ptr());
        }
    });

    py::class_<CostModel>(m, "CostModel")
        .def(py::init([](double pi_tar, double pi_non, double pi_spf, double c_miss, double c_fa_non,
                         double c_fa_spf) {
                 return validate_cost_model({pi_tar, pi_non, pi_spf, c_miss, c_fa_non, c_fa_spf});
             }),
             py::arg("pi_tar"), py::arg("pi_non"), py::arg("pi_spf"), py::arg("c_miss"), py::arg("c_fa_non"),
             py::arg("c_fa_spf"))
        .def_readonly("pi_tar", &CostModel::pi_tar)
        .def_readonly("pi_non", &CostModel::pi_non)
        .def_readonly("pi_spf", &CostModel::pi_spf)
        .def_readonly("c_miss", &CostModel::c_miss)
        .def_readonly("c_fa_non", &CostModel::c_fa_non)
        .def_readonly("c_fa_spf", &CostModel::c_fa_spf)
        .def("__eq__", [](const CostModel& a, const CostModel& b) { return a == b; })
        .def("__repr__", [](const CostModel& c) {
            return "CostModel(" + to_config_text(c) + ")";
        });

    m.def("load_cost_model", [](const std::string& name_or_path) { return load_cost_model(name_or_path); },
          py::arg("name_or_path"), "Preset name (adcf1, adcf2) or path to a key=value config file.");

    m.def(
        "min_adcf",
        [](const Scores& scores, const Labels& labels, const CostModel& model) {
            const auto s = to_score_set(scores, labels);
            py::gil_scoped_release release;
            const auto r = min_adcf(model, s);
            return std::make_tuple(r.min_norm_adcf, r.argmin_threshold);
        },
        py::arg("scores"), py::arg("labels"), py::arg("model"));

    m.def(
        "eers",
        [](const Scores& scores, const Labels& labels, bool include_sasv) {
            const auto s = to_score_set(scores, labels);
            std::vector<std::tuple<std::string, double, double>> out;
            {
                py::gil_scoped_release release;
                const auto sv = sv_eer(s);
                const auto spf = spf_eer(s);
                out.emplace_back("sv_eer", sv.eer, sv.threshold);
                out.emplace_back("spf_eer", spf.eer, spf.threshold);
                if (include_sasv) {
                    const auto sasv = sasv_eer(s);
                    out.emplace_back("sasv_eer", sasv.eer, sasv.threshold);
                }
            }
            return out;
        },
        py::arg("scores"), py::arg("labels"), py::arg("include_sasv") = false);

    m.def(
        "min_tdcf",
        [](const Scores& asv, const Scores& cm, const Labels& labels, const CostModel& model,
           std::optional<double> frozen_t_asv) {
            const auto d = to_dual_set(asv, cm, labels);
            py::gil_scoped_release release;
            const auto r = min_tdcf(model, d, frozen_t_asv);
            return std::make_tuple(r.min_norm_tdcf, r.t_asv, r.t_cm);
        },
        py::arg("asv_scores"), py::arg("cm_scores"), py::arg("labels"), py::arg("model"),
        py::arg("frozen_t_asv") = py::none());

    m.def(
        "gate_scores",
        [](const Scores& asv, const Scores& cm, const std::string& order, double t_gate) {
            if (asv.size() != cm.size()) {
                throw DimensionMismatchError("asv scores have " + std::to_string(asv.size()) +
                                             " entries, cm scores have " + std::to_string(cm.size()));
            }
            const auto o = parse_order(order);
            py::array_t<double> out(asv.size());
            const double* a = asv.data();
            const double* c = cm.data();
            for (py::ssize_t i = 0; i < asv.size(); ++i) {
                if (!std::isfinite(a[i]) || !std::isfinite(c[i])) {
                    throw InvalidScoreError("non-finite score at index " + std::to_string(i));
                }
            }
            double* g = out.mutable_data();
            {
                py::gil_scoped_release release;
                for (py::ssize_t i = 0; i < asv.size(); ++i) g[i] = gate_score(a[i], c[i], o, t_gate);
            }
            return out;
        },
        py::arg("asv_scores"), py::arg("cm_scores"), py::arg("order"), py::arg("t_gate"));
}
