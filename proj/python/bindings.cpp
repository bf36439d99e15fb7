// Python bindings. Results cross the boundary as the same JSON the CLI and
// the report writer produce; the package decodes it.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regpoly/exporter.hpp"

namespace py = pybind11;
using namespace regpoly;

namespace {

PipelineOptions options(const std::string& mode, const std::optional<std::string>& seed,
                        const std::optional<std::string>& lengths, int threads) {
    PipelineOptions o;
    if (mode == "exhaustive") o.mode = PipelineMode::Exhaustive;
    else if (mode != "pruned") throw std::invalid_argument("mode must be 'pruned' or 'exhaustive'");
    if (seed) o.seed = parse_seed_kind(*seed);
    if (lengths) o.lengths = parse_length_config(*lengths);
    o.threads = threads;
    return o;
}

py::dict trace_word(const FaceTracer& t, const ShapeWord& w) {
    py::dict d;
    d["word"] = w.to_string();
    auto res = t.trace(w);
    d["closed"] = res.ok();
    if (!res.ok()) {
        d["diagnosis"] = diagnosis_name(res.diagnosis);
        d["detail"] = res.detail;
        return d;
    }
    const auto& poly = *res.polygon;
    std::vector<std::string> turns, lengths;
    for (auto x : poly.turns) turns.push_back(direction_name(x));
    for (auto x : poly.lengths) lengths.push_back(x.to_string());
    d["boundary"] = poly.boundary;
    d["turns"] = turns;
    d["lengths"] = lengths;
    d["planar"] = poly.planar;
    d["p"] = poly.size();
    return d;
}

}  // namespace

PYBIND11_MODULE(_regpoly, m) {
    m.doc() = "Regular polyhedra of index two: enumeration, tracing and verification";
    m.attr("__version__") = tool_version();
    m.attr("REPORT_SCHEMA_VERSION") = kReportSchemaVersion;

    py::register_exception<std::invalid_argument>(m, "UsageError", PyExc_ValueError);

    m.def("seeds", [] {
        std::vector<std::string> out;
        for (auto k : kAllSeedKinds) out.push_back(seed_name(k));
        return out;
    });

    m.def(
        "enumerate_json",
        [](const std::string& mode, std::optional<std::string> seed, std::optional<std::string> lengths, int threads,
           bool only_accepted) {
            auto opt = options(mode, seed, lengths, threads);
            PipelineResult res;
            {
                py::gil_scoped_release release;
                res = run_pipeline(opt);
            }
            return report_to_string(make_report(res, only_accepted));
        },
        py::arg("mode") = "pruned", py::arg("seed") = py::none(), py::arg("lengths") = py::none(), py::arg("threads") = 0,
        py::arg("only_accepted") = false);

    m.def(
        "trace",
        [](const std::string& seed, const std::string& lengths, const std::string& shape) {
            auto kind = parse_seed_kind(seed);
            FaceTracer t(seed_metric(kind), parse_length_config(lengths));
            py::list out;
            for (const auto& w : parse_shape(shape).words) out.append(trace_word(t, w));
            return out;
        },
        py::arg("seed"), py::arg("lengths"), py::arg("shape"));

    m.def(
        "verify_json",
        [](const std::string& seed, const std::string& lengths, const std::string& shape) -> py::object {
            auto v = verify_shape(parse_seed_kind(seed), parse_length_config(lengths), parse_shape(shape));
            if (v.ok()) return py::str(record_to_string(*v.record));
            py::dict d;
            d["stage"] = stage_name(v.stage);
            d["diagnosis"] = diagnosis_name(v.diagnosis);
            d["detail"] = v.detail;
            return std::move(d);
        },
        py::arg("seed"), py::arg("lengths"), py::arg("shape"));

    m.def("seed_self_check", [](const std::string& seed) {
        auto sc = seed_self_check(parse_seed_kind(seed));
        py::dict d;
        d["assembled"] = sc.assembled;
        d["regular"] = sc.regular;
        d["index"] = sc.index;
        d["flag_orbits"] = sc.flag_orbits;
        d["type"] = py::make_tuple(sc.type.p, sc.type.q, sc.type.r);
        return d;
    });

    m.def(
        "export_off",
        [](const std::string& record_id, const std::string& path) {
            auto res = run_pipeline({});
            for (const auto& r : res.records)
                if (r.id == record_id) return export_off(r.polyhedron, path);
            throw std::invalid_argument("no record " + record_id);
        },
        py::arg("record_id"), py::arg("path"));
}
