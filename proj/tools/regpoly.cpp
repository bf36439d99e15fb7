// regpoly: enumerate, trace, verify, dual and export.
// Exit codes: 0 success or expected outcome, 1 verification mismatch or
// rejection, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "regpoly/exporter.hpp"

using namespace regpoly;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct CliConfig {
    std::string seed;
    std::string lengths;
    std::string shape;
    std::string out;
    std::string record;
    std::string kind = "petrie";
    bool exhaustive = false;
    bool only_accepted = false;
    bool json = false;
    bool symbolic = false;
    int threads = 0;
    int verbosity = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PipelineOptions pipeline_options(const CliConfig& c) {
    PipelineOptions o;
    o.mode = c.exhaustive ? PipelineMode::Exhaustive : PipelineMode::Pruned;
    o.threads = c.threads;
    try {
        if (!c.seed.empty()) o.seed = parse_seed_kind(c.seed);
        if (!c.lengths.empty()) o.lengths = parse_length_config(c.lengths);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return o;
}

std::string type_string(const MapType& t) {
    return "{" + std::to_string(t.p) + "," + std::to_string(t.q) + "}_" + std::to_string(t.r);
}

void print_record_row(std::ostream& os, const ClassificationRecord& r) {
    os << std::left << std::setw(4) << r.id << ' ' << std::setw(18) << seed_name(r.seed) << ' ' << std::setw(4)
       << r.lengths.to_string() << ' ' << std::setw(11) << type_string(r.type) << " (" << r.f_vector[0] << ", "
       << r.f_vector[1] << ", " << r.f_vector[2] << ")  " << std::setw(16) << r.shape.to_string() << ' '
       << (r.orientable ? "orientable    " : "non-orientable") << " genus " << std::setw(3) << r.genus
       << (r.planar_faces ? " planar" : "       ") << "  " << r.census_label << '\n';
}

void print_record(std::ostream& os, const ClassificationRecord& r) {
    os << "id:           " << (r.id.empty() ? "-" : r.id) << '\n'
       << "seed:         " << seed_name(r.seed) << '\n'
       << "edge lengths: " << r.lengths.to_string() << '\n'
       << "shape:        " << r.shape.to_string() << '\n'
       << "type:         " << type_string(r.type) << '\n'
       << "f-vector:     (" << r.f_vector[0] << ", " << r.f_vector[1] << ", " << r.f_vector[2] << ")\n"
       << "orientable:   " << (r.orientable ? "yes" : "no") << ", genus " << r.genus << '\n'
       << "index:        " << r.index << " (" << r.flag_orbits << " flag orbits)\n"
       << "face orbits:  " << r.face_orbits_rotation << " under rotations, " << r.face_orbits_full << " under G(P)\n"
       << "planar faces: " << (r.planar_faces ? "yes" : "no") << '\n'
       << "orientation:  " << (r.orientation ? orientation_name(*r.orientation) : "two lengths") << '\n';
    if (!r.census_label.empty()) os << "census map:   " << r.census_label << '\n';
}

void write_outputs(const CliConfig& c, const PipelineResult& res) {
    if (c.out.empty()) return;
    fs::path dir(c.out);
    export_report(make_report(res, c.only_accepted), dir / "report.json");
    for (const auto& r : res.records) {
        export_off(r.polyhedron, dir / (r.id + ".off"));
        if (c.symbolic) {
            std::ofstream sym(dir / (r.id + ".coords"));
            write_symbolic_coordinates(sym, *r.polyhedron.seed);
        }
    }
}

int cmd_enumerate(const CliConfig& c) {
    auto opt = pipeline_options(c);
    auto res = run_pipeline(opt);
    write_outputs(c, res);
    if (c.json) {
        std::cout << report_to_string(make_report(res, c.only_accepted));
    } else {
        std::cout << mode_name(res.mode) << " enumeration: " << res.records.size() << " accepted, " << res.rejections.size()
                  << " rejected (" << res.evaluated << " evaluated)\n";
        for (const auto& r : res.records) print_record_row(std::cout, r);
        if (res.records.empty() && res.matches_table()) std::cout << "no polyhedra expected for this selection\n";
        if (c.verbosity > 0)
            for (const auto& r : res.rejections)
                if (r.stage != Stage::Excluded || c.verbosity > 1)
                    std::cout << "  rejected " << r.key << "  " << r.descriptor << "  " << stage_name(r.stage) << '/'
                              << diagnosis_name(r.diagnosis) << "  " << r.detail << '\n';
    }
    if (!res.matches_table()) {
        std::cerr << "mismatch against the reference table:\n";
        for (const auto& m : res.mismatches) std::cerr << "  " << m << '\n';
        return kMismatch;
    }
    return kOk;
}

int cmd_trace(const CliConfig& c) {
    if (c.seed.empty() || c.lengths.empty() || c.shape.empty()) throw UsageError("trace needs a seed, edge length(s) and a shape");
    SeedKind kind;
    Shape shape;
    std::optional<FaceTracer> made;
    try {
        kind = parse_seed_kind(c.seed);
        shape = parse_shape(c.shape);
        made.emplace(seed_metric(kind), parse_length_config(c.lengths));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const FaceTracer& tracer = *made;
    int rc = kOk;
    int n = 0;
    for (const auto& w : shape.words) {
        TraceResult t;
        try {
            t = tracer.trace(w);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!t.ok()) {
            std::cout << w.to_string() << ": " << diagnosis_name(t.diagnosis) << " (" << t.detail << ")\n";
            rc = kMismatch;
            continue;
        }
        const auto& poly = *t.polygon;
        std::cout << w.to_string() << ": closed, p=" << poly.size() << ", " << (poly.planar ? "planar" : "non-planar") << '\n';
        std::cout << "  vertices:";
        for (auto v : poly.boundary) std::cout << ' ' << v;
        std::cout << "\n  turns:   ";
        for (auto d : poly.turns) std::cout << ' ' << direction_name(d);
        std::cout << "\n  lengths: ";
        for (auto l : poly.lengths) std::cout << ' ' << l.to_string();
        std::cout << '\n';
        if (!c.out.empty()) {
            fs::path path(c.out);
            if (shape.words.size() > 1) path.replace_filename(path.stem().string() + "_" + std::to_string(n) + path.extension().string());
            export_face_off(seed_solid(kind), poly.boundary, path);
        }
        ++n;
    }
    return rc;
}

int cmd_verify(const CliConfig& c) {
    if (!c.shape.empty()) {
        if (c.seed.empty() || c.lengths.empty()) throw UsageError("--shape needs --seed and --lengths");
        Verification v;
        try {
            v = verify_shape(parse_seed_kind(c.seed), parse_length_config(c.lengths), parse_shape(c.shape));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!v.ok()) {
            std::cout << "rejected at " << stage_name(v.stage) << ": " << diagnosis_name(v.diagnosis) << " (" << v.detail << ")\n";
            return kMismatch;
        }
        if (c.json) std::cout << record_to_string(*v.record);
        else print_record(std::cout, *v.record);
        return kOk;
    }

    auto res = run_pipeline(pipeline_options(c));
    auto lemmas = lemma_crosschecks(res);
    bool ok = res.matches_table() && lemmas.all_hold();
    for (const auto& m : res.mismatches) std::cout << "MISMATCH " << m << '\n';
    for (const auto& chk : lemmas.checks) {
        if (!chk.applicable && c.verbosity == 0) continue;
        std::cout << (chk.applicable ? (chk.holds ? "ok   " : "FAIL ") : "n/a  ") << chk.record << "  " << chk.predicate;
        if (!chk.detail.empty()) std::cout << "  (" << chk.detail << ")";
        std::cout << '\n';
    }
    std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
    return ok ? kOk : kMismatch;
}

int cmd_dual(const CliConfig& c) {
    if (c.record.empty()) throw UsageError("dual needs a record id such as P03");
    DualityKind kind;
    try {
        kind = parse_duality_kind(c.kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto res = run_pipeline(pipeline_options(c));
    auto it = std::find_if(res.records.begin(), res.records.end(), [&](const auto& r) { return r.id == c.record; });
    if (it == res.records.end()) throw UsageError("no record " + c.record);
    const auto& P = it->polyhedron;

    DualResult d;
    if (kind == DualityKind::Petrie) d = petrie_dual(P, *build_flags(P).flags);
    else d = c_dual(P);
    if (!d.ok()) {
        std::cout << duality_name(kind) << " dual rejected: " << diagnosis_name(d.diagnosis) << " (" << d.detail << ")\n";
        return kMismatch;
    }
    FaceTracer tracer(seed_metric(it->seed), d.polyhedron->lengths);
    auto v = verify_polyhedron(tracer, *d.polyhedron);
    if (!v.ok()) {
        std::cout << duality_name(kind) << " dual is not a regular polyhedron of index 2: " << diagnosis_name(v.diagnosis) << " ("
                  << v.detail << ")\n";
        return kMismatch;
    }
    auto& rec = *v.record;
    rec.id = table_row_id(rec);
    for (const auto& row : reference_table())
        if (row.id == rec.id) rec.census_label = row.census_label;

    bool ok = true;
    auto law = [&](bool holds, const std::string& what) {
        std::cout << (holds ? "ok   " : "FAIL ") << what << '\n';
        ok = ok && holds;
    };
    if (c.json) std::cout << record_to_string(rec);
    else print_record(std::cout, rec);
    if (kind == DualityKind::Petrie) {
        law(rec.type.p == it->type.r && rec.type.r == it->type.p && rec.type.q == it->type.q, "type {p,q}_r becomes {r,q}_p");
        law(rec.id == it->petrie_partner, "dual is the Petrie partner " + it->petrie_partner);
        auto again = petrie_dual(*d.polyhedron, *build_flags(*d.polyhedron).flags);
        law(again.ok() && face_set(*again.polyhedron) == face_set(P), "Petrie dual of the dual is the original");
        law(petrie_law_holds(petrie_shape_law(it->shape), FaceTracer(seed_metric(it->seed), it->lengths), *d.polyhedron),
            "Petrie polygons have the predicted shape");
    } else {
        law(rec.id == it->c_partner, "dual is the C partner " + it->c_partner);
        if (it->orientation && rec.orientation) law(*it->orientation != *rec.orientation, "directed and bicolor type swap");
        auto again = c_dual(*d.polyhedron);
        law(again.ok() && equal_up_to_point_reflection(*again.polyhedron, P), "C of the dual is the original up to point reflection");
        for (const auto& pr : c_length_pairs(P))
            law(pr.value_sum_antipodal, "edge lengths " + pr.length.to_string() + " + " + pr.c_length.to_string() + " add to the antipodal distance");
        law(c_law_holds(tracer, *d.polyhedron, c_shape_law(it->shape)), "C faces have the predicted shape");
    }
    if (!c.out.empty()) export_off(*d.polyhedron, fs::path(c.out) / (c.record + "_" + duality_name(kind) + ".off"));
    return ok ? kOk : kMismatch;
}

int cmd_export(const CliConfig& c) {
    if (c.out.empty()) throw UsageError("export needs --out");
    auto res = run_pipeline(pipeline_options(c));
    if (!c.record.empty() && c.record != "all") {
        auto it = std::find_if(res.records.begin(), res.records.end(), [&](const auto& r) { return r.id == c.record; });
        if (it == res.records.end()) throw UsageError("no record " + c.record);
        export_off(it->polyhedron, fs::path(c.out) / (it->id + ".off"));
        if (c.symbolic) {
            std::ofstream sym(fs::path(c.out) / (it->id + ".coords"));
            write_symbolic_coordinates(sym, *it->polyhedron.seed);
        }
        std::cout << "wrote " << (fs::path(c.out) / (it->id + ".off")).string() << '\n';
        return kOk;
    }
    write_outputs(c, res);
    std::cout << "wrote " << res.records.size() << " OFF files and report.json to " << c.out << '\n';
    return res.matches_table() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite regular polyhedra of index 2 with vertices on one orbit"};
    app.require_subcommand(1);
    app.fallthrough();
    CliConfig cfg;
    app.add_flag("-v,--verbose", cfg.verbosity, "More output (repeat for more)");

    auto add_filters = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "cube, dodecahedron, icosahedron, cuboctahedron or icosidodecahedron");
        sub->add_option("--lengths", cfg.lengths, "Edge length(s): 2, d, 2d, 1+d or a pair such as 1,4");
        sub->add_flag("--exhaustive", cfg.exhaustive, "Every word of length 4, no lemma pruning");
        sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    };

    auto* en = app.add_subcommand("enumerate", "Run the classification pipeline");
    add_filters(en);
    en->add_option("--out", cfg.out, "Directory for report.json and OFF files");
    en->add_flag("--only-accepted", cfg.only_accepted, "Leave rejections out of the report");
    en->add_flag("--json", cfg.json, "Print the report as JSON");
    en->add_flag("--symbolic", cfg.symbolic, "Also write exact coordinates next to each OFF file");

    auto* tr = app.add_subcommand("trace", "Trace face boundaries for a shape");
    tr->add_option("seed", cfg.seed, "Seed solid")->required();
    tr->add_option("lengths", cfg.lengths, "Edge length(s)")->required();
    tr->add_option("shape", cfg.shape, "Shape such as \"[hl,f]\" or \"[r,l]&[l,r]\"")->required();
    tr->add_option("--out", cfg.out, "Write the traced face as OFF");

    auto* ve = app.add_subcommand("verify", "Verify one candidate, or the whole classification with its lemma checks");
    add_filters(ve);
    ve->add_option("--shape", cfg.shape, "Verify this shape (needs --seed and --lengths)");
    ve->add_flag("--json", cfg.json, "Print the record as JSON");

    auto* du = app.add_subcommand("dual", "Petrie dual or C-dual of an accepted record");
    du->add_option("record", cfg.record, "Record id, P01 .. P10")->required();
    du->add_option("--kind", cfg.kind, "petrie or c")->capture_default_str();
    du->add_option("--out", cfg.out, "Directory for the dual's OFF file");
    du->add_flag("--json", cfg.json, "Print the dual record as JSON");

    auto* ex = app.add_subcommand("export", "Write OFF files and the report");
    add_filters(ex);
    ex->add_option("record", cfg.record, "Record id or 'all'");
    ex->add_option("--out", cfg.out, "Output directory")->required();
    ex->add_flag("--only-accepted", cfg.only_accepted, "Leave rejections out of the report");
    ex->add_flag("--symbolic", cfg.symbolic, "Also write exact coordinates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*en) return cmd_enumerate(cfg);
        if (*tr) return cmd_trace(cfg);
        if (*ve) return cmd_verify(cfg);
        if (*du) return cmd_dual(cfg);
        if (*ex) return cmd_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}
