#include "regpoly/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace regpoly {

namespace {

std::string cycle_key(const Cycle& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(c[i]);
    }
    return out;
}

std::string base_key(SeedKind kind, const LengthConfig& lengths) {
    return seed_name(kind) + "|" + lengths.to_string();
}

std::string word_key(const std::string& base, const ShapeWord& w) {
    return base + "|word:" + w.to_string();
}

std::string faces_key(const std::string& base, const std::string& a, const std::string& b = "") {
    if (b.empty() || a == b) return base + "|faces:" + a;
    return base + "|faces:" + std::min(a, b) + "&" + std::max(a, b);
}

std::vector<EdgeLength> sorted_lengths(const LengthConfig& c) {
    auto v = c.lengths;
    std::sort(v.begin(), v.end());
    return v;
}

Shape shape_of(std::string_view text) {
    Shape s = parse_shape(text);
    std::sort(s.words.begin(), s.words.end());
    return s;
}

std::vector<Shape> shapes_of(std::initializer_list<const char*> texts) {
    std::vector<Shape> out;
    for (const char* t : texts) out.push_back(shape_of(t));
    return out;
}

struct Job {
    std::string key;
    SeedKind kind;
    const FaceTracer* tracer;
    std::vector<Cycle> seeds;
    Shape shape;
};

using Outcome = Verification;

Outcome reject(Stage st, Diagnosis d, std::string detail) {
    Outcome o;
    o.stage = st;
    o.diagnosis = d;
    o.detail = std::move(detail);
    return o;
}

const ShapeWord kForwardWord{{Direction::F, Direction::F, Direction::F, Direction::F}};

Outcome evaluate(const Job& job) {
    const SeedSolid& s = seed_solid(job.kind);
    auto a = assemble(s, job.tracer->config(), job.shape, job.seeds);
    if (!a.ok()) return reject(Stage::Assembly, a.diagnosis, a.detail);
    auto o = verify_polyhedron(*job.tracer, std::move(*a.polyhedron));
    if (o.record) o.record->key = job.key;
    return o;
}

void apply_row(ClassificationRecord& rec, const ReferenceRow& row) {
    rec.id = row.id;
    rec.table_shape = row.shape;
    rec.census_label = row.census_label;
    rec.notes = row.notes;
}

// Stated failure modes for the two-length candidates that do
// not survive.
std::optional<Diagnosis> claimed_failure(SeedKind kind, const Shape& listed) {
    static const std::map<std::pair<SeedKind, std::string>, Diagnosis> claims = [] {
        using D = Diagnosis;
        std::map<std::pair<SeedKind, std::string>, Diagnosis> m;
        auto put = [&](SeedKind k, const char* shape, D d) { m[{k, shape_of(shape).to_string()}] = d; };
        put(SeedKind::Cube, "[r,r,r,r]", D::VertexRevisit);
        put(SeedKind::Cube, "[r,r,l,l]", D::VertexRevisit);
        put(SeedKind::Cube, "[r,l,l,r]", D::Rho1IllDefined);
        put(SeedKind::Cube, "[r,l]&[l,r]", D::Rho1IllDefined);
        put(SeedKind::Dodecahedron, "[r,l,l,r]", D::VertexRevisit);
        put(SeedKind::Dodecahedron, "[r,r,l,l]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[hr,hr,hr,hr]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[hr,hr,hl,hl]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[hr,hl,hl,hr]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[hr,hl]&[hl,hr]", D::Rho1IllDefined);
        put(SeedKind::Icosahedron, "[sr,sr,sr,sr]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[sr,sl,sl,sr]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[sr,sr,sl,sl]", D::VertexRevisit);
        put(SeedKind::Icosahedron, "[sr,sl]&[sl,sr]", D::Rho1IllDefined);
        return m;
    }();
    auto it = claims.find({kind, listed.to_string()});
    if (it == claims.end()) return std::nullopt;
    return it->second;
}

struct Universe {
    std::vector<std::unique_ptr<FaceTracer>> tracers;
    std::vector<RejectionRecord> immediate;  // config and trace failures
    std::vector<Job> jobs;
    std::map<std::string, std::string> descriptor;
    std::map<std::string, Shape> listed;  // lemma-listed keys with the listed shape
};

void build_config(Universe& u, SeedKind kind, const LengthConfig& lengths) {
    const SeedSolid& s = seed_solid(kind);
    const SeedMetric& m = seed_metric(kind);
    const std::string base = base_key(kind, lengths);

    int degree = 0;
    for (auto len : lengths.lengths) degree += static_cast<int>(m.neighbors_at(0, len).size());
    if (degree != expected_vertex_degree(s)) {
        RejectionRecord r;
        r.key = base + "|config";
        r.seed = kind;
        r.lengths = lengths;
        r.descriptor = "edge lengths " + lengths.to_string();
        r.stage = Stage::Config;
        r.diagnosis = Diagnosis::WrongVertexDegree;
        r.detail = "vertex degree " + std::to_string(degree) + ", expected " + std::to_string(expected_vertex_degree(s));
        u.immediate.push_back(std::move(r));
        return;
    }

    u.tracers.push_back(std::make_unique<FaceTracer>(m, lengths));
    const FaceTracer& tracer = *u.tracers.back();
    const auto& alpha = tracer.alphabet();

    struct Orbit {
        Cycle rep;
        ShapeWord least;
    };
    std::map<std::string, Orbit> orbits;
    std::map<std::string, ShapeWord> failures;

    auto classify = [&](const ShapeWord& w, std::string& key_out, std::string& orbit_out) {
        auto t = tracer.trace(w);
        if (!t.ok()) {
            key_out = word_key(base, w);
            orbit_out.clear();
            if (!failures.count(key_out)) {
                failures.emplace(key_out, w);
                RejectionRecord r;
                r.key = key_out;
                r.seed = kind;
                r.lengths = lengths;
                r.descriptor = w.to_string();
                r.stage = Stage::Trace;
                r.diagnosis = t.diagnosis;
                r.detail = t.detail;
                u.immediate.push_back(std::move(r));
            }
            return;
        }
        auto orbit = rotation_orbit(s, t.polygon->boundary);
        orbit_out = cycle_key(orbit.front());
        key_out = faces_key(base, orbit_out);
        auto it = orbits.find(orbit_out);
        if (it == orbits.end()) orbits.emplace(orbit_out, Orbit{t.polygon->boundary, w});
        else if (w < it->second.least) it->second.least = w;
    };

    const std::size_t k = alpha.size();
    for (std::size_t code = 0; code < k * k * k * k; ++code) {
        ShapeWord w;
        std::size_t c = code;
        for (int i = 3; i >= 0; --i) {
            w.symbols[i] = alpha[c % k];
            c /= k;
        }
        std::string key, orbit;
        classify(w, key, orbit);
    }

    // lemma-listed candidates, mapped onto the same keys
    std::set<std::pair<std::string, std::string>> extra_pairs;
    for (const auto& shape : candidate_words(kind, lengths)) {
        std::vector<std::string> ids;
        std::string failed;
        for (const auto& w : shape.words) {
            std::string key, orbit;
            classify(w, key, orbit);
            if (orbit.empty()) {
                if (failed.empty()) failed = key;
            } else {
                ids.push_back(orbit);
            }
        }
        std::string key;
        if (!failed.empty()) key = failed;
        else if (ids.size() == 1) key = faces_key(base, ids[0]);
        else {
            key = faces_key(base, ids[0], ids[1]);
            if (ids[0] != ids[1]) extra_pairs.insert({std::min(ids[0], ids[1]), std::max(ids[0], ids[1])});
        }
        u.listed.emplace(key, shape);
    }

    auto add_job = [&](const std::string& key, std::vector<const Orbit*> parts) {
        Job j;
        j.key = key;
        j.kind = kind;
        j.tracer = &tracer;
        std::vector<std::string> desc;
        for (const Orbit* o : parts) {
            j.seeds.push_back(o->rep);
            j.shape.words.push_back(o->least);
        }
        std::sort(j.shape.words.begin(), j.shape.words.end());
        u.descriptor[key] = j.shape.to_string();
        u.jobs.push_back(std::move(j));
    };
    for (const auto& [id, o] : orbits) add_job(faces_key(base, id), {&o});
    for (auto a = orbits.begin(); a != orbits.end(); ++a)
        for (auto b = std::next(a); b != orbits.end(); ++b)
            if (a->second.rep.size() == b->second.rep.size() || extra_pairs.count({a->first, b->first}))
                add_job(faces_key(base, a->first, b->first), {&a->second, &b->second});
}

bool length_filter_matches(const std::optional<LengthConfig>& filter, const LengthConfig& c) {
    return !filter || sorted_lengths(*filter) == sorted_lengths(c);
}

std::vector<Outcome> run_jobs(const std::vector<Job>& jobs, const std::vector<bool>& active, int threads) {
    std::vector<Outcome> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();)
            if (active[i]) out[i] = evaluate(jobs[i]);
    };
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, 16);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

void match_table(PipelineResult& res, const PipelineOptions& opt) {
    std::vector<const ReferenceRow*> expected;
    for (const auto& row : reference_table())
        if ((!opt.seed || *opt.seed == row.seed) && length_filter_matches(opt.lengths, parse_length_config(row.lengths)))
            expected.push_back(&row);

    std::set<std::string> used;
    int extra = 0;
    for (auto& rec : res.records) {
        FaceTracer tracer(seed_metric(rec.seed), rec.lengths);
        const ReferenceRow* hit = nullptr;
        for (const ReferenceRow* row : expected) {
            if (used.count(row->id) || row->seed != rec.seed) continue;
            if (sorted_lengths(parse_length_config(row->lengths)) != sorted_lengths(rec.lengths)) continue;
            if (!shape_matches(tracer, rec.polyhedron, shape_of(row->shape))) continue;
            hit = row;
            break;
        }
        if (!hit) {
            ++extra;
            std::ostringstream id;
            id << "X" << (extra < 10 ? "0" : "") << extra;
            rec.id = id.str();
            res.mismatches.push_back(rec.id + ": accepted " + seed_name(rec.seed) + " " + rec.lengths.to_string() + " " +
                                     rec.shape.to_string() + " matches no reference row");
            continue;
        }
        used.insert(hit->id);
        apply_row(rec, *hit);
        auto check = [&](bool ok, const std::string& what) {
            if (!ok) res.mismatches.push_back(hit->id + ": " + what);
        };
        check(rec.type.p == hit->type.p && rec.type.q == hit->type.q && rec.type.r == hit->type.r, "type differs");
        check(rec.f_vector == hit->f_vector, "f-vector differs");
        check(rec.orientable == hit->orientable, "orientability differs");
        check(rec.genus == hit->genus, "genus " + std::to_string(rec.genus) + ", expected " + std::to_string(hit->genus));
        check(rec.planar_faces == hit->planar_faces, "planarity differs");
        check(rec.face_orbits_rotation == hit->face_orbits_rotation, "face orbits under rotations differ");
        check(rec.face_orbits_full == hit->face_orbits_full, "face orbits under the full group differ");
        check(rec.orientation == hit->orientation, "orientation type differs");
    }
    for (const ReferenceRow* row : expected)
        if (!used.count(row->id)) res.mismatches.push_back(row->id + ": expected " + row->shape + " on the " + seed_name(row->seed) + " not accepted");
}

void attach_partners(PipelineResult& res) {
    for (auto& rec : res.records) {
        const auto& P = rec.polyhedron;
        auto fr = build_flags(P);
        if (fr.ok()) {
            auto pd = petrie_dual(P, *fr.flags);
            if (pd.ok()) {
                auto fs = face_set(*pd.polyhedron);
                for (const auto& other : res.records)
                    if (other.seed == rec.seed && face_set(other.polyhedron) == fs) rec.petrie_partner = other.id;
            }
        }
        auto cd = c_dual(P);
        if (cd.ok())
            for (const auto& other : res.records)
                if (other.seed == rec.seed && equal_up_to_point_reflection(*cd.polyhedron, other.polyhedron)) rec.c_partner = other.id;
    }
    for (const auto& rec : res.records)
        for (const auto& row : reference_table())
            if (row.id == rec.id) {
                auto present = [&](const std::string& id) {
                    return std::any_of(res.records.begin(), res.records.end(), [&](const auto& r) { return r.id == id; });
                };
                if (present(row.petrie_partner) && rec.petrie_partner != row.petrie_partner)
                    res.mismatches.push_back(rec.id + ": Petrie partner " + rec.petrie_partner + ", expected " + row.petrie_partner);
                if (present(row.c_partner) && rec.c_partner != row.c_partner)
                    res.mismatches.push_back(rec.id + ": C partner " + rec.c_partner + ", expected " + row.c_partner);
            }
}

}  // namespace

Verification verify_polyhedron(const FaceTracer& tracer, CandidatePolyhedron P) {
    const SeedSolid& s = *P.seed;
    auto fr = build_flags(P);
    if (!fr.ok()) return reject(Stage::Flags, fr.diagnosis, fr.detail);
    const FlagMap& fm = *fr.flags;

    auto aut = automorphisms(fm);
    if (!aut.regular)
        return reject(Stage::Regularity, Diagnosis::NotRegular,
                      std::to_string(aut.order) + " automorphisms for " + std::to_string(fm.size()) + " flags");

    auto g = geometric_index(P, fm, aut.order);
    if (g.index != 2 || g.flag_orbits != 2)
        return reject(Stage::Index, Diagnosis::WrongIndex,
                      "index " + std::to_string(g.index) + ", " + std::to_string(g.flag_orbits) + " flag orbits");

    if (g.face_orbits_full == 1) {
        for (int i = 0; i < P.f2(); ++i) {
            auto r = tracer.readings(P.faces[i]);
            if (std::find(r.begin(), r.end(), kForwardWord) != r.end())
                return reject(Stage::Lemma, Diagnosis::FaceShapeFfff, "one face orbit under G(P) with a face [f,f,f,f]");
        }
    }

    ClassificationRecord rec;
    rec.seed = s.kind;
    rec.lengths = tracer.config();
    rec.shape = describe_shape(tracer, P);
    P.shape = rec.shape;
    rec.type = type_and_petrie(P, fm);
    rec.f_vector = {P.f0(), P.f1(), P.f2()};
    auto topo = orientability_genus(P, fm);
    rec.orientable = topo.orientable;
    rec.euler = topo.euler;
    rec.genus = topo.genus;
    rec.index = g.index;
    rec.flag_orbits = g.flag_orbits;
    rec.automorphism_order = aut.order;
    rec.symmetry_order = g.order;
    rec.face_orbits_rotation = g.face_orbits_rotation;
    rec.face_orbits_full = g.face_orbits_full;
    rec.planar_faces = std::all_of(P.faces.begin(), P.faces.end(), [&](const Cycle& f) { return face_planarity(f, s); });
    if (!rec.lengths.two_lengths()) rec.orientation = tracer.metric().orientation_type(rec.lengths.lengths[0]);
    rec.polyhedron = std::move(P);
    Outcome o;
    o.record = std::move(rec);
    return o;
}

Verification verify_shape(SeedKind kind, const LengthConfig& lengths, const Shape& shape) {
    if (shape.words.empty() || shape.words.size() > 2) throw std::invalid_argument("one or two shape words required");
    const SeedSolid& s = seed_solid(kind);
    FaceTracer tracer(seed_metric(kind), lengths);
    std::vector<Cycle> seeds;
    std::set<Cycle> orbit_ids;
    for (const auto& w : shape.words) {
        auto t = tracer.trace(w);
        if (!t.ok()) return reject(Stage::Trace, t.diagnosis, w.to_string() + ": " + t.detail);
        if (orbit_ids.insert(rotation_orbit(s, t.polygon->boundary).front()).second) seeds.push_back(t.polygon->boundary);
    }
    auto a = assemble(s, lengths, shape, seeds);
    if (!a.ok()) return reject(Stage::Assembly, a.diagnosis, a.detail);
    auto o = verify_polyhedron(tracer, std::move(*a.polyhedron));
    if (o.record) {
        o.record->key = base_key(kind, lengths) + "|shape:" + shape.to_string();
        std::string id = table_row_id(*o.record);
        for (const auto& row : reference_table())
            if (row.id == id) apply_row(*o.record, row);
    }
    return o;
}

std::string table_row_id(const ClassificationRecord& rec) {
    FaceTracer tracer(seed_metric(rec.seed), rec.lengths);
    for (const auto& row : reference_table()) {
        if (row.seed != rec.seed) continue;
        if (sorted_lengths(parse_length_config(row.lengths)) != sorted_lengths(rec.lengths)) continue;
        if (shape_matches(tracer, rec.polyhedron, shape_of(row.shape))) return row.id;
    }
    return "";
}

std::vector<LengthConfig> length_universe(SeedKind kind) {
    auto classes = seed_metric(kind).length_classes();
    std::vector<LengthConfig> out;
    for (auto len : classes) out.push_back(LengthConfig{{len}});
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) out.push_back(LengthConfig{{classes[i], classes[j]}});
    return out;
}

std::vector<Shape> candidate_words(SeedKind kind, const LengthConfig& lengths) {
    bool admissible = false;
    for (const auto& a : admissible_edge_lengths(kind)) admissible = admissible || a.lengths == lengths;
    if (!admissible) return {};
    if (lengths.two_lengths()) {
        if (kind == SeedKind::Icosahedron)
            return shapes_of({"[hr,hr,hr,hr]", "[hr,hr,hl,hl]", "[hr,hl,hl,hr]", "[hr,hl]&[hl,hr]",
                              "[sr,sr,sr,sr]", "[sr,sr,sl,sl]", "[sr,sl,sl,sr]", "[sr,sl]&[sl,sr]"});
        return shapes_of({"[r,r,r,r]", "[r,r,l,l]", "[r,l,l,r]", "[r,l]&[l,r]"});
    }
    const bool directed = seed_metric(kind).orientation_type(lengths.lengths[0]) == OrientationType::Directed;
    if (kind == SeedKind::Dodecahedron) {
        if (directed) return shapes_of({"[hr]&[f]", "[hr]&[hl]", "[f]&[hl]", "[hr,hl]", "[hr,f]", "[hl,f]"});
        return shapes_of({"[hr,hl]&[hl,hr]", "[hr,hl]&[f,f]", "[hl,hr]&[f,f]", "[hr,hr]", "[hl,f]", "[hr,f]"});
    }
    if (directed) return shapes_of({"[r]&[f]", "[r]&[l]", "[f]&[l]", "[r,l]"});
    return shapes_of({"[r,l]&[l,r]", "[r,r]"});
}

std::string mode_name(PipelineMode mode) {
    return mode == PipelineMode::Pruned ? "pruned" : "exhaustive";
}

std::string stage_name(Stage stage) {
    switch (stage) {
        case Stage::Config: return "config";
        case Stage::Trace: return "trace";
        case Stage::Assembly: return "assembly";
        case Stage::Flags: return "flags";
        case Stage::Regularity: return "regularity";
        case Stage::Index: return "index";
        case Stage::Lemma: return "lemma";
        case Stage::Excluded: return "excluded";
    }
    return "?";
}

PipelineResult run_pipeline(const PipelineOptions& opt) {
    Universe u;
    for (auto kind : kAllSeedKinds) {
        if (opt.seed && *opt.seed != kind) continue;
        for (const auto& lengths : length_universe(kind))
            if (length_filter_matches(opt.lengths, lengths)) build_config(u, kind, lengths);
    }

    PipelineResult res;
    res.mode = opt.mode;
    const bool pruned = opt.mode == PipelineMode::Pruned;
    auto excluded = [&](const std::string& key) { return pruned && !u.listed.count(key); };
    auto finish_rejection = [&](RejectionRecord& r) {
        if (auto it = u.listed.find(r.key); it != u.listed.end()) {
            r.descriptor = it->second.to_string();
            r.claimed_diagnosis = claimed_failure(r.seed, it->second);
        }
        if (r.stage != Stage::Config && excluded(r.key)) {
            r.stage = Stage::Excluded;
            r.diagnosis = Diagnosis::ExcludedByLemma;
            r.detail = "not among the shapes left by the case analysis";
        } else {
            ++res.evaluated;
        }
        res.rejections.push_back(std::move(r));
    };
    for (auto& r : u.immediate) finish_rejection(r);

    std::vector<bool> active(u.jobs.size());
    for (std::size_t i = 0; i < u.jobs.size(); ++i) active[i] = !excluded(u.jobs[i].key);
    auto outcomes = run_jobs(u.jobs, active, opt.threads);
    for (std::size_t i = 0; i < u.jobs.size(); ++i) {
        const Job& j = u.jobs[i];
        auto& o = outcomes[i];
        if (active[i] && o.record) {
            ++res.evaluated;
            res.records.push_back(std::move(*o.record));
            continue;
        }
        RejectionRecord r;
        r.key = j.key;
        r.seed = j.kind;
        r.lengths = j.tracer->config();
        r.descriptor = u.descriptor[j.key];
        r.stage = o.stage;
        r.diagnosis = o.diagnosis;
        r.detail = o.detail;
        finish_rejection(r);
    }

    match_table(res, opt);
    attach_partners(res);
    std::sort(res.records.begin(), res.records.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::sort(res.rejections.begin(), res.rejections.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return res;
}

const std::vector<ReferenceRow>& reference_table() {
    using O = OrientationType;
    static const std::vector<ReferenceRow> rows = {
        {"P01", SeedKind::Dodecahedron, "1,4", {6, 6, 6}, {20, 60, 20}, "[r,r]", "R11.5", true, 11, true, 1, 1, std::nullopt, "P02", "P02", "Planar faces; self-dual map"},
        {"P02", SeedKind::Dodecahedron, "1,4", {6, 6, 6}, {20, 60, 20}, "[r,l] & [l,r]", "N22.3", false, 22, false, 2, 1, std::nullopt, "P01", "P01", "One face orbit under G(P)"},
        {"P03", SeedKind::Dodecahedron, "2", {4, 6, 5}, {20, 60, 30}, "[hl,f]", "N12.1", false, 12, false, 1, 1, O::Directed, "P04", "P07", ""},
        {"P04", SeedKind::Dodecahedron, "2", {5, 6, 4}, {20, 60, 24}, "[f,f] & [hl,hl]", "R9.16", true, 9, true, 2, 2, O::Directed, "P03", "P08", "Planar faces"},
        {"P05", SeedKind::Icosidodecahedron, "d", {6, 4, 5}, {30, 60, 20}, "[r,l]", "N12.1*", false, 12, false, 1, 1, O::Directed, "P06", "P09", ""},
        {"P06", SeedKind::Icosidodecahedron, "d", {5, 4, 6}, {30, 60, 24}, "[r,r] & [l,l]", "R4.2*", true, 4, true, 2, 2, O::Directed, "P05", "P10", "Planar faces"},
        {"P07", SeedKind::Dodecahedron, "3", {4, 6, 10}, {20, 60, 30}, "[hl,f]", "R6.2", true, 6, false, 1, 1, O::Bicolor, "P08", "P03", ""},
        {"P08", SeedKind::Dodecahedron, "3", {10, 6, 4}, {20, 60, 12}, "[f,f] & [hl,hr]", "N30.11*", false, 30, false, 2, 2, O::Bicolor, "P07", "P04", ""},
        {"P09", SeedKind::Icosidodecahedron, "2d", {6, 4, 10}, {30, 60, 20}, "[r,r]", "R6.2*", true, 6, false, 1, 1, O::Bicolor, "P10", "P05", ""},
        {"P10", SeedKind::Icosidodecahedron, "2d", {10, 4, 6}, {30, 60, 12}, "[r,l] & [l,r]", "N20.1*", false, 20, false, 2, 2, O::Bicolor, "P09", "P06", ""},
    };
    return rows;
}

bool LemmaReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return !c.applicable || c.holds; });
}

bool turn_orientation_rule_holds(const FaceTracer& tracer, const std::vector<VertexId>& boundary) {
    const SeedMetric& m = tracer.metric();
    const int n = static_cast<int>(boundary.size());
    if (tracer.config().two_lengths()) return true;
    const bool directed = m.orientation_type(tracer.config().lengths[0]) == OrientationType::Directed;
    const bool dodeca = tracer.seed().kind == SeedKind::Dodecahedron;
    for (int i = 0; i < n; ++i) {
        DirectedEdge in{boundary[i], boundary[(i + 1) % n]};
        DirectedEdge out{boundary[(i + 1) % n], boundary[(i + 2) % n]};
        Direction d = tracer.direction_label(in, out.v);
        bool keeps;
        if (dodeca) keeps = d == Direction::HR || d == Direction::F || d == Direction::HL;
        else keeps = d == Direction::R || d == Direction::L;
        if (m.same_orientation(in, out) != (keeps == directed)) return false;
    }
    return true;
}

bool sigma1_squared_in_rotations(const SeedSolid& s, const Cycle& face) {
    const std::size_t n = face.size();
    for (const auto& g : s.rotation_group) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = g.perm[face[i]] == face[(i + 2) % n];
        if (ok) return true;
    }
    return false;
}

EdgeStabilizer edge_stabilizer(const CandidatePolyhedron& P, const GeometricInfo& g, std::pair<VertexId, VertexId> edge) {
    EdgeStabilizer st;
    for (std::size_t gi : g.symmetries) {
        const auto& el = P.seed->full_group[gi];
        const VertexId a = el.perm[edge.first], b = el.perm[edge.second];
        if (!((a == edge.first && b == edge.second) || (a == edge.second && b == edge.first))) continue;
        ++st.order;
        if (gi == 0) continue;
        if (el.proper) st.half_turn = true;
        else st.plane_reflection = true;
    }
    return st;
}

LemmaReport lemma_crosschecks(const PipelineResult& result) {
    LemmaReport rep;
    auto add = [&](std::string pred, const std::string& rec, bool applicable, bool holds, std::string detail = "") {
        rep.checks.push_back({std::move(pred), rec, applicable, holds, std::move(detail)});
    };
    for (const auto& rec : result.records) {
        const auto& P = rec.polyhedron;
        const SeedSolid& s = *P.seed;
        FaceTracer tracer(seed_metric(rec.seed), rec.lengths);
        const int q = rec.type.q;

        add("q f0 = 2 f1 = p f2", rec.id, true, q * P.f0() == 2 * P.f1() && 2 * P.f1() == P.p() * P.f2());

        auto fr = build_flags(P);
        if (!fr.ok()) {
            add("flag map", rec.id, true, false, fr.detail);
            continue;
        }
        auto aut = automorphisms(*fr.flags);
        auto g = geometric_index(P, *fr.flags, aut.order);
        add("flag-transitive automorphisms, two flag orbits under G(P)", rec.id, true,
            aut.regular && g.flag_orbits == 2 && g.index == 2);

        if (rec.orientation) {
            bool ok = true;
            std::string detail;
            for (const auto& e : P.edges) {
                auto st = edge_stabilizer(P, g, e);
                bool want_half_turn = *rec.orientation == OrientationType::Bicolor;
                if (st.order != 2 || st.half_turn != want_half_turn || st.plane_reflection == want_half_turn) {
                    ok = false;
                    detail = "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " stabilizer order " +
                             std::to_string(st.order);
                    break;
                }
            }
            add("edge stabilizer: half-turn for bicolor, plane reflection for directed", rec.id, true, ok, detail);
        } else {
            add("edge stabilizer: half-turn for bicolor, plane reflection for directed", rec.id, false, true,
                "two edge lengths, two edge orbits");
        }

        if (g.face_orbits_full == 1) {
            bool ok = true;
            for (const auto& f : P.faces) {
                auto r = tracer.readings(f);
                ok = ok && std::find(r.begin(), r.end(), kForwardWord) == r.end();
            }
            add("no face [f,f,f,f] with one face orbit under G(P)", rec.id, true, ok);
        } else {
            add("no face [f,f,f,f] with one face orbit under G(P)", rec.id, false, true, "two face orbits under G(P)");
        }

        bool sq = std::all_of(P.faces.begin(), P.faces.end(), [&](const Cycle& f) { return sigma1_squared_in_rotations(s, f); });
        add("sigma1^2 of every face is a rotation of S", rec.id, true, sq);

        if (rec.orientation == OrientationType::Bicolor) {
            const SeedMetric& m = tracer.metric();
            bool ok = true;
            for (const auto& f : P.faces)
                for (std::size_t i = 0; i < f.size() && ok; ++i) {
                    const std::size_t n = f.size();
                    ok = !m.same_orientation({f[i], f[(i + 1) % n]}, {f[(i + 1) % n], f[(i + 2) % n]});
                }
            add("bicolor: adjacent boundary edges have opposite orientation", rec.id, true, ok);
        }

        if (rec.orientation) {
            bool ok = std::all_of(P.faces.begin(), P.faces.end(), [&](const Cycle& f) { return turn_orientation_rule_holds(tracer, f); });
            add("turn labels against edge orientation", rec.id, true, ok);
        }

        if (rec.planar_faces) ++rep.planar_count;
    }
    const bool complete = result.records.size() == reference_table().size();
    add("exactly three polyhedra with planar faces", "*", complete, rep.planar_count == 3,
        std::to_string(rep.planar_count) + " with planar faces");
    return rep;
}

SeedSelfCheck seed_self_check(SeedKind kind) {
    SeedSelfCheck out;
    const SeedSolid& s = seed_solid(kind);
    std::vector<Cycle> faces(s.faces.begin(), s.faces.end());
    auto labels = rotation_orbit_labels(s, faces);
    auto a = assemble_faces(s, LengthConfig{{EdgeLength{1, 0}}}, Shape{}, faces, labels, s.q_s());
    if (!a.ok()) return out;
    out.assembled = true;
    auto fr = build_flags(*a.polyhedron);
    if (!fr.ok()) return out;
    auto aut = automorphisms(*fr.flags);
    out.regular = aut.regular;
    auto g = geometric_index(*a.polyhedron, *fr.flags, aut.order);
    out.index = g.index;
    out.flag_orbits = g.flag_orbits;
    out.type = type_and_petrie(*a.polyhedron, *fr.flags);
    return out;
}

}  // namespace regpoly
