#include "regpoly/exporter.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#ifndef REGPOLY_VERSION
#define REGPOLY_VERSION "0.0.0"
#endif

namespace regpoly {

using Json = nlohmann::ordered_json;

namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void write_vertex(std::ostream& out, const ExactVec3& v) {
    out << v.c[0].to_decimal(kOffDigits) << ' ' << v.c[1].to_decimal(kOffDigits) << ' ' << v.c[2].to_decimal(kOffDigits) << '\n';
}

int count_edges(const std::vector<std::vector<int>>& faces) {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f[i], b = f[(i + 1) % f.size()];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    return static_cast<int>(edges.size());
}

Json nullable(const std::string& s) {
    return s.empty() ? Json(nullptr) : Json(s);
}

std::string string_or_empty(const Json& j) {
    return j.is_null() ? std::string() : j.get<std::string>();
}

Json record_json(const ClassificationRecord& r) {
    Json j;
    j["id"] = r.id;
    j["seed"] = seed_name(r.seed);
    j["edgeLengths"] = r.lengths.to_string();
    j["shape"] = r.shape.to_string();
    j["tableShape"] = nullable(r.table_shape);
    j["type"] = {{"p", r.type.p}, {"q", r.type.q}, {"r", r.type.r}};
    j["fVector"] = r.f_vector;
    j["orientable"] = r.orientable;
    j["eulerCharacteristic"] = r.euler;
    j["genus"] = r.genus;
    j["index"] = r.index;
    j["flagOrbits"] = r.flag_orbits;
    j["automorphismOrder"] = r.automorphism_order;
    j["symmetryOrder"] = r.symmetry_order;
    j["faceOrbitsUnderRotation"] = r.face_orbits_rotation;
    j["faceOrbitsUnderFull"] = r.face_orbits_full;
    j["planarFaces"] = r.planar_faces;
    j["orientationType"] = r.orientation ? Json(orientation_name(*r.orientation)) : Json(nullptr);
    j["censusLabel"] = nullable(r.census_label);
    j["notes"] = nullable(r.notes);
    j["petriePartner"] = nullable(r.petrie_partner);
    j["cDualPartner"] = nullable(r.c_partner);
    j["key"] = r.key;
    j["faces"] = r.polyhedron.faces;
    j["faceOrbit"] = r.polyhedron.face_orbit;
    return j;
}

ClassificationRecord record_from_json(const Json& j) {
    ClassificationRecord r;
    r.id = j.at("id").get<std::string>();
    r.seed = parse_seed_kind(j.at("seed").get<std::string>());
    r.lengths = parse_length_config(j.at("edgeLengths").get<std::string>());
    r.shape = parse_shape(j.at("shape").get<std::string>());
    r.table_shape = string_or_empty(j.at("tableShape"));
    const auto& t = j.at("type");
    r.type = {t.at("p").get<int>(), t.at("q").get<int>(), t.at("r").get<int>()};
    r.f_vector = j.at("fVector").get<std::array<int, 3>>();
    r.orientable = j.at("orientable").get<bool>();
    r.euler = j.at("eulerCharacteristic").get<int>();
    r.genus = j.at("genus").get<int>();
    r.index = j.at("index").get<int>();
    r.flag_orbits = j.at("flagOrbits").get<int>();
    r.automorphism_order = j.at("automorphismOrder").get<int>();
    r.symmetry_order = j.at("symmetryOrder").get<int>();
    r.face_orbits_rotation = j.at("faceOrbitsUnderRotation").get<int>();
    r.face_orbits_full = j.at("faceOrbitsUnderFull").get<int>();
    r.planar_faces = j.at("planarFaces").get<bool>();
    if (!j.at("orientationType").is_null()) {
        auto o = j.at("orientationType").get<std::string>();
        if (o == "directed") r.orientation = OrientationType::Directed;
        else if (o == "bicolor") r.orientation = OrientationType::Bicolor;
        else throw std::runtime_error("unknown orientation type '" + o + "'");
    }
    r.census_label = string_or_empty(j.at("censusLabel"));
    r.notes = string_or_empty(j.at("notes"));
    r.petrie_partner = string_or_empty(j.at("petriePartner"));
    r.c_partner = string_or_empty(j.at("cDualPartner"));
    r.key = j.at("key").get<std::string>();

    CandidatePolyhedron& P = r.polyhedron;
    P.seed = &seed_solid(r.seed);
    P.lengths = r.lengths;
    P.shape = r.shape;
    P.faces = j.at("faces").get<std::vector<Cycle>>();
    P.face_orbit = j.at("faceOrbit").get<std::vector<int>>();
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& f : P.faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            VertexId a = f[i], b = f[(i + 1) % f.size()];
            if (a < 0 || b < 0 || a >= P.seed->f0() || b >= P.seed->f0()) throw std::runtime_error("vertex index out of range");
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    P.edges.assign(edges.begin(), edges.end());
    return r;
}

Json rejection_json(const RejectionRecord& r) {
    Json j;
    j["key"] = r.key;
    j["seed"] = seed_name(r.seed);
    j["edgeLengths"] = r.lengths.to_string();
    j["descriptor"] = r.descriptor;
    j["stage"] = stage_name(r.stage);
    j["diagnosis"] = diagnosis_name(r.diagnosis);
    j["detail"] = r.detail;
    j["claimedDiagnosis"] = r.claimed_diagnosis ? Json(diagnosis_name(*r.claimed_diagnosis)) : Json(nullptr);
    return j;
}

Stage parse_stage(const std::string& s) {
    for (auto st : {Stage::Config, Stage::Trace, Stage::Assembly, Stage::Flags, Stage::Regularity, Stage::Index, Stage::Lemma,
                    Stage::Excluded})
        if (stage_name(st) == s) return st;
    throw std::runtime_error("unknown stage '" + s + "'");
}

RejectionRecord rejection_from_json(const Json& j) {
    RejectionRecord r;
    r.key = j.at("key").get<std::string>();
    r.seed = parse_seed_kind(j.at("seed").get<std::string>());
    r.lengths = parse_length_config(j.at("edgeLengths").get<std::string>());
    r.descriptor = j.at("descriptor").get<std::string>();
    r.stage = parse_stage(j.at("stage").get<std::string>());
    r.diagnosis = parse_diagnosis(j.at("diagnosis").get<std::string>());
    r.detail = j.at("detail").get<std::string>();
    if (!j.at("claimedDiagnosis").is_null()) r.claimed_diagnosis = parse_diagnosis(j.at("claimedDiagnosis").get<std::string>());
    return r;
}

}  // namespace

std::string tool_version() {
    return REGPOLY_VERSION;
}

std::string seed_coordinate_convention() {
    return "centered at the origin; cube (+-1,+-1,+-1); cuboctahedron all permutations of (+-1,+-1,0); "
           "icosahedron cyclic permutations of (0,+-1,+-phi); dodecahedron (+-phi,+-phi,+-phi) and cyclic "
           "permutations of (0,+-1,+-phi^2); icosidodecahedron cyclic permutations of (0,0,+-2phi) and "
           "(+-1,+-phi,+-phi^2); phi = (1+sqrt(5))/2; OFF coordinates are rounded to 17 significant digits, "
           "the exact values are a + b sqrt(D)";
}

void write_off(std::ostream& out, const CandidatePolyhedron& P) {
    const SeedSolid& s = *P.seed;
    out << "OFF\n" << s.f0() << ' ' << P.f2() << ' ' << P.f1() << '\n';
    for (const auto& v : s.vertices) write_vertex(out, v);
    for (const auto& f : P.faces) {
        out << f.size();
        for (VertexId v : f) out << ' ' << v;
        out << '\n';
    }
}

void write_face_off(std::ostream& out, const SeedSolid& s, const Cycle& face) {
    out << "OFF\n" << face.size() << " 1 " << face.size() << '\n';
    for (VertexId v : face) write_vertex(out, s.vertices[v]);
    out << face.size();
    for (std::size_t i = 0; i < face.size(); ++i) out << ' ' << i;
    out << '\n';
}

void write_symbolic_coordinates(std::ostream& out, const SeedSolid& s) {
    out << "# x_a x_b y_a y_b z_a z_b D  (coordinate = a + b sqrt(D))\n";
    for (const auto& v : s.vertices) {
        int d = 0;
        for (const auto& c : v.c) {
            out << c.a() << ' ' << c.b() << ' ';
            d = std::max(d, c.radicand());
        }
        out << d << '\n';
    }
}

void export_off(const CandidatePolyhedron& P, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    write_off(out, P);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void export_face_off(const SeedSolid& s, const Cycle& face, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    write_face_off(out, s, face);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::array<int, 3> OffMesh::f_vector() const {
    return {static_cast<int>(vertices.size()), count_edges(faces), static_cast<int>(faces.size())};
}

OffMesh read_off(std::istream& in) {
    // comments start with '#'
    std::string all, line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        all += line;
        all += '\n';
    }
    std::istringstream ss(all);
    std::string header;
    if (!(ss >> header) || header != "OFF") throw std::runtime_error("missing OFF header");
    int nv = 0, nf = 0;
    OffMesh mesh;
    if (!(ss >> nv >> nf >> mesh.declared_edges) || nv < 0 || nf < 0) throw std::runtime_error("bad OFF counts line");
    mesh.vertices.resize(nv);
    for (auto& v : mesh.vertices)
        if (!(ss >> v[0] >> v[1] >> v[2])) throw std::runtime_error("truncated vertex list");
    mesh.faces.resize(nf);
    for (auto& f : mesh.faces) {
        int k = 0;
        if (!(ss >> k) || k < 3) throw std::runtime_error("bad face line");
        f.resize(k);
        for (auto& x : f)
            if (!(ss >> x) || x < 0 || x >= nv) throw std::runtime_error("bad face index");
    }
    return mesh;
}

AtlasReport make_report(const PipelineResult& result, bool only_accepted) {
    AtlasReport r;
    r.tool_version = tool_version();
    r.seed_coordinate_convention = seed_coordinate_convention();
    r.mode = mode_name(result.mode);
    r.only_accepted = only_accepted;
    r.records = result.records;
    if (!only_accepted) r.rejections = result.rejections;
    r.mismatches = result.mismatches;
    return r;
}

std::string report_to_string(const AtlasReport& report) {
    Json j;
    j["schemaVersion"] = report.schema_version;
    j["toolVersion"] = report.tool_version;
    j["seedCoordinateConvention"] = report.seed_coordinate_convention;
    j["mode"] = report.mode;
    j["onlyAccepted"] = report.only_accepted;
    j["summary"] = {{"accepted", report.records.size()},
                    {"rejected", report.rejections.size()},
                    {"mismatches", report.mismatches.size()}};
    j["records"] = Json::array();
    for (const auto& r : report.records) j["records"].push_back(record_json(r));
    j["rejections"] = Json::array();
    for (const auto& r : report.rejections) j["rejections"].push_back(rejection_json(r));
    j["mismatches"] = report.mismatches;
    return j.dump(2) + "\n";
}

AtlasReport parse_report(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
        AtlasReport r;
        r.schema_version = j.at("schemaVersion").get<int>();
        if (r.schema_version != kReportSchemaVersion)
            throw std::runtime_error("unsupported report schema version " + std::to_string(r.schema_version));
        r.tool_version = j.at("toolVersion").get<std::string>();
        r.seed_coordinate_convention = j.at("seedCoordinateConvention").get<std::string>();
        r.mode = j.at("mode").get<std::string>();
        r.only_accepted = j.at("onlyAccepted").get<bool>();
        for (const auto& x : j.at("records")) r.records.push_back(record_from_json(x));
        for (const auto& x : j.at("rejections")) r.rejections.push_back(rejection_from_json(x));
        r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed report: ") + e.what());
    }
}

void export_report(const AtlasReport& report, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    out << report_to_string(report);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string record_to_string(const ClassificationRecord& record) {
    return record_json(record).dump(2) + "\n";
}

}  // namespace regpoly
