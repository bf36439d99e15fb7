#pragma once

// The classification pipeline: every candidate (seed, edge length(s), face
// orbit or pair of orbits) is verified, and each ends up either as an
// accepted record or as a rejection with stage and diagnosis.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "regpoly/dualities.hpp"
#include "regpoly/maps.hpp"

namespace regpoly {

// Every single length and every pair of lengths realized on the seed, pairs
// listed shortest first. Antipodal distance is never an edge length.
std::vector<LengthConfig> length_universe(SeedKind kind);

// The shapes left after the case analysis for this seed and configuration,
// with duplicate derivations removed. Empty for configurations the analysis
// rules out entirely.
std::vector<Shape> candidate_words(SeedKind kind, const LengthConfig& lengths);

enum class PipelineMode { Pruned, Exhaustive };
std::string mode_name(PipelineMode mode);

struct PipelineOptions {
    PipelineMode mode = PipelineMode::Pruned;
    std::optional<SeedKind> seed;
    // compared as a set, so "4,1" selects the same configuration as "1,4"
    std::optional<LengthConfig> lengths;
    int threads = 0;  // 0: hardware concurrency
};

struct ClassificationRecord {
    std::string id;  // P01..P10 when a reference row matches, X01.. otherwise
    SeedKind seed = SeedKind::Cube;
    LengthConfig lengths;
    Shape shape;              // as read by the tracer
    std::string table_shape;  // spelling used in the reference table
    MapType type;
    std::array<int, 3> f_vector{};
    bool orientable = false;
    int euler = 0;
    int genus = 0;
    int index = 0;
    int flag_orbits = 0;
    int automorphism_order = 0;
    int symmetry_order = 0;
    int face_orbits_rotation = 0;
    int face_orbits_full = 0;
    bool planar_faces = false;
    std::optional<OrientationType> orientation;  // none for two lengths
    std::string census_label;
    std::string notes;
    std::string petrie_partner;  // record id, empty if not among the records
    std::string c_partner;
    std::string key;
    CandidatePolyhedron polyhedron;
};

enum class Stage { Config, Trace, Assembly, Flags, Regularity, Index, Lemma, Excluded };
std::string stage_name(Stage stage);

struct RejectionRecord {
    std::string key;
    SeedKind seed = SeedKind::Cube;
    LengthConfig lengths;
    std::string descriptor;  // the lex-least word(s) producing the candidate
    Stage stage = Stage::Trace;
    Diagnosis diagnosis = Diagnosis::VertexRevisit;
    std::string detail;
    // failure mode stated by the classification, where it states one
    std::optional<Diagnosis> claimed_diagnosis;
};

struct PipelineResult {
    PipelineMode mode = PipelineMode::Pruned;
    std::vector<ClassificationRecord> records;  // sorted by id
    std::vector<RejectionRecord> rejections;    // sorted by key
    int evaluated = 0;                          // candidates not excluded
    std::vector<std::string> mismatches;        // differences from the reference table
    bool matches_table() const { return mismatches.empty(); }
};

PipelineResult run_pipeline(const PipelineOptions& options = {});

struct Verification {
    std::optional<ClassificationRecord> record;
    Stage stage = Stage::Assembly;
    Diagnosis diagnosis = Diagnosis::OrbitMismatch;
    std::string detail;
    bool ok() const { return record.has_value(); }
};

// Flag map onward: regularity, index 2, the [f,f,f,f] rule. On success every
// record field is filled except the id, reference metadata and partners.
Verification verify_polyhedron(const FaceTracer& tracer, CandidatePolyhedron P);
// Traces the words from the canonical start edge and runs the whole stack.
// A matching reference row supplies id and metadata.
Verification verify_shape(SeedKind kind, const LengthConfig& lengths, const Shape& shape);
// Id of the reference row with this seed, lengths and shape, or "".
std::string table_row_id(const ClassificationRecord& record);

// One row of the reference table: the ten known polyhedra.
struct ReferenceRow {
    std::string id;
    SeedKind seed;
    std::string lengths;
    MapType type;
    std::array<int, 3> f_vector;
    std::string shape;
    std::string census_label;
    bool orientable;
    int genus;
    bool planar_faces;
    int face_orbits_rotation;
    int face_orbits_full;
    std::optional<OrientationType> orientation;
    std::string petrie_partner;
    std::string c_partner;
    std::string notes;
};
const std::vector<ReferenceRow>& reference_table();

struct LemmaCheck {
    std::string predicate;
    std::string record;  // record id, or "*" for global predicates
    bool applicable = true;
    bool holds = false;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaCheck> checks;
    bool all_hold() const;
    int planar_count = 0;
};

// Predicates the accepted polyhedra must satisfy, each checked directly.
LemmaReport lemma_crosschecks(const PipelineResult& result);

// Turn label against edge orientation: r/l on the quasiregular seeds and
// hr/f/hl on the dodecahedron keep the orientation exactly for directed
// type; f and sr/sl keep it exactly for bicolor type.
bool turn_orientation_rule_holds(const FaceTracer& tracer, const std::vector<VertexId>& boundary);

// Some rotation of S maps every boundary vertex two steps ahead.
bool sigma1_squared_in_rotations(const SeedSolid& s, const Cycle& face);

struct EdgeStabilizer {
    int order = 0;
    bool half_turn = false;         // nontrivial element proper
    bool plane_reflection = false;  // nontrivial element improper
};
EdgeStabilizer edge_stabilizer(const CandidatePolyhedron& P, const GeometricInfo& g, std::pair<VertexId, VertexId> edge);

// The seed itself run through the flag and index machinery.
struct SeedSelfCheck {
    bool assembled = false;
    bool regular = false;
    int index = 0;
    int flag_orbits = 0;
    MapType type;
};
SeedSelfCheck seed_self_check(SeedKind kind);

}  // namespace regpoly
