#pragma once

// Candidate polyhedra assembled from traced faces, their flag maps, and the
// combinatorial invariants computed from them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "regpoly/tracer.hpp"

namespace regpoly {

using Cycle = std::vector<VertexId>;

// The same cycle for every rotation and reversal of the vertex list.
Cycle canonical_cycle(const Cycle& c);
Cycle apply_permutation(const Permutation& g, const Cycle& c);

struct CandidatePolyhedron {
    const SeedSolid* seed = nullptr;
    LengthConfig lengths;
    Shape shape;
    std::vector<Cycle> faces;         // orbit by orbit, each orbit sorted by canonical cycle
    std::vector<int> face_orbit;      // rotation orbit of each face (0 or 1)
    std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, sorted

    int p() const { return faces.empty() ? 0 : static_cast<int>(faces.front().size()); }
    int f0() const { return seed->f0(); }
    int f1() const { return static_cast<int>(edges.size()); }
    int f2() const { return static_cast<int>(faces.size()); }
};

// Faces only, as unordered set of canonical cycles; used to compare
// candidates built from different words.
std::vector<Cycle> face_set(const CandidatePolyhedron& P);

struct AssemblyResult {
    std::optional<CandidatePolyhedron> polyhedron;
    Diagnosis diagnosis = Diagnosis::OrbitMismatch;
    std::string detail;
    bool ok() const { return polyhedron.has_value(); }
};

// Rotation orbit of one face, sorted by canonical cycle.
std::vector<Cycle> rotation_orbit(const SeedSolid& s, const Cycle& face);

// Builds the faces as rotation orbits of the seed faces and checks, in
// order: orbit sizes, two faces per edge, vertex degree q_P, no two faces
// sharing consecutive edges, connectivity.
AssemblyResult assemble(const SeedSolid& s, const LengthConfig& lengths, const Shape& shape,
                        const std::vector<Cycle>& face_seeds);

// Same checks for an arbitrary face list (seed solids themselves, duals).
// Each face's orbit index is given by `face_orbit`; may be empty.
AssemblyResult assemble_faces(const SeedSolid& s, const LengthConfig& lengths, const Shape& shape,
                              std::vector<Cycle> faces, std::vector<int> face_orbit, int q_expected);

// Flag (face F, edge i of F, end) has id 2 * (offset[F] + i) + end; its
// vertex is F[i] for end 0 and F[i+1] for end 1.
struct FlagMap {
    std::vector<int> face_offset;
    std::vector<VertexId> vertex;
    std::vector<int> edge;  // index into CandidatePolyhedron::edges
    std::vector<int> face;
    std::array<std::vector<int>, 3> adj;

    int size() const { return static_cast<int>(vertex.size()); }
    // -1 if no such flag
    int find(VertexId v, int edge_id, int face_id) const;
};

struct FlagResult {
    std::optional<FlagMap> flags;
    Diagnosis diagnosis = Diagnosis::Rho1IllDefined;
    std::string detail;
    bool ok() const { return flags.has_value(); }
};

// Fails with Rho1IllDefined when some vertex link is not a single cycle.
FlagResult build_flags(const CandidatePolyhedron& P);

// Involutions are fixed-point free and adj0 commutes with adj2.
bool flag_map_consistent(const FlagMap& fm);

struct AutomorphismInfo {
    int order = 0;
    bool regular = false;
    std::vector<Permutation> elements;  // induced permutations of flags
};

// Every flag-graph automorphism, by extending base flag 0 to each flag.
AutomorphismInfo automorphisms(const FlagMap& fm);

struct GeometricInfo {
    std::vector<std::size_t> symmetries;  // indices into seed.full_group preserving P
    std::vector<Permutation> flag_perms;  // induced on flags, same order
    int order = 0;
    int index = 0;
    int flag_orbits = 0;
    int face_orbits_rotation = 0;
    int face_orbits_full = 0;
};

// Throws std::logic_error when |G(P)| does not divide the automorphism order.
GeometricInfo geometric_index(const CandidatePolyhedron& P, const FlagMap& fm, int aut_order);

struct MapType {
    int p = 0, q = 0, r = 0;
};

// The closed zigzags: every two but no three consecutive edges in one face.
std::vector<Cycle> petrie_polygons(const CandidatePolyhedron& P, const FlagMap& fm);
MapType type_and_petrie(const CandidatePolyhedron& P, const FlagMap& fm);

struct Topology {
    bool orientable = false;
    int euler = 0;
    int genus = 0;
};

Topology orientability_genus(const CandidatePolyhedron& P, const FlagMap& fm);

// Rotation-orbit index of every face; orbits numbered by first appearance.
std::vector<int> rotation_orbit_labels(const SeedSolid& s, const std::vector<Cycle>& faces);

// Lex-least reading of one face per rotation orbit, orbit words sorted.
Shape describe_shape(const FaceTracer& tracer, const CandidatePolyhedron& P);
// Every word of `expected` is a reading of a different face orbit of P.
bool shape_matches(const FaceTracer& tracer, const CandidatePolyhedron& P, const Shape& expected);

// Order of a permutation.
long long permutation_order(const Permutation& p);
// Composition on flags: first a, then b.
Permutation then(const Permutation& a, const Permutation& b);

}  // namespace regpoly
