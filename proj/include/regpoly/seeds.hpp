#pragma once

// The five admissible seed solids: exact coordinates, edges, faces and the
// full/rotation symmetry groups realized both as matrices and as vertex
// permutations.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regpoly/exact.hpp"

namespace regpoly {

enum class SeedKind { Cube, Dodecahedron, Icosahedron, Cuboctahedron, Icosidodecahedron };

inline constexpr SeedKind kAllSeedKinds[] = {SeedKind::Cube, SeedKind::Dodecahedron, SeedKind::Icosahedron,
                                             SeedKind::Cuboctahedron, SeedKind::Icosidodecahedron};

std::string seed_name(SeedKind kind);
// Case-insensitive; throws std::invalid_argument on unknown names.
SeedKind parse_seed_kind(std::string_view name);
bool is_quasiregular(SeedKind kind);

using VertexId = int;
using Permutation = std::vector<int>;

struct DirectedEdge {
    VertexId u = -1;
    VertexId v = -1;
    DirectedEdge reversed() const { return {v, u}; }
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

struct GroupElement {
    ExactMat3 matrix;
    Permutation perm;  // perm[v] = image of vertex v
    bool proper = true;  // determinant +1
};

struct SymmetryGroups {
    std::vector<GroupElement> full;
    std::vector<GroupElement> rotation;
};

struct SeedSolid {
    SeedKind kind = SeedKind::Cube;
    int radicand = 2;
    std::vector<ExactVec3> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;  // u < v
    std::vector<std::vector<VertexId>> faces;          // counterclockwise seen from outside
    std::vector<std::vector<VertexId>> adjacency;      // sorted edge neighbours
    std::vector<VertexId> opposite;
    std::vector<GroupElement> full_group;      // element 0 is the identity
    std::vector<GroupElement> rotation_group;  // element 0 is the identity

    int f0() const { return static_cast<int>(vertices.size()); }
    // Number of edges at each vertex of S.
    int q_s() const { return static_cast<int>(adjacency[0].size()); }
    // Vertex with exactly these coordinates, or -1.
    VertexId find_vertex(const ExactVec3& p) const;
    std::string name() const { return seed_name(kind); }
};

SeedSolid make_seed(SeedKind kind);
// Built on first use and kept for the life of the program; thread-safe.
const SeedSolid& seed_solid(SeedKind kind);

// Closes the generators under composition. Throws std::invalid_argument if a
// generator does not permute the vertices and std::runtime_error if the
// closure grows past 120 elements.
SymmetryGroups group_from_generators(const std::vector<ExactMat3>& generators, const std::vector<ExactVec3>& vertices);

enum class GroupChoice { Full, Rotation };
std::vector<GroupElement> vertex_stabilizer(const SeedSolid& s, VertexId v, GroupChoice which);

// Indices of `candidates` sorted by counterclockwise angle around the outward
// axis `center`, measured from the direction of `back`. Angle 0 (pointing at
// `back` itself) sorts first.
std::vector<std::size_t> angular_order(const ExactVec3& center, const ExactVec3& back,
                                       const std::vector<ExactVec3>& candidates);

// (a b)[v] = a[b[v]]
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace regpoly
