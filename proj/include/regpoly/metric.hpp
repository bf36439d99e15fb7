#pragma once

// Edge lengths on a seed solid. Platonic seeds use graph distance along the
// edges of S; the quasiregular seeds use shortest paths along edges and face
// diagonals, with a square/pentagon diagonal counted as d.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "regpoly/seeds.hpp"

namespace regpoly {

// m + n*d
struct EdgeLength {
    int m = 0;
    int n = 0;

    friend auto operator<=>(const EdgeLength&, const EdgeLength&) = default;
    std::string to_string() const;  // "1", "d", "2d", "1+d"
};

// Accepts "3", "d", "2d", "1+d"; throws std::invalid_argument otherwise.
EdgeLength parse_edge_length(std::string_view text);

// One length, or a pair for the alternating two-length faces. In a pair the
// first entry is the length of the starting edge.
struct LengthConfig {
    std::vector<EdgeLength> lengths;

    bool two_lengths() const { return lengths.size() == 2; }
    friend auto operator<=>(const LengthConfig&, const LengthConfig&) = default;
    std::string to_string() const;  // "2", "1,4", "2d"
};

// "2d" or "1,4"
LengthConfig parse_length_config(std::string_view text);

enum class OrientationType { Directed, Bicolor };
std::string orientation_name(OrientationType t);

struct AdmissibleConfig {
    LengthConfig lengths;
    int q_p = 0;
};

// The edge lengths the classification allows for each seed, with q_P.
std::vector<AdmissibleConfig> admissible_edge_lengths(SeedKind kind);
// q_P = 2 f1 / f0 with f1 = |G(S)| / 2
int expected_vertex_degree(const SeedSolid& s);

class SeedMetric {
public:
    explicit SeedMetric(const SeedSolid& s);

    const SeedSolid& seed() const { return *seed_; }
    // d: sqrt(2) for the cuboctahedron, the golden ratio for the icosidodecahedron,
    // unused (zero) for Platonic seeds.
    ExactNumber diagonal() const;
    ExactNumber value(EdgeLength len) const;

    // Throws std::invalid_argument when u == v.
    EdgeLength distance(VertexId u, VertexId v) const;
    // Plain graph distance along edges of S.
    int graph_distance(VertexId u, VertexId v) const;
    EdgeLength antipodal_length() const { return distance(0, seed_->opposite[0]); }

    // Every w at this distance from v, never the vertex opposite v.
    std::vector<VertexId> neighbors_at(VertexId v, EdgeLength len) const;
    // Distinct lengths realized between non-opposite vertex pairs, ascending by value.
    std::vector<EdgeLength> length_classes() const;

    // Every minimal path from u to v in the step graph (edges, plus face
    // diagonals on quasiregular seeds), as vertex sequences u ... v.
    std::vector<std::vector<VertexId>> shortest_paths(VertexId u, VertexId v) const;

    // Computed from the rotation group: Directed iff no rotation reverses an
    // edge of this length. For table lengths the answer is checked against
    // the classification and a mismatch throws std::logic_error.
    OrientationType orientation_type(EdgeLength len) const;
    // Some rotation maps e1 onto e2 as ordered pairs.
    bool same_orientation(DirectedEdge e1, DirectedEdge e2) const;
    // Orbit index of every directed edge of this length under the rotation
    // group, keyed by (u, v); orbits are numbered by their smallest member.
    std::vector<std::pair<DirectedEdge, int>> directed_edge_orbits(EdgeLength len) const;

private:
    bool is_step(VertexId u, VertexId v, EdgeLength& weight) const;

    const SeedSolid* seed_;
    std::vector<std::vector<EdgeLength>> dist_;
    std::vector<std::vector<int>> graph_dist_;
    std::vector<std::vector<std::pair<VertexId, EdgeLength>>> steps_;
};

// Metric on seed_solid(kind), cached like the seed itself.
const SeedMetric& seed_metric(SeedKind kind);

}  // namespace regpoly
