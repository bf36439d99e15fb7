#pragma once

// Direction alphabet, shape words and the face tracer.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regpoly/diagnosis.hpp"
#include "regpoly/metric.hpp"

namespace regpoly {

// Listed in display order; f sorts last so "[hl,f]" is preferred over "[f,hl]".
enum class Direction { R, HR, SR, L, SL, HL, F };

std::string direction_name(Direction d);
Direction parse_direction(std::string_view text);
// r <-> l, hr <-> hl, sr <-> sl, f' = f
Direction prime(Direction d);
// The alphabet for 3, 4 or 5 continuations, in counterclockwise order
// starting next to the incoming edge.
std::vector<Direction> alphabet_for(int continuations);

struct ShapeWord {
    std::array<Direction, 4> symbols{};

    Direction operator[](std::size_t i) const { return symbols[i % 4]; }
    // [b,c,d,a] for k = 1
    ShapeWord shifted(int k) const;
    // [a',b',c',d']
    ShapeWord primed() const;
    // [d',c',b',a']: the same face read backwards
    ShapeWord reversed_primed() const;
    // 1, 2 or 4
    int period() const;
    // "[hl,f]" when the period is at most 2, otherwise all four symbols
    std::string to_string() const;
    friend auto operator<=>(const ShapeWord&, const ShapeWord&) = default;
};

// A face shape: one word, or two words for two face orbits.
struct Shape {
    std::vector<ShapeWord> words;

    bool two_orbits() const { return words.size() == 2; }
    std::string to_string() const;  // "[r,l]&[l,r]"
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

// Accepts "[a,b,c,d]" or "[a,b]" (read as [a,b,a,b]) or "[a]"; case and
// whitespace insensitive. Throws std::invalid_argument.
ShapeWord parse_shape_word(std::string_view text);
// One or two words joined by '&'.
Shape parse_shape(std::string_view text);

struct TracedPolygon {
    std::vector<VertexId> boundary;
    // turns[i] is the label at boundary[(i + 1) % p]
    std::vector<Direction> turns;
    // lengths[i] is the length of the edge boundary[i] -> boundary[i + 1]
    std::vector<EdgeLength> lengths;
    bool planar = false;

    int size() const { return static_cast<int>(boundary.size()); }
};

struct TraceResult {
    std::optional<TracedPolygon> polygon;
    Diagnosis diagnosis = Diagnosis::VertexRevisit;  // meaningful only without polygon
    std::string detail;

    bool ok() const { return polygon.has_value(); }
};

class FaceTracer {
public:
    // The metric must outlive the tracer. Throws std::invalid_argument if a
    // length is not realized on the seed.
    FaceTracer(const SeedMetric& metric, LengthConfig config);

    const SeedMetric& metric() const { return *metric_; }
    const SeedSolid& seed() const { return metric_->seed(); }
    const LengthConfig& config() const { return config_; }
    // Length of the k-th boundary edge counted from the start edge.
    EdgeLength step_length(int k) const { return config_.lengths[k % config_.lengths.size()]; }
    // Degree of every vertex in the union of all edges of the configured lengths.
    int vertex_degree() const;
    const std::vector<Direction>& alphabet() const { return alphabet_; }

    // Admissible continuations after arriving along `incoming`, in
    // counterclockwise order around the head starting from the tail.
    std::vector<VertexId> continuations(DirectedEdge incoming) const;
    // Throws std::invalid_argument if `next` is not an admissible continuation.
    Direction direction_label(DirectedEdge incoming, VertexId next) const;
    // Throws std::invalid_argument if `d` is not in the alphabet.
    VertexId continuation(DirectedEdge incoming, Direction d) const;

    // A representative of the start-edge class fixed by the naming
    // convention for this seed and length configuration.
    DirectedEdge canonical_start() const;
    // Whether `e` lies in the start-edge class.
    bool in_start_class(DirectedEdge e) const;

    // max_steps <= 0 selects the default 4 * f1.
    TraceResult trace(DirectedEdge start, const ShapeWord& word, int max_steps = 0) const;
    TraceResult trace(const ShapeWord& word) const { return trace(canonical_start(), word); }

    // Every four-symbol word read off a closed boundary, starting from each
    // of its start-class edges in either traversal direction.
    std::vector<ShapeWord> readings(const std::vector<VertexId>& boundary) const;

private:
    std::vector<DirectedEdge> choose_start_class() const;
    std::vector<VertexId> compute_continuations(DirectedEdge incoming) const;

    const SeedMetric* metric_;
    LengthConfig config_;
    std::vector<Direction> alphabet_;
    std::vector<DirectedEdge> start_class_;  // sorted
    std::vector<std::vector<VertexId>> cont_cache_;  // by u * f0 + v
};

// True iff all points lie in one plane (exact rank test).
bool face_planarity(const std::vector<VertexId>& boundary, const SeedSolid& s);

}  // namespace regpoly
