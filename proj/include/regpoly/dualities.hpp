#pragma once

// Petrie duality and the antipodal C-duality, as constructions on candidate
// polyhedra, with the shape laws they are expected to satisfy.

#include <optional>
#include <string>
#include <vector>

#include "regpoly/maps.hpp"

namespace regpoly {

enum class DualityKind { Petrie, CDual };
std::string duality_name(DualityKind k);
// "petrie" or "c"; throws std::invalid_argument
DualityKind parse_duality_kind(std::string_view text);

struct DualResult {
    std::optional<CandidatePolyhedron> polyhedron;
    Diagnosis diagnosis = Diagnosis::VertexRevisit;
    std::string detail;
    bool ok() const { return polyhedron.has_value(); }
};

// Faces replaced by the Petrie polygons. The shape of the result is read
// with the same length configuration.
DualResult petrie_dual(const CandidatePolyhedron& P, const FlagMap& fm);

// Which face shapes the Petrie polygons must have, when the law applies.
struct PetrieLaw {
    enum class Kind { NotApplicable, Alternating, ForwardFace };
    Kind kind = Kind::NotApplicable;
    // Alternating: every dual face orbit reads as one of these.
    // ForwardFace: some dual face orbit reads as this word.
    std::vector<ShapeWord> words;
};

// Faces all [a,a,a,a] / [a',a',a',a'] give Petrie polygons [a,a',a,a'] /
// [a',a,a',a] and vice versa; a face [a,f,b,f] forces an [f,f,f,f] Petrie polygon.
PetrieLaw petrie_shape_law(const Shape& shape);
bool petrie_law_holds(const PetrieLaw& law, const FaceTracer& tracer, const CandidatePolyhedron& dual);

// C(F) = (v1, v2', v3, v4', ...) with v' the vertex opposite v. For odd p
// the boundary is walked twice. `parity` selects which positions are primed
// (0: odd positions). Repeats collapse to the shortest period.
Cycle c_face(const Cycle& face, const SeedSolid& s, int parity = 0);
// 2p for odd p; p/2 for even p when the boundary holds an opposite pair; else p.
int c_dual_face_size(const Cycle& face, const SeedSolid& s);

// The C-dual: both alternations C(F) and its point reflection for every
// face, so the result does not depend on starting vertices. Shared C-edges
// are checked by the usual assembly.
DualResult c_dual(const CandidatePolyhedron& P);

// [a,b,c,d] -> [a,b',c,d']
ShapeWord c_shape_law(const ShapeWord& w);
Shape c_shape_law(const Shape& s);
// Every predicted word is a reading of some face orbit of the C-dual. The
// orbit count may differ: on two-length seeds one predicted word can cover
// both C face orbits and vice versa.
bool c_law_holds(const FaceTracer& tracer, const CandidatePolyhedron& dual, const Shape& predicted);

// Length of each edge of P paired with its C-edge, plus whether the two
// lengths add up to the antipodal distance, both as m + n d values and as
// graph distances along S.
struct CLengthPair {
    EdgeLength length;
    EdgeLength c_length;
    bool value_sum_antipodal = false;
    bool graph_sum_antipodal = false;
};
std::vector<CLengthPair> c_length_pairs(const CandidatePolyhedron& P);

CandidatePolyhedron point_reflection(const CandidatePolyhedron& P);
// Same face set, or the same after the central inversion.
bool equal_up_to_point_reflection(const CandidatePolyhedron& A, const CandidatePolyhedron& B);

}  // namespace regpoly
