#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace regpoly;
using regpoly::testing::Gen;
using regpoly::testing::record;

namespace {

CandidatePolyhedron petrie_of(const CandidatePolyhedron& P) {
    auto fr = build_flags(P);
    REQUIRE(fr.ok());
    auto d = petrie_dual(P, *fr.flags);
    REQUIRE(d.ok());
    return *d.polyhedron;
}

CandidatePolyhedron c_of(const CandidatePolyhedron& P) {
    auto d = c_dual(P);
    REQUIRE(d.ok());
    return *d.polyhedron;
}

}  // namespace

TEST_CASE("Petrie dual is an involution and lands on the partner row") {
    for (const auto& row : reference_table()) {
        CAPTURE(row.id);
        const auto& P = record(row.id).polyhedron;
        auto Q = petrie_of(P);
        CHECK(face_set(Q) == face_set(record(row.petrie_partner).polyhedron));
        CHECK(face_set(petrie_of(Q)) == face_set(P));
    }
}

TEST_CASE("Petrie pairs swap p and r and pair orientable with non-orientable") {
    std::set<std::set<std::string>> pairs;
    for (const auto& row : reference_table()) {
        const auto& a = record(row.id);
        const auto& b = record(row.petrie_partner);
        CHECK(a.type.p == b.type.r);
        CHECK(a.type.r == b.type.p);
        CHECK(a.type.q == b.type.q);
        CHECK(a.orientable != b.orientable);
        CHECK(a.petrie_partner == row.petrie_partner);
        pairs.insert({row.id, row.petrie_partner});
    }
    CHECK(pairs.size() == 5);
}

TEST_CASE("Petrie shape law") {
    for (const auto& row : reference_table()) {
        CAPTURE(row.id);
        const auto& r = record(row.id);
        FaceTracer t(seed_metric(r.seed), r.lengths);
        auto law = petrie_shape_law(r.shape);
        CHECK(petrie_law_holds(law, t, petrie_of(r.polyhedron)));
    }
    auto alt = petrie_shape_law(parse_shape("[r,r]"));
    CHECK(alt.kind == PetrieLaw::Kind::Alternating);
    auto fwd = petrie_shape_law(parse_shape("[hl,f]"));
    CHECK(fwd.kind == PetrieLaw::Kind::ForwardFace);
    REQUIRE(fwd.words.size() == 1);
    CHECK(fwd.words[0] == parse_shape_word("[f,f,f,f]"));
}

TEST_CASE("C dual is an involution up to point reflection and matches the table") {
    for (const auto& row : reference_table()) {
        CAPTURE(row.id);
        const auto& P = record(row.id).polyhedron;
        auto C = c_of(P);
        CHECK(equal_up_to_point_reflection(C, record(row.c_partner).polyhedron));
        CHECK(equal_up_to_point_reflection(c_of(C), P));
        CHECK(record(row.id).c_partner == row.c_partner);
    }
}

TEST_CASE("C dual swaps directed and bicolor type") {
    for (const auto& row : reference_table()) {
        const auto& a = record(row.id);
        const auto& b = record(row.c_partner);
        CHECK(a.orientation.has_value() == b.orientation.has_value());
        if (a.orientation) CHECK(*a.orientation != *b.orientation);
    }
}

TEST_CASE("C shape law") {
    CHECK(c_shape_law(parse_shape_word("[hl,f]")) == parse_shape_word("[hl,f,hl,f]"));
    CHECK(c_shape_law(parse_shape_word("[r,r,r,r]")) == parse_shape_word("[r,l,r,l]"));
    CHECK(c_shape_law(parse_shape_word("[hr,sr,sl,hl]")) == parse_shape_word("[hr,sl,sl,hr]"));
    Gen g(41);
    for (int i = 0; i < 100; ++i) {
        auto w = g.word(alphabet_for(5));
        CHECK(c_shape_law(c_shape_law(w)) == w);
    }
    for (const auto& row : reference_table()) {
        CAPTURE(row.id);
        const auto& r = record(row.id);
        auto C = c_of(r.polyhedron);
        // read with the lengths of the dual
        FaceTracer t(seed_metric(r.seed), C.lengths);
        CHECK(c_law_holds(t, C, c_shape_law(r.shape)));
    }
}

TEST_CASE("C edge lengths sum to the antipodal distance") {
    for (const auto& row : reference_table()) {
        CAPTURE(row.id);
        const auto& r = record(row.id);
        const auto& m = seed_metric(r.seed);
        auto pairs = c_length_pairs(r.polyhedron);
        // one entry per edge length of P
        CHECK(pairs.size() == r.lengths.lengths.size());
        for (const auto& p : pairs) {
            CHECK(p.value_sum_antipodal);
            CHECK(m.value(p.length) + m.value(p.c_length) == m.value(m.antipodal_length()));
        }
    }
}

TEST_CASE("C face construction") {
    const auto& s = seed_solid(SeedKind::Dodecahedron);
    const auto& pent = s.faces[0];
    // odd boundary is walked twice
    CHECK(c_dual_face_size(pent, s) == 10);
    auto cf = c_face(pent, s);
    CHECK(cf.size() == 10);
    CHECK(cf[0] == pent[0]);
    CHECK(cf[1] == s.opposite[pent[1]]);
    CHECK(cf[5] == s.opposite[pent[0]]);
    // parity 1 is the point reflection of parity 0
    auto other = c_face(pent, s, 1);
    for (std::size_t i = 0; i < cf.size(); ++i) CHECK(other[i] == s.opposite[cf[i]]);
}

TEST_CASE("point reflection is an involution") {
    const auto& P = record("P05").polyhedron;
    CHECK(face_set(point_reflection(point_reflection(P))) == face_set(P));
    CHECK(equal_up_to_point_reflection(point_reflection(P), P));
}

TEST_CASE("duality names") {
    CHECK(parse_duality_kind("petrie") == DualityKind::Petrie);
    CHECK(parse_duality_kind("C") == DualityKind::CDual);
    CHECK_THROWS_AS(parse_duality_kind("x"), std::invalid_argument);
}
