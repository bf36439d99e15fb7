#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace regpoly;
using regpoly::testing::Gen;

namespace {

FaceTracer tracer_for(SeedKind k, const char* lengths) { return FaceTracer(seed_metric(k), parse_length_config(lengths)); }

bool is_seed_face(const SeedSolid& s, const std::vector<VertexId>& boundary) {
    for (const auto& f : s.faces)
        if (canonical_cycle(f) == canonical_cycle(boundary)) return true;
    return false;
}

}  // namespace

TEST_CASE("chirality calibration") {
    // [r,r,r,r] on the cuboctahedron edges closes a triangle of S
    auto t = tracer_for(SeedKind::Cuboctahedron, "1");
    auto res = t.trace(parse_shape_word("[r,r,r,r]"));
    REQUIRE(res.ok());
    CHECK(res.polygon->size() == 3);
    CHECK(is_seed_face(t.seed(), res.polygon->boundary));

    // [hl,hl,hl,hl] on dodecahedron length 2 is a planar pentagram
    auto d = tracer_for(SeedKind::Dodecahedron, "2");
    auto star = d.trace(parse_shape_word("[hl]"));
    REQUIRE(star.ok());
    CHECK(star.polygon->size() == 5);
    CHECK(star.polygon->planar);
    CHECK_FALSE(is_seed_face(d.seed(), star.polygon->boundary));
}

TEST_CASE("tracer examples") {
    auto t = tracer_for(SeedKind::Dodecahedron, "1,4");
    auto bad = t.trace(parse_shape_word("[r,r,l,l]"));
    CHECK_FALSE(bad.ok());
    CHECK(bad.diagnosis == Diagnosis::VertexRevisit);

    auto hex = tracer_for(SeedKind::Icosidodecahedron, "2d").trace(parse_shape_word("[r,r]"));
    REQUIRE(hex.ok());
    CHECK(hex.polygon->size() == 6);
    CHECK_FALSE(hex.polygon->planar);

    // the two-length face of the orientable {6,6}_6 is a planar hexagon
    auto p1 = t.trace(parse_shape_word("[r,r]"));
    REQUIRE(p1.ok());
    CHECK(p1.polygon->size() == 6);
    CHECK(p1.polygon->planar);
}

TEST_CASE("unrealized lengths are rejected at construction") {
    CHECK_THROWS_AS(tracer_for(SeedKind::Cube, "7"), std::invalid_argument);
    CHECK_THROWS_AS(tracer_for(SeedKind::Cube, "d"), std::invalid_argument);
}

TEST_CASE("alphabet sizes follow the continuation count") {
    CHECK(tracer_for(SeedKind::Cuboctahedron, "1").alphabet().size() == 3);
    CHECK(tracer_for(SeedKind::Cube, "1,2").alphabet().size() == 3);
    CHECK(tracer_for(SeedKind::Dodecahedron, "2").alphabet().size() == 5);
    CHECK(tracer_for(SeedKind::Icosahedron, "1,2").alphabet().size() == 5);
    CHECK(alphabet_for(4).size() == 4);
    CHECK_THROWS_AS(alphabet_for(6), std::invalid_argument);
}

TEST_CASE("shape word algebra") {
    auto w = parse_shape_word("[hl,f,hr,sr]");
    CHECK(w.to_string() == "[hl,f,hr,sr]");
    CHECK(w.shifted(1).to_string() == "[f,hr,sr,hl]");
    CHECK(w.primed().to_string() == "[hr,f,hl,sl]");
    CHECK(w.reversed_primed().to_string() == "[sl,hl,f,hr]");
    CHECK(parse_shape_word("[hl,f]").to_string() == "[hl,f]");
    CHECK(parse_shape_word("[ HL , F , hl , f ]").period() == 2);
    CHECK(parse_shape_word("[r]").period() == 1);
    CHECK(parse_shape("[r,l]&[l,r]").to_string() == "[r,l]&[l,r]");
    CHECK(parse_shape(" [f,f] & [hl,hl] ").two_orbits());
    CHECK_THROWS_AS(parse_shape_word("[r,l,f]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape_word("r,l"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape_word("[q]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("[r]&[l]&[f]"), std::invalid_argument);
    for (auto d : {Direction::R, Direction::HR, Direction::SR, Direction::L, Direction::SL, Direction::HL, Direction::F}) {
        CHECK(prime(prime(d)) == d);
        CHECK(parse_direction(direction_name(d)) == d);
    }
}

TEST_CASE("shape word involutions on random words") {
    Gen g(21);
    auto alphabet = alphabet_for(5);
    for (int i = 0; i < 300; ++i) {
        auto w = g.word(alphabet);
        CHECK(w.primed().primed() == w);
        CHECK(w.reversed_primed().reversed_primed() == w);
        CHECK(w.shifted(4) == w);
        CHECK(w.shifted(w.period()) == w);
        CHECK(parse_shape_word(w.to_string()) == w);
    }
}

TEST_CASE("labels and continuations are inverse") {
    for (const auto& [k, lengths] : testing::admissible_configs()) {
        FaceTracer t(seed_metric(k), lengths);
        auto start = t.canonical_start();
        CHECK(t.in_start_class(start));
        auto next = t.continuations(start);
        CHECK(next.size() == t.alphabet().size());
        for (auto d : t.alphabet()) CHECK(t.direction_label(start, t.continuation(start, d)) == d);
        CHECK_THROWS_AS(t.direction_label(start, start.u), std::invalid_argument);
    }
}

TEST_CASE("every traced polygon is read back by its own word") {
    Gen g(22);
    int closed = 0;
    for (const auto& [k, lengths] : testing::admissible_configs()) {
        FaceTracer t(seed_metric(k), lengths);
        for (int i = 0; i < 60; ++i) {
            auto w = g.word(t.alphabet());
            auto res = t.trace(w);
            if (!res.ok()) continue;
            ++closed;
            const auto& poly = *res.polygon;
            CHECK(poly.turns.size() == poly.boundary.size());
            CHECK(poly.lengths.size() == poly.boundary.size());
            for (int j = 0; j < poly.size(); ++j) {
                CHECK(poly.turns[j] == w[j]);
                CHECK(poly.lengths[j] == t.step_length(j));
            }
            std::set<VertexId> distinct(poly.boundary.begin(), poly.boundary.end());
            CHECK(distinct.size() == poly.boundary.size());
            auto readings = t.readings(poly.boundary);
            CHECK(std::find(readings.begin(), readings.end(), w) != readings.end());
            CHECK(poly.planar == face_planarity(poly.boundary, t.seed()));
        }
    }
    CHECK(closed > 50);
}

TEST_CASE("turn label against edge orientation on every closed trace") {
    // exhaustive over the single-length configurations
    for (const auto& [k, lengths] : testing::admissible_configs()) {
        if (lengths.two_lengths()) continue;
        CAPTURE(seed_name(k));
        CAPTURE(lengths.to_string());
        FaceTracer t(seed_metric(k), lengths);
        const int n = int(t.alphabet().size());
        int closed = 0;
        for (int code = 0; code < n * n * n * n; ++code) {
            ShapeWord w;
            for (int i = 0, c = code; i < 4; ++i, c /= n) w.symbols[i] = t.alphabet()[c % n];
            auto res = t.trace(w);
            if (!res.ok()) continue;
            ++closed;
            CHECK(turn_orientation_rule_holds(t, res.polygon->boundary));
        }
        CHECK(closed > 0);
    }
}

TEST_CASE("icosidodecahedron length d: [r,r,r,r] is a pentagram, [l,l,l,l] a convex pentagon") {
    auto t = tracer_for(SeedKind::Icosidodecahedron, "d");
    const auto& s = t.seed();
    // a regular pentagon is a pentagram exactly when its edges are its long diagonals
    auto star = [&](const std::vector<VertexId>& b) {
        auto side = norm2(s.vertices[b[1]] - s.vertices[b[0]]);
        auto skip = norm2(s.vertices[b[2]] - s.vertices[b[0]]);
        return side > skip;
    };
    auto r = t.trace(parse_shape_word("[r]"));
    auto l = t.trace(parse_shape_word("[l]"));
    REQUIRE(r.ok());
    REQUIRE(l.ok());
    CHECK(r.polygon->size() == 5);
    CHECK(l.polygon->size() == 5);
    CHECK(star(r.polygon->boundary));
    CHECK_FALSE(star(l.polygon->boundary));
}
