#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace regpoly;
using regpoly::testing::pruned_result;
using regpoly::testing::record;

TEST_CASE("length universe: singles then pairs") {
    auto u = length_universe(SeedKind::Dodecahedron);
    // lengths 1..4 on the dodecahedron, plus the six pairs
    CHECK(u.size() == 10);
    CHECK(u.front().to_string() == "1");
    CHECK(u.back().to_string() == "3,4");
    for (auto k : kAllSeedKinds) {
        auto n = seed_metric(k).length_classes().size();
        CHECK(length_universe(k).size() == n + n * (n - 1) / 2);
        for (const auto& a : admissible_edge_lengths(k))
            CHECK(std::find(length_universe(k).begin(), length_universe(k).end(), a.lengths) != length_universe(k).end());
    }
}

TEST_CASE("candidate words per configuration") {
    int two_length = 0;
    for (auto k : kAllSeedKinds)
        for (const auto& a : admissible_edge_lengths(k))
            if (a.lengths.two_lengths()) two_length += int(candidate_words(k, a.lengths).size());
    CHECK(two_length == 16);
    CHECK(candidate_words(SeedKind::Dodecahedron, parse_length_config("2")).size() == 6);
    CHECK(candidate_words(SeedKind::Dodecahedron, parse_length_config("3")).size() == 6);
    CHECK(candidate_words(SeedKind::Cuboctahedron, parse_length_config("1")).size() == 4);
    CHECK(candidate_words(SeedKind::Cuboctahedron, parse_length_config("2")).size() == 2);
    CHECK(candidate_words(SeedKind::Dodecahedron, parse_length_config("1")).empty());
}

TEST_CASE("pruned pipeline reproduces the table") {
    const auto& res = pruned_result();
    CHECK(res.matches_table());
    REQUIRE(res.records.size() == reference_table().size());
    for (std::size_t i = 0; i < reference_table().size(); ++i) {
        const auto& row = reference_table()[i];
        const auto& r = res.records[i];
        CAPTURE(row.id);
        CHECK(r.id == row.id);
        CHECK(r.seed == row.seed);
        CHECK(r.lengths.to_string() == row.lengths);
        CHECK(r.type.p == row.type.p);
        CHECK(r.type.q == row.type.q);
        CHECK(r.type.r == row.type.r);
        CHECK(r.f_vector == row.f_vector);
        CHECK(r.orientable == row.orientable);
        CHECK(r.genus == row.genus);
        CHECK(r.planar_faces == row.planar_faces);
        CHECK(r.face_orbits_rotation == row.face_orbits_rotation);
        CHECK(r.face_orbits_full == row.face_orbits_full);
        CHECK(r.orientation == row.orientation);
        CHECK(r.census_label == row.census_label);
        CHECK(r.index == 2);
        CHECK(r.flag_orbits == 2);
        CHECK(r.automorphism_order == 4 * r.f_vector[1]);
        CHECK(r.symmetry_order * 2 == r.automorphism_order);
        CHECK(r.type.q * r.f_vector[0] == 2 * r.f_vector[1]);
        CHECK(r.type.p * r.f_vector[2] == 2 * r.f_vector[1]);
    }
}

TEST_CASE("table values stated in the text") {
    CHECK(record("P04").census_label == "R9.16");
    CHECK(record("P03").f_vector == std::array<int, 3>{20, 60, 30});
    CHECK(record("P10").f_vector == std::array<int, 3>{30, 60, 12});
    // the non-orientable {6,6}_6 has two face orbits under rotations but one under G(P)
    CHECK(record("P02").face_orbits_rotation == 2);
    CHECK(record("P02").face_orbits_full == 1);
    // one member of each Petrie pair has one face orbit under G+(P), the other two
    for (const auto& row : reference_table())
        CHECK(record(row.id).face_orbits_rotation + record(row.petrie_partner).face_orbits_rotation == 3);
}

TEST_CASE("verify_shape on every table row") {
    for (const auto& row : reference_table()) {
        CAPTURE(row.id);
        auto v = verify_shape(row.seed, parse_length_config(row.lengths), parse_shape(row.shape));
        REQUIRE(v.ok());
        CHECK(v.record->id == row.id);
        CHECK(table_row_id(*v.record) == row.id);
    }
    auto bad = verify_shape(SeedKind::Cube, parse_length_config("1,2"), parse_shape("[r,l,l,r]"));
    CHECK_FALSE(bad.ok());
    CHECK(bad.stage == Stage::Regularity);
    CHECK(bad.diagnosis == Diagnosis::NotRegular);
}

TEST_CASE("rejections carry the stated failure mode where one exists") {
    const auto& res = pruned_result();
    std::map<std::string, const RejectionRecord*> claimed;
    for (const auto& r : res.rejections)
        if (r.claimed_diagnosis) claimed[seed_name(r.seed) + " " + r.descriptor] = &r;
    // the four ill-defined rho_1 structures on the cube and icosahedron
    int rho1 = 0;
    for (const auto& [name, r] : claimed) {
        CHECK(r->stage != Stage::Excluded);
        if (*r->claimed_diagnosis == Diagnosis::Rho1IllDefined) ++rho1;
    }
    CHECK(rho1 == 4);
    for (const auto& r : res.rejections) {
        CHECK(!r.key.empty());
        if (r.stage == Stage::Excluded) CHECK(r.diagnosis == Diagnosis::ExcludedByLemma);
        else CHECK(r.diagnosis != Diagnosis::ExcludedByLemma);
    }
}

TEST_CASE("pipeline filters") {
    PipelineOptions o;
    o.seed = SeedKind::Dodecahedron;
    o.lengths = parse_length_config("4,1");
    auto res = run_pipeline(o);
    CHECK(res.matches_table());
    CHECK(res.records.size() == 2);
    o.seed = SeedKind::Cuboctahedron;
    o.lengths.reset();
    auto none = run_pipeline(o);
    CHECK(none.records.empty());
    CHECK(none.matches_table());
}

TEST_CASE("thread count does not change the result") {
    PipelineOptions one, many;
    one.threads = 1;
    many.threads = 4;
    one.seed = many.seed = SeedKind::Icosidodecahedron;
    auto a = run_pipeline(one), b = run_pipeline(many);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].key == b.records[i].key);
    REQUIRE(a.rejections.size() == b.rejections.size());
    for (std::size_t i = 0; i < a.rejections.size(); ++i) {
        CHECK(a.rejections[i].key == b.rejections[i].key);
        CHECK(a.rejections[i].diagnosis == b.rejections[i].diagnosis);
    }
}

TEST_CASE("lemma crosschecks") {
    auto rep = lemma_crosschecks(pruned_result());
    for (const auto& c : rep.checks) {
        CAPTURE(c.predicate);
        CAPTURE(c.record);
        CAPTURE(c.detail);
        CHECK((!c.applicable || c.holds));
    }
    CHECK(rep.all_hold());
    CHECK(rep.planar_count == 3);
}

TEST_CASE("edge stabilizers") {
    for (const auto& row : reference_table()) {
        if (!row.orientation) continue;
        CAPTURE(row.id);
        const auto& r = record(row.id);
        auto fr = build_flags(r.polyhedron);
        REQUIRE(fr.ok());
        auto aut = automorphisms(*fr.flags);
        auto gi = geometric_index(r.polyhedron, *fr.flags, aut.order);
        auto st = edge_stabilizer(r.polyhedron, gi, r.polyhedron.edges.front());
        CHECK(st.order == 2);
        CHECK(st.half_turn == (*row.orientation == OrientationType::Bicolor));
        CHECK(st.plane_reflection == (*row.orientation == OrientationType::Directed));
    }
}

TEST_CASE("index one sanity inputs") {
    for (auto k : {SeedKind::Dodecahedron, SeedKind::Icosahedron, SeedKind::Cube}) {
        auto sc = seed_self_check(k);
        CHECK(sc.assembled);
        CHECK(sc.regular);
        CHECK(sc.index == 1);
        CHECK(sc.flag_orbits == 1);
    }
    CHECK(seed_self_check(SeedKind::Dodecahedron).type.p == 5);
    CHECK(seed_self_check(SeedKind::Icosahedron).type.q == 5);
}

TEST_CASE("names") {
    for (auto d : kAllDiagnoses) CHECK(parse_diagnosis(diagnosis_name(d)) == d);
    CHECK_THROWS_AS(parse_diagnosis("Nope"), std::invalid_argument);
    CHECK(stage_name(Stage::Excluded) != stage_name(Stage::Trace));
    CHECK(mode_name(PipelineMode::Exhaustive) == "exhaustive");
}
