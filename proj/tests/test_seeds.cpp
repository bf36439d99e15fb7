#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace regpoly;
using regpoly::testing::approx;

namespace {

struct Counts {
    int f0, f1, f2, full, rotation;
};

const std::map<SeedKind, Counts> kCounts = {
    {SeedKind::Cube, {8, 12, 6, 48, 24}},
    {SeedKind::Dodecahedron, {20, 30, 12, 120, 60}},
    {SeedKind::Icosahedron, {12, 30, 20, 120, 60}},
    {SeedKind::Cuboctahedron, {12, 24, 14, 48, 24}},
    {SeedKind::Icosidodecahedron, {30, 60, 32, 120, 60}},
};

// Edges recomputed from floating point coordinates: pairs at minimum distance.
std::set<std::pair<int, int>> float_edges(const SeedSolid& s) {
    double best = 1e300;
    for (int u = 0; u < s.f0(); ++u)
        for (int v = u + 1; v < s.f0(); ++v) best = std::min(best, testing::distance(approx(s.vertices[u]), approx(s.vertices[v])));
    std::set<std::pair<int, int>> out;
    for (int u = 0; u < s.f0(); ++u)
        for (int v = u + 1; v < s.f0(); ++v)
            if (testing::distance(approx(s.vertices[u]), approx(s.vertices[v])) < best * (1 + 1e-9)) out.insert({u, v});
    return out;
}

}  // namespace

TEST_CASE("seed counts and Euler characteristic") {
    for (auto k : kAllSeedKinds) {
        CAPTURE(seed_name(k));
        const auto& s = seed_solid(k);
        const auto& c = kCounts.at(k);
        CHECK(s.f0() == c.f0);
        CHECK(s.edges.size() == std::size_t(c.f1));
        CHECK(s.faces.size() == std::size_t(c.f2));
        CHECK(c.f0 - c.f1 + c.f2 == 2);
        CHECK(s.full_group.size() == std::size_t(c.full));
        CHECK(s.rotation_group.size() == std::size_t(c.rotation));
    }
}

TEST_CASE("edges match the minimum distance pairs") {
    for (auto k : kAllSeedKinds) {
        CAPTURE(seed_name(k));
        const auto& s = seed_solid(k);
        std::set<std::pair<int, int>> exact(s.edges.begin(), s.edges.end());
        CHECK(exact == float_edges(s));
    }
}

TEST_CASE("faces are counterclockwise from outside and planar") {
    for (auto k : kAllSeedKinds) {
        CAPTURE(seed_name(k));
        const auto& s = seed_solid(k);
        for (const auto& f : s.faces) {
            auto a = approx(s.vertices[f[0]]), b = approx(s.vertices[f[1]]), c = approx(s.vertices[f[2]]);
            std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]}, v{c[0] - b[0], c[1] - b[1], c[2] - b[2]};
            std::array<double, 3> n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
            CHECK(n[0] * a[0] + n[1] * a[1] + n[2] * a[2] > 0);
            CHECK(face_planarity(f, s));
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto e = std::minmax(f[i], f[(i + 1) % f.size()]);
                CHECK(std::binary_search(s.edges.begin(), s.edges.end(), std::pair<int, int>(e.first, e.second)));
            }
        }
    }
}

TEST_CASE("group elements act on vertices as their permutations say") {
    for (auto k : kAllSeedKinds) {
        CAPTURE(seed_name(k));
        const auto& s = seed_solid(k);
        int proper = 0;
        for (const auto& g : s.full_group) {
            CHECK(g.matrix.is_orthogonal());
            CHECK(g.proper == (g.matrix.determinant().sign() > 0));
            proper += g.proper;
            for (int v = 0; v < s.f0(); ++v) CHECK(g.matrix * s.vertices[v] == s.vertices[g.perm[v]]);
        }
        CHECK(proper == int(s.rotation_group.size()));
        CHECK(s.full_group[0].perm == s.rotation_group[0].perm);
        for (int v = 0; v < s.f0(); ++v) CHECK(s.full_group[0].perm[v] == v);
        // closure
        std::set<Permutation> perms;
        for (const auto& g : s.full_group) perms.insert(g.perm);
        CHECK(perms.size() == s.full_group.size());
        for (const auto& a : s.full_group)
            CHECK(perms.count(compose(a.perm, s.full_group[1 % s.full_group.size()].perm)));
    }
}

TEST_CASE("opposite vertices and vertex transitivity") {
    for (auto k : kAllSeedKinds) {
        const auto& s = seed_solid(k);
        for (int v = 0; v < s.f0(); ++v) {
            CHECK(s.vertices[s.opposite[v]] == -s.vertices[v]);
            CHECK(s.find_vertex(s.vertices[v]) == v);
        }
        std::set<int> orbit;
        for (const auto& g : s.rotation_group) orbit.insert(g.perm[0]);
        CHECK(orbit.size() == std::size_t(s.f0()));
        // |stabilizer| * |orbit| = |group|
        CHECK(vertex_stabilizer(s, 0, GroupChoice::Full).size() * s.f0() == s.full_group.size());
        CHECK(vertex_stabilizer(s, 0, GroupChoice::Rotation).size() * s.f0() == s.rotation_group.size());
    }
}

TEST_CASE("seed names") {
    CHECK(parse_seed_kind("Dodecahedron") == SeedKind::Dodecahedron);
    CHECK(parse_seed_kind("ICOSIDODECAHEDRON") == SeedKind::Icosidodecahedron);
    CHECK_THROWS_AS(parse_seed_kind("tetrahedron"), std::invalid_argument);
    for (auto k : kAllSeedKinds) CHECK(parse_seed_kind(seed_name(k)) == k);
    CHECK(is_quasiregular(SeedKind::Cuboctahedron));
    CHECK_FALSE(is_quasiregular(SeedKind::Cube));
}

TEST_CASE("compose applies the right factor first") {
    Permutation a{1, 2, 0}, b{0, 2, 1};
    // (a b)[0] = a[b[0]] = a[0] = 1
    CHECK(compose(a, b) == Permutation{1, 0, 2});
}

TEST_CASE("group closure rejects non-symmetries") {
    const auto& s = seed_solid(SeedKind::Cube);
    auto half = ExactNumber::rational(Rational(1, 2), s.radicand);
    auto zero = ExactNumber::rational(0, s.radicand);
    auto scale = ExactMat3::from_rows({half, zero, zero}, {zero, half, zero}, {zero, zero, half});
    CHECK_THROWS_AS(group_from_generators({scale}, s.vertices), std::invalid_argument);
}

TEST_CASE("angular order sorts counterclockwise from the back direction") {
    const auto& s = seed_solid(SeedKind::Cube);
    int v = 0;
    const auto& nb = s.adjacency[v];
    std::vector<ExactVec3> cand;
    for (int w : nb) cand.push_back(s.vertices[w]);
    auto order = angular_order(s.vertices[v], s.vertices[nb[0]], cand);
    REQUIRE(order.size() == 3);
    CHECK(order[0] == 0);
    // consecutive neighbours turn counterclockwise about the outward axis
    auto c = s.vertices[v];
    for (int i = 0; i < 3; ++i) {
        auto a = cand[order[i]] - c, b = cand[order[(i + 1) % 3]] - c;
        CHECK(det3(c, a, b).sign() > 0);
    }
}
