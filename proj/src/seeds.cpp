#include "regpoly/seeds.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace regpoly {

namespace {

ExactNumber num(const Rational& a, int d) {
    return ExactNumber::rational(a, d);
}

ExactVec3 vec(const ExactNumber& x, const ExactNumber& y, const ExactNumber& z) {
    return {x, y, z};
}

// All sign choices of the non-zero coordinates of p, then the three cyclic
// shifts (x,y,z) -> (z,x,y) of each.
std::vector<ExactVec3> cyclic_signed(const ExactVec3& p) {
    std::vector<ExactVec3> out;
    for (int mask = 0; mask < 8; ++mask) {
        ExactVec3 q = p;
        bool skip = false;
        for (std::size_t i = 0; i < 3; ++i) {
            if (mask & (1 << i)) {
                if (q[i].is_zero()) skip = true;
                q[i] = -q[i];
            }
        }
        if (skip) continue;
        for (int k = 0; k < 3; ++k) {
            ExactVec3 r{q[(3 - k) % 3], q[(4 - k) % 3], q[(5 - k) % 3]};
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    }
    return out;
}

// All coordinate permutations with all sign choices.
std::vector<ExactVec3> all_signed_permutations(const ExactVec3& p) {
    std::vector<ExactVec3> out;
    std::array<int, 3> idx{0, 1, 2};
    do {
        ExactVec3 q{p[idx[0]], p[idx[1]], p[idx[2]]};
        for (const auto& r : cyclic_signed(q))
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

ExactMat3 mat(int d, std::initializer_list<Rational> entries) {
    std::vector<Rational> e(entries);
    ExactMat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.rows[i][j] = num(e[3 * i + j], d);
    return m;
}

// Orientation-preserving 5-fold rotation of the frame containing the
// icosahedron with vertices (0, +-1, +-phi) cyclically.
ExactMat3 five_fold_rotation() {
    ExactNumber a = num(Rational(1, 2), 5);
    ExactNumber b = ExactNumber::golden_ratio() / num(2, 5);
    ExactNumber c = (ExactNumber::golden_ratio() - num(1, 5)) / num(2, 5);
    return ExactMat3::from_rows({c, -b, a}, {b, a, c}, {-a, c, b});
}

std::vector<ExactMat3> octahedral_generators() {
    return {
        mat(2, {0, -1, 0, 1, 0, 0, 0, 0, 1}),    // quarter turn about z
        mat(2, {0, 0, 1, 1, 0, 0, 0, 1, 0}),     // third turn about (1,1,1)
        mat(2, {-1, 0, 0, 0, -1, 0, 0, 0, -1}),  // central inversion
    };
}

// `mirrored` selects the frame obtained by swapping x and y, which is where
// the dodecahedron and icosidodecahedron coordinates below live.
std::vector<ExactMat3> icosahedral_generators(bool mirrored) {
    ExactMat3 r = five_fold_rotation();
    if (mirrored) {
        ExactMat3 swap = mat(5, {0, 1, 0, 1, 0, 0, 0, 0, 1});
        r = swap * r * swap;
    }
    return {
        r,
        mat(5, {0, 0, 1, 1, 0, 0, 0, 1, 0}),
        mat(5, {-1, 0, 0, 0, -1, 0, 0, 0, 1}),
        mat(5, {-1, 0, 0, 0, -1, 0, 0, 0, -1}),
    };
}

std::vector<ExactVec3> seed_vertices(SeedKind kind) {
    switch (kind) {
        case SeedKind::Cube:
            return cyclic_signed(vec(num(1, 2), num(1, 2), num(1, 2)));
        case SeedKind::Cuboctahedron:
            return all_signed_permutations(vec(num(1, 2), num(1, 2), num(0, 2)));
        case SeedKind::Icosahedron:
            return cyclic_signed(vec(num(0, 5), num(1, 5), ExactNumber::golden_ratio()));
        case SeedKind::Dodecahedron: {
            ExactNumber phi = ExactNumber::golden_ratio();
            auto out = cyclic_signed(vec(phi, phi, phi));
            for (const auto& p : cyclic_signed(vec(num(0, 5), num(1, 5), phi * phi))) out.push_back(p);
            return out;
        }
        case SeedKind::Icosidodecahedron: {
            ExactNumber phi = ExactNumber::golden_ratio();
            auto out = cyclic_signed(vec(num(0, 5), num(0, 5), num(2, 5) * phi));
            for (const auto& p : cyclic_signed(vec(num(1, 5), phi, phi * phi))) out.push_back(p);
            return out;
        }
    }
    throw std::logic_error("unknown seed kind");
}

Permutation induced_permutation(const ExactMat3& m, const std::vector<ExactVec3>& vertices) {
    Permutation perm(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        ExactVec3 image = m * vertices[i];
        auto it = std::find(vertices.begin(), vertices.end(), image);
        if (it == vertices.end())
            throw std::invalid_argument("matrix does not preserve the vertex set: " + vertices[i].to_string() +
                                        " -> " + image.to_string());
        perm[i] = static_cast<int>(it - vertices.begin());
    }
    return perm;
}

std::vector<std::vector<VertexId>> trace_faces(const std::vector<ExactVec3>& vertices,
                                               const std::vector<std::vector<VertexId>>& adjacency) {
    std::vector<std::vector<VertexId>> faces;
    std::map<std::pair<VertexId, VertexId>, bool> used;
    for (VertexId u = 0; u < static_cast<VertexId>(vertices.size()); ++u) {
        for (VertexId w : adjacency[u]) {
            if (used[{u, w}]) continue;
            // the face on the left of u->w: at each vertex take the neighbour
            // that is furthest counterclockwise from the way back
            std::vector<VertexId> face{u};
            VertexId prev = u, cur = w;
            used[{u, w}] = true;
            while (cur != u) {
                face.push_back(cur);
                std::vector<ExactVec3> cand;
                std::vector<VertexId> ids;
                for (VertexId x : adjacency[cur])
                    if (x != prev) {
                        cand.push_back(vertices[x]);
                        ids.push_back(x);
                    }
                auto order = angular_order(vertices[cur], vertices[prev], cand);
                VertexId next = ids[order.back()];
                used[{cur, next}] = true;
                prev = cur;
                cur = next;
            }
            faces.push_back(face);
        }
    }
    return faces;
}

}  // namespace

std::string seed_name(SeedKind kind) {
    switch (kind) {
        case SeedKind::Cube: return "cube";
        case SeedKind::Dodecahedron: return "dodecahedron";
        case SeedKind::Icosahedron: return "icosahedron";
        case SeedKind::Cuboctahedron: return "cuboctahedron";
        case SeedKind::Icosidodecahedron: return "icosidodecahedron";
    }
    return "?";
}

SeedKind parse_seed_kind(std::string_view name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (SeedKind k : kAllSeedKinds)
        if (seed_name(k) == lower) return k;
    throw std::invalid_argument("unknown seed solid '" + std::string(name) + "'");
}

bool is_quasiregular(SeedKind kind) {
    return kind == SeedKind::Cuboctahedron || kind == SeedKind::Icosidodecahedron;
}

VertexId SeedSolid::find_vertex(const ExactVec3& p) const {
    auto it = std::find(vertices.begin(), vertices.end(), p);
    return it == vertices.end() ? -1 : static_cast<VertexId>(it - vertices.begin());
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

SymmetryGroups group_from_generators(const std::vector<ExactMat3>& generators, const std::vector<ExactVec3>& vertices) {
    constexpr std::size_t kMaxOrder = 120;
    int d = vertices.empty() ? 2 : vertices[0].radicand();
    std::vector<GroupElement> gens;
    for (const auto& g : generators) gens.push_back({g, induced_permutation(g, vertices), g.determinant().sign() > 0});

    GroupElement identity{ExactMat3::identity(d), {}, true};
    identity.perm.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) identity.perm[i] = static_cast<int>(i);

    std::vector<GroupElement> elements{identity};
    std::map<Permutation, std::size_t> seen{{identity.perm, 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Permutation p = compose(g.perm, elements[head].perm);
            if (seen.count(p)) continue;
            if (elements.size() == kMaxOrder) throw std::runtime_error("group closure exceeds 120 elements");
            GroupElement e{g.matrix * elements[head].matrix, std::move(p), g.proper == elements[head].proper};
            seen.emplace(e.perm, elements.size());
            elements.push_back(std::move(e));
        }
    }
    SymmetryGroups out;
    out.full = elements;
    for (const auto& e : elements)
        if (e.proper) out.rotation.push_back(e);
    return out;
}

SeedSolid make_seed(SeedKind kind) {
    SeedSolid s;
    s.kind = kind;
    s.radicand = (kind == SeedKind::Cube || kind == SeedKind::Cuboctahedron) ? 2 : 5;
    s.vertices = seed_vertices(kind);
    std::sort(s.vertices.begin(), s.vertices.end(), [](const ExactVec3& a, const ExactVec3& b) {
        for (std::size_t i = 0; i < 3; ++i) {
            auto c = compare(a[i], b[i]);
            if (c != 0) return c > 0;
        }
        return false;
    });

    const int n = s.f0();
    ExactNumber best;
    bool have = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ExactNumber dd = norm2(s.vertices[i] - s.vertices[j]);
            if (!have || dd < best) {
                best = dd;
                have = true;
            }
        }
    s.adjacency.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (norm2(s.vertices[i] - s.vertices[j]) == best) {
                s.edges.emplace_back(i, j);
                s.adjacency[i].push_back(j);
                s.adjacency[j].push_back(i);
            }
    s.opposite.resize(n);
    for (int i = 0; i < n; ++i) s.opposite[i] = s.find_vertex(-s.vertices[i]);
    s.faces = trace_faces(s.vertices, s.adjacency);

    auto gens = (kind == SeedKind::Cube || kind == SeedKind::Cuboctahedron)
                    ? octahedral_generators()
                    : icosahedral_generators(kind != SeedKind::Icosahedron);
    auto groups = group_from_generators(gens, s.vertices);
    s.full_group = std::move(groups.full);
    s.rotation_group = std::move(groups.rotation);
    return s;
}

const SeedSolid& seed_solid(SeedKind kind) {
    static const std::vector<SeedSolid> all = [] {
        std::vector<SeedSolid> v;
        for (auto k : kAllSeedKinds) v.push_back(make_seed(k));
        return v;
    }();
    return all[static_cast<std::size_t>(kind)];
}

std::vector<GroupElement> vertex_stabilizer(const SeedSolid& s, VertexId v, GroupChoice which) {
    const auto& group = which == GroupChoice::Full ? s.full_group : s.rotation_group;
    std::vector<GroupElement> out;
    for (const auto& g : group)
        if (g.perm[v] == v) out.push_back(g);
    return out;
}

std::vector<std::size_t> angular_order(const ExactVec3& center, const ExactVec3& back,
                                       const std::vector<ExactVec3>& candidates) {
    // Upper half: counterclockwise angle in [0, pi); lower half: [pi, 2 pi).
    // Projections onto the tangent plane are never formed: the triple
    // product with `center` and the tangential dot product carry the signs.
    ExactNumber cc = norm2(center);
    ExactNumber bc = dot(back, center);
    auto half = [&](const ExactVec3& p) {
        int y = det3(center, back, p).sign();
        if (y > 0) return 0;
        if (y < 0) return 1;
        int x = (dot(back, p) * cc - bc * dot(p, center)).sign();
        return x > 0 ? 0 : 1;
    };
    std::vector<int> halves;
    for (const auto& p : candidates) halves.push_back(half(p));
    std::vector<std::size_t> idx(candidates.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (halves[a] != halves[b]) return halves[a] < halves[b];
        return det3(center, candidates[a], candidates[b]).sign() > 0;
    });
    return idx;
}

}  // namespace regpoly
