#include "regpoly/maps.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace regpoly {

namespace {

std::pair<VertexId, VertexId> undirected(VertexId a, VertexId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
        return c;
    }
};

AssemblyResult reject(Diagnosis d, std::string detail) {
    AssemblyResult r;
    r.diagnosis = d;
    r.detail = std::move(detail);
    return r;
}

}  // namespace

Cycle canonical_cycle(const Cycle& c) {
    const int n = static_cast<int>(c.size());
    Cycle best;
    for (int dir = 0; dir < 2; ++dir)
        for (int s = 0; s < n; ++s) {
            Cycle cand(n);
            for (int i = 0; i < n; ++i) cand[i] = dir == 0 ? c[(s + i) % n] : c[((s - i) % n + n) % n];
            if (best.empty() || cand < best) best = std::move(cand);
        }
    return best;
}

Cycle apply_permutation(const Permutation& g, const Cycle& c) {
    Cycle out;
    out.reserve(c.size());
    for (VertexId v : c) out.push_back(g[v]);
    return out;
}

std::vector<Cycle> face_set(const CandidatePolyhedron& P) {
    std::vector<Cycle> out;
    for (const auto& f : P.faces) out.push_back(canonical_cycle(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> rotation_orbit(const SeedSolid& s, const Cycle& face) {
    std::set<Cycle> orbit;
    for (const auto& g : s.rotation_group) orbit.insert(canonical_cycle(apply_permutation(g.perm, face)));
    return {orbit.begin(), orbit.end()};
}

AssemblyResult assemble(const SeedSolid& s, const LengthConfig& lengths, const Shape& shape,
                        const std::vector<Cycle>& face_seeds) {
    if (face_seeds.empty() || face_seeds.size() > 2) throw std::invalid_argument("one or two seed faces required");
    const int f1 = static_cast<int>(s.full_group.size()) / 2;
    const int p = static_cast<int>(face_seeds.front().size());
    for (const auto& f : face_seeds)
        if (static_cast<int>(f.size()) != p)
            return reject(Diagnosis::OrbitMismatch, "seed faces have different sizes");
    if ((2 * f1) % p != 0)
        return reject(Diagnosis::OrbitMismatch, "face size " + std::to_string(p) + " does not divide 2 f1 = " + std::to_string(2 * f1));
    const int f2 = 2 * f1 / p;

    std::vector<Cycle> faces;
    std::vector<int> orbit_of;
    std::set<Cycle> seen;
    for (std::size_t k = 0; k < face_seeds.size(); ++k) {
        auto orbit = rotation_orbit(s, face_seeds[k]);
        if (seen.count(orbit.front()))
            return reject(Diagnosis::OrbitMismatch, "the two seed faces lie in one rotation orbit");
        const int want = static_cast<int>(face_seeds.size()) == 1 ? f2 : f2 / 2;
        if (static_cast<int>(orbit.size()) != want)
            return reject(Diagnosis::OrbitMismatch, "rotation orbit has " + std::to_string(orbit.size()) +
                                                        " faces, expected " + std::to_string(want));
        for (auto& f : orbit) {
            seen.insert(f);
            faces.push_back(f);
            orbit_of.push_back(static_cast<int>(k));
        }
    }
    return assemble_faces(s, lengths, shape, std::move(faces), std::move(orbit_of), expected_vertex_degree(s));
}

AssemblyResult assemble_faces(const SeedSolid& s, const LengthConfig& lengths, const Shape& shape,
                              std::vector<Cycle> faces, std::vector<int> face_orbit, int q_expected) {
    if (face_orbit.empty()) face_orbit.assign(faces.size(), 0);
    std::map<std::pair<VertexId, VertexId>, std::vector<int>> edge_faces;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        for (std::size_t i = 0; i < f.size(); ++i) edge_faces[undirected(f[i], f[(i + 1) % f.size()])].push_back(fi);
    }
    for (const auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            return reject(Diagnosis::EdgeNotInTwoFaces, "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                                            " lies in " + std::to_string(fs.size()) + " faces");

    std::vector<int> degree(s.f0(), 0);
    for (const auto& [e, fs] : edge_faces) {
        ++degree[e.first];
        ++degree[e.second];
    }
    for (VertexId v = 0; v < s.f0(); ++v)
        if (degree[v] != q_expected)
            return reject(Diagnosis::WrongVertexDegree, "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]) +
                                                            ", expected " + std::to_string(q_expected));

    // two faces sharing a path a-b-c
    std::map<std::tuple<VertexId, VertexId, VertexId>, int> corners;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const auto& f = faces[fi];
        const std::size_t n = f.size();
        for (std::size_t i = 0; i < n; ++i) {
            VertexId a = f[i], b = f[(i + 1) % n], c = f[(i + 2) % n];
            auto key = a < c ? std::make_tuple(a, b, c) : std::make_tuple(c, b, a);
            auto [it, fresh] = corners.emplace(key, fi);
            if (!fresh && it->second != fi)
                return reject(Diagnosis::ConsecutiveSharedEdges, "faces " + std::to_string(it->second) + " and " + std::to_string(fi) +
                                                                     " share the edges at vertex " + std::to_string(b));
        }
    }

    UnionFind uf(static_cast<int>(faces.size()));
    for (const auto& [e, fs] : edge_faces) uf.unite(fs[0], fs[1]);
    if (int c = uf.components(); c != 1)
        return reject(Diagnosis::CompoundDisconnected, "faces fall into " + std::to_string(c) + " connected pieces");

    CandidatePolyhedron P;
    P.seed = &s;
    P.lengths = lengths;
    P.shape = shape;
    P.faces = std::move(faces);
    P.face_orbit = std::move(face_orbit);
    for (const auto& [e, fs] : edge_faces) P.edges.push_back(e);
    AssemblyResult r;
    r.polyhedron = std::move(P);
    return r;
}

int FlagMap::find(VertexId v, int edge_id, int face_id) const {
    for (int x = 2 * face_offset[face_id]; x < 2 * face_offset[face_id + 1]; ++x)
        if (vertex[x] == v && edge[x] == edge_id) return x;
    return -1;
}

FlagResult build_flags(const CandidatePolyhedron& P) {
    FlagMap fm;
    std::map<std::pair<VertexId, VertexId>, int> edge_id;
    for (int i = 0; i < P.f1(); ++i) edge_id[P.edges[i]] = i;

    fm.face_offset.push_back(0);
    for (const auto& f : P.faces) fm.face_offset.push_back(fm.face_offset.back() + static_cast<int>(f.size()));
    const int n = 2 * fm.face_offset.back();
    fm.vertex.resize(n);
    fm.edge.resize(n);
    fm.face.resize(n);
    for (auto& a : fm.adj) a.assign(n, -1);

    std::vector<std::vector<int>> faces_of_edge(P.f1());
    for (int fi = 0; fi < P.f2(); ++fi) {
        const auto& f = P.faces[fi];
        const int p = static_cast<int>(f.size());
        for (int i = 0; i < p; ++i) {
            int e = edge_id.at(undirected(f[i], f[(i + 1) % p]));
            faces_of_edge[e].push_back(fi);
            for (int end = 0; end < 2; ++end) {
                int x = 2 * (fm.face_offset[fi] + i) + end;
                fm.vertex[x] = end == 0 ? f[i] : f[(i + 1) % p];
                fm.edge[x] = e;
                fm.face[x] = fi;
                fm.adj[0][x] = x ^ 1;
            }
            int here = 2 * (fm.face_offset[fi] + i) + 1;
            int next = 2 * (fm.face_offset[fi] + (i + 1) % p);
            fm.adj[1][here] = next;
            fm.adj[1][next] = here;
        }
    }
    for (int x = 0; x < n; ++x) {
        const auto& fs = faces_of_edge[fm.edge[x]];
        int other = fs[0] == fm.face[x] ? fs[1] : fs[0];
        fm.adj[2][x] = fm.find(fm.vertex[x], fm.edge[x], other);
    }

    // each vertex link must be one cycle of faces
    std::vector<int> flags_at(P.f0(), 0);
    std::vector<bool> visited(n, false);
    for (int x = 0; x < n; ++x) ++flags_at[fm.vertex[x]];
    for (VertexId v = 0; v < P.f0(); ++v) {
        int start = -1;
        for (int x = 0; x < n && start < 0; ++x)
            if (fm.vertex[x] == v) start = x;
        int count = 0, x = start;
        do {
            visited[x] = true;
            x = fm.adj[1][x];
            visited[x] = true;
            x = fm.adj[2][x];
            count += 2;
        } while (x != start);
        if (count != flags_at[v]) {
            FlagResult r;
            r.detail = "the faces around vertex " + std::to_string(v) + " form more than one cycle";
            return r;
        }
    }
    FlagResult r;
    r.flags = std::move(fm);
    return r;
}

bool flag_map_consistent(const FlagMap& fm) {
    const int n = fm.size();
    for (const auto& a : fm.adj)
        for (int x = 0; x < n; ++x)
            if (a[x] < 0 || a[x] == x || a[a[x]] != x) return false;
    for (int x = 0; x < n; ++x)
        if (fm.adj[0][fm.adj[2][x]] != fm.adj[2][fm.adj[0][x]]) return false;
    return true;
}

AutomorphismInfo automorphisms(const FlagMap& fm) {
    AutomorphismInfo info;
    const int n = fm.size();
    for (int target = 0; target < n; ++target) {
        Permutation phi(n, -1);
        phi[0] = target;
        std::deque<int> queue{0};
        bool ok = true;
        while (ok && !queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& a : fm.adj) {
                int y = a[x], img = a[phi[x]];
                if (phi[y] < 0) {
                    phi[y] = img;
                    queue.push_back(y);
                } else if (phi[y] != img) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || std::count(phi.begin(), phi.end(), -1) > 0) continue;
        std::vector<bool> hit(n, false);
        for (int v : phi) hit[v] = true;
        if (std::count(hit.begin(), hit.end(), false) > 0) continue;
        info.elements.push_back(std::move(phi));
    }
    info.order = static_cast<int>(info.elements.size());
    info.regular = info.order == n;
    return info;
}

GeometricInfo geometric_index(const CandidatePolyhedron& P, const FlagMap& fm, int aut_order) {
    const SeedSolid& s = *P.seed;
    std::map<Cycle, int> face_id;
    for (int i = 0; i < P.f2(); ++i) face_id[canonical_cycle(P.faces[i])] = i;
    std::map<std::pair<VertexId, VertexId>, int> edge_id;
    for (int i = 0; i < P.f1(); ++i) edge_id[P.edges[i]] = i;

    GeometricInfo info;
    UnionFind flag_orbits(fm.size()), rot_faces(P.f2()), full_faces(P.f2());
    for (std::size_t gi = 0; gi < s.full_group.size(); ++gi) {
        const auto& g = s.full_group[gi];
        std::vector<int> face_image(P.f2());
        bool preserves = true;
        for (int i = 0; i < P.f2() && preserves; ++i) {
            auto it = face_id.find(canonical_cycle(apply_permutation(g.perm, P.faces[i])));
            if (it == face_id.end()) preserves = false;
            else face_image[i] = it->second;
        }
        if (!preserves) continue;
        Permutation perm(fm.size());
        for (int x = 0; x < fm.size(); ++x) {
            const auto& e = P.edges[fm.edge[x]];
            int img = fm.find(g.perm[fm.vertex[x]], edge_id.at(undirected(g.perm[e.first], g.perm[e.second])), face_image[fm.face[x]]);
            if (img < 0) throw std::logic_error("symmetry does not map flags to flags");
            perm[x] = img;
            flag_orbits.unite(x, img);
        }
        for (int i = 0; i < P.f2(); ++i) {
            full_faces.unite(i, face_image[i]);
            if (g.proper) rot_faces.unite(i, face_image[i]);
        }
        info.symmetries.push_back(gi);
        info.flag_perms.push_back(std::move(perm));
    }
    info.order = static_cast<int>(info.symmetries.size());
    if (info.order == 0 || aut_order % info.order != 0)
        throw std::logic_error("|G(P)| = " + std::to_string(info.order) + " does not divide the automorphism order " +
                               std::to_string(aut_order));
    info.index = aut_order / info.order;
    info.flag_orbits = flag_orbits.components();
    info.face_orbits_rotation = rot_faces.components();
    info.face_orbits_full = full_faces.components();
    return info;
}

std::vector<Cycle> petrie_polygons(const CandidatePolyhedron& P, const FlagMap& fm) {
    (void)P;
    const int n = fm.size();
    std::vector<bool> done(n, false);
    std::set<Cycle> seen;
    std::vector<Cycle> out;
    for (int start = 0; start < n; ++start) {
        if (done[start]) continue;
        std::vector<int> orbit;
        int x = start;
        do {
            done[x] = true;
            orbit.push_back(x);
            x = fm.adj[2][fm.adj[1][fm.adj[0][x]]];
        } while (x != start);
        const int L = static_cast<int>(orbit.size());
        int period = L;
        for (int d = 1; d < L; ++d) {
            if (L % d) continue;
            bool same = true;
            for (int i = 0; i < L && same; ++i)
                same = fm.vertex[orbit[i]] == fm.vertex[orbit[(i + d) % L]] && fm.edge[orbit[i]] == fm.edge[orbit[(i + d) % L]];
            if (same) {
                period = d;
                break;
            }
        }
        Cycle c;
        for (int i = 0; i < period; ++i) c.push_back(fm.vertex[orbit[i]]);
        Cycle key = canonical_cycle(c);
        if (seen.insert(key).second) out.push_back(c);
    }
    return out;
}

MapType type_and_petrie(const CandidatePolyhedron& P, const FlagMap& fm) {
    MapType t;
    t.p = P.p();
    t.q = 2 * P.f1() / P.f0();
    auto petrie = petrie_polygons(P, fm);
    t.r = petrie.empty() ? 0 : static_cast<int>(petrie.front().size());
    for (const auto& c : petrie)
        if (static_cast<int>(c.size()) != t.r) t.r = 0;  // not well defined
    return t;
}

Topology orientability_genus(const CandidatePolyhedron& P, const FlagMap& fm) {
    const int n = fm.size();
    std::vector<int> color(n, -1);
    bool bipartite = true;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (const auto& a : fm.adj) {
                int y = a[x];
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    bipartite = false;
                }
            }
        }
    }
    Topology t;
    t.orientable = bipartite;
    t.euler = P.f0() - P.f1() + P.f2();
    t.genus = bipartite ? (2 - t.euler) / 2 : 2 - t.euler;
    return t;
}

long long permutation_order(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    long long order = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long long len = 0;
        for (int x = i; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

Permutation then(const Permutation& a, const Permutation& b) {
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

std::vector<int> rotation_orbit_labels(const SeedSolid& s, const std::vector<Cycle>& faces) {
    std::map<Cycle, int> label;
    std::vector<int> out;
    int next = 0;
    for (const auto& f : faces) {
        Cycle key = canonical_cycle(f);
        auto it = label.find(key);
        if (it == label.end()) {
            for (const auto& g : s.rotation_group) label.emplace(canonical_cycle(apply_permutation(g.perm, f)), next);
            it = label.find(key);
            ++next;
        }
        out.push_back(it->second);
    }
    return out;
}

namespace {

std::vector<std::vector<ShapeWord>> orbit_readings(const FaceTracer& tracer, const CandidatePolyhedron& P) {
    std::map<int, std::vector<ShapeWord>> by_orbit;
    for (int i = 0; i < P.f2(); ++i)
        if (!by_orbit.count(P.face_orbit[i])) by_orbit[P.face_orbit[i]] = tracer.readings(P.faces[i]);
    std::vector<std::vector<ShapeWord>> out;
    for (auto& [k, v] : by_orbit) out.push_back(std::move(v));
    return out;
}

}  // namespace

Shape describe_shape(const FaceTracer& tracer, const CandidatePolyhedron& P) {
    Shape shape;
    for (const auto& readings : orbit_readings(tracer, P))
        if (!readings.empty()) shape.words.push_back(readings.front());
    std::sort(shape.words.begin(), shape.words.end());
    return shape;
}

bool shape_matches(const FaceTracer& tracer, const CandidatePolyhedron& P, const Shape& expected) {
    auto orbits = orbit_readings(tracer, P);
    if (orbits.size() != expected.words.size()) return false;
    auto has = [&](std::size_t orbit, const ShapeWord& w) {
        return std::find(orbits[orbit].begin(), orbits[orbit].end(), w) != orbits[orbit].end();
    };
    if (orbits.size() == 1) return has(0, expected.words[0]);
    return (has(0, expected.words[0]) && has(1, expected.words[1])) || (has(0, expected.words[1]) && has(1, expected.words[0]));
}

}  // namespace regpoly
