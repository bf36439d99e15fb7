#include "regpoly/dualities.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace regpoly {

namespace {

std::pair<VertexId, VertexId> undirected(VertexId a, VertexId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

Cycle shortest_period(const Cycle& c) {
    const std::size_t n = c.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) same = c[i] == c[(i + d) % n];
        if (same) return Cycle(c.begin(), c.begin() + static_cast<long>(d));
    }
    return c;
}

bool has_repeat(const Cycle& c) {
    std::set<VertexId> seen(c.begin(), c.end());
    return seen.size() != c.size();
}

// Finishes a dual: orbit labels, assembly checks, shape.
DualResult finish(const SeedSolid& s, const LengthConfig& lengths, std::vector<Cycle> faces) {
    DualResult res;
    for (const auto& f : faces)
        if (has_repeat(f)) {
            res.diagnosis = Diagnosis::VertexRevisit;
            res.detail = "a dual face revisits a vertex";
            return res;
        }
    std::sort(faces.begin(), faces.end(), [](const Cycle& a, const Cycle& b) { return canonical_cycle(a) < canonical_cycle(b); });
    auto labels = rotation_orbit_labels(s, faces);
    auto a = assemble_faces(s, lengths, Shape{}, std::move(faces), std::move(labels), expected_vertex_degree(s));
    if (!a.ok()) {
        res.diagnosis = a.diagnosis;
        res.detail = a.detail;
        return res;
    }
    const SeedMetric& metric = seed_metric(s.kind);
    FaceTracer tracer(metric, lengths);
    a.polyhedron->shape = describe_shape(tracer, *a.polyhedron);
    res.polyhedron = std::move(a.polyhedron);
    return res;
}

}  // namespace

std::string duality_name(DualityKind k) {
    return k == DualityKind::Petrie ? "petrie" : "c";
}

DualityKind parse_duality_kind(std::string_view text) {
    std::string s;
    for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "petrie") return DualityKind::Petrie;
    if (s == "c" || s == "cdual" || s == "c-dual") return DualityKind::CDual;
    throw std::invalid_argument("unknown duality '" + std::string(text) + "' (expected petrie or c)");
}

DualResult petrie_dual(const CandidatePolyhedron& P, const FlagMap& fm) {
    return finish(*P.seed, P.lengths, petrie_polygons(P, fm));
}

PetrieLaw petrie_shape_law(const Shape& shape) {
    PetrieLaw law;
    if (shape.words.empty()) return law;
    for (const auto& w : shape.words)
        if (w.period() != 1 && ((w[0] == Direction::F && w[2] == Direction::F) || (w[1] == Direction::F && w[3] == Direction::F))) {
            law.kind = PetrieLaw::Kind::ForwardFace;
            law.words = {parse_shape_word("[f]")};
            return law;
        }
    const Direction a = shape.words[0][0];
    auto constant = [](Direction x) { return ShapeWord{{x, x, x, x}}; };
    auto alternating = [](Direction x) { return ShapeWord{{x, prime(x), x, prime(x)}}; };
    bool all_constant = true, all_alternating = true;
    for (const auto& w : shape.words) {
        all_constant = all_constant && (w == constant(a) || w == constant(prime(a)));
        all_alternating = all_alternating && (w == alternating(a) || w == alternating(prime(a)));
    }
    if (all_constant) {
        law.kind = PetrieLaw::Kind::Alternating;
        law.words = {alternating(a), alternating(prime(a))};
    } else if (all_alternating) {
        law.kind = PetrieLaw::Kind::Alternating;
        law.words = {constant(a), constant(prime(a))};
    }
    return law;
}

bool petrie_law_holds(const PetrieLaw& law, const FaceTracer& tracer, const CandidatePolyhedron& dual) {
    if (law.kind == PetrieLaw::Kind::NotApplicable) return true;
    std::map<int, std::vector<ShapeWord>> by_orbit;
    for (int i = 0; i < dual.f2(); ++i)
        if (!by_orbit.count(dual.face_orbit[i])) by_orbit[dual.face_orbit[i]] = tracer.readings(dual.faces[i]);
    auto reads_as = [&](const std::vector<ShapeWord>& readings) {
        for (const auto& w : law.words)
            if (std::find(readings.begin(), readings.end(), w) != readings.end()) return true;
        return false;
    };
    if (law.kind == PetrieLaw::Kind::ForwardFace) {
        for (auto& [k, readings] : by_orbit)
            if (reads_as(readings)) return true;
        return false;
    }
    for (auto& [k, readings] : by_orbit)
        if (!reads_as(readings)) return false;
    return true;
}

Cycle c_face(const Cycle& face, const SeedSolid& s, int parity) {
    const std::size_t p = face.size();
    const std::size_t n = p % 2 ? 2 * p : p;
    Cycle out(n);
    for (std::size_t i = 0; i < n; ++i) {
        VertexId v = face[i % p];
        out[i] = static_cast<int>(i % 2) != parity ? s.opposite[v] : v;
    }
    return shortest_period(out);
}

int c_dual_face_size(const Cycle& face, const SeedSolid& s) {
    const int p = static_cast<int>(face.size());
    if (p % 2) return 2 * p;
    std::set<VertexId> vs(face.begin(), face.end());
    for (VertexId v : face)
        if (vs.count(s.opposite[v])) return p / 2;
    return p;
}

DualResult c_dual(const CandidatePolyhedron& P) {
    const SeedSolid& s = *P.seed;
    // Both alternations of every face. They are point reflections of each
    // other, so the result is the same for either choice of starting
    // vertex; whether every C-edge lies in two C-faces is left to assembly.
    std::set<Cycle> seen;
    std::vector<Cycle> faces;
    for (const auto& f : P.faces)
        for (int parity = 0; parity < 2; ++parity) {
            Cycle c = c_face(f, s, parity);
            if (seen.insert(canonical_cycle(c)).second) faces.push_back(c);
        }
    // C-lengths in the order of P's configuration
    LengthConfig lengths;
    const SeedMetric& metric = seed_metric(s.kind);
    for (auto len : P.lengths.lengths) {
        for (const auto& [u, v] : P.edges)
            if (metric.distance(u, v) == len) {
                lengths.lengths.push_back(metric.distance(u, s.opposite[v]));
                break;
            }
    }
    return finish(s, lengths, std::move(faces));
}

ShapeWord c_shape_law(const ShapeWord& w) {
    return ShapeWord{{w[0], prime(w[1]), w[2], prime(w[3])}};
}

Shape c_shape_law(const Shape& s) {
    Shape out;
    for (const auto& w : s.words) out.words.push_back(c_shape_law(w));
    return out;
}

bool c_law_holds(const FaceTracer& tracer, const CandidatePolyhedron& dual, const Shape& predicted) {
    std::vector<ShapeWord> all;
    std::set<int> done;
    for (int i = 0; i < dual.f2(); ++i)
        if (done.insert(dual.face_orbit[i]).second) {
            auto r = tracer.readings(dual.faces[i]);
            all.insert(all.end(), r.begin(), r.end());
        }
    for (const auto& w : predicted.words)
        if (std::find(all.begin(), all.end(), w) == all.end()) return false;
    return !predicted.words.empty();
}

std::vector<CLengthPair> c_length_pairs(const CandidatePolyhedron& P) {
    const SeedSolid& s = *P.seed;
    const SeedMetric& metric = seed_metric(s.kind);
    const EdgeLength anti = metric.antipodal_length();
    const int anti_graph = metric.graph_distance(0, s.opposite[0]);
    std::map<EdgeLength, CLengthPair> seen;
    for (const auto& [u, v] : P.edges) {
        EdgeLength len = metric.distance(u, v);
        if (seen.count(len)) continue;
        CLengthPair pr;
        pr.length = len;
        pr.c_length = metric.distance(u, s.opposite[v]);
        pr.value_sum_antipodal = pr.length.m + pr.c_length.m == anti.m && pr.length.n + pr.c_length.n == anti.n;
        pr.graph_sum_antipodal = metric.graph_distance(u, v) + metric.graph_distance(u, s.opposite[v]) == anti_graph;
        seen.emplace(len, pr);
    }
    std::vector<CLengthPair> out;
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

CandidatePolyhedron point_reflection(const CandidatePolyhedron& P) {
    CandidatePolyhedron out = P;
    for (auto& f : out.faces) f = apply_permutation(P.seed->opposite, f);
    out.edges.clear();
    for (const auto& [u, v] : P.edges) out.edges.push_back(undirected(P.seed->opposite[u], P.seed->opposite[v]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool equal_up_to_point_reflection(const CandidatePolyhedron& A, const CandidatePolyhedron& B) {
    auto a = face_set(A);
    return a == face_set(B) || a == face_set(point_reflection(B));
}

}  // namespace regpoly
