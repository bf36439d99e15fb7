#include "regpoly/tracer.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace regpoly {

namespace {

std::string lower_no_space(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

// Which side of the directed step u -> w the start convention wants its
// marker on, for quasiregular seeds. The marker is the triangle of S on the
// edge u-w, or the centroid of the face whose diagonal u-w is.
bool quasiregular_marker_on_left(const SeedSolid& s, const SeedMetric& m, EdgeLength len) {
    if (m.orientation_type(len) == OrientationType::Bicolor) return true;
    // directed: the start edge is chosen so that [r,r,r,r] turns toward the
    // marker, which makes it a triangle of S at length 1
    (void)s;
    return false;
}

std::optional<bool> marker_left_of_step(const SeedSolid& s, VertexId u, VertexId w) {
    for (const auto& f : s.faces) {
        const int p = static_cast<int>(f.size());
        auto iu = std::find(f.begin(), f.end(), u);
        auto iw = std::find(f.begin(), f.end(), w);
        if (iu == f.end() || iw == f.end()) continue;
        int a = static_cast<int>(iu - f.begin()), b = static_cast<int>(iw - f.begin());
        bool side = (a + 1) % p == b || (b + 1) % p == a;
        if (side && p != 3) continue;  // the edge's other face is the triangle
        ExactVec3 marker;
        if (p == 3) {
            for (VertexId t : f)
                if (t != u && t != w) marker = s.vertices[t];
        } else {
            marker = s.vertices[f[0]];
            for (int i = 1; i < p; ++i) marker = marker + s.vertices[f[i]];
        }
        int sg = det3(s.vertices[u], s.vertices[w], marker).sign();
        if (sg == 0) return std::nullopt;
        return sg > 0;
    }
    return std::nullopt;
}

}  // namespace

std::string direction_name(Direction d) {
    switch (d) {
        case Direction::R: return "r";
        case Direction::HR: return "hr";
        case Direction::SR: return "sr";
        case Direction::F: return "f";
        case Direction::SL: return "sl";
        case Direction::HL: return "hl";
        case Direction::L: return "l";
    }
    return "?";
}

Direction parse_direction(std::string_view text) {
    std::string s = lower_no_space(text);
    for (Direction d : {Direction::R, Direction::HR, Direction::SR, Direction::F, Direction::SL, Direction::HL, Direction::L})
        if (direction_name(d) == s) return d;
    throw std::invalid_argument("unknown direction symbol '" + std::string(text) + "'");
}

Direction prime(Direction d) {
    switch (d) {
        case Direction::R: return Direction::L;
        case Direction::L: return Direction::R;
        case Direction::HR: return Direction::HL;
        case Direction::HL: return Direction::HR;
        case Direction::SR: return Direction::SL;
        case Direction::SL: return Direction::SR;
        case Direction::F: return Direction::F;
    }
    return d;
}

std::vector<Direction> alphabet_for(int continuations) {
    switch (continuations) {
        case 3: return {Direction::R, Direction::F, Direction::L};
        case 4: return {Direction::HR, Direction::SR, Direction::SL, Direction::HL};
        case 5: return {Direction::HR, Direction::SR, Direction::F, Direction::SL, Direction::HL};
    }
    throw std::invalid_argument("no direction alphabet for " + std::to_string(continuations) + " continuations");
}

ShapeWord ShapeWord::shifted(int k) const {
    ShapeWord out;
    for (int i = 0; i < 4; ++i) out.symbols[i] = symbols[((i + k) % 4 + 4) % 4];
    return out;
}

ShapeWord ShapeWord::primed() const {
    ShapeWord out;
    for (int i = 0; i < 4; ++i) out.symbols[i] = prime(symbols[i]);
    return out;
}

ShapeWord ShapeWord::reversed_primed() const {
    ShapeWord out;
    for (int i = 0; i < 4; ++i) out.symbols[i] = prime(symbols[3 - i]);
    return out;
}

int ShapeWord::period() const {
    if (shifted(1) == *this) return 1;
    if (shifted(2) == *this) return 2;
    return 4;
}

std::string ShapeWord::to_string() const {
    int n = period() == 4 ? 4 : 2;
    std::string out = "[";
    for (int i = 0; i < n; ++i) out += (i ? "," : "") + direction_name(symbols[i]);
    return out + "]";
}

std::string Shape::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "&" : "") + words[i].to_string();
    return out;
}

ShapeWord parse_shape_word(std::string_view text) {
    std::string s = lower_no_space(text);
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("shape word must look like [a,b,c,d]: '" + std::string(text) + "'");
    std::vector<Direction> syms;
    std::size_t start = 1;
    while (start < s.size()) {
        auto end = s.find_first_of(",]", start);
        syms.push_back(parse_direction(s.substr(start, end - start)));
        start = end + 1;
    }
    if (syms.size() != 1 && syms.size() != 2 && syms.size() != 4)
        throw std::invalid_argument("shape word needs 1, 2 or 4 symbols: '" + std::string(text) + "'");
    ShapeWord w;
    for (int i = 0; i < 4; ++i) w.symbols[i] = syms[i % syms.size()];
    return w;
}

Shape parse_shape(std::string_view text) {
    Shape shape;
    auto amp = text.find('&');
    shape.words.push_back(parse_shape_word(text.substr(0, amp)));
    if (amp != std::string_view::npos) {
        auto rest = text.substr(amp + 1);
        if (rest.find('&') != std::string_view::npos) throw std::invalid_argument("at most two shape words");
        shape.words.push_back(parse_shape_word(rest));
    }
    return shape;
}

FaceTracer::FaceTracer(const SeedMetric& metric, LengthConfig config) : metric_(&metric), config_(std::move(config)) {
    if (config_.lengths.empty() || config_.lengths.size() > 2) throw std::invalid_argument("one or two edge lengths required");
    for (auto len : config_.lengths)
        if (metric.neighbors_at(0, len).empty())
            throw std::invalid_argument("length " + len.to_string() + " does not occur on the " + metric.seed().name());
    int cont = static_cast<int>(metric.neighbors_at(0, step_length(1)).size());
    if (!config_.two_lengths()) --cont;
    alphabet_ = alphabet_for(cont);
    const int n = metric.seed().f0();
    cont_cache_.assign(static_cast<std::size_t>(n) * n, {});
    for (VertexId u = 0; u < n; ++u)
        for (auto len : config_.lengths)
            for (VertexId v : metric.neighbors_at(u, len)) cont_cache_[u * n + v] = compute_continuations({u, v});
    start_class_ = choose_start_class();
}

int FaceTracer::vertex_degree() const {
    int deg = 0;
    for (auto len : config_.lengths) deg += static_cast<int>(metric_->neighbors_at(0, len).size());
    return deg;
}

std::vector<VertexId> FaceTracer::continuations(DirectedEdge incoming) const {
    const int n = seed().f0();
    if (incoming.u >= 0 && incoming.v >= 0 && incoming.u < n && incoming.v < n) {
        const auto& cached = cont_cache_[incoming.u * n + incoming.v];
        if (!cached.empty()) return cached;
    }
    return compute_continuations(incoming);
}

std::vector<VertexId> FaceTracer::compute_continuations(DirectedEdge incoming) const {
    const auto& s = seed();
    EdgeLength in_len = metric_->distance(incoming.u, incoming.v);
    EdgeLength out_len = in_len;
    if (config_.two_lengths()) out_len = in_len == config_.lengths[0] ? config_.lengths[1] : config_.lengths[0];
    std::vector<VertexId> cand;
    for (VertexId w : metric_->neighbors_at(incoming.v, out_len))
        if (w != incoming.u) cand.push_back(w);
    std::vector<ExactVec3> pts;
    for (VertexId w : cand) pts.push_back(s.vertices[w]);
    std::vector<VertexId> out;
    for (auto i : angular_order(s.vertices[incoming.v], s.vertices[incoming.u], pts)) out.push_back(cand[i]);
    return out;
}

Direction FaceTracer::direction_label(DirectedEdge incoming, VertexId next) const {
    auto cont = continuations(incoming);
    auto it = std::find(cont.begin(), cont.end(), next);
    if (it == cont.end() || cont.size() != alphabet_.size())
        throw std::invalid_argument("vertex " + std::to_string(next) + " is not an admissible continuation");
    return alphabet_[it - cont.begin()];
}

VertexId FaceTracer::continuation(DirectedEdge incoming, Direction d) const {
    auto pos = std::find(alphabet_.begin(), alphabet_.end(), d);
    if (pos == alphabet_.end()) throw std::invalid_argument("symbol " + direction_name(d) + " is not in the active alphabet");
    auto cont = continuations(incoming);
    if (cont.size() != alphabet_.size()) throw std::logic_error("continuation count differs from the alphabet size");
    return cont[pos - alphabet_.begin()];
}

std::vector<DirectedEdge> FaceTracer::choose_start_class() const {
    const auto& s = seed();
    const auto& m = *metric_;
    const EdgeLength len = config_.lengths[0];
    std::map<int, std::vector<DirectedEdge>> orbits;
    for (auto& [e, id] : m.directed_edge_orbits(len)) orbits[id].push_back(e);
    if (orbits.size() == 1 || config_.two_lengths()) return orbits.begin()->second;

    // Side of a directed edge under the naming convention, or nullopt when
    // the convention does not apply.
    std::function<std::optional<bool>(DirectedEdge)> side;
    bool wanted = true;
    if (s.kind == SeedKind::Dodecahedron && (len == EdgeLength{2, 0} || len == EdgeLength{3, 0})) {
        // the minimal path on S bends left at its second vertex
        side = [&](DirectedEdge e) -> std::optional<bool> {
            std::optional<bool> verdict;
            for (const auto& path : m.shortest_paths(e.u, e.v)) {
                bool left = det3(s.vertices[path[0]], s.vertices[path[1]], s.vertices[path[2]]).sign() > 0;
                if (verdict && *verdict != left) return std::nullopt;
                verdict = left;
            }
            return verdict;
        };
    } else if (is_quasiregular(s.kind) && len.m * len.n == 0) {
        wanted = quasiregular_marker_on_left(s, m, len);
        side = [&](DirectedEdge e) -> std::optional<bool> {
            std::optional<bool> verdict;
            for (const auto& path : m.shortest_paths(e.u, e.v)) {
                auto left = marker_left_of_step(s, path[0], path[1]);
                if (!left || (verdict && *verdict != *left)) return std::nullopt;
                verdict = left;
            }
            return verdict;
        };
    }
    if (!side) return orbits.begin()->second;  // the orbit of the smallest directed edge

    std::vector<DirectedEdge> chosen;
    for (auto& [id, members] : orbits) {
        auto first = side(members.front());
        for (const auto& e : members)
            if (side(e) != first)
                throw std::logic_error("start convention is not constant on a rotation orbit of the " + s.name());
        if (first && *first == wanted) {
            if (!chosen.empty()) throw std::logic_error("start convention selects two orbits on the " + s.name());
            chosen = members;
        }
    }
    if (chosen.empty()) throw std::logic_error("start convention selects no orbit on the " + s.name());
    return chosen;
}

DirectedEdge FaceTracer::canonical_start() const {
    return start_class_.front();
}

bool FaceTracer::in_start_class(DirectedEdge e) const {
    return std::binary_search(start_class_.begin(), start_class_.end(), e);
}

TraceResult FaceTracer::trace(DirectedEdge start, const ShapeWord& word, int max_steps) const {
    for (Direction d : word.symbols)
        if (std::find(alphabet_.begin(), alphabet_.end(), d) == alphabet_.end())
            throw std::invalid_argument("symbol " + direction_name(d) + " is not in the active alphabet");
    const auto& s = seed();
    TraceResult res;
    if (start.u == start.v || s.opposite[start.u] == start.v) {
        res.diagnosis = Diagnosis::OppositeVertexEdge;
        res.detail = "start edge joins opposite vertices";
        return res;
    }
    if (max_steps <= 0) max_steps = 4 * (s.f0() * vertex_degree() / 2);

    std::vector<VertexId> path{start.u, start.v};
    std::set<VertexId> seen{start.u, start.v};
    for (int k = 0; k < max_steps; ++k) {
        VertexId next = continuation({path[k], path[k + 1]}, word[k]);
        if (next == start.u) {
            const int n = static_cast<int>(path.size());
            bool closes = continuation({path[n - 1], start.u}, word[n - 1]) == start.v;
            bool periodic = true;
            for (int j = 0; j < 4; ++j) periodic = periodic && word[j + n] == word[j];
            bool alternates = !config_.two_lengths() || n % 2 == 0;
            if (closes && periodic && alternates) {
                TracedPolygon poly;
                poly.boundary = path;
                for (int i = 0; i < n; ++i) {
                    poly.turns.push_back(word[i]);
                    poly.lengths.push_back(step_length(i));
                }
                poly.planar = face_planarity(path, s);
                res.polygon = std::move(poly);
                return res;
            }
            res.diagnosis = Diagnosis::VertexRevisit;
            res.detail = "returns to the start vertex after " + std::to_string(n) + " steps without closing consistently";
            return res;
        }
        if (seen.count(next)) {
            res.diagnosis = Diagnosis::VertexRevisit;
            res.detail = "revisits vertex " + std::to_string(next) + " after " + std::to_string(path.size()) + " steps";
            return res;
        }
        seen.insert(next);
        path.push_back(next);
    }
    res.diagnosis = Diagnosis::NoClosure;
    res.detail = "no closure within " + std::to_string(max_steps) + " steps";
    return res;
}

std::vector<ShapeWord> FaceTracer::readings(const std::vector<VertexId>& boundary) const {
    std::vector<ShapeWord> out;
    const int n = static_cast<int>(boundary.size());
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<VertexId> c = boundary;
        if (dir == 1) std::reverse(c.begin(), c.end());
        for (int i = 0; i < n; ++i) {
            if (!in_start_class({c[i], c[(i + 1) % n]})) continue;
            ShapeWord w;
            for (int j = 0; j < 4; ++j)
                w.symbols[j] = direction_label({c[(i + j) % n], c[(i + j + 1) % n]}, c[(i + j + 2) % n]);
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool face_planarity(const std::vector<VertexId>& boundary, const SeedSolid& s) {
    if (boundary.size() <= 3) return true;
    const ExactVec3& o = s.vertices[boundary[0]];
    std::vector<ExactVec3> diffs;
    for (std::size_t i = 1; i < boundary.size(); ++i) diffs.push_back(s.vertices[boundary[i]] - o);
    // find two independent directions, then every other difference must be coplanar with them
    for (std::size_t j = 1; j < diffs.size(); ++j) {
        ExactVec3 n = cross(diffs[0], diffs[j]);
        if (norm2(n).is_zero()) continue;
        for (const auto& d : diffs)
            if (!dot(n, d).is_zero()) return false;
        return true;
    }
    return true;  // collinear
}

}  // namespace regpoly
