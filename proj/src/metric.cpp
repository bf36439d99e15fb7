#include "regpoly/metric.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace regpoly {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0)
        throw std::invalid_argument("bad edge length '" + std::string(whole) + "'");
    return v;
}

// Lengths at which the classification says each seed has directed or
// bicolor type.
std::optional<OrientationType> tabulated_type(SeedKind kind, EdgeLength len) {
    using O = OrientationType;
    auto is = [&](int m, int n) { return len.m == m && len.n == n; };
    switch (kind) {
        case SeedKind::Dodecahedron:
            if (is(2, 0)) return O::Directed;
            if (is(3, 0)) return O::Bicolor;
            break;
        case SeedKind::Cuboctahedron:
            if (is(1, 0)) return O::Directed;
            if (is(2, 0)) return O::Bicolor;
            break;
        case SeedKind::Icosidodecahedron:
            if (is(1, 0) || is(3, 0) || is(0, 1)) return O::Directed;
            if (is(2, 0) || is(4, 0) || is(0, 2)) return O::Bicolor;
            break;
        default:
            break;
    }
    return std::nullopt;
}

}  // namespace

std::string EdgeLength::to_string() const {
    std::string out;
    if (m != 0 || n == 0) out = std::to_string(m);
    if (n != 0) {
        if (!out.empty()) out += "+";
        out += (n == 1 ? "" : std::to_string(n)) + "d";
    }
    return out;
}

EdgeLength parse_edge_length(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty edge length");
    EdgeLength len;
    std::string_view rest = s;
    auto plus = rest.find('+');
    if (plus != std::string_view::npos) {
        len.m = parse_int(rest.substr(0, plus), text);
        rest = rest.substr(plus + 1);
        if (rest.empty() || rest.back() != 'd') throw std::invalid_argument("bad edge length '" + s + "'");
    }
    if (!rest.empty() && (rest.back() == 'd' || rest.back() == 'D')) {
        auto coeff = rest.substr(0, rest.size() - 1);
        len.n = coeff.empty() ? 1 : parse_int(coeff, text);
    } else {
        len.m = parse_int(rest, text);
    }
    if (len.m == 0 && len.n == 0) throw std::invalid_argument("edge length must be positive");
    return len;
}

std::string LengthConfig::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lengths.size(); ++i) out += (i ? "," : "") + lengths[i].to_string();
    return out;
}

LengthConfig parse_length_config(std::string_view text) {
    LengthConfig c;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        c.lengths.push_back(parse_edge_length(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (c.lengths.size() > 2) throw std::invalid_argument("at most two edge lengths");
    if (c.lengths.size() == 2 && c.lengths[0] == c.lengths[1]) c.lengths.pop_back();
    return c;
}

std::string orientation_name(OrientationType t) {
    return t == OrientationType::Directed ? "directed" : "bicolor";
}

std::vector<AdmissibleConfig> admissible_edge_lengths(SeedKind kind) {
    auto single = [](int m, int n, int q) { return AdmissibleConfig{{{EdgeLength{m, n}}}, q}; };
    auto pair = [](int a, int b, int q) { return AdmissibleConfig{{{EdgeLength{a, 0}, EdgeLength{b, 0}}}, q}; };
    switch (kind) {
        case SeedKind::Cube: return {pair(1, 2, 6)};
        case SeedKind::Dodecahedron: return {pair(1, 4, 6), single(2, 0, 6), single(3, 0, 6)};
        case SeedKind::Icosahedron: return {pair(1, 2, 10)};
        case SeedKind::Cuboctahedron: return {single(1, 0, 4), single(2, 0, 4)};
        case SeedKind::Icosidodecahedron:
            return {single(1, 0, 4), single(2, 0, 4), single(3, 0, 4),
                    single(4, 0, 4), single(0, 1, 4), single(0, 2, 4)};
    }
    return {};
}

int expected_vertex_degree(const SeedSolid& s) {
    return static_cast<int>(s.full_group.size()) / s.f0();
}

SeedMetric::SeedMetric(const SeedSolid& s) : seed_(&s) {
    const int n = s.f0();
    steps_.assign(n, {});
    for (auto [u, v] : s.edges) {
        steps_[u].push_back({v, EdgeLength{1, 0}});
        steps_[v].push_back({u, EdgeLength{1, 0}});
    }
    if (is_quasiregular(s.kind)) {
        // a triangle's diagonals are its edges; longer faces contribute d-steps
        for (const auto& f : s.faces) {
            const int p = static_cast<int>(f.size());
            if (p == 3) continue;
            for (int i = 0; i < p; ++i)
                for (int j = i + 2; j < p; ++j) {
                    if (i == 0 && j == p - 1) continue;
                    steps_[f[i]].push_back({f[j], EdgeLength{0, 1}});
                    steps_[f[j]].push_back({f[i], EdgeLength{0, 1}});
                }
        }
    }

    ExactNumber d = diagonal();
    auto less = [&](EdgeLength a, EdgeLength b) {
        ExactNumber diff = ExactNumber::rational(a.m - b.m, s.radicand);
        if (a.n != b.n) diff += ExactNumber::rational(a.n - b.n, s.radicand) * d;
        return diff.sign() < 0;
    };

    dist_.assign(n, std::vector<EdgeLength>(n));
    for (int src = 0; src < n; ++src) {
        std::vector<bool> done(n, false);
        std::vector<std::optional<EdgeLength>> best(n);
        best[src] = EdgeLength{0, 0};
        for (int round = 0; round < n; ++round) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!done[v] && best[v] && (pick < 0 || less(*best[v], *best[pick]))) pick = v;
            done[pick] = true;
            for (auto [w, step] : steps_[pick]) {
                EdgeLength cand{best[pick]->m + step.m, best[pick]->n + step.n};
                if (!best[w] || less(cand, *best[w])) best[w] = cand;
            }
        }
        for (int v = 0; v < n; ++v) dist_[src][v] = *best[v];
    }

    graph_dist_.assign(n, std::vector<int>(n, -1));
    for (int src = 0; src < n; ++src) {
        std::deque<int> queue{src};
        graph_dist_[src][src] = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : s.adjacency[v])
                if (graph_dist_[src][w] < 0) {
                    graph_dist_[src][w] = graph_dist_[src][v] + 1;
                    queue.push_back(w);
                }
        }
    }
}

ExactNumber SeedMetric::diagonal() const {
    switch (seed_->kind) {
        case SeedKind::Cuboctahedron: return ExactNumber::root(2);
        case SeedKind::Icosidodecahedron: return ExactNumber::golden_ratio();
        default: return ExactNumber(seed_->radicand);
    }
}

ExactNumber SeedMetric::value(EdgeLength len) const {
    return ExactNumber::rational(len.m, seed_->radicand) + ExactNumber::rational(len.n, seed_->radicand) * diagonal();
}

EdgeLength SeedMetric::distance(VertexId u, VertexId v) const {
    if (u == v) throw std::invalid_argument("distance between a vertex and itself");
    return dist_.at(u).at(v);
}

int SeedMetric::graph_distance(VertexId u, VertexId v) const {
    return graph_dist_.at(u).at(v);
}

std::vector<VertexId> SeedMetric::neighbors_at(VertexId v, EdgeLength len) const {
    std::vector<VertexId> out;
    for (VertexId w = 0; w < seed_->f0(); ++w)
        if (w != v && w != seed_->opposite[v] && dist_[v][w] == len) out.push_back(w);
    return out;
}

std::vector<EdgeLength> SeedMetric::length_classes() const {
    std::vector<EdgeLength> out;
    for (VertexId w = 1; w < seed_->f0(); ++w) {
        if (w == seed_->opposite[0]) continue;
        if (std::find(out.begin(), out.end(), dist_[0][w]) == out.end()) out.push_back(dist_[0][w]);
    }
    std::sort(out.begin(), out.end(), [&](EdgeLength a, EdgeLength b) { return value(a) < value(b); });
    return out;
}

bool SeedMetric::is_step(VertexId u, VertexId v, EdgeLength& weight) const {
    for (auto [w, step] : steps_[u])
        if (w == v) {
            weight = step;
            return true;
        }
    return false;
}

std::vector<std::vector<VertexId>> SeedMetric::shortest_paths(VertexId u, VertexId v) const {
    std::vector<std::vector<VertexId>> out;
    const EdgeLength total = distance(u, v);
    std::vector<VertexId> path{u};
    std::function<void(VertexId, EdgeLength)> walk = [&](VertexId at, EdgeLength used) {
        if (at == v) {
            out.push_back(path);
            return;
        }
        for (auto [w, step] : steps_[at]) {
            EdgeLength next{used.m + step.m, used.n + step.n};
            EdgeLength rest = w == v ? EdgeLength{0, 0} : dist_[w][v];
            if (next.m + rest.m == total.m && next.n + rest.n == total.n) {
                path.push_back(w);
                walk(w, next);
                path.pop_back();
            }
        }
    };
    walk(u, EdgeLength{0, 0});
    return out;
}

OrientationType SeedMetric::orientation_type(EdgeLength len) const {
    auto first = neighbors_at(0, len);
    if (first.empty()) throw std::invalid_argument("no vertex pair at length " + len.to_string());
    DirectedEdge e{0, first.front()};
    OrientationType computed = same_orientation(e, e.reversed()) ? OrientationType::Bicolor : OrientationType::Directed;
    if (auto table = tabulated_type(seed_->kind, len); table && *table != computed)
        throw std::logic_error("orientation type of " + seed_->name() + " at length " + len.to_string() +
                               " disagrees with the classification table");
    return computed;
}

bool SeedMetric::same_orientation(DirectedEdge e1, DirectedEdge e2) const {
    for (const auto& g : seed_->rotation_group)
        if (g.perm[e1.u] == e2.u && g.perm[e1.v] == e2.v) return true;
    return false;
}

std::vector<std::pair<DirectedEdge, int>> SeedMetric::directed_edge_orbits(EdgeLength len) const {
    std::map<DirectedEdge, int> orbit;
    std::vector<DirectedEdge> all;
    for (VertexId u = 0; u < seed_->f0(); ++u)
        for (VertexId v : neighbors_at(u, len)) all.push_back({u, v});
    std::sort(all.begin(), all.end());
    int next_id = 0;
    for (const auto& e : all) {
        if (orbit.count(e)) continue;
        for (const auto& g : seed_->rotation_group) orbit.emplace(DirectedEdge{g.perm[e.u], g.perm[e.v]}, next_id);
        ++next_id;
    }
    return {orbit.begin(), orbit.end()};
}

const SeedMetric& seed_metric(SeedKind kind) {
    static const std::vector<SeedMetric> all = [] {
        std::vector<SeedMetric> v;
        for (auto k : kAllSeedKinds) v.emplace_back(seed_solid(k));
        return v;
    }();
    return all[static_cast<std::size_t>(kind)];
}

}  // namespace regpoly
