// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "regpoly/enumerate.hpp"

using namespace regpoly;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << '\n';
    failures += !ok;
}

const ClassificationRecord* find(const PipelineResult& res, const std::string& id) {
    for (const auto& r : res.records)
        if (r.id == id) return &r;
    return nullptr;
}

std::string type_string(const MapType& t) {
    return "{" + std::to_string(t.p) + "," + std::to_string(t.q) + "}_" + std::to_string(t.r);
}

std::optional<FlagMap> flags_of(const CandidatePolyhedron& P) {
    auto fr = build_flags(P);
    if (!fr.ok()) return std::nullopt;
    return *fr.flags;
}

void criterion1(const PipelineResult& ex, double seconds) {
    std::ostringstream d;
    d << ex.records.size() << " accepted, " << ex.evaluated << " evaluated, " << seconds << " s";
    for (const auto& m : ex.mismatches) d << "; " << m;
    bool ok = ex.records.size() == 10 && ex.matches_table() && seconds <= 60.0;
    for (const auto& row : reference_table()) {
        auto r = find(ex, row.id);
        ok = ok && r && r->type.p == row.type.p && r->type.q == row.type.q && r->type.r == row.type.r &&
             r->f_vector == row.f_vector && r->lengths.to_string() == row.lengths && r->genus == row.genus &&
             r->orientable == row.orientable && r->table_shape == row.shape;
    }
    report(1, ok, "exhaustive enumeration accepts exactly the 10 reference rows within 60 s", d.str());
}

void criterion2(const PipelineResult& ex) {
    int candidates = 0;
    for (auto k : kAllSeedKinds)
        for (const auto& a : admissible_edge_lengths(k))
            if (a.lengths.two_lengths()) candidates += int(candidate_words(k, a.lengths).size());
    std::vector<const ClassificationRecord*> acc;
    for (const auto& r : ex.records)
        if (r.lengths.two_lengths()) acc.push_back(&r);
    std::multiset<std::pair<bool, int>> topo;
    bool ok = candidates == 16 && acc.size() == 2;
    for (auto r : acc) {
        ok = ok && r->seed == SeedKind::Dodecahedron && r->type.p == 6 && r->type.q == 6 && r->type.r == 6 &&
             r->f_vector == std::array<int, 3>{20, 60, 20};
        topo.insert({r->orientable, r->genus});
    }
    ok = ok && topo == std::multiset<std::pair<bool, int>>{{true, 11}, {false, 22}};
    std::ostringstream d;
    d << candidates << " candidates, " << acc.size() << " accepted";
    for (auto r : acc) d << "; " << seed_name(r->seed) << ' ' << type_string(r->type) << (r->orientable ? " orientable" : " non-orientable") << " genus " << r->genus;
    report(2, ok, "two-length branch: 16 candidates, the two dodecahedral {6,6}_6", d.str());
}

void criterion3(const PipelineResult& ex) {
    std::map<std::string, int> count;
    for (const auto& r : ex.records) {
        if (!r.orientation) continue;
        count[seed_name(r.seed) + "/" + orientation_name(*r.orientation) + "/" + r.lengths.to_string()]++;
    }
    std::map<std::string, int> expected = {
        {"dodecahedron/directed/2", 2},
        {"dodecahedron/bicolor/3", 2},
        {"icosidodecahedron/directed/d", 2},
        {"icosidodecahedron/bicolor/2d", 2},
    };
    int cubo = 0;
    for (const auto& r : ex.records) cubo += r.seed == SeedKind::Cuboctahedron;
    std::ostringstream d;
    for (const auto& [k, v] : count) d << k << "=" << v << ' ';
    d << "cuboctahedron=" << cubo;
    report(3, count == expected && cubo == 0, "single-length branch counts per seed and orientation type", d.str());
}

void criterion4(const PipelineResult& ex) {
    const std::vector<int> stated = {11, 22, 9, 12, 4, 12, 6, 30, 6, 20};
    std::multiset<int> computed, expected(stated.begin(), stated.end());
    bool ok = true;
    std::ostringstream d;
    for (const auto& row : reference_table()) {
        auto r = find(ex, row.id);
        if (!r) {
            ok = false;
            continue;
        }
        int chi = r->f_vector[0] - r->f_vector[1] + r->f_vector[2];
        int genus = r->orientable ? (2 - chi) / 2 : 2 - chi;
        ok = ok && genus == r->genus && genus == row.genus && chi == r->euler;
        computed.insert(genus);
        d << row.id << "=" << genus << (r->orientable ? "R " : "N ");
    }
    report(4, ok && computed == expected, "genera from the Euler characteristic equal the stated genera", d.str());
}

void criterion5(const PipelineResult& ex) {
    bool petrie_id = true, petrie_pairs = true, c_id = true, c_swap = true, c_sums = true;
    std::set<std::set<std::string>> pairs;
    for (const auto& r : ex.records) {
        auto fm = flags_of(r.polyhedron);
        auto d1 = fm ? petrie_dual(r.polyhedron, *fm) : DualResult{};
        auto fm2 = d1.ok() ? flags_of(*d1.polyhedron) : std::nullopt;
        auto d2 = fm2 ? petrie_dual(*d1.polyhedron, *fm2) : DualResult{};
        petrie_id = petrie_id && d2.ok() && face_set(*d2.polyhedron) == face_set(r.polyhedron);

        auto partner = find(ex, r.petrie_partner);
        petrie_pairs = petrie_pairs && partner && d1.ok() && face_set(*d1.polyhedron) == face_set(partner->polyhedron) &&
                       r.type.p == partner->type.r && r.type.r == partner->type.p && r.orientable != partner->orientable;
        pairs.insert({r.id, r.petrie_partner});

        auto c1 = c_dual(r.polyhedron);
        auto c2 = c1.ok() ? c_dual(*c1.polyhedron) : DualResult{};
        c_id = c_id && c2.ok() && equal_up_to_point_reflection(*c2.polyhedron, r.polyhedron);

        auto cp = find(ex, r.c_partner);
        c_swap = c_swap && cp && c1.ok() && equal_up_to_point_reflection(*c1.polyhedron, cp->polyhedron) &&
                 (!r.orientation || (cp->orientation && *cp->orientation != *r.orientation));

        for (const auto& p : c_length_pairs(r.polyhedron)) c_sums = c_sums && p.value_sum_antipodal;
    }
    petrie_pairs = petrie_pairs && pairs.size() == 5;
    std::ostringstream d;
    d << "petrie^2=" << petrie_id << " pairs=" << petrie_pairs << " C^2=" << c_id << " C swaps type=" << c_swap
      << " C length sums=" << c_sums;
    report(5, petrie_id && petrie_pairs && c_id && c_swap && c_sums, "Petrie and C duality laws", d.str());
}

void criterion6(const PipelineResult& ex) {
    auto rep = lemma_crosschecks(ex);
    std::ostringstream d;
    int applicable = 0;
    for (const auto& c : rep.checks) {
        applicable += c.applicable;
        if (c.applicable && !c.holds) d << c.predicate << "@" << c.record << ": " << c.detail << "; ";
    }
    d << applicable << " checks, " << rep.planar_count << " with planar faces";
    report(6, rep.all_hold() && rep.planar_count == 3, "lemma predicates on the accepted polyhedra", d.str());
}

void criterion7(const PipelineResult& pr, const PipelineResult& ex) {
    std::set<std::string> acc_p, acc_e;
    for (const auto& r : pr.records) acc_p.insert(r.key);
    for (const auto& r : ex.records) acc_e.insert(r.key);
    std::map<std::string, const RejectionRecord*> rej_e;
    for (const auto& r : ex.rejections) rej_e[r.key] = &r;
    bool same_keys = pr.rejections.size() == ex.rejections.size();
    int compared = 0, differing = 0;
    for (const auto& r : pr.rejections) {
        auto it = rej_e.find(r.key);
        if (it == rej_e.end()) {
            same_keys = false;
            continue;
        }
        if (r.stage == Stage::Excluded) continue;
        ++compared;
        differing += r.diagnosis != it->second->diagnosis || r.stage != it->second->stage;
    }
    std::ostringstream d;
    d << acc_p.size() << " accepted each, " << pr.rejections.size() << " vs " << ex.rejections.size() << " rejection keys, "
      << compared << " pruned diagnoses compared, " << differing << " differ";
    report(7, acc_p == acc_e && same_keys && differing == 0,
           "pruned and exhaustive pipelines agree on accepted and rejected candidates", d.str());
}

void criterion8() {
    bool ok = true;
    std::ostringstream d;
    for (auto k : {SeedKind::Dodecahedron, SeedKind::Icosahedron}) {
        auto sc = seed_self_check(k);
        ok = ok && sc.assembled && sc.index == 1 && sc.flag_orbits == 1;
        d << seed_name(k) << " index " << sc.index << " orbits " << sc.flag_orbits << "; ";
    }
    report(8, ok, "seed solids run through the stack have index 1", d.str());
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    PipelineOptions eo;
    eo.mode = PipelineMode::Exhaustive;
    auto ex = run_pipeline(eo);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto pr = run_pipeline({});

    criterion1(ex, seconds);
    criterion2(ex);
    criterion3(ex);
    criterion4(ex);
    criterion5(ex);
    criterion6(ex);
    criterion7(pr, ex);
    criterion8();
    return failures == 0 ? 0 : 1;
}
