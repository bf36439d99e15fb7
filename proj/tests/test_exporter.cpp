#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "regpoly/exporter.hpp"

using namespace regpoly;
using regpoly::testing::pruned_result;
using regpoly::testing::record;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    fs::path p = fs::path(REGPOLY_TEST_TMP) / "exporter";
    fs::create_directories(p);
    return p;
}

OffMesh round_trip(const CandidatePolyhedron& P) {
    std::stringstream ss;
    write_off(ss, P);
    return read_off(ss);
}

}  // namespace

TEST_CASE("OFF of accepted polyhedra") {
    auto m = round_trip(record("P03").polyhedron);
    CHECK(m.vertices.size() == 20);
    CHECK(m.faces.size() == 30);
    m = round_trip(record("P10").polyhedron);
    CHECK(m.vertices.size() == 30);
    CHECK(m.faces.size() == 12);
}

TEST_CASE("re-imported OFF reproduces the f-vector") {
    for (const auto& r : pruned_result().records) {
        CAPTURE(r.id);
        auto m = round_trip(r.polyhedron);
        CHECK(m.f_vector() == r.f_vector);
        CHECK(m.declared_edges == r.f_vector[1]);
        // coordinates survive to double precision
        for (std::size_t v = 0; v < m.vertices.size(); ++v) {
            auto exact = testing::approx(r.polyhedron.seed->vertices[v]);
            for (int i = 0; i < 3; ++i) CHECK(m.vertices[v][i] == doctest::Approx(exact[i]).epsilon(1e-15));
        }
    }
}

TEST_CASE("single face OFF") {
    auto t = FaceTracer(seed_metric(SeedKind::Dodecahedron), parse_length_config("2"));
    auto res = t.trace(parse_shape_word("[hl]"));
    REQUIRE(res.ok());
    std::stringstream ss;
    write_face_off(ss, t.seed(), res.polygon->boundary);
    auto m = read_off(ss);
    CHECK(m.vertices.size() == 5);
    CHECK(m.faces.size() == 1);
    CHECK(m.faces[0] == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("OFF reader errors") {
    std::stringstream bad("OFF\n3 1\n");
    CHECK_THROWS_AS(read_off(bad), std::runtime_error);
    std::stringstream header("PLY\n");
    CHECK_THROWS_AS(read_off(header), std::runtime_error);
    std::stringstream index("OFF\n1 1 0\n0 0 0\n3 0 1 2\n");
    CHECK_THROWS_AS(read_off(index), std::runtime_error);
    std::stringstream comments("# c\nOFF\n# c\n3 1 3\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
    CHECK(read_off(comments).f_vector() == std::array<int, 3>{3, 3, 1});
}

TEST_CASE("export to unwritable path throws") {
    auto blocker = tmp_dir() / "not_a_dir";
    std::ofstream(blocker) << "x";
    CHECK_THROWS(export_off(record("P01").polyhedron, blocker / "x.off"));
}

TEST_CASE("symbolic sidecar") {
    std::stringstream ss;
    write_symbolic_coordinates(ss, seed_solid(SeedKind::Icosidodecahedron));
    int lines = 0;
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != '#') {
            ++lines;
            CHECK(line.substr(line.rfind(' ') + 1) == "5");
        }
    CHECK(lines == 30);
}

TEST_CASE("report is byte-stable and round-trips") {
    auto a = report_to_string(make_report(pruned_result()));
    auto b = report_to_string(make_report(run_pipeline({})));
    CHECK(a == b);
    CHECK(a.back() == '\n');
    auto parsed = parse_report(a);
    CHECK(parsed.schema_version == kReportSchemaVersion);
    CHECK(parsed.records.size() == 10);
    CHECK(parsed.rejections.size() == pruned_result().rejections.size());
    CHECK(report_to_string(parsed) == a);
    for (std::size_t i = 0; i < parsed.records.size(); ++i)
        CHECK(face_set(parsed.records[i].polyhedron) == face_set(pruned_result().records[i].polyhedron));
}

TEST_CASE("report contents") {
    auto rep = make_report(pruned_result(), true);
    CHECK(rep.records.size() == 10);
    CHECK(rep.rejections.empty());
    CHECK(rep.tool_version == tool_version());
    CHECK(!rep.seed_coordinate_convention.empty());
    auto text = report_to_string(rep);
    CHECK(text.find("\"censusLabel\": \"R9.16\"") != std::string::npos);
    CHECK(text.find("\"onlyAccepted\": true") != std::string::npos);
    // field order is fixed
    CHECK(text.find("\"schemaVersion\"") < text.find("\"toolVersion\""));
    CHECK(text.find("\"records\"") < text.find("\"rejections\""));
}

TEST_CASE("report parser errors") {
    CHECK_THROWS_AS(parse_report("{"), std::runtime_error);
    CHECK_THROWS_AS(parse_report("{\"schemaVersion\": 99}"), std::runtime_error);
}

TEST_CASE("files on disk") {
    auto dir = tmp_dir();
    export_report(make_report(pruned_result()), dir / "report.json");
    export_off(record("P04").polyhedron, dir / "P04.off");
    std::ifstream in(dir / "P04.off");
    auto m = read_off(in);
    CHECK(m.faces.size() == 24);
    std::ifstream rj(dir / "report.json");
    std::stringstream ss;
    ss << rj.rdbuf();
    CHECK(ss.str() == report_to_string(make_report(pruned_result())));
}
