#pragma once

// OFF geometry for polyhedra and single faces, and the JSON atlas report.
// Coordinates in OFF are decimal renderings; the exact values stay
// available through the symbolic sidecar.

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "regpoly/enumerate.hpp"

namespace regpoly {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kOffDigits = 17;
std::string tool_version();
// How the seed coordinates are placed, stated in every report.
std::string seed_coordinate_convention();

// Every vertex of the seed in order, then the faces as index lists.
void write_off(std::ostream& out, const CandidatePolyhedron& P);
// Only the vertices of this face, renumbered in boundary order.
void write_face_off(std::ostream& out, const SeedSolid& s, const Cycle& face);
// One line "x_a x_b y_a y_b z_a z_b D" per vertex, exact rationals.
void write_symbolic_coordinates(std::ostream& out, const SeedSolid& s);

// Throws std::runtime_error when the file cannot be written.
void export_off(const CandidatePolyhedron& P, const std::filesystem::path& path);
void export_face_off(const SeedSolid& s, const Cycle& face, const std::filesystem::path& path);

struct OffMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::vector<int>> faces;
    int declared_edges = 0;
    // (f0, f1, f2) with f1 counted from the face boundaries
    std::array<int, 3> f_vector() const;
};
// Throws std::runtime_error on malformed input.
OffMesh read_off(std::istream& in);

struct AtlasReport {
    int schema_version = kReportSchemaVersion;
    std::string tool_version;
    std::string seed_coordinate_convention;
    std::string mode;
    bool only_accepted = false;
    std::vector<ClassificationRecord> records;
    std::vector<RejectionRecord> rejections;
    std::vector<std::string> mismatches;
};

AtlasReport make_report(const PipelineResult& result, bool only_accepted = false);
// Stable field order, two-space indentation, trailing newline.
std::string report_to_string(const AtlasReport& report);
// Inverse of report_to_string; records get their polyhedra back from the
// stored faces. Throws std::runtime_error on malformed input.
AtlasReport parse_report(std::string_view text);
void export_report(const AtlasReport& report, const std::filesystem::path& path);

// JSON for one record (used by the CLI and the Python module).
std::string record_to_string(const ClassificationRecord& record);

}  // namespace regpoly
