#pragma once

#include <string>
#include <string_view>

namespace regpoly {

// Why a candidate was rejected. ExcludedByLemma is only produced by the
// pruned pipeline for candidates it never evaluates.
enum class Diagnosis {
    VertexRevisit,
    NoClosure,
    OppositeVertexEdge,
    Rho1IllDefined,
    EdgeNotInTwoFaces,
    WrongVertexDegree,
    ConsecutiveSharedEdges,
    CompoundDisconnected,
    NotRegular,
    WrongIndex,
    FaceShapeFfff,
    OrbitMismatch,
    ExcludedByLemma,
};

inline constexpr Diagnosis kAllDiagnoses[] = {
    Diagnosis::VertexRevisit,      Diagnosis::NoClosure,         Diagnosis::OppositeVertexEdge,
    Diagnosis::Rho1IllDefined,     Diagnosis::EdgeNotInTwoFaces, Diagnosis::WrongVertexDegree,
    Diagnosis::ConsecutiveSharedEdges, Diagnosis::CompoundDisconnected, Diagnosis::NotRegular,
    Diagnosis::WrongIndex,         Diagnosis::FaceShapeFfff,     Diagnosis::OrbitMismatch,
    Diagnosis::ExcludedByLemma,
};

std::string diagnosis_name(Diagnosis d);
// Throws std::invalid_argument on unknown names.
Diagnosis parse_diagnosis(std::string_view name);

}  // namespace regpoly
