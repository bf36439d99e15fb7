#include "regpoly/diagnosis.hpp"

#include <stdexcept>

namespace regpoly {

std::string diagnosis_name(Diagnosis d) {
    switch (d) {
        case Diagnosis::VertexRevisit: return "VertexRevisit";
        case Diagnosis::NoClosure: return "NoClosure";
        case Diagnosis::OppositeVertexEdge: return "OppositeVertexEdge";
        case Diagnosis::Rho1IllDefined: return "Rho1IllDefined";
        case Diagnosis::EdgeNotInTwoFaces: return "EdgeNotInTwoFaces";
        case Diagnosis::WrongVertexDegree: return "WrongVertexDegree";
        case Diagnosis::ConsecutiveSharedEdges: return "ConsecutiveSharedEdges";
        case Diagnosis::CompoundDisconnected: return "CompoundDisconnected";
        case Diagnosis::NotRegular: return "NotRegular";
        case Diagnosis::WrongIndex: return "WrongIndex";
        case Diagnosis::FaceShapeFfff: return "FaceShapeFfff";
        case Diagnosis::OrbitMismatch: return "OrbitMismatch";
        case Diagnosis::ExcludedByLemma: return "ExcludedByLemma";
    }
    return "?";
}

Diagnosis parse_diagnosis(std::string_view name) {
    for (Diagnosis d : kAllDiagnoses)
        if (diagnosis_name(d) == name) return d;
    throw std::invalid_argument("unknown diagnosis '" + std::string(name) + "'");
}

}  // namespace regpoly
