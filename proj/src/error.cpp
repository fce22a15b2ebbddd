#include "pachner/error.hpp"

namespace pachner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MixedDimensions: return "MixedDimensions";
    case ErrorCode::DegenerateFacet: return "DegenerateFacet";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::EmptySimplexInput: return "EmptySimplexInput";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::NotClosedPseudomanifold: return "NotClosedPseudomanifold";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::InadmissibleMove: return "InadmissibleMove";
    case ErrorCode::VertexInUse: return "VertexInUse";
    case ErrorCode::SubdivisionAtVertex: return "SubdivisionAtVertex";
    case ErrorCode::WeldInadmissible: return "WeldInadmissible";
    case ErrorCode::ClosedComplex: return "ClosedComplex";
    case ErrorCode::InadmissibleShelling: return "InadmissibleShelling";
    case ErrorCode::FacetPresent: return "FacetPresent";
    case ErrorCode::GluingNotOnBoundary: return "GluingNotOnBoundary";
    case ErrorCode::WouldBreakPseudomanifold: return "WouldBreakPseudomanifold";
    case ErrorCode::NoAdmissibleMove: return "NoAdmissibleMove";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::NodeNotInGraph: return "NodeNotInGraph";
    case ErrorCode::TraceDivergence: return "TraceDivergence";
  }
  return "Unknown";
}

}  // namespace pachner
