#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pachner {

enum class ErrorCode {
  EmptyInput,
  MixedDimensions,
  DegenerateFacet,
  ParseError,
  IoError,
  DimensionOutOfRange,
  NotAFace,
  EmptySimplexInput,
  NotPseudomanifold,
  NotClosedPseudomanifold,
  UnsupportedDimension,
  LabelClash,
  InadmissibleMove,
  VertexInUse,
  SubdivisionAtVertex,
  WeldInadmissible,
  ClosedComplex,
  InadmissibleShelling,
  FacetPresent,
  GluingNotOnBoundary,
  WouldBreakPseudomanifold,
  NoAdmissibleMove,
  BudgetTooSmall,
  NodeNotInGraph,
  TraceDivergence,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable and
// is what the CLI prints in its `ERROR <code>: <message>` line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pachner
