#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace owr {

enum class ErrorCode {
  OddVertexCount,
  TooFewVertices,
  ZeroLengthEdge,
  NonOrthogonalEdge,
  CollinearConsecutiveEdges,
  SelfIntersection,
  CoordinateOutOfRange,
  NotOrthoconvex,
  NotMonotone,
  DualGraphNotPath,
  LevelOutOfCorridor,
  SegmentOutsidePolygon,
  StepNonPositive,
  TooLarge,
  InfeasibleParams,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddVertexCount: return "OddVertexCount";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::NonOrthogonalEdge: return "NonOrthogonalEdge";
    case ErrorCode::CollinearConsecutiveEdges: return "CollinearConsecutiveEdges";
    case ErrorCode::SelfIntersection: return "SelfIntersection";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::NotOrthoconvex: return "NotOrthoconvex";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::DualGraphNotPath: return "DualGraphNotPath";
    case ErrorCode::LevelOutOfCorridor: return "LevelOutOfCorridor";
    case ErrorCode::SegmentOutsidePolygon: return "SegmentOutsidePolygon";
    case ErrorCode::StepNonPositive: return "StepNonPositive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Library error. `index()` names the offending vertex, edge or group when
/// the failure can be localized.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace owr
