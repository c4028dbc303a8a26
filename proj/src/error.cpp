#include "sgchrom/error.hpp"

namespace sgc {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::BadCode: return "BadCode";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::NegativeIndex: return "NegativeIndex";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace sgc
