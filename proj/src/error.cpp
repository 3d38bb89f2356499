#include "ksod/error.hpp"

namespace ksod {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::MonomialGerm: return "MonomialGerm";
    case ErrorKind::ExtensionUnsupported: return "ExtensionUnsupported";
    case ErrorKind::RecursionLimit: return "RecursionLimit";
    case ErrorKind::CommonFactor: return "CommonFactor";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NegativeRank: return "NegativeRank";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::InfiniteDimensionalSuspected: return "InfiniteDimensionalSuspected";
    case ErrorKind::DefectExceedsL: return "DefectExceedsL";
    case ErrorKind::MatrixShapeMismatch: return "MatrixShapeMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NegativeResult: return "NegativeResult";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

bool is_unsupported(ErrorKind kind) {
  return kind == ErrorKind::ExtensionUnsupported || kind == ErrorKind::RecursionLimit;
}

}  // namespace ksod
