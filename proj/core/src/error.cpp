#include "ghd/error.hpp"

namespace ghd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::InvalidDesign: return "InvalidDesign";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ExpansionConflict: return "ExpansionConflict";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::TooMany: return "TooMany";
    case ErrorKind::CountMismatch: return "CountMismatch";
    case ErrorKind::MissingIngredient: return "MissingIngredient";
    case ErrorKind::HoleMisaligned: return "HoleMisaligned";
    case ErrorKind::SymbolClash: return "SymbolClash";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::ClassMisalignment: return "ClassMisalignment";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Precondition: return "Precondition";
  }
  return "Unknown";
}

}  // namespace ghd
