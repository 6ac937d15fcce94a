#include "cover_genus/error.hpp"

namespace cover_genus {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::OrderExceedsCap: return "OrderExceedsCap";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::InternalParity: return "InternalParity";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::LabelConflict: return "LabelConflict";
    case ErrorKind::NotAligned: return "NotAligned";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cover_genus
