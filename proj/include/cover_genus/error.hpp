#ifndef COVER_GENUS_ERROR_HPP
#define COVER_GENUS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cover_genus {

enum class ErrorKind {
  DegreeMismatch,
  InvalidPermutation,
  OrderExceedsCap,
  RelationViolated,
  NotTransitive,
  DuplicateLabel,
  InternalParity,
  InternalConsistency,
  BaseMismatch,
  LabelConflict,
  NotAligned,
  KOutOfRange,
  BudgetExceeded,
  RetriesExhausted,
  UnknownFixture,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this type; `kind()` lets callers
/// turn budget/cap overruns into "skipped" results instead of hard errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cover_genus

#endif  // COVER_GENUS_ERROR_HPP
