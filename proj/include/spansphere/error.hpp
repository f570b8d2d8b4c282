#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace spansphere {

enum class Errc {
  InvalidVertex,
  BadArity,
  PreconditionFailed,
  NotTightlyConnected,
  PartTooSmall,
  EmptyComplex,
  BadOverlap,
  MissingFacet,
  DimMismatch,
  WrongDim,
  BadParams,
  HallFailure,
  ParityFixImpossible,
  NoPerfectMatching,
  SingletonUnresolvable,
  ReducedDegreeFailure,
  MissingFamilyFacet,
  BudgetExceeded,
  HypothesisFailed,
  ParseError,
  IoError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::uint64_t> subject = std::nullopt);

  Errc code() const noexcept { return code_; }
  // Offending part, line number or link index, depending on the code.
  std::optional<std::uint64_t> subject() const noexcept { return subject_; }
  // Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
  std::optional<std::uint64_t> subject_;
};

[[noreturn]] void fail(Errc code, const std::string& message,
                       std::optional<std::uint64_t> subject = std::nullopt);

}  // namespace spansphere
