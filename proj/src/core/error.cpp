#include "spansphere/error.hpp"

namespace spansphere {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::BadArity: return "BadArity";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotTightlyConnected: return "NotTightlyConnected";
    case Errc::PartTooSmall: return "PartTooSmall";
    case Errc::EmptyComplex: return "EmptyComplex";
    case Errc::BadOverlap: return "BadOverlap";
    case Errc::MissingFacet: return "MissingFacet";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::WrongDim: return "WrongDim";
    case Errc::BadParams: return "BadParams";
    case Errc::HallFailure: return "HallFailure";
    case Errc::ParityFixImpossible: return "ParityFixImpossible";
    case Errc::NoPerfectMatching: return "NoPerfectMatching";
    case Errc::SingletonUnresolvable: return "SingletonUnresolvable";
    case Errc::ReducedDegreeFailure: return "ReducedDegreeFailure";
    case Errc::MissingFamilyFacet: return "MissingFamilyFacet";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::uint64_t> subject)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      detail_(message),
      subject_(subject) {}

void fail(Errc code, const std::string& message,
          std::optional<std::uint64_t> subject) {
  throw Error(code, message, subject);
}

}  // namespace spansphere
