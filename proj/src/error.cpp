#include "dmsem/error.hpp"

namespace dmsem {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NotPSD: return "NotPSD";
    case Errc::ZeroMatrix: return "ZeroMatrix";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateWord: return "DuplicateWord";
    case Errc::SelfReference: return "SelfReference";
    case Errc::UnknownWord: return "UnknownWord";
    case Errc::MissingMatrix: return "MissingMatrix";
    case Errc::IsolatedWord: return "IsolatedWord";
    case Errc::IOError: return "IOError";
    case Errc::CorruptLexicon: return "CorruptLexicon";
    case Errc::RatingOutOfRange: return "RatingOutOfRange";
    case Errc::DuplicatePair: return "DuplicatePair";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::ZeroVariance: return "ZeroVariance";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string decorate(Errc code, const std::string& what, std::size_t line) {
  std::string msg = to_string(code);
  if (line != 0) msg += " (line " + std::to_string(line) + ")";
  if (!what.empty()) msg += ": " + what;
  return msg;
}

}  // namespace

Error::Error(Errc code, const std::string& what, std::size_t line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace dmsem
