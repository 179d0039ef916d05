#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmsem {

enum class Errc {
  NonSymmetric,
  NotPSD,
  ZeroMatrix,
  DimensionMismatch,
  NotNormalized,
  WeightOutOfRange,
  ParseError,
  DuplicateWord,
  SelfReference,
  UnknownWord,
  MissingMatrix,
  IsolatedWord,
  IOError,
  CorruptLexicon,
  RatingOutOfRange,
  DuplicatePair,
  InsufficientData,
  ZeroVariance,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library. `line()` is non-zero only for
/// errors tied to a position in an input file.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0);

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace dmsem
