#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paretoscope {

enum class Errc {
  DimensionMismatch,
  InfeasibleConfig,
  InfeasibleLattice,
  InvalidArgument,
  InvalidAgent,
  InvalidTransform,
  ZeroReferencePoint,
  HypothesisViolated,
  VectorValuedAgentInfo,
  CapExceeded,
  ParseError,
  ValidationError,
  MissingField,
  InternalInvariant,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Scenario text that does not match the grammar. Line and column are
/// 1-based; a zero line means the position is relative to a single value.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t moves, std::size_t cap);

  std::size_t moves() const noexcept { return moves_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t moves_;
  std::size_t cap_;
};

}  // namespace paretoscope
