#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsspredict {

enum class Errc {
  EmptyTrace,
  NonFiniteSample,
  ParseError,
  RaggedRow,
  NonFiniteValue,
  BlockLargerThanTrace,
  InvalidConfig,
  EmptySequence,
  SequenceTooShort,
  BlockTooLong,
  DomainError,
  EmptyInput,
  InvalidStochasticMatrix,
  NotIrreducible,
  IoError,
};

std::string_view to_string(Errc code) noexcept;

// Every library failure is reported through this type. what() always starts
// with the error name, e.g. "RaggedRow: line 4: expected 3 fields, got 2".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::optional<std::size_t> line = std::nullopt,
        std::optional<std::size_t> column = std::nullopt);

  Errc code() const noexcept { return code_; }
  // Sample index for NonFiniteSample, 1-based file line for ingest errors.
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  Errc code_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

}  // namespace rsspredict
