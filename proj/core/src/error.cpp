#include "rsspredict/error.hpp"

namespace rsspredict {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyTrace: return "EmptyTrace";
    case Errc::NonFiniteSample: return "NonFiniteSample";
    case Errc::ParseError: return "ParseError";
    case Errc::RaggedRow: return "RaggedRow";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::BlockLargerThanTrace: return "BlockLargerThanTrace";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::SequenceTooShort: return "SequenceTooShort";
    case Errc::BlockTooLong: return "BlockTooLong";
    case Errc::DomainError: return "DomainError";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidStochasticMatrix: return "InvalidStochasticMatrix";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string compose(Errc code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(Errc code, const std::string& detail, std::optional<std::size_t> line,
             std::optional<std::size_t> column)
    : std::runtime_error(compose(code, detail)), code_(code), line_(line), column_(column) {}

}  // namespace rsspredict
