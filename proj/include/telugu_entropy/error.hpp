#ifndef TELUGU_ENTROPY_ERROR_HPP
#define TELUGU_ENTROPY_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace telugu_entropy {

enum class ErrorCode {
  kDuplicateToken,
  kBadCategory,
  kMalformedRow,
  kUnmappedCodepoint,
  kMisplacedSign,
  kUndecodableSequence,
  kOrphanMarker,
  kUnterminatedCluster,
  kUnknownSymbol,
  kEmptyTable,
  kBadBase,
  kBadConfig,
  kIoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateToken: return "DUPLICATE_TOKEN";
    case ErrorCode::kBadCategory: return "BAD_CATEGORY";
    case ErrorCode::kMalformedRow: return "MALFORMED_ROW";
    case ErrorCode::kUnmappedCodepoint: return "UNMAPPED_CODEPOINT";
    case ErrorCode::kMisplacedSign: return "MISPLACED_SIGN";
    case ErrorCode::kUndecodableSequence: return "UNDECODABLE_SEQUENCE";
    case ErrorCode::kOrphanMarker: return "ORPHAN_MARKER";
    case ErrorCode::kUnterminatedCluster: return "UNTERMINATED_CLUSTER";
    case ErrorCode::kUnknownSymbol: return "UNKNOWN_SYMBOL";
    case ErrorCode::kEmptyTable: return "EMPTY_TABLE";
    case ErrorCode::kBadBase: return "BAD_BASE";
    case ErrorCode::kBadConfig: return "BAD_CONFIG";
    case ErrorCode::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

/// Every failure in the library is reported through this exception. `offset`
/// is a byte offset for Telugu input and a character offset for Roman input,
/// when the failure has a position.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(format(code, detail, offset)),
        code_(code),
        offset_(offset) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  static std::string format(ErrorCode code, const std::string& detail,
                            std::optional<std::size_t> offset) {
    std::string msg(to_string(code));
    if (offset) msg += " at offset " + std::to_string(*offset);
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace telugu_entropy

#endif
