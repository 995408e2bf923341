#ifndef IPCLAB_ERROR_H_
#define IPCLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipclab {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kMalformedLine,
  kIdOutOfRange,
  kDisconnected,
  kNotAPath,
  kNotIsometric,
  kUnreachable,
  kTooLarge,
  kTruncated,
  kInvalidParam,
  kWitnessInvalid,
  kCertification,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `line` is the
// 1-based input line for parse errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  int line() const { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace ipclab

#endif  // IPCLAB_ERROR_H_
