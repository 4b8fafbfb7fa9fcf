#ifndef XRT_ERRORS_HPP
#define XRT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xrt {

enum class ErrorCode {
  UnsupportedFrameRate,
  InvalidProbability,
  InvalidInput,
  ZeroFrames,
  TooFewFrames,
  TooFewSamples,
  EmptySample,
  EmptyInput,
  DegenerateSample,
  DegenerateInput,
  NoConvergence,
  InsufficientData,
  FrameTooLarge,
  MissingFragments,
  ChecksumMismatch,
  InconsistentBurst,
  BadHeader,
  IoError,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

// Reassembly failure listing the fragment indices that never arrived.
class MissingFragmentsError : public Error {
 public:
  MissingFragmentsError(std::vector<uint16_t> missing, const std::string& message)
      : Error(ErrorCode::MissingFragments, message), missing_(std::move(missing)) {}

  const std::vector<uint16_t>& missing() const { return missing_; }

 private:
  std::vector<uint16_t> missing_;
};

// Non-fatal condition attached to a result (e.g. model used outside its
// calibrated range).
struct Warning {
  std::string code;
  std::string message;
};

}  // namespace xrt

#endif  // XRT_ERRORS_HPP
