#ifndef XRT_TRACE_HPP
#define XRT_TRACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xrt/errors.hpp"

namespace xrt {

// One video frame: generation instant (seconds from stream start, exact
// multiple of 1 microsecond) and size in bytes.
struct FrameRecord {
  uint64_t index = 0;
  double timestamp_s = 0.0;
  uint64_t size_bytes = 0;
};

struct TraceMetadata {
  std::string app;
  int fps = 0;
  double target_rate_bps = 0.0;
  double measured_rate_bps = 0.0;
  // Absent for captured traces (serialized as "captured").
  std::optional<uint64_t> seed;
  double duration_s = 0.0;
  // Extra key=value pairs (e.g. rejected_draws, empirical_rate_bps) carried
  // through reads and writes untouched.
  std::map<std::string, std::string> extra;

  std::vector<Warning> warnings;
};

struct Trace {
  TraceMetadata metadata;
  std::vector<FrameRecord> frames;

  // 8 * total bytes / (span + one mean IFI), the rate the whole stream
  // occupies once the first frame's own interval is accounted for.
  double compute_measured_rate_bps() const;

  void validate() const;
};

// Rounds to the microsecond grid the CSV format stores.
double quantize_time_us(double seconds);

std::string trace_to_csv(const Trace& trace);
Trace trace_from_csv_text(const std::string& text, const std::string& context);

void save_trace_csv(const Trace& trace, const std::string& path);
Trace load_trace_csv(const std::string& path);

}  // namespace xrt

#endif  // XRT_TRACE_HPP
