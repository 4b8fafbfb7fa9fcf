#include "xrt/trace.hpp"

#include <cmath>
#include <sstream>

#include "xrt/io_util.hpp"

namespace xrt {

double quantize_time_us(double seconds) {
  return std::round(seconds * 1e6) / 1e6;
}

double Trace::compute_measured_rate_bps() const {
  if (frames.empty()) return 0.0;
  double total_bytes = 0.0;
  for (const auto& f : frames) total_bytes += static_cast<double>(f.size_bytes);
  if (frames.size() == 1) {
    // Degenerate single-frame trace: fall back to the nominal interval.
    if (metadata.fps > 0) return total_bytes * 8.0 * metadata.fps;
    return 0.0;
  }
  double span = frames.back().timestamp_s - frames.front().timestamp_s;
  double mean_ifi = span / static_cast<double>(frames.size() - 1);
  return 8.0 * total_bytes / (span + mean_ifi);
}

void Trace::validate() const {
  double prev = -1.0;
  for (const auto& f : frames) {
    if (f.size_bytes < 1) {
      throw Error(ErrorCode::InvalidInput,
                  "trace frame " + std::to_string(f.index) + ": size < 1 byte");
    }
    if (!(f.timestamp_s > prev)) {
      throw Error(ErrorCode::InvalidInput,
                  "trace timestamps not strictly increasing at frame " +
                      std::to_string(f.index));
    }
    prev = f.timestamp_s;
  }
}

std::string trace_to_csv(const Trace& trace) {
  std::ostringstream out;
  const TraceMetadata& m = trace.metadata;
  out << "# app=" << m.app << "\n";
  out << "# fps=" << m.fps << "\n";
  out << "# target_rate_bps=" << format_double(m.target_rate_bps) << "\n";
  out << "# measured_rate_bps=" << format_double(m.measured_rate_bps) << "\n";
  if (m.seed.has_value()) {
    out << "# seed=" << *m.seed << "\n";
  } else {
    out << "# seed=captured\n";
  }
  out << "# duration_s=" << format_double(m.duration_s) << "\n";
  for (const auto& [key, value] : m.extra) {
    out << "# " << key << "=" << value << "\n";
  }
  out << "index,time_s,size_bytes\n";
  for (const auto& f : trace.frames) {
    out << f.index << ',' << format_fixed(f.timestamp_s, 6) << ','
        << f.size_bytes << "\n";
  }
  return out.str();
}

Trace trace_from_csv_text(const std::string& text, const std::string& context) {
  Trace trace;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    std::string where = context + ":" + std::to_string(line_no);
    if (t[0] == '#') {
      std::string kv = trim(t.substr(1));
      auto eq = kv.find('=');
      if (eq == std::string::npos) continue;  // free-form comment
      std::string key = trim(kv.substr(0, eq));
      std::string value = trim(kv.substr(eq + 1));
      if (key == "app") {
        trace.metadata.app = value;
      } else if (key == "fps") {
        trace.metadata.fps = static_cast<int>(parse_u64(value, where));
      } else if (key == "target_rate_bps") {
        trace.metadata.target_rate_bps = parse_double(value, where);
      } else if (key == "measured_rate_bps") {
        trace.metadata.measured_rate_bps = parse_double(value, where);
      } else if (key == "seed") {
        if (value == "captured") {
          trace.metadata.seed.reset();
        } else {
          trace.metadata.seed = parse_u64(value, where);
        }
      } else if (key == "duration_s") {
        trace.metadata.duration_s = parse_double(value, where);
      } else {
        trace.metadata.extra[key] = value;
      }
      continue;
    }
    if (!header_seen) {
      if (t != "index,time_s,size_bytes") {
        throw Error(ErrorCode::ParseError,
                    where + ": expected header 'index,time_s,size_bytes'");
      }
      header_seen = true;
      continue;
    }
    auto c1 = t.find(',');
    auto c2 = (c1 == std::string::npos) ? std::string::npos : t.find(',', c1 + 1);
    if (c2 == std::string::npos) {
      throw Error(ErrorCode::ParseError, where + ": expected 3 columns");
    }
    FrameRecord frame;
    frame.index = parse_u64(t.substr(0, c1), where);
    frame.timestamp_s = parse_double(t.substr(c1 + 1, c2 - c1 - 1), where);
    frame.size_bytes = parse_u64(t.substr(c2 + 1), where);
    trace.frames.push_back(frame);
  }
  if (!header_seen) {
    throw Error(ErrorCode::ParseError, context + ": no frame table found");
  }
  trace.validate();
  return trace;
}

void save_trace_csv(const Trace& trace, const std::string& path) {
  write_file_atomic(path, trace_to_csv(trace));
}

Trace load_trace_csv(const std::string& path) {
  return trace_from_csv_text(read_file(path), path);
}

}  // namespace xrt
