#include "xrt/io_util.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xrt/errors.hpp"

namespace fs = std::filesystem;

namespace xrt {

std::string trim(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string format_double(double value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

double parse_double(const std::string& text, const std::string& context) {
  std::string t = trim(text);
  double value = 0.0;
  auto result = std::from_chars(t.data(), t.data() + t.size(), value);
  if (result.ec != std::errc() || result.ptr != t.data() + t.size()) {
    throw Error(ErrorCode::ParseError,
                context + ": not a number: '" + text + "'");
  }
  return value;
}

uint64_t parse_u64(const std::string& text, const std::string& context) {
  std::string t = trim(text);
  uint64_t value = 0;
  auto result = std::from_chars(t.data(), t.data() + t.size(), value);
  if (result.ec != std::errc() || result.ptr != t.data() + t.size()) {
    throw Error(ErrorCode::ParseError,
                context + ": not an unsigned integer: '" + text + "'");
  }
  return value;
}

double parse_rate_bps(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) {
    throw Error(ErrorCode::ParseError, "empty rate value");
  }
  double multiplier = 1.0;
  char suffix = t.back();
  if (suffix == 'k' || suffix == 'K') {
    multiplier = 1e3;
    t.pop_back();
  } else if (suffix == 'M') {
    multiplier = 1e6;
    t.pop_back();
  } else if (suffix == 'G') {
    multiplier = 1e9;
    t.pop_back();
  }
  double value = parse_double(t, "rate");
  if (!(value > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "rate must be > 0: '" + text + "'");
  }
  return value * multiplier;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::IoError, "cannot open for writing: " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(ErrorCode::IoError, "write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::IoError,
                "rename failed for " + target.string() + ": " + ec.message());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

bool glob_match(const std::string& pattern, const std::string& text) {
  size_t p = 0, t = 0;
  size_t star = std::string::npos, match = 0;
  while (t < text.size()) {
    if (p < pattern.size() &&
        (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      match = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++match;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

std::vector<std::string> expand_glob(const std::string& pattern) {
  fs::path full(pattern);
  std::string filename = full.filename().string();
  if (filename.find('*') == std::string::npos &&
      filename.find('?') == std::string::npos) {
    return {pattern};
  }
  fs::path dir = full.parent_path();
  if (dir.empty()) dir = ".";
  std::vector<std::string> matches;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (glob_match(filename, entry.path().filename().string())) {
      matches.push_back(entry.path().string());
    }
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedFrameRate: return "UnsupportedFrameRate";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ZeroFrames: return "ZeroFrames";
    case ErrorCode::TooFewFrames: return "TooFewFrames";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateSample: return "DegenerateSample";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::FrameTooLarge: return "FrameTooLarge";
    case ErrorCode::MissingFragments: return "MissingFragments";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::InconsistentBurst: return "InconsistentBurst";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace xrt
