#ifndef XRT_IO_UTIL_HPP
#define XRT_IO_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace xrt {

std::string trim(const std::string& s);

// Shortest representation that round-trips the exact double value.
std::string format_double(double value);

// Fixed-point with the given number of decimals (CSV columns).
std::string format_fixed(double value, int decimals);

double parse_double(const std::string& text, const std::string& context);
uint64_t parse_u64(const std::string& text, const std::string& context);

// Data-rate strings with optional k/M/G suffix ("30M" -> 30e6 bits/s).
double parse_rate_bps(const std::string& text);

// Write-temp-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// Expands a path that may contain '*' or '?' in its filename component.
// Plain paths pass through untouched. Matches are sorted.
std::vector<std::string> expand_glob(const std::string& pattern);

}  // namespace xrt

#endif  // XRT_IO_UTIL_HPP
