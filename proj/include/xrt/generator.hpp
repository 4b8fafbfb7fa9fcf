#ifndef XRT_GENERATOR_HPP
#define XRT_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "xrt/logistic.hpp"
#include "xrt/profiles.hpp"
#include "xrt/trace.hpp"

namespace xrt {

// Which rate drives the model: the rate requested from the encoder, or the
// (typically 5-10% higher) rate measured from a real capture.
struct RateMode {
  enum class Kind { TargetRate, EmpiricalRate };
  Kind kind = Kind::TargetRate;
  double empirical_rate_bps = 0.0;

  static RateMode target() { return {}; }
  static RateMode empirical(double rate_bps) {
    return {Kind::EmpiricalRate, rate_bps};
  }
};

struct StreamConfig {
  AppProfile profile;
  int frame_rate = 60;           // 30 or 60
  double target_rate_bps = 0.0;  // symbol R
  double duration_s = 0.0;
  uint64_t seed = 0;
  RateMode rate_mode;

  // The rate the model actually runs at, per rate_mode.
  double rate_in_use_bps() const;

  // Throws on hard violations; returns warnings for soft ones (rate outside
  // the 10-50 Mbps range the model was calibrated on).
  std::vector<Warning> validate() const;
};

// Model calibration covers target rates in [10, 50] Mbps.
inline constexpr double kModelRateMinBps = 10e6;
inline constexpr double kModelRateMaxBps = 50e6;

// Locations pinned to the analytic means (R/(8F) bytes, 1/F seconds) with
// scales from the per-application dispersion laws.
struct DerivedTargets {
  double fs_location_bytes = 0.0;
  double ifi_location_s = 0.0;
  double fs_scale_bytes = 0.0;
  double ifi_scale_s = 0.0;

  LogisticParams frame_size_params() const {
    return {fs_location_bytes, fs_scale_bytes};
  }
  LogisticParams ifi_params() const { return {ifi_location_s, ifi_scale_s}; }
};

DerivedTargets derive_targets(const StreamConfig& config);

// Runs the generative model until the cumulative timestamp would exceed
// config.duration_s. Deterministic in (config, seed, stream). Timestamps are
// quantized to the microsecond grid of the CSV format; draws that are not
// strictly positive are rejected and redrawn (count recorded in metadata as
// rejected_draws).
Trace synthesize_trace(const StreamConfig& config, uint64_t stream = 0);

// Same sampler, but emits exactly n_frames frames regardless of duration.
Trace synthesize_frames(const StreamConfig& config, uint64_t n_frames,
                        uint64_t stream = 0);

}  // namespace xrt

#endif  // XRT_GENERATOR_HPP
