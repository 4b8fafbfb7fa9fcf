#include "xrt/generator.hpp"

#include <cmath>

#include "xrt/io_util.hpp"
#include "xrt/rng.hpp"

namespace xrt {

double StreamConfig::rate_in_use_bps() const {
  if (rate_mode.kind == RateMode::Kind::EmpiricalRate) {
    return rate_mode.empirical_rate_bps;
  }
  return target_rate_bps;
}

std::vector<Warning> StreamConfig::validate() const {
  profile.validate();
  if (frame_rate != 30 && frame_rate != 60) {
    throw Error(ErrorCode::UnsupportedFrameRate,
                "only 30 and 60 FPS supported, got " +
                    std::to_string(frame_rate));
  }
  if (!(target_rate_bps > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "target rate must be > 0");
  }
  if (rate_mode.kind == RateMode::Kind::EmpiricalRate &&
      !(rate_mode.empirical_rate_bps > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "empirical rate must be > 0");
  }
  if (!(duration_s > 0.0)) {
    throw Error(ErrorCode::InvalidInput, "duration must be > 0");
  }

  std::vector<Warning> warnings;
  auto check_range = [&warnings](double rate_bps, const char* which) {
    if (rate_bps < kModelRateMinBps || rate_bps > kModelRateMaxBps) {
      warnings.push_back(
          {"RateOutOfModelRange",
           std::string(which) + " rate " + format_double(rate_bps / 1e6) +
               " Mbps is outside the calibrated 10-50 Mbps range; "
               "synthetic traces are extrapolations"});
    }
  };
  check_range(target_rate_bps, "target");
  if (rate_mode.kind == RateMode::Kind::EmpiricalRate &&
      rate_mode.empirical_rate_bps != target_rate_bps) {
    check_range(rate_mode.empirical_rate_bps, "empirical");
  }
  return warnings;
}

DerivedTargets derive_targets(const StreamConfig& config) {
  config.validate();
  double rate = config.rate_in_use_bps();
  double rate_mbps = rate / 1e6;
  DerivedTargets t;
  t.fs_location_bytes = rate / (8.0 * config.frame_rate);
  t.ifi_location_s = 1.0 / config.frame_rate;
  t.fs_scale_bytes =
      frame_size_dispersion(config.profile, rate_mbps) * t.fs_location_bytes;
  t.ifi_scale_s = ifi_dispersion(config.profile, config.frame_rate, rate_mbps) *
                  t.ifi_location_s;
  return t;
}

namespace {

// Positive logistic draw by rejection; zero scale short-circuits to the
// location so degenerate test configs stay exact.
double draw_positive(const LogisticParams& params, Pcg32& rng,
                     uint64_t& rejected) {
  if (params.scale == 0.0) return params.location;
  for (;;) {
    double x = logistic_quantile(params, rng.next_unit_open());
    if (x > 0.0) return x;
    ++rejected;
  }
}

Trace synthesize_impl(const StreamConfig& config, uint64_t stream,
                      std::optional<uint64_t> frame_budget) {
  auto warnings = config.validate();
  DerivedTargets targets = derive_targets(config);
  LogisticParams fs_params = targets.frame_size_params();
  LogisticParams ifi_params = targets.ifi_params();

  Pcg32 rng(config.seed, stream);
  uint64_t rejected = 0;

  Trace trace;
  trace.frames.reserve(frame_budget.value_or(
      static_cast<uint64_t>(config.duration_s * config.frame_rate) + 16));

  double clock_s = 0.0;    // exact cumulative time
  double prev_ts = 0.0;    // last emitted (quantized) timestamp
  uint64_t index = 0;
  for (;;) {
    if (frame_budget.has_value() && index >= *frame_budget) break;
    double ifi = draw_positive(ifi_params, rng, rejected);
    clock_s += ifi;
    if (!frame_budget.has_value() && clock_s > config.duration_s) break;

    FrameRecord frame;
    frame.index = index;
    frame.timestamp_s = quantize_time_us(clock_s);
    // Quantization may collapse a sub-microsecond interval; keep the
    // strictly-increasing invariant by bumping one grid step.
    if (index > 0 && frame.timestamp_s <= prev_ts) {
      frame.timestamp_s = quantize_time_us(prev_ts + 1e-6);
    }
    prev_ts = frame.timestamp_s;

    double size = draw_positive(fs_params, rng, rejected);
    frame.size_bytes = std::max<uint64_t>(
        1, static_cast<uint64_t>(std::llround(size)));
    trace.frames.push_back(frame);
    ++index;
  }

  if (trace.frames.empty()) {
    throw Error(ErrorCode::ZeroFrames,
                "duration " + format_double(config.duration_s) +
                    " s yields zero frames");
  }

  TraceMetadata& m = trace.metadata;
  m.app = config.profile.name;
  m.fps = config.frame_rate;
  m.target_rate_bps = config.target_rate_bps;
  m.seed = config.seed;
  m.duration_s = frame_budget.has_value() ? trace.frames.back().timestamp_s
                                          : config.duration_s;
  m.extra["rejected_draws"] = std::to_string(rejected);
  if (config.rate_mode.kind == RateMode::Kind::EmpiricalRate) {
    m.extra["empirical_rate_bps"] =
        format_double(config.rate_mode.empirical_rate_bps);
  }
  m.measured_rate_bps = trace.compute_measured_rate_bps();
  m.warnings = std::move(warnings);
  trace.validate();
  return trace;
}

}  // namespace

Trace synthesize_trace(const StreamConfig& config, uint64_t stream) {
  return synthesize_impl(config, stream, std::nullopt);
}

Trace synthesize_frames(const StreamConfig& config, uint64_t n_frames,
                        uint64_t stream) {
  if (n_frames == 0) {
    throw Error(ErrorCode::ZeroFrames, "requested zero frames");
  }
  StreamConfig c = config;
  if (!(c.duration_s > 0.0)) {
    // Duration is unused when a frame budget is given; fill in the nominal
    // span so validation passes.
    c.duration_s =
        static_cast<double>(n_frames) / std::max(1, c.frame_rate);
  }
  return synthesize_impl(c, stream, n_frames);
}

}  // namespace xrt
