#include "xrt/profiles.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "xrt/io_util.hpp"

namespace xrt {

void AppProfile::validate() const {
  if (name.empty()) {
    throw Error(ErrorCode::InvalidInput, "profile name must not be empty");
  }
  if (!(alpha > 0.0) || !(gamma > 0.0) || !(delta > 0.0)) {
    throw Error(ErrorCode::InvalidInput,
                "profile '" + name + "': alpha, gamma and delta must be > 0");
  }
  if (!std::isfinite(beta) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::InvalidInput,
                "profile '" + name + "': non-finite exponent");
  }
}

double frame_size_dispersion(const AppProfile& profile, double rate_mbps) {
  if (!(rate_mbps > 0.0)) {
    throw Error(ErrorCode::InvalidInput,
                "frame_size_dispersion: rate must be > 0 Mbps");
  }
  return profile.alpha * std::pow(rate_mbps, profile.beta);
}

double ifi_dispersion(const AppProfile& profile, int frame_rate,
                      double rate_mbps) {
  if (!(rate_mbps > 0.0)) {
    throw Error(ErrorCode::InvalidInput,
                "ifi_dispersion: rate must be > 0 Mbps");
  }
  if (frame_rate == 60) {
    return profile.gamma;
  }
  if (frame_rate == 30) {
    return profile.delta * std::pow(rate_mbps, profile.epsilon);
  }
  throw Error(ErrorCode::UnsupportedFrameRate,
              "only 30 and 60 FPS supported, got " + std::to_string(frame_rate));
}

const std::vector<AppProfile>& builtin_profiles() {
  static const std::vector<AppProfile> profiles = {
      {"Virus Popper", 0.1784, -0.2403, 0.03721, 0.01433, 0.1764},
      {"Minecraft", 0.1857, -0.1872, 0.07133, 0.02419, 0.2267},
      {"GE VR Tour", 0.2554, -0.2031, 0.03468, 0.01056, 0.2756},
      {"GE VR Cities", 0.2597, -0.2539, 0.03457, 0.008953, 0.3119},
  };
  return profiles;
}

std::string profile_slug(const std::string& name) {
  std::string slug;
  slug.reserve(name.size());
  for (char c : name) {
    if (c == ' ' || c == '_') {
      if (!slug.empty() && slug.back() != '-') slug.push_back('-');
    } else {
      slug.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  while (!slug.empty() && slug.back() == '-') slug.pop_back();
  return slug;
}

ProfileRegistry::ProfileRegistry() : profiles_(builtin_profiles()) {}

void ProfileRegistry::register_profile(const AppProfile& profile) {
  profile.validate();
  for (auto& existing : profiles_) {
    if (profile_slug(existing.name) == profile_slug(profile.name)) {
      existing = profile;
      return;
    }
  }
  profiles_.push_back(profile);
}

const AppProfile* ProfileRegistry::find(const std::string& name) const {
  std::string slug = profile_slug(name);
  for (const auto& profile : profiles_) {
    if (profile_slug(profile.name) == slug) return &profile;
  }
  return nullptr;
}

std::vector<AppProfile> ProfileRegistry::list() const { return profiles_; }

AppProfile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open profile file: " + path);
  }
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError, path + ":" + std::to_string(line_no) +
                                             ": expected key=value");
    }
    kv[trim(trimmed.substr(0, eq))] = trim(trimmed.substr(eq + 1));
  }

  AppProfile profile;
  auto require = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw Error(ErrorCode::ParseError,
                  path + ": missing required key '" + key + "'");
    }
    return it->second;
  };
  profile.name = require("name");
  profile.alpha = parse_double(require("alpha"), path);
  profile.beta = parse_double(require("beta"), path);
  profile.gamma = parse_double(require("gamma"), path);
  profile.delta = parse_double(require("delta"), path);
  profile.epsilon = parse_double(require("epsilon"), path);
  profile.validate();
  return profile;
}

void save_profile_file(const AppProfile& profile, const std::string& path) {
  profile.validate();
  std::ostringstream out;
  out << "name=" << profile.name << "\n";
  out << "alpha=" << format_double(profile.alpha) << "\n";
  out << "beta=" << format_double(profile.beta) << "\n";
  out << "gamma=" << format_double(profile.gamma) << "\n";
  out << "delta=" << format_double(profile.delta) << "\n";
  out << "epsilon=" << format_double(profile.epsilon) << "\n";
  write_file_atomic(path, out.str());
}

}  // namespace xrt
