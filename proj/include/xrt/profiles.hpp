#ifndef XRT_PROFILES_HPP
#define XRT_PROFILES_HPP

#include <string>
#include <vector>

#include "xrt/errors.hpp"

namespace xrt {

// Per-application coefficients of the generative model. alpha/beta drive the
// frame-size dispersion power law D_fs = alpha * rate_mbps^beta; gamma is the
// (rate-independent) 60 FPS inter-frame-interval dispersion; delta/epsilon
// drive the 30 FPS IFI dispersion power law D_ifi = delta * rate_mbps^epsilon.
struct AppProfile {
  std::string name;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;

  void validate() const;
};

// Frame-size dispersion (scale/location ratio) at a given data rate in Mbps.
double frame_size_dispersion(const AppProfile& profile, double rate_mbps);

// IFI dispersion at a given frame rate and data rate in Mbps. Constant gamma
// at 60 FPS; delta * rate^epsilon at 30 FPS. Other frame rates are rejected.
double ifi_dispersion(const AppProfile& profile, int frame_rate,
                      double rate_mbps);

// The four applications shipped with the model.
const std::vector<AppProfile>& builtin_profiles();

// Canonical lookup key: lowercase, spaces collapsed to dashes
// ("GE VR Tour" -> "ge-vr-tour").
std::string profile_slug(const std::string& name);

// Holds the built-in profiles plus any registered at runtime. Lookup is by
// slug, so "Virus Popper" and "virus-popper" resolve identically.
class ProfileRegistry {
 public:
  ProfileRegistry();

  void register_profile(const AppProfile& profile);
  const AppProfile* find(const std::string& name) const;
  std::vector<AppProfile> list() const;

 private:
  std::vector<AppProfile> profiles_;
};

// Plain key=value file with the five coefficients plus the profile name.
AppProfile load_profile_file(const std::string& path);
void save_profile_file(const AppProfile& profile, const std::string& path);

}  // namespace xrt

#endif  // XRT_PROFILES_HPP
