#pragma once

#include <cmath>
#include <string>

#include "nsset/errors.hpp"

namespace nsset {

/// Componentwise tolerance used by ns-set equality. All core operations are
/// exact on binary floating point inputs except 1-I; this absorbs the
/// representation noise picked up in round-trips.
inline constexpr double kEqualityEpsilon = 1e-9;

/// Truth / indeterminacy / falsity degrees, each in [0,1]. There is no
/// constraint on t+i+f beyond the per-component bounds.
struct Triple {
  double t = 0.0;
  double i = 1.0;
  double f = 1.0;

  /// Default-constructed value is the "absent" entry (0,1,1).
  Triple() = default;

  /// Validates each component; out-of-range is a hard error, not clamped.
  Triple(double t_deg, double i_deg, double f_deg)
      : t(checked(t_deg, 't')), i(checked(i_deg, 'i')), f(checked(f_deg, 'f')) {}

  /// Bottom entry (0,1,1): semantically absent, omitted on serialization.
  static Triple null() { return Triple{0.0, 1.0, 1.0}; }
  /// Top entry (1,0,0).
  static Triple universal() { return Triple{1.0, 0.0, 0.0}; }

  bool operator==(const Triple&) const = default;

 private:
  static double checked(double v, char name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError(std::string("triple.") + name,
                            "component " + std::to_string(v) + " outside [0,1]");
    }
    return v + 0.0;  // normalizes -0.0
  }
};

inline bool approx_equal(const Triple& a, const Triple& b,
                         double eps = kEqualityEpsilon) {
  return std::fabs(a.t - b.t) <= eps && std::fabs(a.i - b.i) <= eps &&
         std::fabs(a.f - b.f) <= eps;
}

}  // namespace nsset
