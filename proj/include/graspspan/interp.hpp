#pragma once

#include <vector>

#include "graspspan/model.hpp"

namespace graspspan {

struct ProfilePoint {
  double depth = 0.0;
  double extent = 0.0;

  bool operator==(const ProfilePoint&) const = default;
};

/// A configuration profile at an arbitrary actuation. Depths strictly
/// increase; extents are lengths or areas per `extent_kind`.
struct InterpolatedProfile {
  double actuation = 0.0;
  std::vector<ProfilePoint> points;
  ExtentKind extent_kind = ExtentKind::Length;

  double min_depth() const { return points.front().depth; }
  double max_depth() const { return points.back().depth; }
  double max_extent() const;

  bool operator==(const InterpolatedProfile&) const = default;
};

InterpolatedProfile profile_of(const ConfigurationProfile& cfg, ExtentKind kind);

/// Blends the two measured configurations adjacent to `a` pointwise. At a
/// measured actuation the stored pairs are returned unchanged.
/// Throws Error(ActuationOutOfRange) unless 0 <= a <= 1.
InterpolatedProfile config_interp(const GraspMeasurementSet& set, double a);

/// Piecewise-linear extent at depth `d`. No extrapolation: throws
/// Error(DepthOutOfRange) outside [min_depth, max_depth].
double span_interp(const InterpolatedProfile& profile, double d);

/// A point in the span/depth plane; `lateral` is the signed offset from the
/// hand's centre line.
struct PlanePoint {
  double depth = 0.0;
  double lateral = 0.0;

  bool operator==(const PlanePoint&) const = default;
};

/// Closed outline of a length profile mirrored about the depth axis:
/// breakpoints at -extent/2 from base to distal, then +extent/2 back.
/// Throws Error(WrongExtentKind) for area profiles.
std::vector<PlanePoint> profile_region(const InterpolatedProfile& profile);

}  // namespace graspspan
