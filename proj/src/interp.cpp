#include "graspspan/interp.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace graspspan {

double InterpolatedProfile::max_extent() const {
  double m = 0.0;
  for (const auto& p : points) m = std::max(m, p.extent);
  return m;
}

InterpolatedProfile profile_of(const ConfigurationProfile& cfg, ExtentKind kind) {
  InterpolatedProfile out;
  out.actuation = cfg.actuation;
  out.extent_kind = kind;
  out.points.reserve(cfg.pairs.size());
  for (const auto& p : cfg.pairs) out.points.push_back({p.depth, p.extent});
  return out;
}

InterpolatedProfile config_interp(const GraspMeasurementSet& set, double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw Error(ErrorCode::ActuationOutOfRange,
                fmt::format("actuation {} is outside [0, 1]", a));

  const auto& cfgs = set.configurations();
  auto hi = std::lower_bound(cfgs.begin(), cfgs.end(), a,
                             [](const ConfigurationProfile& c, double v) { return c.actuation < v; });
  // a <= 1 and the last configuration sits at exactly 1, so hi is valid.
  if (hi->actuation == a) return profile_of(*hi, set.extent_kind());

  auto lo = std::prev(hi);
  const double t = (a - lo->actuation) / (hi->actuation - lo->actuation);
  InterpolatedProfile out;
  out.actuation = a;
  out.extent_kind = set.extent_kind();
  out.points.reserve(lo->pairs.size());
  for (std::size_t i = 0; i < lo->pairs.size(); ++i) {
    out.points.push_back({std::lerp(lo->pairs[i].depth, hi->pairs[i].depth, t),
                          std::lerp(lo->pairs[i].extent, hi->pairs[i].extent, t)});
  }
  return out;
}

double span_interp(const InterpolatedProfile& profile, double d) {
  const auto& pts = profile.points;
  if (!(d >= profile.min_depth() && d <= profile.max_depth()))
    throw Error(ErrorCode::DepthOutOfRange,
                fmt::format("depth {} is outside the profile's range [{}, {}]", d,
                            profile.min_depth(), profile.max_depth()));

  auto hi = std::lower_bound(pts.begin(), pts.end(), d,
                             [](const ProfilePoint& p, double v) { return p.depth < v; });
  if (hi->depth == d) return hi->extent;
  auto lo = std::prev(hi);
  const double lambda = (d - lo->depth) / (hi->depth - lo->depth);
  return std::lerp(lo->extent, hi->extent, lambda);
}

std::vector<PlanePoint> profile_region(const InterpolatedProfile& profile) {
  if (profile.extent_kind != ExtentKind::Length)
    throw Error(ErrorCode::WrongExtentKind,
                "area profiles have no mirrored span outline");
  std::vector<PlanePoint> poly;
  poly.reserve(profile.points.size() * 2);
  for (const auto& p : profile.points) poly.push_back({p.depth, -p.extent / 2.0});
  for (auto it = profile.points.rbegin(); it != profile.points.rend(); ++it)
    poly.push_back({it->depth, it->extent / 2.0});
  return poly;
}

}  // namespace graspspan
