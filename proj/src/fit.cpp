#include "graspspan/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace graspspan {

std::string_view to_string(Axis axis) {
  switch (axis) {
    case Axis::Span: return "Span";
    case Axis::Depth: return "Depth";
    case Axis::Width: return "Width";
  }
  return "?";
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "Ok";
    case RowStatus::MissingGraspType: return "MissingGraspType";
    case RowStatus::MissingObjectDimension: return "MissingObjectDimension";
  }
  return "?";
}

HandExtrema axis_extrema(const HandRecord& hand, GraspType t) {
  const auto& set = hand.set(t);
  const auto widest = profile_of(set.max_functional(), set.extent_kind());
  const auto narrowest = profile_of(set.min_functional(), set.extent_kind());
  const auto& ot = hand.one_time();

  HandExtrema ex;
  ex.span = {Axis::Span, narrowest.max_extent(), widest.max_extent(), false, set.extent_kind()};
  ex.depth = {Axis::Depth, 0.0, widest.max_depth(), false, ExtentKind::Length};
  ex.width = {Axis::Width, ot.min_width, ot.max_width, ot.max_width_unbounded, ExtentKind::Length};
  return ex;
}

SizeClass relative_size(double object_size, const AxisExtrema& extrema) {
  const double s = (object_size - extrema.min) / (extrema.max - extrema.min);
  SizeBand band = band_of(s);
  if (extrema.unbounded_max && band == SizeBand::TooLarge) band = SizeBand::Large;
  return {band, s};
}

double required_extent(const ObjectSpec& obj, ExtentKind kind) {
  if (kind == ExtentKind::Length) return obj.span();
  if (obj.area()) return *obj.area();
  if (obj.width()) return std::numbers::pi * (obj.span() / 2.0) * (*obj.width() / 2.0);
  throw Error(ErrorCode::MissingObjectDimension,
              fmt::format("object '{}' needs an area or a width for a spherical grasp",
                          obj.name()));
}

namespace {

AxisClasses classify_with(const HandExtrema& ex, const ObjectSpec& obj, double required) {
  AxisClasses c;
  c.span = relative_size(required, ex.span);
  c.depth = relative_size(obj.depth(), ex.depth);
  if (obj.width()) c.width = relative_size(*obj.width(), ex.width);
  return c;
}

bool graspable(SizeBand b) {
  return b == SizeBand::Small || b == SizeBand::Medium || b == SizeBand::Large;
}

}  // namespace

AxisClasses classify(const HandRecord& hand, GraspType t, const ObjectSpec& obj) {
  const auto& set = hand.set(t);
  return classify_with(axis_extrema(hand, t), obj, required_extent(obj, set.extent_kind()));
}

std::vector<CenterRange> feasible_centers(const InterpolatedProfile& profile, double required,
                                          double object_depth) {
  std::vector<CenterRange> out;
  const auto& pts = profile.points;
  if (object_depth > profile.max_depth() - profile.min_depth()) return out;
  const double threshold = required - kExtentTolerance * std::max(1.0, std::abs(required));
  if (profile.max_extent() < threshold) return out;

  // Depth intervals where the extent clears the threshold, merged.
  std::vector<CenterRange> good;
  auto push = [&good](double lo, double hi) {
    if (!good.empty() && lo <= good.back().hi)
      good.back().hi = std::max(good.back().hi, hi);
    else
      good.push_back({lo, hi});
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& p0 = pts[i];
    const auto& p1 = pts[i + 1];
    const bool in0 = p0.extent >= threshold;
    const bool in1 = p1.extent >= threshold;
    if (in0 && in1) {
      push(p0.depth, p1.depth);
    } else if (in0) {
      const double f = (p0.extent - threshold) / (p0.extent - p1.extent);
      push(p0.depth, p0.depth + f * (p1.depth - p0.depth));
    } else if (in1) {
      const double f = (threshold - p0.extent) / (p1.extent - p0.extent);
      push(p0.depth + f * (p1.depth - p0.depth), p1.depth);
    }
  }

  const double half = object_depth / 2.0;
  for (const auto& g : good) {
    if (g.hi - g.lo >= object_depth) out.push_back({g.lo + half, g.hi - half});
  }
  return out;
}

FitResult fit(const HandRecord& hand, GraspType t, const ObjectSpec& obj, int resolution) {
  if (resolution < 1)
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("resolution must be a positive integer, got {}", resolution));
  const auto& set = hand.set(t);
  const double required = required_extent(obj, set.extent_kind());

  FitResult result;
  result.per_axis = classify_with(axis_extrema(hand, t), obj, required);
  const auto& c = result.per_axis;
  // Width gate: too short for antipodal contact, or too tall for the fingers.
  if (!graspable(c.span.band) || !graspable(c.depth.band) ||
      (c.width && !graspable(c.width->band)))
    return result;

  const bool near_palm = t != GraspType::Precision;
  for (int i = resolution; i >= 0; --i) {
    const double a = static_cast<double>(i) / static_cast<double>(resolution);
    const auto profile = config_interp(set, a);
    const auto centers = feasible_centers(profile, required, obj.depth());
    if (centers.empty()) continue;
    result.feasible = true;
    result.best_actuation = a;
    result.best_center_depth = near_palm ? centers.front().lo : centers.back().hi;
    break;
  }
  return result;
}

ObjectSpec canonical_object(const HandRecord& hand, GraspType t, const CanonicalTargets& targets,
                            std::string name) {
  auto check = [](double s, Axis axis) {
    if (!(s > 0.0 && s < 1.0))
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("{} target {} is outside (0, 1)", to_string(axis), s));
  };
  check(targets.span, Axis::Span);
  check(targets.depth, Axis::Depth);
  if (targets.width) check(*targets.width, Axis::Width);

  const auto ex = axis_extrema(hand, t);
  auto invert = [](const AxisExtrema& e, double s) { return e.min + s * (e.max - e.min); };

  std::optional<double> width;
  if (targets.width) {
    if (ex.width.unbounded_max)
      throw Error(ErrorCode::UnboundedAxis,
                  fmt::format("hand '{}' has no upper width limit", hand.name()));
    width = invert(ex.width, *targets.width);
  }
  const double span_value = invert(ex.span, targets.span);
  const double depth = invert(ex.depth, targets.depth);
  if (ex.span.units == ExtentKind::Area) {
    const double diameter = 2.0 * std::sqrt(span_value / std::numbers::pi);
    return ObjectSpec::create(std::move(name), diameter, depth, width, span_value);
  }
  return ObjectSpec::create(std::move(name), span_value, depth, width);
}

std::vector<CompareRow> compare_hands(const std::vector<HandRecord>& hands, GraspType t,
                                      const ObjectSpec& obj, int resolution) {
  std::vector<CompareRow> rows;
  rows.reserve(hands.size());
  for (const auto& hand : hands) {
    CompareRow row;
    row.hand = hand.name();
    try {
      row.result = fit(hand, t, obj, resolution);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::MissingGraspType)
        row.status = RowStatus::MissingGraspType;
      else if (e.code() == ErrorCode::MissingObjectDimension)
        row.status = RowStatus::MissingObjectDimension;
      else
        throw;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace graspspan
