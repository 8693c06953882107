#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graspspan/interp.hpp"
#include "graspspan/model.hpp"

namespace graspspan {

enum class Axis { Span, Depth, Width };

std::string_view to_string(Axis axis);

/// Minimum and maximum object size along one axis. For spherical power
/// grasps the span axis is measured in disk area (mm²).
struct AxisExtrema {
  Axis axis = Axis::Span;
  double min = 0.0;
  double max = 0.0;
  bool unbounded_max = false;
  ExtentKind units = ExtentKind::Length;

  bool operator==(const AxisExtrema&) const = default;
};

struct HandExtrema {
  AxisExtrema span;
  AxisExtrema depth;
  AxisExtrema width;
};

/// Span: [largest extent of the MinFunctional profile, largest extent of the
/// MaxFunctional profile]. Depth: [0, distal depth of the MaxFunctional
/// profile]. Width: the one-time min/max width, '+' flag carried over.
HandExtrema axis_extrema(const HandRecord& hand, GraspType t);

/// s = (O - m) / (M - m), banded. An unbounded maximum never reports
/// TooLarge; s itself is left uncapped.
SizeClass relative_size(double object_size, const AxisExtrema& extrema);

struct AxisClasses {
  SizeClass span;
  SizeClass depth;
  std::optional<SizeClass> width;
};

struct FitResult {
  AxisClasses per_axis;
  bool feasible = false;
  std::optional<double> best_actuation;
  std::optional<double> best_center_depth;
};

inline constexpr int kDefaultResolution = 1000;

/// Extents may fall short of the requirement by this relative amount and
/// still count as enclosing the object.
inline constexpr double kExtentTolerance = 1e-9;

/// Extent the hand must provide: o_s for length profiles, the object's disk
/// area for area profiles (o_area, else the ellipse pi * o_s/2 * o_w/2).
/// Throws Error(MissingObjectDimension) when an area cannot be derived.
double required_extent(const ObjectSpec& obj, ExtentKind kind);

/// Centre depths at which an object of depth `object_depth` fits inside the
/// profile: the occupied interval stays in the depth domain and the extent
/// never drops below `required` on it.
struct CenterRange {
  double lo = 0.0;
  double hi = 0.0;
};
std::vector<CenterRange> feasible_centers(const InterpolatedProfile& profile, double required,
                                          double object_depth);

/// Grid search over a in {0, 1/K, ..., 1} for the most-closed actuation that
/// encloses the object. Power grasps then place the object as close to the
/// palm as possible, precision grasps as close to the distal links.
/// Throws Error(MissingGraspType), Error(MissingObjectDimension), or
/// Error(InvalidArgument) for resolution < 1.
FitResult fit(const HandRecord& hand, GraspType t, const ObjectSpec& obj,
              int resolution = kDefaultResolution);

/// Per-axis classes without the placement search.
AxisClasses classify(const HandRecord& hand, GraspType t, const ObjectSpec& obj);

struct CanonicalTargets {
  double span = 0.5;
  double depth = 0.5;
  std::optional<double> width;
};

/// Object whose relative size equals the targets: O = m + s (M - m). For
/// spherical grasps the span target sets the disk area and o_s becomes the
/// equivalent disk diameter.
/// Throws Error(InvalidArgument) for targets outside (0, 1) and
/// Error(UnboundedAxis) for a width target on a '+' hand.
ObjectSpec canonical_object(const HandRecord& hand, GraspType t, const CanonicalTargets& targets,
                            std::string name = "canonical");

enum class RowStatus { Ok, MissingGraspType, MissingObjectDimension };

std::string_view to_string(RowStatus s);

struct CompareRow {
  std::string hand;
  RowStatus status = RowStatus::Ok;
  std::optional<FitResult> result;
  std::string message;
};

/// One row per hand, in input order.
std::vector<CompareRow> compare_hands(const std::vector<HandRecord>& hands, GraspType t,
                                      const ObjectSpec& obj, int resolution = kDefaultResolution);

}  // namespace graspspan
