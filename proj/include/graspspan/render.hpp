#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graspspan/fit.hpp"
#include "graspspan/model.hpp"

namespace graspspan {

/// Where to draw an object: its centre depth and the actuation of the
/// profile drawn around it.
struct Placement {
  double center_depth = 0.0;
  double actuation = 0.0;
};

struct Overlay {
  ObjectSpec object;
  /// Empty means "auto": place the object where fit() puts it.
  std::optional<Placement> placement;
};

struct ConfigSelection {
  bool max_functional = true;
  bool intermediate = true;
  bool min_functional = true;
  /// Extra interpolated profiles to outline.
  std::vector<double> actuations;
};

struct PlotHand {
  HandRecord hand;
  GraspType grasp = GraspType::Precision;
};

struct PlotSpec {
  std::vector<PlotHand> hands;
  /// Drawn in every hand's tile.
  std::vector<Overlay> overlays;
  /// Millimetres per pixel, shared by every tile.
  double scale = 1.0;
  ConfigSelection show;
  std::string title;
  int resolution = kDefaultResolution;
};

/// Area charts map 1 px on the horizontal axis to this many mm² per unit of
/// scale.
inline constexpr double kAreaPerPixel = 10.0;

/// Deterministic SVG 1.1. Each hand is a <g> translated so that its palm
/// centre is the local origin; inside it, a breakpoint (depth d, extent e)
/// sits at (±e/2 / scale, -d / scale).
/// Throws Error(InvalidArgument) for an empty hand list or scale <= 0,
/// Error(MissingGraspType), Error(InfeasibleOverlay) when an automatic
/// placement does not fit, and Error(ActuationOutOfRange) for bad placements.
std::string render_svg(const PlotSpec& spec);

}  // namespace graspspan
