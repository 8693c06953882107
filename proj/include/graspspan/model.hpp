#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graspspan/error.hpp"

// Measurement data model. Lengths are millimetres, areas square millimetres.
//
// The plain structs (MeasurementPair, ConfigurationProfile, OneTimeMeasurements,
// HandDraft) hold raw, possibly invalid data as it comes off disk. The classes
// GraspMeasurementSet, HandRecord and ObjectSpec can only be obtained through
// their create() factories, which reject anything validate_hand() would flag.

namespace graspspan {

enum class GraspType { Precision, CylindricalPower, SphericalPower };
enum class ExtentKind { Length, Area };
enum class PairLabel { Base, Mid, Distal };
enum class ConfigRole { MaxFunctional, Intermediate, MinFunctional };
enum class DistalContact { Tip, FingerpadCenter };

inline constexpr GraspType kAllGraspTypes[] = {
    GraspType::Precision, GraspType::CylindricalPower, GraspType::SphericalPower};

/// Spherical power grasps record the area of the disk that fits at each
/// depth; the other grasp types record a span length.
constexpr ExtentKind extent_kind_of(GraspType t) {
  return t == GraspType::SphericalPower ? ExtentKind::Area : ExtentKind::Length;
}

// Identifiers used in documents and on the command line.
std::string_view to_string(GraspType t);
std::string_view to_string(PairLabel l);
std::string_view to_string(ConfigRole r);
std::string_view to_string(DistalContact c);
std::optional<GraspType> parse_grasp_type(std::string_view s);
std::optional<PairLabel> parse_pair_label(std::string_view s);
std::optional<ConfigRole> parse_config_role(std::string_view s);
std::optional<DistalContact> parse_distal_contact(std::string_view s);

struct MeasurementPair {
  double depth = 0.0;
  /// Span in mm, or disk area in mm² for spherical power sets.
  double extent = 0.0;
  PairLabel label = PairLabel::Mid;

  bool operator==(const MeasurementPair&) const = default;
};

struct Provenance {
  /// Top-down photo of the configuration over a grid or ruler.
  std::optional<std::string> photo_ref;
  /// Second photo looking at the palm (spherical power grasps).
  std::optional<std::string> palm_photo_ref;
  std::optional<std::string> note;

  bool operator==(const Provenance&) const = default;
};

struct ConfigurationProfile {
  double actuation = 0.0;
  ConfigRole role = ConfigRole::Intermediate;
  DistalContact distal_contact = DistalContact::FingerpadCenter;
  std::vector<MeasurementPair> pairs;
  Provenance provenance;

  bool operator==(const ConfigurationProfile&) const = default;
};

struct OneTimeMeasurements {
  double max_open = 0.0;
  double min_width = 0.0;
  /// Palm width when max_width_unbounded is set.
  double max_width = 0.0;
  bool max_width_unbounded = false;

  bool operator==(const OneTimeMeasurements&) const = default;
};

/// Unvalidated hand data, as parsed.
struct HandDraft {
  std::string name;
  std::string measurer;
  std::chrono::year_month_day date{};
  OneTimeMeasurements one_time;
  std::map<GraspType, std::vector<ConfigurationProfile>> sets;

  bool operator==(const HandDraft&) const = default;
};

/// Configurations for one grasp type, ordered by actuation from the
/// MaxFunctional profile (a = 0) to the MinFunctional profile (a = 1).
class GraspMeasurementSet {
 public:
  /// Throws ValidationError listing every violated invariant.
  static GraspMeasurementSet create(GraspType type,
                                    std::vector<ConfigurationProfile> configurations);

  GraspType grasp_type() const noexcept { return type_; }
  ExtentKind extent_kind() const noexcept { return extent_kind_of(type_); }
  const std::vector<ConfigurationProfile>& configurations() const noexcept {
    return configurations_;
  }
  std::size_t pair_count() const noexcept { return configurations_.front().pairs.size(); }
  const ConfigurationProfile& max_functional() const noexcept { return configurations_.front(); }
  const ConfigurationProfile& min_functional() const noexcept { return configurations_.back(); }

  bool operator==(const GraspMeasurementSet&) const = default;

 private:
  friend class HandRecord;

  GraspMeasurementSet(GraspType type, std::vector<ConfigurationProfile> configurations)
      : type_(type), configurations_(std::move(configurations)) {}

  GraspType type_;
  std::vector<ConfigurationProfile> configurations_;
};

class HandRecord {
 public:
  /// Throws ValidationError listing every violated invariant.
  static HandRecord create(HandDraft draft);

  const std::string& name() const noexcept { return name_; }
  const std::string& measurer() const noexcept { return measurer_; }
  std::chrono::year_month_day date() const noexcept { return date_; }
  const OneTimeMeasurements& one_time() const noexcept { return one_time_; }
  const std::map<GraspType, GraspMeasurementSet>& sets() const noexcept { return sets_; }

  const GraspMeasurementSet* find(GraspType t) const;
  /// Throws Error(MissingGraspType) when the hand has no set for `t`.
  const GraspMeasurementSet& set(GraspType t) const;

  HandDraft draft() const;

  bool operator==(const HandRecord&) const = default;

 private:
  HandRecord() = default;

  std::string name_;
  std::string measurer_;
  std::chrono::year_month_day date_{};
  OneTimeMeasurements one_time_;
  std::map<GraspType, GraspMeasurementSet> sets_;
};

/// Object cross-section: span and depth, optional height (width axis) and
/// optional equatorial disk area for spherical grasps.
class ObjectSpec {
 public:
  /// Throws ValidationError on non-positive or non-finite dimensions.
  static ObjectSpec create(std::string name, double span, double depth,
                           std::optional<double> width = std::nullopt,
                           std::optional<double> area = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  double span() const noexcept { return span_; }
  double depth() const noexcept { return depth_; }
  const std::optional<double>& width() const noexcept { return width_; }
  const std::optional<double>& area() const noexcept { return area_; }

  bool operator==(const ObjectSpec&) const = default;

 private:
  ObjectSpec() = default;

  std::string name_;
  double span_ = 0.0;
  double depth_ = 0.0;
  std::optional<double> width_;
  std::optional<double> area_;
};

Report validate_object(std::string_view name, double span, double depth,
                       std::optional<double> width, std::optional<double> area);

enum class SizeBand { TooSmall, Small, Medium, Large, TooLarge };

std::string_view to_string(SizeBand b);

/// Bands a relative size. Medium is the closed interval [0.3, 0.7]; Large is
/// (0.7, 1.0]. Throws Error(InvalidArgument) for NaN.
SizeBand band_of(double s);

struct SizeClass {
  SizeBand band = SizeBand::TooSmall;
  double s = 0.0;

  bool operator==(const SizeClass&) const = default;
};

/// Every invariant violation of a hand, with a machine-readable code and a
/// JSON-pointer path. An empty report means HandRecord::create will succeed.
Report validate_hand(const HandDraft& draft);
Report validate_hand(const HandRecord& record);

/// Violations of a single grasp set, with paths rooted at
/// /sets/<grasp type>.
Report validate_set(GraspType type, const std::vector<ConfigurationProfile>& configurations);

/// Documentation warnings (missing photos). Never fails.
Report documentation_completeness(const HandRecord& record);

}  // namespace graspspan
