#include "graspspan/model.hpp"

#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace graspspan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ActuationOutOfRange: return "ActuationOutOfRange";
    case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorCode::WrongExtentKind: return "WrongExtentKind";
    case ErrorCode::MissingGraspType: return "MissingGraspType";
    case ErrorCode::MissingObjectDimension: return "MissingObjectDimension";
    case ErrorCode::UnboundedAxis: return "UnboundedAxis";
    case ErrorCode::InfeasibleOverlay: return "InfeasibleOverlay";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::DocumentTooLarge: return "DocumentTooLarge";
  }
  return "Unknown";
}

namespace {

std::string summarize(const Report& violations) {
  if (violations.empty()) return "invariant violation";
  const auto& first = violations.front();
  std::string msg = fmt::format("{} at {}: {}", first.code,
                                first.path.empty() ? "/" : first.path, first.message);
  if (violations.size() > 1) msg += fmt::format(" (+{} more)", violations.size() - 1);
  return msg;
}

}  // namespace

ValidationError::ValidationError(Report violations)
    : Error(ErrorCode::InvariantViolation, summarize(violations)),
      violations_(std::move(violations)) {}

ParseError::ParseError(ErrorCode code, const std::string& message, std::string path,
                       std::size_t line, std::size_t column, Report violations)
    : Error(code, message),
      path_(std::move(path)),
      line_(line),
      column_(column),
      violations_(std::move(violations)) {}

std::string_view to_string(GraspType t) {
  switch (t) {
    case GraspType::Precision: return "precision";
    case GraspType::CylindricalPower: return "cylindricalPower";
    case GraspType::SphericalPower: return "sphericalPower";
  }
  return "?";
}

std::string_view to_string(PairLabel l) {
  switch (l) {
    case PairLabel::Base: return "base";
    case PairLabel::Mid: return "mid";
    case PairLabel::Distal: return "distal";
  }
  return "?";
}

std::string_view to_string(ConfigRole r) {
  switch (r) {
    case ConfigRole::MaxFunctional: return "maxFunctional";
    case ConfigRole::Intermediate: return "intermediate";
    case ConfigRole::MinFunctional: return "minFunctional";
  }
  return "?";
}

std::string_view to_string(DistalContact c) {
  switch (c) {
    case DistalContact::Tip: return "tip";
    case DistalContact::FingerpadCenter: return "fingerpadCenter";
  }
  return "?";
}

std::string_view to_string(SizeBand b) {
  switch (b) {
    case SizeBand::TooSmall: return "TooSmall";
    case SizeBand::Small: return "Small";
    case SizeBand::Medium: return "Medium";
    case SizeBand::Large: return "Large";
    case SizeBand::TooLarge: return "TooLarge";
  }
  return "?";
}

std::optional<GraspType> parse_grasp_type(std::string_view s) {
  for (auto t : kAllGraspTypes)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

std::optional<PairLabel> parse_pair_label(std::string_view s) {
  for (auto l : {PairLabel::Base, PairLabel::Mid, PairLabel::Distal})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

std::optional<ConfigRole> parse_config_role(std::string_view s) {
  for (auto r : {ConfigRole::MaxFunctional, ConfigRole::Intermediate, ConfigRole::MinFunctional})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

std::optional<DistalContact> parse_distal_contact(std::string_view s) {
  for (auto c : {DistalContact::Tip, DistalContact::FingerpadCenter})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

SizeBand band_of(double s) {
  if (std::isnan(s)) throw Error(ErrorCode::InvalidArgument, "relative size is NaN");
  if (s < 0.0) return SizeBand::TooSmall;
  if (s < 0.3) return SizeBand::Small;
  if (s <= 0.7) return SizeBand::Medium;
  if (s <= 1.0) return SizeBand::Large;
  return SizeBand::TooLarge;
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(Report& out) : out_(out) {}

  template <typename... Args>
  void add(std::string code, std::string path, fmt::format_string<Args...> f, Args&&... args) {
    out_.push_back({std::move(code), std::move(path), fmt::format(f, std::forward<Args>(args)...)});
  }

 private:
  Report& out_;
};

double max_extent(const ConfigurationProfile& p) {
  double m = 0.0;
  for (const auto& pair : p.pairs) m = std::max(m, pair.extent);
  return m;
}

void check_profile(const ConfigurationProfile& cfg, const std::string& path, ReportBuilder& r) {
  if (!std::isfinite(cfg.actuation)) {
    r.add("NON_FINITE_VALUE", path + "/actuation", "actuation must be a finite number");
  } else {
    switch (cfg.role) {
      case ConfigRole::MaxFunctional:
        if (cfg.actuation != 0.0)
          r.add("MAX_ACTUATION_NOT_ZERO", path + "/actuation",
                "maxFunctional configuration must have actuation 0, got {}", cfg.actuation);
        break;
      case ConfigRole::MinFunctional:
        if (cfg.actuation != 1.0)
          r.add("MIN_ACTUATION_NOT_ONE", path + "/actuation",
                "minFunctional configuration must have actuation 1, got {}", cfg.actuation);
        break;
      case ConfigRole::Intermediate:
        if (!(cfg.actuation > 0.0 && cfg.actuation < 1.0))
          r.add("INTERMEDIATE_ACTUATION_OUT_OF_RANGE", path + "/actuation",
                "intermediate configuration must have 0 < actuation < 1, got {}", cfg.actuation);
        break;
    }
  }

  const auto& pairs = cfg.pairs;
  if (pairs.size() < 2) {
    r.add("TOO_FEW_PAIRS", path + "/pairs",
          "a configuration needs at least a base and a distal pair, got {}", pairs.size());
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    const std::string pp = fmt::format("{}/pairs/{}", path, i);
    const PairLabel expected = i == 0                  ? PairLabel::Base
                               : i + 1 == pairs.size() ? PairLabel::Distal
                                                       : PairLabel::Mid;
    if (pairs.size() >= 2 && p.label != expected)
      r.add("BAD_PAIR_LABEL", pp + "/label", "pair {} should be labelled '{}', got '{}'", i,
            to_string(expected), to_string(p.label));
    if (!std::isfinite(p.depth)) {
      r.add("NON_FINITE_VALUE", pp + "/depthMm", "depth must be a finite number");
    } else if (p.depth < 0.0) {
      r.add("NEGATIVE_DEPTH", pp + "/depthMm", "depth must be >= 0, got {}", p.depth);
    }
    if (!std::isfinite(p.extent)) {
      r.add("NON_FINITE_VALUE", pp + "/extent", "extent must be a finite number");
    } else if (p.extent < 0.0) {
      r.add("NEGATIVE_EXTENT", pp + "/extent", "extent must be >= 0, got {}", p.extent);
    }
    if (i > 0 && !(p.depth > pairs[i - 1].depth))
      r.add("DEPTH_NOT_INCREASING", pp + "/depthMm",
            "depth {} does not increase past the previous pair's {}", p.depth,
            pairs[i - 1].depth);
  }
}

}  // namespace

Report validate_set(GraspType type, const std::vector<ConfigurationProfile>& configurations) {
  Report out;
  ReportBuilder r(out);
  const std::string root = fmt::format("/sets/{}/configurations", to_string(type));

  std::size_t max_count = 0;
  std::size_t min_count = 0;
  for (std::size_t i = 0; i < configurations.size(); ++i) {
    const auto& cfg = configurations[i];
    const std::string path = fmt::format("{}/{}", root, i);
    check_profile(cfg, path, r);
    if (cfg.role == ConfigRole::MaxFunctional) ++max_count;
    if (cfg.role == ConfigRole::MinFunctional) ++min_count;
    if (i > 0 && !(cfg.actuation > configurations[i - 1].actuation))
      r.add("ACTUATION_NOT_INCREASING", path + "/actuation",
            "actuation {} does not increase past the previous configuration's {}",
            cfg.actuation, configurations[i - 1].actuation);
    if (i > 0 && cfg.pairs.size() != configurations.front().pairs.size())
      r.add("PAIR_COUNT_MISMATCH", path + "/pairs",
            "configuration has {} pairs but the first configuration has {}", cfg.pairs.size(),
            configurations.front().pairs.size());
  }
  if (max_count != 1)
    r.add("MAX_CONFIG_COUNT", root, "expected exactly one maxFunctional configuration, found {}",
          max_count);
  if (min_count != 1)
    r.add("MIN_CONFIG_COUNT", root, "expected exactly one minFunctional configuration, found {}",
          min_count);

  // The relative-size span range is [max extent of Min, max extent of Max].
  if (out.empty() && max_count == 1 && min_count == 1) {
    const double widest = max_extent(configurations.front());
    const double narrowest = max_extent(configurations.back());
    if (!(widest > narrowest))
      r.add("SPAN_RANGE_EMPTY", root + "/0/pairs",
            "maxFunctional configuration's largest extent {} must exceed the minFunctional "
            "configuration's {}",
            widest, narrowest);
  }
  return out;
}

Report validate_hand(const HandDraft& draft) {
  Report out;
  ReportBuilder r(out);
  if (draft.name.empty()) r.add("EMPTY_NAME", "/name", "hand name must not be empty");
  if (!draft.date.ok()) r.add("INVALID_DATE", "/date", "measurement date is not a calendar date");

  const auto& ot = draft.one_time;
  if (!std::isfinite(ot.max_open) || !(ot.max_open > 0.0))
    r.add("MAX_OPEN_NOT_POSITIVE", "/oneTime/maxOpenMm", "max open must be > 0, got {}",
          ot.max_open);
  if (!std::isfinite(ot.min_width) || ot.min_width < 0.0)
    r.add("MIN_WIDTH_NEGATIVE", "/oneTime/minWidthMm", "min width must be >= 0, got {}",
          ot.min_width);
  if (!std::isfinite(ot.max_width) || !(ot.max_width > ot.min_width))
    r.add("MAX_WIDTH_NOT_ABOVE_MIN", "/oneTime/maxWidthMm",
          "max width {} must exceed min width {}", ot.max_width, ot.min_width);

  if (draft.sets.empty()) r.add("NO_GRASP_SETS", "/sets", "at least one grasp set is required");

  for (const auto& [type, configurations] : draft.sets) {
    auto set_report = validate_set(type, configurations);
    out.insert(out.end(), set_report.begin(), set_report.end());
    if (!set_report.empty() || extent_kind_of(type) != ExtentKind::Length) continue;
    const auto& max_cfg = configurations.front();
    for (std::size_t i = 0; i < max_cfg.pairs.size(); ++i) {
      if (max_cfg.pairs[i].extent > ot.max_open) {
        r.add("SPAN_EXCEEDS_MAX_OPEN",
              fmt::format("/sets/{}/configurations/0/pairs/{}/extent", to_string(type), i),
              "span {} exceeds max open {}", max_cfg.pairs[i].extent, ot.max_open);
      }
    }
  }
  return out;
}

Report validate_hand(const HandRecord& record) { return validate_hand(record.draft()); }

Report documentation_completeness(const HandRecord& record) {
  Report out;
  ReportBuilder r(out);
  for (const auto& [type, set] : record.sets()) {
    const auto& cfgs = set.configurations();
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
      const auto& prov = cfgs[i].provenance;
      const std::string path =
          fmt::format("/sets/{}/configurations/{}", to_string(type), i);
      if (!prov.photo_ref)
        r.add("MISSING_PHOTO_REF", path + "/photoRef",
              "{} configuration (actuation {}) of the {} set has no top-down photo",
              to_string(cfgs[i].role), cfgs[i].actuation, to_string(type));
      if (type == GraspType::SphericalPower && !prov.palm_photo_ref)
        r.add("SPHERICAL_NEEDS_PALM_VIEW", path + "/palmPhotoRef",
              "{} configuration (actuation {}) of the spherical power set has no palm-view photo",
              to_string(cfgs[i].role), cfgs[i].actuation);
    }
  }
  return out;
}

GraspMeasurementSet GraspMeasurementSet::create(GraspType type,
                                                std::vector<ConfigurationProfile> configurations) {
  auto report = validate_set(type, configurations);
  if (!report.empty()) throw ValidationError(std::move(report));
  return GraspMeasurementSet(type, std::move(configurations));
}

HandRecord HandRecord::create(HandDraft draft) {
  auto report = validate_hand(draft);
  if (!report.empty()) throw ValidationError(std::move(report));
  HandRecord rec;
  rec.name_ = std::move(draft.name);
  rec.measurer_ = std::move(draft.measurer);
  rec.date_ = draft.date;
  rec.one_time_ = draft.one_time;
  for (auto& [type, cfgs] : draft.sets)
    rec.sets_.emplace(type, GraspMeasurementSet(type, std::move(cfgs)));
  return rec;
}

const GraspMeasurementSet* HandRecord::find(GraspType t) const {
  auto it = sets_.find(t);
  return it == sets_.end() ? nullptr : &it->second;
}

const GraspMeasurementSet& HandRecord::set(GraspType t) const {
  if (const auto* s = find(t)) return *s;
  throw Error(ErrorCode::MissingGraspType,
              fmt::format("hand '{}' has no {} measurements", name_, to_string(t)));
}

HandDraft HandRecord::draft() const {
  HandDraft d;
  d.name = name_;
  d.measurer = measurer_;
  d.date = date_;
  d.one_time = one_time_;
  for (const auto& [type, set] : sets_) d.sets.emplace(type, set.configurations());
  return d;
}

Report validate_object(std::string_view name, double span, double depth,
                       std::optional<double> width, std::optional<double> area) {
  Report out;
  ReportBuilder r(out);
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (name.empty()) r.add("EMPTY_NAME", "/name", "object name must not be empty");
  if (!positive(span)) r.add("OBJECT_DIMENSION_NOT_POSITIVE", "/oSpanMm", "span must be > 0, got {}", span);
  if (!positive(depth)) r.add("OBJECT_DIMENSION_NOT_POSITIVE", "/oDepthMm", "depth must be > 0, got {}", depth);
  if (width && !positive(*width))
    r.add("OBJECT_DIMENSION_NOT_POSITIVE", "/oWidthMm", "width must be > 0, got {}", *width);
  if (area && !positive(*area))
    r.add("OBJECT_DIMENSION_NOT_POSITIVE", "/oAreaMm2", "area must be > 0, got {}", *area);
  return out;
}

ObjectSpec ObjectSpec::create(std::string name, double span, double depth,
                              std::optional<double> width, std::optional<double> area) {
  auto report = validate_object(name, span, depth, width, area);
  if (!report.empty()) throw ValidationError(std::move(report));
  ObjectSpec o;
  o.name_ = std::move(name);
  o.span_ = span;
  o.depth_ = depth;
  o.width_ = width;
  o.area_ = area;
  return o;
}

}  // namespace graspspan
