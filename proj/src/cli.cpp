#include "graspspan/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "graspspan/fit.hpp"
#include "graspspan/interp.hpp"
#include "graspspan/io.hpp"
#include "graspspan/model.hpp"
#include "graspspan/render.hpp"

namespace graspspan::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Fractions print with 3 decimals, millimetres with 1.
std::string frac(double v) { return fmt::format("{:.3f}", v); }
std::string mm(double v) { return fmt::format("{:.1f}", v); }

GraspType grasp_from(const std::string& s) {
  // CLI11 has already checked membership.
  return *parse_grasp_type(s);
}

HandRecord load_hand(const std::string& path) {
  auto doc = parse_document(read_file(path));
  if (doc.envelope.kind != DocumentKind::Hand)
    throw ParseError(ErrorCode::SchemaError,
                     fmt::format("{}: expected a hand document, got '{}'", path,
                                 to_string(doc.envelope.kind)),
                     "/kind");
  return std::get<HandRecord>(std::move(doc.envelope.payload));
}

std::vector<ObjectSpec> load_objects(const std::string& path) {
  auto doc = parse_document(read_file(path));
  if (doc.envelope.kind == DocumentKind::Object)
    return {std::get<ObjectSpec>(std::move(doc.envelope.payload))};
  if (doc.envelope.kind == DocumentKind::ObjectSet)
    return std::get<std::vector<ObjectSpec>>(std::move(doc.envelope.payload));
  throw ParseError(ErrorCode::SchemaError,
                   fmt::format("{}: expected an object document, got '{}'", path,
                               to_string(doc.envelope.kind)),
                   "/kind");
}

ObjectSpec load_object(const std::string& path) {
  auto objects = load_objects(path);
  if (objects.size() != 1)
    throw ParseError(ErrorCode::SchemaError,
                     fmt::format("{}: expected exactly one object, found {}", path, objects.size()),
                     "/objects");
  return std::move(objects.front());
}

ordered_json class_json(const SizeClass& c) {
  return ordered_json{{"s", quantize(c.s)}, {"class", to_string(c.band)}};
}

ordered_json fit_json(const FitResult& r) {
  ordered_json axes;
  axes["span"] = class_json(r.per_axis.span);
  axes["depth"] = class_json(r.per_axis.depth);
  axes["width"] = r.per_axis.width ? class_json(*r.per_axis.width) : ordered_json(nullptr);
  ordered_json j;
  j["feasible"] = r.feasible;
  j["axes"] = std::move(axes);
  j["actuation"] = r.best_actuation ? ordered_json(quantize(*r.best_actuation)) : ordered_json(nullptr);
  j["centerDepthMm"] =
      r.best_center_depth ? ordered_json(quantize(*r.best_center_depth)) : ordered_json(nullptr);
  return j;
}

void print_classes(std::ostream& out, const AxisClasses& c) {
  fmt::print(out, "{:<7}{:<9}{}\n", "axis", "s", "class");
  auto row = [&](std::string_view axis, const std::optional<SizeClass>& sc) {
    if (sc)
      fmt::print(out, "{:<7}{:<9}{}\n", axis, frac(sc->s), to_string(sc->band));
    else
      fmt::print(out, "{:<7}{:<9}{}\n", axis, "-", "-");
  };
  row("Span", c.span);
  row("Depth", c.depth);
  row("Width", c.width);
}

void print_report(std::ostream& out, std::string_view kind, const Report& report) {
  for (const auto& v : report)
    fmt::print(out, "  {} {} at {}: {}\n", kind, v.code, v.path.empty() ? "/" : v.path, v.message);
}

ordered_json report_json(const Report& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : report)
    arr.push_back(ordered_json{{"code", v.code}, {"path", v.path}, {"message", v.message}});
  return arr;
}

int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
  auto parsed = parse_hand_draft(read_file(file));
  Report violations = validate_hand(parsed.draft);
  Report warnings;
  for (const auto& w : parsed.warnings) warnings.push_back({"UNKNOWN_FIELD", w.path, w.message});
  if (violations.empty()) {
    auto docs = documentation_completeness(HandRecord::create(parsed.draft));
    warnings.insert(warnings.end(), docs.begin(), docs.end());
  }
  const bool valid = violations.empty();
  if (as_json) {
    ordered_json j;
    j["file"] = file;
    j["hand"] = parsed.draft.name;
    j["valid"] = valid;
    j["violations"] = report_json(violations);
    j["warnings"] = report_json(warnings);
    out << j.dump(2) << '\n';
  } else {
    fmt::print(out, "hand: {}\n", parsed.draft.name);
    fmt::print(out, "violations: {}\n", violations.size());
    print_report(out, "violation", violations);
    fmt::print(out, "warnings: {}\n", warnings.size());
    print_report(out, "warning", warnings);
    fmt::print(out, "{}\n", valid ? "valid" : "INVALID");
  }
  return valid ? kSuccess : kDomainFailure;
}

int cmd_fit(const std::string& hand_file, const std::string& object_file, GraspType t,
            int resolution, bool as_json, std::ostream& out) {
  const auto hand = load_hand(hand_file);
  const auto obj = load_object(object_file);
  const auto r = fit(hand, t, obj, resolution);
  if (as_json) {
    ordered_json j;
    j["hand"] = hand.name();
    j["grasp"] = to_string(t);
    j["object"] = obj.name();
    const auto fields = fit_json(r);
    for (const auto& [k, v] : fields.items()) j[k] = v;
    out << j.dump(2) << '\n';
  } else {
    fmt::print(out, "hand: {}  grasp: {}  object: {}\n", hand.name(), to_string(t), obj.name());
    print_classes(out, r.per_axis);
    fmt::print(out, "feasible: {}\n", r.feasible ? "yes" : "no");
    if (r.feasible) {
      fmt::print(out, "best actuation: {}\n", frac(*r.best_actuation));
      fmt::print(out, "best center depth: {} mm\n", mm(*r.best_center_depth));
    }
  }
  return r.feasible ? kSuccess : kDomainFailure;
}

int cmd_classify(const std::string& hand_file, const std::string& object_file, GraspType t,
                 bool as_json, std::ostream& out) {
  const auto hand = load_hand(hand_file);
  const auto obj = load_object(object_file);
  const auto c = classify(hand, t, obj);
  if (as_json) {
    ordered_json j;
    j["hand"] = hand.name();
    j["grasp"] = to_string(t);
    j["object"] = obj.name();
    j["axes"]["span"] = class_json(c.span);
    j["axes"]["depth"] = class_json(c.depth);
    j["axes"]["width"] = c.width ? class_json(*c.width) : ordered_json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    auto row = [&](std::string_view axis, const SizeClass& sc) {
      fmt::print(out, "{:<6} {} (s={})\n", axis, to_string(sc.band), frac(sc.s));
    };
    row("Span", c.span);
    row("Depth", c.depth);
    if (c.width) row("Width", *c.width);
  }
  return kSuccess;
}

struct PlotArgs {
  std::vector<std::string> hands;
  std::vector<std::string> objects;
  double scale = 1.0;
  std::string output;
  std::string title;
};

int cmd_plot(const PlotArgs& args, GraspType t, std::ostream& out, std::ostream& err) {
  if (!(args.scale > 0.0) || !std::isfinite(args.scale)) {
    fmt::print(err, "error: --scale must be a positive number of mm per pixel\n");
    return kUsageError;
  }
  PlotSpec spec;
  spec.scale = args.scale;
  spec.title = args.title;
  for (const auto& f : args.hands) spec.hands.push_back({load_hand(f), t});
  for (const auto& f : args.objects)
    for (auto& o : load_objects(f)) spec.overlays.push_back({std::move(o), std::nullopt});
  if (spec.title.empty()) spec.title = fmt::format("{} grasp regions", to_string(t));

  const auto svg = render_svg(spec);
  if (args.output.empty() || args.output == "-") {
    out << svg;
  } else {
    std::ofstream f(args.output, std::ios::binary);
    if (!(f << svg)) {
      fmt::print(err, "error: cannot write '{}'\n", args.output);
      return kIoError;
    }
  }
  return kSuccess;
}

int cmd_compare(const std::vector<std::string>& hand_files, const std::string& object_file,
                GraspType t, int resolution, bool as_json, std::ostream& out) {
  std::vector<HandRecord> hands;
  for (const auto& f : hand_files) hands.push_back(load_hand(f));
  const auto obj = load_object(object_file);
  auto rows = compare_hands(hands, t, obj, resolution);

  // Most room for error first; rows without a result go last.
  auto distance = [](const CompareRow& r) {
    return r.result ? std::abs(r.result->per_axis.span.s - 0.5)
                    : std::numeric_limits<double>::infinity();
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const CompareRow& a, const CompareRow& b) { return distance(a) < distance(b); });
  const bool any_feasible =
      std::any_of(rows.begin(), rows.end(), [](const CompareRow& r) { return r.result && r.result->feasible; });

  if (as_json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ordered_json j;
      j["rank"] = i + 1;
      j["hand"] = rows[i].hand;
      j["status"] = to_string(rows[i].status);
      if (rows[i].result) {
        const auto fields = fit_json(*rows[i].result);
        for (const auto& [k, v] : fields.items()) j[k] = v;
      } else {
        j["message"] = rows[i].message;
      }
      arr.push_back(std::move(j));
    }
    ordered_json j;
    j["grasp"] = to_string(t);
    j["object"] = obj.name();
    j["ranking"] = "ascending |s_span - 0.5| (non-normative)";
    j["rows"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    fmt::print(out, "object: {}  grasp: {}  (ranked by |s_span - 0.5|, non-normative)\n",
               obj.name(), to_string(t));
    fmt::print(out, "{:<5}{:<20}{:<9}{:<10}{:<9}{:<10}{}\n", "rank", "hand", "s_span", "class",
               "feasible", "actuation", "depth_mm");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = rows[i];
      if (!row.result) {
        fmt::print(out, "{:<5}{:<20}{}\n", i + 1, row.hand, to_string(row.status));
        continue;
      }
      const auto& r = *row.result;
      fmt::print(out, "{:<5}{:<20}{:<9}{:<10}{:<9}{:<10}{}\n", i + 1, row.hand,
                 frac(r.per_axis.span.s), to_string(r.per_axis.span.band),
                 r.feasible ? "yes" : "no", r.feasible ? frac(*r.best_actuation) : "-",
                 r.feasible ? mm(*r.best_center_depth) : "-");
    }
  }
  return any_feasible ? kSuccess : kDomainFailure;
}

int cmd_canonical(const std::string& hand_file, GraspType t, double target, std::string name,
                  std::ostream& out, std::ostream& err) {
  if (!(target > 0.0 && target < 1.0)) {
    fmt::print(err, "error: --target must lie strictly between 0 and 1\n");
    return kUsageError;
  }
  const auto hand = load_hand(hand_file);
  CanonicalTargets targets{target, target, target};
  if (hand.one_time().max_width_unbounded) {
    targets.width.reset();
    fmt::print(err, "note: hand '{}' has no upper width limit; width omitted\n", hand.name());
  }
  if (name.empty()) name = fmt::format("{}-canonical-{}", hand.name(), frac(target));
  auto obj = canonical_object(hand, t, targets, std::move(name));
  out << write_document({std::string(kSchemaVersion), DocumentKind::Object, std::move(obj)});
  return kSuccess;
}

int cmd_interp(const std::string& hand_file, GraspType t, double a, std::optional<double> depth,
               bool as_json, std::ostream& out) {
  const auto hand = load_hand(hand_file);
  const auto profile = config_interp(hand.set(t), a);
  const std::string_view kind = profile.extent_kind == ExtentKind::Length ? "length" : "area";
  if (depth) {
    const double e = span_interp(profile, *depth);
    if (as_json) {
      out << ordered_json{{"actuation", quantize(a)}, {"extentKind", kind},
                          {"depthMm", quantize(*depth)}, {"extent", quantize(e)}}
                 .dump(2)
          << '\n';
    } else {
      fmt::print(out, "extent at depth {} mm (actuation {}): {}\n", mm(*depth), frac(a), mm(e));
    }
    return kSuccess;
  }
  if (as_json) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : profile.points)
      pairs.push_back(ordered_json{{"depthMm", quantize(p.depth)}, {"extent", quantize(p.extent)}});
    out << ordered_json{{"actuation", quantize(a)}, {"extentKind", kind}, {"pairs", pairs}}.dump(2)
        << '\n';
  } else {
    fmt::print(out, "actuation {} ({}, {})\n", frac(a), to_string(t),
               kind == "length" ? "span mm" : "area mm^2");
    fmt::print(out, "{:<10}{}\n", "depth_mm", "extent");
    for (const auto& p : profile.points) fmt::print(out, "{:<10}{}\n", mm(p.depth), mm(p.extent));
  }
  return kSuccess;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ActuationOutOfRange:
      return kUsageError;
    case ErrorCode::SyntaxError:
    case ErrorCode::SchemaError:
    case ErrorCode::UnsupportedVersion:
    case ErrorCode::DocumentTooLarge:
      return kIoError;
    default:
      return kDomainFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graspspan: measure, compare and plot robot hand grasp spaces"};
  app.require_subcommand(1);

  const std::vector<std::string> grasp_names = {"precision", "cylindricalPower", "sphericalPower"};
  std::string grasp = "precision";
  bool as_json = false;
  int resolution = kDefaultResolution;
  auto add_grasp = [&](CLI::App* sub) {
    sub->add_option("-g,--grasp", grasp, "Grasp type")->check(CLI::IsMember(grasp_names));
  };

  std::string hand_file;
  std::string object_file;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a hand record against the measurement rules");
  validate->add_option("hand", hand_file, "Hand document (.grasp.json)")->required();
  validate->add_flag("--json", as_json, "Emit JSON");
  validate->callback([&] { action = [&] { return cmd_validate(hand_file, as_json, out); }; });

  auto* fit_cmd = app.add_subcommand("fit", "Search for the actuation and depth that enclose an object");
  fit_cmd->add_option("hand", hand_file, "Hand document")->required();
  fit_cmd->add_option("object", object_file, "Object document (.object.json)")->required();
  add_grasp(fit_cmd);
  fit_cmd->add_option("-r,--resolution", resolution, "Actuation grid steps")->check(CLI::PositiveNumber);
  fit_cmd->add_flag("--json", as_json, "Emit JSON");
  fit_cmd->callback([&] {
    action = [&] { return cmd_fit(hand_file, object_file, grasp_from(grasp), resolution, as_json, out); };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Relative object size per axis (no search)");
  classify_cmd->add_option("hand", hand_file, "Hand document")->required();
  classify_cmd->add_option("object", object_file, "Object document")->required();
  add_grasp(classify_cmd);
  classify_cmd->add_flag("--json", as_json, "Emit JSON");
  classify_cmd->callback([&] {
    action = [&] { return cmd_classify(hand_file, object_file, grasp_from(grasp), as_json, out); };
  });

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render to-scale SVG grasp regions");
  plot->add_option("hands", plot_args.hands, "Hand documents")->required();
  add_grasp(plot);
  plot->add_option("--object", plot_args.objects, "Object documents to overlay at their fit placement");
  plot->add_option("--scale", plot_args.scale, "Millimetres per pixel");
  plot->add_option("-o,--output", plot_args.output, "Output SVG path (default stdout)");
  plot->add_option("--title", plot_args.title, "Plot title");
  plot->callback([&] { action = [&] { return cmd_plot(plot_args, grasp_from(grasp), out, err); }; });

  std::vector<std::string> compare_hands_files;
  auto* compare = app.add_subcommand(
      "compare", "Rank hands for one object by |s_span - 0.5| (a non-normative heuristic)");
  compare->add_option("hands", compare_hands_files, "Hand documents")->required();
  add_grasp(compare);
  compare->add_option("--object", object_file, "Object document")->required();
  compare->add_option("-r,--resolution", resolution, "Actuation grid steps")->check(CLI::PositiveNumber);
  compare->add_flag("--json", as_json, "Emit JSON");
  compare->callback([&] {
    action = [&] {
      return cmd_compare(compare_hands_files, object_file, grasp_from(grasp), resolution, as_json, out);
    };
  });

  double target = 0.5;
  std::string name;
  auto* canonical = app.add_subcommand("canonical", "Emit an object document of a given relative size");
  canonical->add_option("hand", hand_file, "Hand document")->required();
  add_grasp(canonical);
  canonical->add_option("--target", target, "Relative size in (0, 1), e.g. 0.15 small, 0.5 medium")
      ->required();
  canonical->add_option("--name", name, "Object name");
  canonical->callback([&] {
    action = [&] { return cmd_canonical(hand_file, grasp_from(grasp), target, name, out, err); };
  });

  double actuation = 0.0;
  std::optional<double> depth;
  auto* interp = app.add_subcommand("interp", "Interpolated profile, or one extent, at an actuation");
  interp->add_option("hand", hand_file, "Hand document")->required();
  add_grasp(interp);
  interp->add_option("-a,--actuation", actuation, "Actuation in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  interp->add_option("-d,--depth", depth, "Depth in mm");
  interp->add_flag("--json", as_json, "Emit JSON");
  interp->callback([&] {
    action = [&] { return cmd_interp(hand_file, grasp_from(grasp), actuation, depth, as_json, out); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIoError;
  } catch (const Error& e) {
    fmt::print(err, "error: {}: {}\n", to_string(e.code()), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kIoError;
  }
}

}  // namespace graspspan::cli
