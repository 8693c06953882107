#include "graspspan/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"

namespace graspspan {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Hand: return "hand";
    case DocumentKind::Object: return "object";
    case DocumentKind::ObjectSet: return "object-set";
  }
  return "?";
}

double quantize(double v) {
  const double q = std::strtod(fmt::format("{:.6f}", v).c_str(), nullptr);
  return q == 0.0 ? 0.0 : q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string escape_pointer(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw ParseError(ErrorCode::SchemaError,
                   fmt::format("{}: {}", path.empty() ? "/" : path, message), path);
}

std::string_view type_name(const json& j) { return j.type_name(); }

class Reader {
 public:
  std::vector<Warning> warnings;

  const json& object(const json& j, const std::string& path) {
    if (!j.is_object()) schema_error(path, fmt::format("expected an object, got {}", type_name(j)));
    return j;
  }

  const json& required(const json& obj, std::string_view key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
      schema_error(path, fmt::format("missing required field '{}'", key));
    return *it;
  }

  const json* optional(const json& obj, std::string_view key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }

  double number(const json& j, const std::string& path) {
    if (!j.is_number()) schema_error(path, fmt::format("expected a number, got {}", type_name(j)));
    return j.get<double>();
  }

  std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_error(path, fmt::format("expected a string, got {}", type_name(j)));
    return j.get<std::string>();
  }

  bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean())
      schema_error(path, fmt::format("expected a boolean, got {}", type_name(j)));
    return j.get<bool>();
  }

  const json& array(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, fmt::format("expected an array, got {}", type_name(j)));
    return j;
  }

  void unknown_fields(const json& obj, std::initializer_list<std::string_view> known,
                      const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end())
        warnings.push_back({path + "/" + escape_pointer(key), fmt::format("unknown field '{}' ignored", key)});
    }
  }

  template <typename Enum, typename ParseFn>
  Enum enumeration(const json& j, const std::string& path, ParseFn parse_fn,
                   std::string_view what) {
    const auto s = string(j, path);
    auto v = parse_fn(s);
    if (!v) schema_error(path, fmt::format("unknown {} '{}'", what, s));
    return *v;
  }
};

std::chrono::year_month_day parse_date(const std::string& s, const std::string& path) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  char tail = 0;
  if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
      std::sscanf(s.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3)
    schema_error(path, fmt::format("expected an ISO-8601 date YYYY-MM-DD, got '{}'", s));
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m},
                                  std::chrono::day{d}};
  if (!ymd.ok()) schema_error(path, fmt::format("'{}' is not a calendar date", s));
  return ymd;
}

std::string format_date(std::chrono::year_month_day ymd) {
  return fmt::format("{:04}-{:02}-{:02}", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
}

json parse_json(std::string_view text) {
  if (text.size() > kMaxDocumentBytes)
    throw ParseError(ErrorCode::DocumentTooLarge,
                     fmt::format("document is {} bytes; the limit is {}", text.size(),
                                 kMaxDocumentBytes),
                     "");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(ErrorCode::SyntaxError,
                     fmt::format("syntax error at line {}, column {}", line, column), "", line,
                     column);
  }
}

std::string check_envelope(Reader& r, const json& root, DocumentKind& kind) {
  r.object(root, "");
  const auto version = r.string(r.required(root, "schemaVersion", ""), "/schemaVersion");
  const auto dot = version.find('.');
  const auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (dot == std::string::npos || !digits(std::string_view(version).substr(0, dot)) ||
      !digits(std::string_view(version).substr(dot + 1)))
    schema_error("/schemaVersion", fmt::format("malformed schema version '{}'", version));
  if (version.substr(0, dot) != "1")
    throw ParseError(ErrorCode::UnsupportedVersion,
                     fmt::format("schema version {} is not supported (expected 1.x)", version),
                     "/schemaVersion");

  const auto kind_str = r.string(r.required(root, "kind", ""), "/kind");
  if (kind_str == "hand")
    kind = DocumentKind::Hand;
  else if (kind_str == "object")
    kind = DocumentKind::Object;
  else if (kind_str == "object-set")
    kind = DocumentKind::ObjectSet;
  else
    schema_error("/kind", fmt::format("unknown document kind '{}'", kind_str));
  return version;
}

MeasurementPair read_pair(Reader& r, const json& j, const std::string& path) {
  r.object(j, path);
  r.unknown_fields(j, {"depthMm", "extent", "label"}, path);
  MeasurementPair p;
  p.depth = r.number(r.required(j, "depthMm", path), path + "/depthMm");
  p.extent = r.number(r.required(j, "extent", path), path + "/extent");
  p.label = r.enumeration<PairLabel>(r.required(j, "label", path), path + "/label",
                                     parse_pair_label, "pair label");
  return p;
}

ConfigurationProfile read_configuration(Reader& r, const json& j, const std::string& path) {
  r.object(j, path);
  r.unknown_fields(j, {"actuation", "role", "distalContact", "pairs", "photoRef", "palmPhotoRef", "note"},
                   path);
  ConfigurationProfile c;
  c.actuation = r.number(r.required(j, "actuation", path), path + "/actuation");
  c.role = r.enumeration<ConfigRole>(r.required(j, "role", path), path + "/role",
                                     parse_config_role, "configuration role");
  c.distal_contact =
      r.enumeration<DistalContact>(r.required(j, "distalContact", path), path + "/distalContact",
                                   parse_distal_contact, "distal contact");
  const auto& pairs = r.array(r.required(j, "pairs", path), path + "/pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i)
    c.pairs.push_back(read_pair(r, pairs[i], fmt::format("{}/pairs/{}", path, i)));
  if (const auto* v = r.optional(j, "photoRef")) c.provenance.photo_ref = r.string(*v, path + "/photoRef");
  if (const auto* v = r.optional(j, "palmPhotoRef"))
    c.provenance.palm_photo_ref = r.string(*v, path + "/palmPhotoRef");
  if (const auto* v = r.optional(j, "note")) c.provenance.note = r.string(*v, path + "/note");
  return c;
}

HandDraft read_hand(Reader& r, const json& root) {
  r.unknown_fields(root, {"schemaVersion", "kind", "name", "measurer", "date", "oneTime", "sets"}, "");
  HandDraft h;
  h.name = r.string(r.required(root, "name", ""), "/name");
  h.measurer = r.string(r.required(root, "measurer", ""), "/measurer");
  h.date = parse_date(r.string(r.required(root, "date", ""), "/date"), "/date");

  const auto& ot = r.object(r.required(root, "oneTime", ""), "/oneTime");
  r.unknown_fields(ot, {"maxOpenMm", "minWidthMm", "maxWidthMm", "maxWidthUnbounded"}, "/oneTime");
  h.one_time.max_open = r.number(r.required(ot, "maxOpenMm", "/oneTime"), "/oneTime/maxOpenMm");
  h.one_time.min_width = r.number(r.required(ot, "minWidthMm", "/oneTime"), "/oneTime/minWidthMm");
  h.one_time.max_width = r.number(r.required(ot, "maxWidthMm", "/oneTime"), "/oneTime/maxWidthMm");
  if (const auto* v = r.optional(ot, "maxWidthUnbounded"))
    h.one_time.max_width_unbounded = r.boolean(*v, "/oneTime/maxWidthUnbounded");

  const auto& sets = r.object(r.required(root, "sets", ""), "/sets");
  for (const auto& [key, value] : sets.items()) {
    const std::string path = "/sets/" + escape_pointer(key);
    auto type = parse_grasp_type(key);
    if (!type) {
      r.warnings.push_back({path, fmt::format("unknown grasp type '{}' ignored", key)});
      continue;
    }
    r.object(value, path);
    r.unknown_fields(value, {"configurations"}, path);
    const auto& cfgs = r.array(r.required(value, "configurations", path), path + "/configurations");
    std::vector<ConfigurationProfile> profiles;
    for (std::size_t i = 0; i < cfgs.size(); ++i)
      profiles.push_back(
          read_configuration(r, cfgs[i], fmt::format("{}/configurations/{}", path, i)));
    h.sets.emplace(*type, std::move(profiles));
  }
  return h;
}

ObjectSpec read_object(Reader& r, const json& j, const std::string& path,
                       std::initializer_list<std::string_view> extra_known) {
  r.object(j, path);
  std::vector<std::string_view> known = {"name", "oSpanMm", "oDepthMm", "oWidthMm", "oAreaMm2"};
  known.insert(known.end(), extra_known.begin(), extra_known.end());
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      r.warnings.push_back({path + "/" + escape_pointer(key), fmt::format("unknown field '{}' ignored", key)});
  }
  const auto name = r.string(r.required(j, "name", path), path + "/name");
  const double span = r.number(r.required(j, "oSpanMm", path), path + "/oSpanMm");
  const double depth = r.number(r.required(j, "oDepthMm", path), path + "/oDepthMm");
  std::optional<double> width;
  std::optional<double> area;
  if (const auto* v = r.optional(j, "oWidthMm")) width = r.number(*v, path + "/oWidthMm");
  if (const auto* v = r.optional(j, "oAreaMm2")) area = r.number(*v, path + "/oAreaMm2");

  auto report = validate_object(name, span, depth, width, area);
  if (!report.empty()) {
    for (auto& v : report) v.path = path + v.path;
    const auto& first = report.front();
    throw ParseError(ErrorCode::SchemaError,
                     fmt::format("{}: {} ({})", first.path, first.message, first.code), first.path,
                     0, 0, report);
  }
  return ObjectSpec::create(name, span, depth, width, area);
}

}  // namespace

ParsedHandDraft parse_hand_draft(std::string_view text) {
  const json root = parse_json(text);
  Reader r;
  DocumentKind kind{};
  check_envelope(r, root, kind);
  if (kind != DocumentKind::Hand)
    schema_error("/kind", fmt::format("expected a hand document, got '{}'", to_string(kind)));
  ParsedHandDraft out;
  out.draft = read_hand(r, root);
  out.warnings = std::move(r.warnings);
  return out;
}

ParsedDocument parse_document(std::string_view text) {
  const json root = parse_json(text);
  Reader r;
  DocumentKind kind{};
  auto version = check_envelope(r, root, kind);

  auto payload = [&]() -> decltype(DocumentEnvelope::payload) {
    switch (kind) {
      case DocumentKind::Hand: {
        auto draft = read_hand(r, root);
        auto report = validate_hand(draft);
        if (!report.empty()) {
          const auto& first = report.front();
          throw ParseError(ErrorCode::SchemaError,
                           fmt::format("{}: {} ({})", first.path, first.message, first.code),
                           first.path, 0, 0, report);
        }
        return HandRecord::create(std::move(draft));
      }
      case DocumentKind::Object:
        return read_object(r, root, "", {"schemaVersion", "kind"});
      case DocumentKind::ObjectSet: {
        r.unknown_fields(root, {"schemaVersion", "kind", "objects"}, "");
        const auto& arr = r.array(r.required(root, "objects", ""), "/objects");
        std::vector<ObjectSpec> objects;
        for (std::size_t i = 0; i < arr.size(); ++i)
          objects.push_back(read_object(r, arr[i], fmt::format("/objects/{}", i), {}));
        return objects;
      }
    }
    schema_error("/kind", "unhandled document kind");
  }();
  return {DocumentEnvelope{std::move(version), kind, std::move(payload)}, std::move(r.warnings)};
}

namespace {

ordered_json number_json(double v) { return quantize(v); }

ordered_json object_json(const ObjectSpec& o) {
  ordered_json j;
  j["name"] = o.name();
  j["oSpanMm"] = number_json(o.span());
  j["oDepthMm"] = number_json(o.depth());
  if (o.width()) j["oWidthMm"] = number_json(*o.width());
  if (o.area()) j["oAreaMm2"] = number_json(*o.area());
  return j;
}

ordered_json hand_json(const HandRecord& h) {
  ordered_json j;
  j["name"] = h.name();
  j["measurer"] = h.measurer();
  j["date"] = format_date(h.date());
  const auto& ot = h.one_time();
  j["oneTime"] = ordered_json{{"maxOpenMm", number_json(ot.max_open)},
                              {"minWidthMm", number_json(ot.min_width)},
                              {"maxWidthMm", number_json(ot.max_width)},
                              {"maxWidthUnbounded", ot.max_width_unbounded}};
  ordered_json sets = ordered_json::object();
  for (const auto& [type, set] : h.sets()) {
    ordered_json cfgs = ordered_json::array();
    for (const auto& c : set.configurations()) {
      ordered_json cj;
      cj["actuation"] = number_json(c.actuation);
      cj["role"] = to_string(c.role);
      cj["distalContact"] = to_string(c.distal_contact);
      ordered_json pairs = ordered_json::array();
      for (const auto& p : c.pairs)
        pairs.push_back(ordered_json{{"depthMm", number_json(p.depth)},
                                     {"extent", number_json(p.extent)},
                                     {"label", to_string(p.label)}});
      cj["pairs"] = std::move(pairs);
      if (c.provenance.photo_ref) cj["photoRef"] = *c.provenance.photo_ref;
      if (c.provenance.palm_photo_ref) cj["palmPhotoRef"] = *c.provenance.palm_photo_ref;
      if (c.provenance.note) cj["note"] = *c.provenance.note;
      cfgs.push_back(std::move(cj));
    }
    sets[std::string(to_string(type))] = ordered_json{{"configurations", std::move(cfgs)}};
  }
  j["sets"] = std::move(sets);
  return j;
}

}  // namespace

std::string write_document(const DocumentEnvelope& env) {
  ordered_json root;
  root["schemaVersion"] = env.schema_version;
  root["kind"] = to_string(env.kind);
  ordered_json body = std::visit(
      [&](const auto& payload) -> ordered_json {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, HandRecord>) {
          if (env.kind != DocumentKind::Hand)
            throw Error(ErrorCode::InvalidArgument, "envelope kind does not match a hand payload");
          return hand_json(payload);
        } else if constexpr (std::is_same_v<T, ObjectSpec>) {
          if (env.kind != DocumentKind::Object)
            throw Error(ErrorCode::InvalidArgument, "envelope kind does not match an object payload");
          return object_json(payload);
        } else {
          if (env.kind != DocumentKind::ObjectSet)
            throw Error(ErrorCode::InvalidArgument, "envelope kind does not match an object-set payload");
          ordered_json arr = ordered_json::array();
          for (const auto& o : payload) arr.push_back(object_json(o));
          return ordered_json{{"objects", std::move(arr)}};
        }
      },
      env.payload);
  for (auto& [key, value] : body.items()) root[key] = value;
  return root.dump(2) + "\n";
}

}  // namespace graspspan
