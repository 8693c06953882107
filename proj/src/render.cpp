#include "graspspan/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

#include "graspspan/interp.hpp"

namespace graspspan {

namespace {

constexpr double kMargin = 40.0;
constexpr double kTitleBand = 30.0;
constexpr double kLabelBand = 24.0;
constexpr double kTileGap = 40.0;
constexpr double kRulerBand = 50.0;
constexpr double kMarkerArm = 4.0;

constexpr std::string_view kTheme =
    ".background{fill:#ffffff}"
    ".title{font:16px sans-serif;fill:#000000}"
    ".hand-label{font:12px sans-serif;fill:#000000}"
    ".palm{stroke:#000000;stroke-width:2}"
    ".centerline{stroke:#999999;stroke-width:0.5;stroke-dasharray:4 3}"
    ".shade{fill:#9ecae1;fill-opacity:0.45;stroke:none}"
    ".outline{fill:none;stroke-width:1.5}"
    ".role-maxFunctional{stroke:#08519c}"
    ".role-intermediate{stroke:#6baed6;stroke-dasharray:6 3}"
    ".role-minFunctional{stroke:#a50f15}"
    ".role-interpolated{stroke:#636363;stroke-dasharray:2 2}"
    ".mid-marker{stroke:#000000;stroke-width:1}"
    ".fit-profile{fill:none;stroke:#31a354;stroke-width:1.5;stroke-dasharray:5 2}"
    ".object{fill:#fdae6b;fill-opacity:0.6;stroke:#e6550d;stroke-width:1}"
    ".ruler line{stroke:#000000;stroke-width:1}"
    ".ruler text{font:11px sans-serif;fill:#000000}";

std::string num(double v) {
  auto s = fmt::format("{:.6f}", v);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape_xml(std::string_view in) {
  std::string out;
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Drawn {
  InterpolatedProfile profile;
  std::string role;
  std::vector<std::size_t> mid_indices;
};

struct PlacedObject {
  const ObjectSpec* object;
  double center_depth;
  InterpolatedProfile profile;
  double required;
};

struct Tile {
  const PlotHand* source;
  ExtentKind kind;
  std::vector<Drawn> outlines;
  std::optional<std::size_t> max_index;
  std::optional<std::size_t> min_index;
  std::vector<PlacedObject> objects;
  // Extents in pixels relative to the tile origin.
  double left = 0.0;
  double right = 0.0;
  double height = 0.0;
};

// Horizontal pixel coordinate of an extent value on the tile's axis.
double extent_px(double extent, ExtentKind kind, double scale) {
  return kind == ExtentKind::Length ? extent / 2.0 / scale : extent / (kAreaPerPixel * scale);
}

Tile build_tile(const PlotHand& ph, const PlotSpec& spec) {
  const auto& set = ph.hand.set(ph.grasp);
  Tile tile{&ph, set.extent_kind(), {}, {}, {}, {}};

  for (const auto& cfg : set.configurations()) {
    const bool wanted = (cfg.role == ConfigRole::MaxFunctional && spec.show.max_functional) ||
                        (cfg.role == ConfigRole::Intermediate && spec.show.intermediate) ||
                        (cfg.role == ConfigRole::MinFunctional && spec.show.min_functional);
    if (!wanted) continue;
    Drawn d{profile_of(cfg, set.extent_kind()), std::string(to_string(cfg.role)), {}};
    for (std::size_t i = 0; i < cfg.pairs.size(); ++i)
      if (cfg.pairs[i].label == PairLabel::Mid) d.mid_indices.push_back(i);
    if (cfg.role == ConfigRole::MaxFunctional) tile.max_index = tile.outlines.size();
    if (cfg.role == ConfigRole::MinFunctional) tile.min_index = tile.outlines.size();
    tile.outlines.push_back(std::move(d));
  }
  for (double a : spec.show.actuations)
    tile.outlines.push_back({config_interp(set, a), "interpolated", {}});

  for (const auto& ov : spec.overlays) {
    const double required = required_extent(ov.object, set.extent_kind());
    if (ov.placement) {
      tile.objects.push_back({&ov.object, ov.placement->center_depth,
                              config_interp(set, ov.placement->actuation), required});
      continue;
    }
    const auto result = fit(ph.hand, ph.grasp, ov.object, spec.resolution);
    if (!result.feasible)
      throw Error(ErrorCode::InfeasibleOverlay,
                  fmt::format("object '{}' does not fit hand '{}' ({} grasp)", ov.object.name(),
                              ph.hand.name(), to_string(ph.grasp)));
    tile.objects.push_back({&ov.object, *result.best_center_depth,
                            config_interp(set, *result.best_actuation), required});
  }

  const double s = spec.scale;
  double half = 0.0;
  double top = 0.0;
  auto cover = [&](const InterpolatedProfile& p) {
    for (const auto& pt : p.points) {
      half = std::max(half, extent_px(pt.extent, tile.kind, s));
      top = std::max(top, pt.depth / s);
    }
  };
  for (const auto& d : tile.outlines) cover(d.profile);
  for (const auto& o : tile.objects) {
    cover(o.profile);
    top = std::max(top, (o.center_depth + o.object->depth() / 2.0) / s);
    if (tile.kind == ExtentKind::Length) {
      half = std::max(half, o.object->span() / 2.0 / s);
    } else {
      half = std::max(half, extent_px(o.required, tile.kind, s) + o.object->depth() / 2.0 / s);
    }
  }
  if (tile.kind == ExtentKind::Length) {
    tile.left = half;
    tile.right = half;
  } else {
    tile.left = 0.0;
    tile.right = half;
  }
  tile.height = top;
  return tile;
}

std::string point(double x, double y) { return num(x) + "," + num(y); }

// Closed outline (length) or base-to-distal polyline (area).
std::string outline_path(const InterpolatedProfile& p, double scale) {
  std::string d;
  if (p.extent_kind == ExtentKind::Length) {
    const auto poly = profile_region(p);
    for (std::size_t i = 0; i < poly.size(); ++i)
      d += (i == 0 ? "M" : " L") + point(poly[i].lateral / scale, -poly[i].depth / scale);
    d += " Z";
  } else {
    for (std::size_t i = 0; i < p.points.size(); ++i)
      d += (i == 0 ? "M" : " L") +
           point(extent_px(p.points[i].extent, ExtentKind::Area, scale), -p.points[i].depth / scale);
  }
  return d;
}

std::string shade_path(const InterpolatedProfile& outer, const InterpolatedProfile& inner,
                       double scale) {
  if (outer.extent_kind == ExtentKind::Length)
    return outline_path(outer, scale) + " " + outline_path(inner, scale);
  std::string d = outline_path(outer, scale);
  for (auto it = inner.points.rbegin(); it != inner.points.rend(); ++it)
    d += " L" + point(extent_px(it->extent, ExtentKind::Area, scale), -it->depth / scale);
  return d + " Z";
}

std::string plus_glyph(double x, double y) {
  return fmt::format("M{} H{} M{} V{}", point(x - kMarkerArm, y), num(x + kMarkerArm),
                     point(x, y - kMarkerArm), num(y + kMarkerArm));
}

double ruler_length_mm(double content_px, double scale) {
  const double budget = std::max(content_px * scale * 0.5, 1e-9);
  double best = 0.0;
  for (int e = -3; e <= 6; ++e) {
    for (double m : {1.0, 2.0, 5.0}) {
      const double v = m * std::pow(10.0, e);
      if (v <= budget) best = std::max(best, v);
    }
  }
  return best > 0.0 ? best : budget;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.hands.empty()) throw Error(ErrorCode::InvalidArgument, "a plot needs at least one hand");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale))
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("scale must be a positive number of mm per pixel, got {}", spec.scale));

  std::vector<Tile> tiles;
  tiles.reserve(spec.hands.size());
  for (const auto& ph : spec.hands) tiles.push_back(build_tile(ph, spec));

  const double s = spec.scale;
  double content_w = 0.0;
  double content_h = 0.0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    content_w += tiles[i].left + tiles[i].right + (i > 0 ? kTileGap : 0.0);
    content_h = std::max(content_h, tiles[i].height);
  }
  const double width = std::ceil(2.0 * kMargin + content_w);
  const double baseline = kMargin + kTitleBand + kLabelBand + content_h;
  const double height = std::ceil(baseline + kRulerBand + kMargin);

  std::string out;
  auto emit = [&out](std::string_view line) {
    out += line;
    out += '\n';
  };
  emit(R"svg(<?xml version="1.0" encoding="UTF-8"?>)svg");
  emit(fmt::format(R"svg(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">)svg",
                   num(width), num(height), num(width), num(height)));
  emit(fmt::format("<title>{}</title>", escape_xml(spec.title)));
  emit(fmt::format("<style>{}</style>", kTheme));
  emit(fmt::format(R"svg(<rect class="background" x="0" y="0" width="{}" height="{}"/>)svg", num(width),
                   num(height)));
  emit(fmt::format(R"svg(<text class="title" x="{}" y="{}">{}</text>)svg", num(kMargin),
                   num(kMargin + 16.0), escape_xml(spec.title)));

  double cursor = kMargin;
  for (std::size_t h = 0; h < tiles.size(); ++h) {
    const auto& tile = tiles[h];
    if (h > 0) cursor += kTileGap;
    const double ox = cursor + tile.left;
    cursor += tile.left + tile.right;
    const std::string id = fmt::format("hand{}", h);

    emit(fmt::format(R"svg(<g id="{}" class="hand" transform="translate({},{})">)svg", id, num(ox),
                     num(baseline)));
    emit(fmt::format(R"svg(<text class="hand-label" x="{}" y="{}">{} ({})</text>)svg", num(-tile.left),
                     num(-content_h - 8.0), escape_xml(tile.source->hand.name()),
                     to_string(tile.source->grasp)));
    emit(fmt::format(R"svg(<line class="palm" x1="{}" y1="0.000000" x2="{}" y2="0.000000"/>)svg",
                     num(-tile.left), num(tile.right)));
    if (tile.kind == ExtentKind::Length)
      emit(fmt::format(R"svg(<line class="centerline" x1="0.000000" y1="0.000000" x2="0.000000" y2="{}"/>)svg",
                       num(-content_h)));

    if (tile.max_index && tile.min_index)
      emit(fmt::format(R"svg(<path id="{}-shade" class="shade" fill-rule="evenodd" d="{}"/>)svg", id,
                       shade_path(tile.outlines[*tile.max_index].profile,
                                  tile.outlines[*tile.min_index].profile, s)));

    for (std::size_t c = 0; c < tile.outlines.size(); ++c) {
      const auto& d = tile.outlines[c];
      emit(fmt::format(R"svg(<path id="{}-cfg{}" class="outline role-{}" data-actuation="{}" d="{}"/>)svg",
                       id, c, d.role, num(d.profile.actuation), outline_path(d.profile, s)));
    }
    for (std::size_t c = 0; c < tile.outlines.size(); ++c) {
      const auto& d = tile.outlines[c];
      if (d.mid_indices.empty()) continue;
      std::string glyphs;
      for (auto i : d.mid_indices) {
        const auto& pt = d.profile.points[i];
        const double x = extent_px(pt.extent, tile.kind, s);
        const double y = -pt.depth / s;
        if (!glyphs.empty()) glyphs += ' ';
        if (tile.kind == ExtentKind::Length) glyphs += plus_glyph(-x, y) + ' ';
        glyphs += plus_glyph(x, y);
      }
      emit(fmt::format(R"svg(<path id="{}-cfg{}-mid" class="mid-marker" d="{}"/>)svg", id, c, glyphs));
    }

    for (std::size_t o = 0; o < tile.objects.size(); ++o) {
      const auto& po = tile.objects[o];
      emit(fmt::format(R"svg(<path id="{}-obj{}-profile" class="fit-profile" data-actuation="{}" d="{}"/>)svg",
                       id, o, num(po.profile.actuation), outline_path(po.profile, s)));
      if (tile.kind == ExtentKind::Length) {
        emit(fmt::format(R"svg(<rect id="{}-obj{}" class="object" x="{}" y="{}" width="{}" height="{}"><title>{}</title></rect>)svg",
                         id, o, num(-po.object->span() / 2.0 / s),
                         num(-(po.center_depth + po.object->depth() / 2.0) / s),
                         num(po.object->span() / s), num(po.object->depth() / s),
                         escape_xml(po.object->name())));
      } else {
        emit(fmt::format(R"svg(<circle id="{}-obj{}" class="object" cx="{}" cy="{}" r="{}"><title>{}</title></circle>)svg",
                         id, o, num(extent_px(po.required, tile.kind, s)),
                         num(-po.center_depth / s), num(po.object->depth() / 2.0 / s),
                         escape_xml(po.object->name())));
      }
    }
    emit("</g>");
  }

  const double ruler_mm = ruler_length_mm(content_w, s);
  const double ruler_px = ruler_mm / s;
  const double ry = baseline + kRulerBand / 2.0;
  emit(fmt::format(R"svg(<g id="ruler" class="ruler" transform="translate({},{})">)svg", num(kMargin),
                   num(ry)));
  emit(fmt::format(R"svg(<line x1="0.000000" y1="0.000000" x2="{}" y2="0.000000"/>)svg", num(ruler_px)));
  emit(R"svg(<line x1="0.000000" y1="-4.000000" x2="0.000000" y2="4.000000"/>)svg");
  emit(fmt::format(R"svg(<line x1="{}" y1="-4.000000" x2="{}" y2="4.000000"/>)svg", num(ruler_px),
                   num(ruler_px)));
  emit(fmt::format(R"svg(<text x="{}" y="16.000000">{} mm</text>)svg", num(ruler_px + 6.0),
                   fmt::format("{:g}", ruler_mm)));
  emit("</g>");
  emit("</svg>");
  return out;
}

}  // namespace graspspan
