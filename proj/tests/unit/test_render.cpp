#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <random>

#include "graspspan/render.hpp"
#include "../support/plots.hpp"
#include "../support/svg_probe.hpp"
#include "../support/synthetic.hpp"

using namespace graspspan;
using namespace graspspan::testing;

namespace {

const std::string kGoldens = GRASPSPAN_GOLDEN_DIR;

void check_golden(const std::string& name, const std::string& svg) {
  const auto path = kGoldens + "/" + name;
  if (std::getenv("GRASPSPAN_UPDATE_GOLDENS")) std::ofstream(path, std::ios::binary) << svg;
  CHECK(slurp(path) == svg);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("two configurations give two outlines, one shade and a ruler") {
  const auto svg = render_svg(two_config_plot());
  CHECK(count_of(svg, "class=\"outline") == 2);
  CHECK(count_of(svg, "class=\"shade\"") == 1);
  CHECK(count_of(svg, "class=\"ruler\"") == 1);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
}

TEST_CASE("shade is omitted without both extreme configurations") {
  auto spec = two_config_plot();
  spec.show.min_functional = false;
  const auto svg = render_svg(spec);
  CHECK(count_of(svg, "class=\"shade\"") == 0);
  CHECK(count_of(svg, "class=\"outline") == 1);
}

TEST_CASE("rendering is deterministic") {
  CHECK(render_svg(hand_object_plot()) == render_svg(hand_object_plot()));
}

TEST_CASE("breakpoints land at the scaled coordinates") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto draft = base_draft();
    draft.one_time.max_open = 1000;
    draft.sets[GraspType::Precision] = random_two_config(rng, 2 + trial % 4);
    PlotSpec spec;
    spec.hands.push_back({HandRecord::create(draft), GraspType::Precision});
    spec.scale = uniform(rng, 0.1, 3.0);
    const auto svg = render_svg(spec);
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& cfg = draft.sets[GraspType::Precision][c];
      const auto pts = path_points(attribute(svg, "hand0-cfg" + std::to_string(c), "d"));
      const std::size_t n = cfg.pairs.size();
      REQUIRE(pts.size() == 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& p = cfg.pairs[i];
        const auto& left = pts[i];
        const auto& right = pts[2 * n - 1 - i];
        CHECK(std::abs(left.first + p.extent / 2 / spec.scale) <= 0.5e-6);
        CHECK(std::abs(right.first - p.extent / 2 / spec.scale) <= 0.5e-6);
        CHECK(std::abs(left.second + p.depth / spec.scale) <= 0.5e-6);
        CHECK(std::abs(right.second + p.depth / spec.scale) <= 0.5e-6);
      }
    }
  }
}

TEST_CASE("automatic overlay placement uses the fit result") {
  const auto svg = render_svg(hand_object_plot());
  CHECK(attribute(svg, "hand0-obj0-profile", "data-actuation") == "0.462000");
  CHECK(count_of(svg, "class=\"object\"") == 1);
}

TEST_CASE("spherical hands draw area profiles and circles") {
  auto draft = base_draft();
  draft.sets[GraspType::SphericalPower] = {
      make_profile(0.0, ConfigRole::MaxFunctional, {{0, 4000}, {50, 6000}}),
      make_profile(1.0, ConfigRole::MinFunctional, {{0, 300}, {40, 900}})};
  PlotSpec spec;
  spec.hands.push_back({HandRecord::create(draft), GraspType::SphericalPower});
  spec.overlays.push_back({ObjectSpec::create("ball", 60, 10, 40), std::nullopt});
  const auto svg = render_svg(spec);
  CHECK(count_of(svg, "<circle") == 1);
  CHECK(count_of(svg, "class=\"shade\"") == 1);
}

TEST_CASE("render errors") {
  auto spec = two_config_plot();
  spec.overlays.push_back({ObjectSpec::create("crate", 400, 300), std::nullopt});
  CHECK(code_of([&] { render_svg(spec); }) == ErrorCode::InfeasibleOverlay);

  spec = two_config_plot();
  spec.scale = 0;
  CHECK(code_of([&] { render_svg(spec); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { render_svg(PlotSpec{}); }) == ErrorCode::InvalidArgument);

  spec = two_config_plot();
  spec.hands[0].grasp = GraspType::CylindricalPower;
  CHECK(code_of([&] { render_svg(spec); }) == ErrorCode::MissingGraspType);

  spec = two_config_plot();
  spec.overlays.push_back({ObjectSpec::create("apple", 75, 10), Placement{20, 1.5}});
  CHECK(code_of([&] { render_svg(spec); }) == ErrorCode::ActuationOutOfRange);
}

TEST_CASE("golden renders") {
  check_golden("two_config.svg", render_svg(two_config_plot()));
  check_golden("hand_object.svg", render_svg(hand_object_plot()));
}
