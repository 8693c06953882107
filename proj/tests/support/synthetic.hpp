#pragma once

// Synthetic hand records and random generators shared by the test suites.

#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graspspan/io.hpp"
#include "graspspan/model.hpp"

namespace graspspan::testing {

using Pairs = std::vector<std::pair<double, double>>;  // (depth, extent)

inline ConfigurationProfile make_profile(double actuation, ConfigRole role, const Pairs& pairs,
                                         std::optional<std::string> photo = "photo.jpg") {
  ConfigurationProfile c;
  c.actuation = actuation;
  c.role = role;
  c.distal_contact = DistalContact::FingerpadCenter;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const PairLabel label = i == 0 ? PairLabel::Base
                            : i + 1 == pairs.size() ? PairLabel::Distal
                                                    : PairLabel::Mid;
    c.pairs.push_back({pairs[i].first, pairs[i].second, label});
  }
  c.provenance.photo_ref = std::move(photo);
  return c;
}

inline HandDraft base_draft(std::string name = "synthetic") {
  HandDraft d;
  d.name = std::move(name);
  d.measurer = "test";
  d.date = std::chrono::year{2024} / std::chrono::month{3} / std::chrono::day{14};
  d.one_time = {130.0, 20.0, 60.0, false};
  return d;
}

/// Max {(0,100),(50,120)}, Min {(0,20),(40,30)}.
inline HandDraft two_config_draft(GraspType t = GraspType::Precision) {
  auto d = base_draft("two-config");
  d.sets[t] = {make_profile(0.0, ConfigRole::MaxFunctional, {{0, 100}, {50, 120}}),
               make_profile(1.0, ConfigRole::MinFunctional, {{0, 20}, {40, 30}})};
  return d;
}

inline HandRecord two_config_hand(GraspType t = GraspType::Precision) {
  return HandRecord::create(two_config_draft(t));
}

/// Hand whose span axis runs from `min_span` to `max_span`, with flat
/// profiles of the given distal depth.
inline HandRecord span_range_hand(std::string name, double min_span, double max_span,
                                  double depth = 80.0, GraspType t = GraspType::Precision) {
  auto d = base_draft(std::move(name));
  d.one_time.max_open = max_span + 10.0;
  d.sets[t] = {make_profile(0.0, ConfigRole::MaxFunctional, {{0, max_span}, {depth, max_span}}),
               make_profile(1.0, ConfigRole::MinFunctional, {{0, min_span}, {depth, min_span}})};
  return HandRecord::create(std::move(d));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Values representable in the on-disk 6-decimal format.
inline double q(double v) { return quantize(v); }

inline Pairs random_pairs(std::mt19937_64& rng, std::size_t n, double base_max, double step_lo,
                          double step_hi, double extent_lo, double extent_hi) {
  Pairs p;
  double depth = q(uniform(rng, 0.0, base_max));
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) depth = q(depth + uniform(rng, step_lo, step_hi));
    p.emplace_back(depth, q(uniform(rng, extent_lo, extent_hi)));
  }
  return p;
}

/// Random valid two-configuration set: a wide Max profile and a narrow Min.
inline std::vector<ConfigurationProfile> random_two_config(std::mt19937_64& rng, std::size_t n,
                                                           ExtentKind kind = ExtentKind::Length) {
  const double k = kind == ExtentKind::Length ? 1.0 : 40.0;
  return {make_profile(0.0, ConfigRole::MaxFunctional,
                       random_pairs(rng, n, 20.0, 10.0, 40.0, 60.0 * k, 140.0 * k)),
          make_profile(1.0, ConfigRole::MinFunctional,
                       random_pairs(rng, n, 20.0, 5.0, 30.0, 5.0 * k, 50.0 * k))};
}

/// Random valid hand: one to three grasp sets, zero to two intermediate
/// configurations each, quantized so it survives a write/parse cycle.
inline HandDraft random_hand_draft(std::mt19937_64& rng, int index) {
  auto d = base_draft("hand-" + std::to_string(index));
  d.measurer = index % 3 == 0 ? "" : "measurer & \"co\"";
  d.date = std::chrono::year{2000 + index % 30} / std::chrono::month{1u + index % 12} /
           std::chrono::day{1u + index % 28};
  const std::size_t n = 2 + static_cast<std::size_t>(index % 3);
  double widest = 0.0;
  for (auto t : kAllGraspTypes) {
    if (t != GraspType::Precision && std::uniform_int_distribution<int>(0, 1)(rng) == 0) continue;
    auto cfgs = random_two_config(rng, n, extent_kind_of(t));
    const int intermediates = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < intermediates; ++i) {
      const double a = q((i + 1.0) / (intermediates + 1.0));
      auto mid = random_pairs(rng, n, 20.0, 5.0, 35.0, 30.0, 55.0);
      if (t == GraspType::SphericalPower)
        for (auto& p : mid) p.second = q(p.second * 40.0);
      cfgs.insert(cfgs.end() - 1, make_profile(a, ConfigRole::Intermediate, mid,
                                               i == 0 ? std::optional<std::string>{}
                                                      : std::optional<std::string>{"int.png"}));
    }
    if (index % 4 == 0) {
      cfgs.front().provenance.note = "held with a foam ball";
      cfgs.front().distal_contact = DistalContact::Tip;
      cfgs.back().provenance.palm_photo_ref = "palm.jpg";
    }
    if (extent_kind_of(t) == ExtentKind::Length)
      for (const auto& p : cfgs.front().pairs) widest = std::max(widest, p.extent);
    d.sets[t] = std::move(cfgs);
  }
  d.one_time.max_open = q(widest + uniform(rng, 0.0, 30.0));
  d.one_time.min_width = q(uniform(rng, 0.0, 30.0));
  d.one_time.max_width = q(d.one_time.min_width + uniform(rng, 10.0, 120.0));
  d.one_time.max_width_unbounded = index % 5 == 0;
  return d;
}

}  // namespace graspspan::testing
