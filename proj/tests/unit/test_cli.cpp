#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "graspspan/cli.hpp"
#include "graspspan/io.hpp"
#include "json.hpp"
#include "../support/synthetic.hpp"

using namespace graspspan;
using namespace graspspan::testing;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = GRASPSPAN_FIXTURE_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("graspspan-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (path_ / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  std::string hand(const HandRecord& h) const {
    return write(h.name() + ".grasp.json",
                 write_document({std::string(kSchemaVersion), DocumentKind::Hand, h}));
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", fx("two_config.grasp.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("valid") != std::string::npos);

  r = run({"validate", fx("malformed/min_width_negative.grasp.json"), "--json"});
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["code"] == "MIN_WIDTH_NEGATIVE");
  CHECK(j["violations"][0]["path"] == "/oneTime/minWidthMm");

  CHECK(run({"validate", fx("malformed/actuation_not_number.grasp.json")}).status == 3);
  CHECK(run({"validate", fx("does_not_exist.grasp.json")}).status == 3);
}

TEST_CASE("fit") {
  auto r = run({"fit", fx("two_config.grasp.json"), fx("apple.object.json")});
  CHECK(r.status == 0);
  CHECK(r.out.find("feasible: yes") != std::string::npos);
  CHECK(r.out.find("best actuation: 0.462") != std::string::npos);
  CHECK(r.out.find("best center depth: 40.4 mm") != std::string::npos);

  r = run({"fit", fx("two_config.grasp.json"), fx("apple.object.json"), "--json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["feasible"] == true);
  CHECK(j["actuation"] == 0.462);
  CHECK(j["axes"]["span"]["class"] == "Medium");

  CHECK(run({"fit", fx("two_config.grasp.json"), fx("crate.object.json")}).status == 1);
  CHECK(run({"fit", fx("two_config.grasp.json"), fx("apple.object.json"), "-g", "sphericalPower"})
            .status == 1);
  CHECK(run({"fit", fx("two_config.grasp.json"), fx("apple.object.json"), "-g", "hook"}).status == 2);
  CHECK(run({"fit", fx("two_config.grasp.json"), fx("apple.object.json"), "-r", "0"}).status == 2);
  CHECK(run({"fit", fx("two_config.grasp.json")}).status == 2);
}

TEST_CASE("classify reports the lock as width TooSmall") {
  const auto r = run({"classify", fx("two_config.grasp.json"), fx("lock.object.json"), "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["axes"]["width"]["class"] == "TooSmall");
}

TEST_CASE("plot") {
  TempDir tmp;
  auto r = run({"plot", fx("two_config.grasp.json"), "--object", fx("apple.object.json")});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);

  const auto out = tmp.path("plot.svg");
  r = run({"plot", fx("two_config.grasp.json"), "-o", out, "--scale", "0.5"});
  CHECK(r.status == 0);
  CHECK(fs::file_size(out) > 0);

  CHECK(run({"plot", fx("two_config.grasp.json"), "--scale", "0"}).status == 2);
  CHECK(run({"plot", fx("two_config.grasp.json"), "--scale", "-1"}).status == 2);
  CHECK(run({"plot", fx("two_config.grasp.json"), "--object", fx("crate.object.json")}).status == 1);
}

TEST_CASE("compare ranks the hand closest to mid-range first") {
  TempDir tmp;
  const auto small = tmp.hand(span_range_hand("tight", 85, 185));
  const auto mid = tmp.hand(span_range_hand("middle", 50, 150));
  const auto large = tmp.hand(span_range_hand("roomy", 10, 110));
  const auto obj = tmp.write("cup.object.json",
                             R"({"schemaVersion":"1.0","kind":"object","name":"cup","oSpanMm":100,"oDepthMm":10})");
  const auto r = run({"compare", small, mid, large, "--object", obj, "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["hand"] == "middle");
  CHECK(j["rows"][0]["axes"]["span"]["class"] == "Medium");
  CHECK(j["rows"][1]["hand"] == "tight");
  CHECK(j["rows"][1]["axes"]["span"]["class"] == "Small");
  CHECK(j["rows"][2]["hand"] == "roomy");
  CHECK(j["rows"][2]["axes"]["span"]["class"] == "Large");

  const auto text = run({"compare", small, mid, large, "--object", obj});
  CHECK(text.out.find("middle") < text.out.find("tight"));

  CHECK(run({"compare", small}).status == 2);
  CHECK(run({"compare", small, "--object", fx("crate.object.json")}).status == 1);
}

TEST_CASE("canonical") {
  auto r = run({"canonical", fx("two_config.grasp.json"), "--target", "0.15", "--name", "small"});
  CHECK(r.status == 0);
  const auto doc = parse_document(r.out);
  const auto& o = std::get<ObjectSpec>(doc.envelope.payload);
  CHECK(o.name() == "small");
  CHECK(o.span() == doctest::Approx(43.5));
  CHECK(o.depth() == doctest::Approx(7.5));
  CHECK(o.width() == doctest::Approx(26));

  CHECK(run({"canonical", fx("two_config.grasp.json"), "--target", "1"}).status == 2);
  CHECK(run({"canonical", fx("two_config.grasp.json"), "--target", "0"}).status == 2);
  CHECK(run({"canonical", fx("two_config.grasp.json")}).status == 2);

  TempDir tmp;
  auto draft = two_config_draft();
  draft.one_time.max_width_unbounded = true;
  const auto open = tmp.hand(HandRecord::create(draft));
  r = run({"canonical", open, "--target", "0.5"});
  CHECK(r.status == 0);
  CHECK(r.err.find("width omitted") != std::string::npos);
  CHECK_FALSE(std::get<ObjectSpec>(parse_document(r.out).envelope.payload).width().has_value());
}

TEST_CASE("interp") {
  auto r = run({"interp", fx("two_config.grasp.json"), "-a", "0.5", "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pairs"].size() == 2);

  r = run({"interp", fx("two_config.grasp.json"), "-a", "0.5", "-d", "22.5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("67.5") != std::string::npos);

  r = run({"interp", fx("two_config.grasp.json"), "-a", "0.5", "-d", "50"});
  CHECK(r.status == 1);
  CHECK(r.err.find("DepthOutOfRange") != std::string::npos);
  CHECK(run({"interp", fx("two_config.grasp.json"), "-a", "1.5"}).status == 2);
}

TEST_CASE("help and usage") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
}
