#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "graspspan/io.hpp"
#include "json.hpp"
#include "../support/synthetic.hpp"

using namespace graspspan;
using namespace graspspan::testing;

namespace {

const std::string kFixtures = GRASPSPAN_FIXTURE_DIR;

std::string fixture(const std::string& name) { return read_file(kFixtures + "/" + name); }

ParseError parse_failure(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(ErrorCode::SchemaError, "", "");
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("minimal hand document parses without warnings") {
  const auto doc = parse_document(fixture("two_config.grasp.json"));
  CHECK(doc.warnings.empty());
  CHECK(doc.envelope.kind == DocumentKind::Hand);
  auto expected = two_config_draft();
  expected.measurer = "test bench";
  auto& cfgs = expected.sets[GraspType::Precision];
  cfgs[0].provenance.photo_ref = "max.jpg";
  cfgs[1].provenance.photo_ref = "min.jpg";
  cfgs[1].distal_contact = DistalContact::Tip;
  CHECK(std::get<HandRecord>(doc.envelope.payload) == HandRecord::create(expected));
}

TEST_CASE("unknown fields are preserved as warnings") {
  const auto text = replace(fixture("two_config.grasp.json"), "\"actuation\": 0,",
                            "\"actuation\": 0, \"color\": \"red\",");
  const auto doc = parse_document(text);
  REQUIRE(doc.warnings.size() == 1);
  CHECK(doc.warnings[0].path == "/sets/precision/configurations/0/color");
}

TEST_CASE("decreasing depths are a schema error at the pair") {
  const auto text = replace(fixture("two_config.grasp.json"), "\"depthMm\": 40", "\"depthMm\": 0");
  const auto e = parse_failure(text);
  CHECK(e.code() == ErrorCode::SchemaError);
  CHECK(e.path() == "/sets/precision/configurations/1/pairs/1/depthMm");
}

TEST_CASE("syntax errors carry line and column") {
  const auto e = parse_failure("{\n  \"schemaVersion\": \"1.0\",\n  \"kind\": ]\n}\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.line() == 3);
  CHECK(e.column() == 11);
}

TEST_CASE("version and kind checks") {
  const auto base = fixture("two_config.grasp.json");
  CHECK(parse_failure(replace(base, "\"1.0\"", "\"2.0\"")).code() == ErrorCode::UnsupportedVersion);
  CHECK_NOTHROW(parse_document(replace(base, "\"1.0\"", "\"1.3\"")));
  const auto e = parse_failure(replace(base, "\"hand\"", "\"glove\""));
  CHECK(e.code() == ErrorCode::SchemaError);
  CHECK(e.path() == "/kind");
}

TEST_CASE("oversized documents are rejected") {
  const std::string big(kMaxDocumentBytes + 1, ' ');
  CHECK(parse_failure(big).code() == ErrorCode::DocumentTooLarge);
}

TEST_CASE("unbounded width is written explicitly") {
  auto draft = two_config_draft();
  draft.one_time.max_width_unbounded = true;
  const auto text = write_document({std::string(kSchemaVersion), DocumentKind::Hand,
                                    HandRecord::create(draft)});
  const auto j = nlohmann::json::parse(text);
  CHECK(j["oneTime"]["maxWidthUnbounded"] == true);
  CHECK(j["oneTime"]["maxWidthMm"] == 60.0);
}

TEST_CASE("objects and object sets") {
  const auto apple = parse_document(fixture("apple.object.json"));
  const auto& o = std::get<ObjectSpec>(apple.envelope.payload);
  CHECK(o.name() == "apple");
  CHECK(o.width() == 40.0);
  CHECK_FALSE(o.area().has_value());

  const auto set = parse_document(
      R"({"schemaVersion":"1.0","kind":"object-set","objects":[)"
      R"({"name":"a","oSpanMm":1,"oDepthMm":2},{"name":"b","oSpanMm":3,"oDepthMm":4,"oAreaMm2":5}]})");
  const auto& objs = std::get<std::vector<ObjectSpec>>(set.envelope.payload);
  REQUIRE(objs.size() == 2);
  CHECK(objs[1].area() == 5.0);
  const auto e = parse_failure(R"({"schemaVersion":"1.0","kind":"object","name":"x","oSpanMm":-1,"oDepthMm":2})");
  CHECK(e.path() == "/oSpanMm");
}

TEST_CASE("write then parse round-trips generated hands") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto hand = HandRecord::create(random_hand_draft(rng, i));
    const DocumentEnvelope env{std::string(kSchemaVersion), DocumentKind::Hand, hand};
    const auto text = write_document(env);
    const auto back = parse_document(text);
    CHECK(back.warnings.empty());
    CHECK(back.envelope == env);
    CHECK(write_document(back.envelope) == text);
    CHECK(text.back() == '\n');
  }
}

TEST_CASE("malformed fixtures fail at the expected path") {
  const auto cases = nlohmann::json::parse(fixture("malformed/cases.json"));
  CHECK(cases.size() >= 12);
  for (const auto& c : cases) {
    const std::string file = c["file"];
    CAPTURE(file);
    const auto e = parse_failure(fixture("malformed/" + file));
    CHECK(to_string(e.code()) == c["error"].get<std::string>());
    CHECK(e.path() == c["path"].get<std::string>());
    if (!c["code"].is_null()) {
      REQUIRE_FALSE(e.violations().empty());
      CHECK(e.violations().front().code == c["code"].get<std::string>());
    }
  }
}

TEST_CASE("parse_hand_draft reports every violation") {
  const auto parsed = parse_hand_draft(fixture("malformed/min_width_negative.grasp.json"));
  const auto report = validate_hand(parsed.draft);
  REQUIRE(report.size() == 1);
  CHECK(report[0].code == "MIN_WIDTH_NEGATIVE");
}
