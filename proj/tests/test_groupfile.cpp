#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "permforms/errors.hpp"
#include "permforms/groupfile.hpp"
#include "permforms/groupgen.hpp"

using namespace permforms;

namespace {

const char* kS3Json = R"json({
  "name": "s3",
  "degree": 3,
  "generators": ["(0 1 2)", "(0 1)"],
  "expected_order": 6,
  "tags": ["soluble"]
})json";

}  // namespace

TEST_CASE("parsing group files") {
  auto spec = parse_group_spec(kS3Json);
  CHECK(spec.name == "s3");
  CHECK(spec.degree == 3);
  REQUIRE(spec.expected_order.has_value());
  auto g = build_group(spec);
  CHECK(g.order() == 6);
}

TEST_CASE("order mismatch is rejected with both values") {
  std::string text = kS3Json;
  auto pos = text.find("\"expected_order\": 6");
  text.replace(pos, 19, "\"expected_order\": 7");
  auto spec = parse_group_spec(text);
  try {
    build_group(spec);
    FAIL("expected an order mismatch");
  } catch (const InputError& e) {
    std::string what = e.what();
    CHECK(what.find("6") != std::string::npos);
    CHECK(what.find("7") != std::string::npos);
  }
}

TEST_CASE("malformed cycles point at the offending generator") {
  std::string text = R"json({"name":"bad","degree":3,"generators":["(0 1 2)","(0 1"]})json";
  auto spec = parse_group_spec(text);
  try {
    build_group(spec);
    FAIL("expected a cycle parse error");
  } catch (const InputError& e) {
    std::string what = e.what();
    CHECK(what.find("generator 2") != std::string::npos);
    CHECK(what.find("offset") != std::string::npos);
  }
}

TEST_CASE("JSON syntax errors carry line and column") {
  try {
    parse_group_spec("{\n  \"name\": \"x\",\n  broken\n}");
    FAIL("expected a syntax error");
  } catch (const InputError& e) {
    std::string what = e.what();
    CHECK(what.find("line 3") != std::string::npos);
  }
}

TEST_CASE("rendering round-trips bit-exactly") {
  for (const auto& named : small_group_corpus()) {
    auto spec = spec_of(named);
    std::string text = render_group_spec(spec);
    auto back = parse_group_spec(text);
    CHECK(render_group_spec(back) == text);
    CHECK(back.name == spec.name);
    CHECK(back.degree == spec.degree);
    CHECK(back.generators == spec.generators);
    CHECK(back.expected_order == spec.expected_order);
    CHECK(back.tags == spec.tags);
  }
}

TEST_CASE("corpus directory io") {
  auto dir = std::filesystem::temp_directory_path() / "permforms_corpus_test";
  std::filesystem::remove_all(dir);
  std::vector<NamedGroup> tiny;
  for (const auto& named : small_group_corpus())
    if (named.group.order() <= 8) tiny.push_back(named);
  write_corpus_dir(tiny, dir.string());

  auto load = load_corpus_dir(dir.string());
  CHECK(load.errors.empty());
  CHECK(load.entries.size() == tiny.size());
  for (std::size_t i = 1; i < load.entries.size(); ++i)
    CHECK(load.entries[i - 1].name <= load.entries[i].name);

  // A broken file is reported per entry without aborting the load.
  std::ofstream bad(dir / "zzz_broken.json");
  bad << "{ not json";
  bad.close();
  auto load2 = load_corpus_dir(dir.string());
  CHECK(load2.entries.size() == tiny.size());
  REQUIRE(load2.errors.size() == 1);
  CHECK(load2.errors[0].first.find("zzz_broken") != std::string::npos);

  CHECK_THROWS_AS(load_corpus_dir((dir / "missing").string()), InputError);
  std::filesystem::remove_all(dir);
}
