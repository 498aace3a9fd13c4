#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <json.hpp>
#include <random>
#include <sstream>

#include "alab/error.h"
#include "alab/io.h"
#include "test_support.h"

using namespace alab;
using namespace alab::io;

namespace {

ErrorCode load_error(const std::string& text) {
  std::istringstream in(text);
  try {
    load_ctm_table(in);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

turing::CtmTable roundtrip(const turing::CtmTable& t) {
  std::istringstream in(save_ctm_table(t));
  return load_ctm_table(in);
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::string body_of(const std::string& s) { return s.substr(s.find("\n\n") + 2); }

}  // namespace

TEST_CASE("empty table serialises as header only") {
  const auto t = turing::empty_table({2, 7});
  const auto text = save_ctm_table(t);
  CHECK(text.find("total_halting=0\n") != std::string::npos);
  CHECK(body_of(text).empty());
  CHECK(save_ctm_table(t) == text);
  CHECK(roundtrip(t) == t);
}

TEST_CASE("full (2,2) table") {
  const auto t = turing::build_ctm_table({2, 7});
  const auto text = save_ctm_table(t);
  CHECK(text.rfind("schema_version=1\n", 0) == 0);
  CHECK(count_lines(body_of(text)) == 17);
  CHECK(body_of(text).rfind("0,1000\n1,1000\n", 0) == 0);
  CHECK(roundtrip(t) == t);
  CHECK(save_ctm_table(roundtrip(t)) == text);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(9);
  const turing::TmSpace space{2, 7};
  const auto n = turing::machine_count(space);
  for (int i = 0; i < 10; ++i) {
    const std::uint64_t lo = rng() % n;
    const std::uint64_t hi = lo + 1 + rng() % (n - lo);
    const auto part = turing::build_ctm_table(space, turing::IndexRange{lo, hi});
    CHECK(roundtrip(part) == part);
  }
  const auto sampled = turing::build_ctm_sampled({3, 22}, 5000, 4);
  CHECK(roundtrip(sampled) == sampled);
  CHECK(roundtrip(sampled).seed == std::optional<std::uint64_t>(4));
  const auto grid = testing::synthetic_2d_table(2);
  CHECK(roundtrip(grid) == grid);
  const auto completed = turing::complement_complete(turing::build_ctm_table(space));
  CHECK(roundtrip(completed) == completed);
}

TEST_CASE("unknown header keys are preserved") {
  auto t = turing::empty_table({1, 2});
  t.extra["source"] = "imported";
  const auto back = roundtrip(t);
  CHECK(back.extra.at("source") == "imported");
}

TEST_CASE("load errors") {
  const auto good = save_ctm_table(turing::build_ctm_table({1, 2}));
  std::istringstream in(good);
  CHECK_NOTHROW(load_ctm_table(in));

  std::string broken = good;
  broken.replace(broken.find("total_halting=12"), 16, "total_halting=13");
  CHECK(load_error(broken) == ErrorCode::kChecksumMismatch);

  CHECK(load_error(good + "01x,3\n") == ErrorCode::kBadRecord);
  CHECK(load_error(good + "0101,0\n") == ErrorCode::kBadRecord);

  std::string schema = good;
  schema.replace(0, 16, "schema_version=9");
  CHECK(load_error(schema) == ErrorCode::kSchemaMismatch);
  CHECK(load_error("states=2\n\n") == ErrorCode::kSchemaMismatch);
}

TEST_CASE("result export") {
  ResultTable t{{"rule", "value", "name"}, {}};
  for (int r = 0; r < 256; ++r) t.rows.push_back({Value{static_cast<long long>(r)}, Value{r / 3.0}, Value{"x"}});
  const auto csv = export_results(t, Format::kCsv);
  CHECK(count_lines(csv) == 257);
  CHECK(csv.rfind("rule,value,name\n0,0.000000,x\n1,0.333333,x\n", 0) == 0);
  const auto json = nlohmann::json::parse(export_results(t, Format::kJson));
  REQUIRE(json.is_array());
  CHECK(json.size() == 256);
  CHECK(json[3]["rule"] == 3);
  CHECK(json[3]["value"].get<double>() == doctest::Approx(1.0));
  CHECK(json[3]["name"] == "x");
  CHECK_THROWS_AS(export_results(ResultTable{{"a"}, {}}, Format::kCsv), Error);
  CHECK(format_number(0.5) == "0.500000");
}

TEST_CASE("atomic writes") {
  const auto dir = std::filesystem::temp_directory_path() / "alab_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomic(path, "first\n");
  write_file_atomic(path, "second\n");
  CHECK(read_file(path) == "second\n");
  CHECK_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  std::filesystem::remove_all(dir);
}
