#include <doctest.h>

#include <fstream>
#include <memory>
#include <sstream>

#include "alab/bench.h"
#include "alab/eca.h"
#include "alab/error.h"
#include "alab/io.h"

using namespace alab;
using namespace alab::bench;

namespace {

WolframClassTable shipped_classes() {
  std::ifstream in(std::string(ALAB_DATA_DIR) + "/wolfram_classes.csv");
  return load_class_table(in);
}

const complexity::CtmEstimator& estimator() {
  static const complexity::CtmEstimator est(
      std::make_shared<const turing::CtmTable>(turing::complement_complete(turing::build_ctm_table({3, 22}))),
      complexity::FallbackPolicy::kMaxPlusOne, complexity::GridMode::kRowFlatten);
  return est;
}

std::string class_csv(int skip = -1, std::string extra = "") {
  std::string s = "rule,class\n";
  for (int r = 0; r < 256; ++r) {
    if (r != skip) s += std::to_string(r) + ",2\n";
  }
  return s + extra;
}

ErrorCode load_error(const std::string& text) {
  std::istringstream in(text);
  try {
    load_class_table(in);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("class table loading") {
  const auto table = shipped_classes();
  CHECK_FALSE(table.source.empty());
  CHECK(table[0] == 1);
  CHECK(table[30] == 3);
  CHECK(table[110] == 4);
  CHECK(table[124] == 4);
  CHECK(table[204] == 2);

  std::istringstream no_header([] {
    std::string s;
    for (int r = 0; r < 256; ++r) s += std::to_string(r) + ",1\n";
    return s;
  }());
  CHECK(load_class_table(no_header)[255] == 1);

  CHECK(load_error(class_csv(30)) == ErrorCode::kMissingRule);
  CHECK(load_error(class_csv(-1, "30,2\n")) == ErrorCode::kDuplicateRule);
  CHECK(load_error(class_csv(30, "30,5\n")) == ErrorCode::kBadClass);
}

TEST_CASE("shipped classes are closed under rule equivalence") {
  const auto table = shipped_classes();
  for (int r = 0; r < 256; ++r) {
    const auto rule = eca::rule_from_number(r);
    CHECK(table[rule.mirrored().number()] == table[r]);
    CHECK(table[rule.complemented().number()] == table[r]);
  }
}

TEST_CASE("initial rows") {
  BenchConfig cfg;
  cfg.width = 9;
  cfg.initial = InitialCondition::kSingleOne;
  CHECK(initial_row(cfg) == parse_bits("000010000"));
  cfg.initial = InitialCondition::kSeededRandom;
  cfg.width = 100;
  CHECK(initial_row(cfg) == initial_row(cfg));
  BenchConfig other = cfg;
  other.seed = cfg.seed + 1;
  CHECK(initial_row(cfg) != initial_row(other));
}

TEST_CASE("benchmark rows") {
  BenchConfig cfg;
  const auto classes = shipped_classes();
  const auto rows = run_benchmark(cfg, estimator(), classes);
  REQUIRE(rows.size() == 256);
  for (int r = 0; r < 256; ++r) {
    CHECK(rows[r].rule == r);
    CHECK(rows[r].wolfram_class == classes[r]);
    CHECK(rows[r].lambda == eca::lambda(eca::rule_from_number(r)));
  }
  // rule 0: one repeated zero block after row 0
  for (const auto& row : rows) CHECK(rows[0].bdm <= row.bdm);
  for (int r = 0; r < 256; ++r) {
    const int m = eca::rule_from_number(r).mirrored().number();
    CHECK(rows[r].simplified_icons == rows[m].simplified_icons);
  }

  // deterministic and thread-count independent
  BenchConfig threaded = cfg;
  threaded.threads = 4;
  const auto again = run_benchmark(threaded, estimator(), classes);
  CHECK(io::export_results(io::benchmark_table(rows), io::Format::kCsv) ==
        io::export_results(io::benchmark_table(again), io::Format::kCsv));

  // lambda column does not depend on the configuration
  BenchConfig varied = cfg;
  varied.seed = 77;
  varied.width = 40;
  varied.steps = 30;
  const auto other = run_benchmark(varied, estimator(), classes);
  for (int r = 0; r < 256; ++r) CHECK(other[r].lambda == rows[r].lambda);
}

TEST_CASE("class_stats") {
  std::vector<BenchmarkRow> rows;
  for (int r = 0; r < 8; ++r) {
    BenchmarkRow row;
    row.rule = r;
    row.wolfram_class = 1 + r % 4;
    row.lambda = 0.5;
    row.bdm = 1.0 + r % 4;  // classes 1..4 get 1..4
    rows.push_back(row);
  }
  const auto flat = class_stats(rows, "lambda");
  for (int c = 1; c <= 4; ++c) {
    CHECK(flat.of(c).mean == 1.0);
    for (int o = 1; o <= 4; ++o) CHECK(flat.overlaps(c, o));
  }
  const auto bdm = class_stats(rows, "bdm");
  CHECK(bdm.of(4).max == 1.0);
  CHECK(bdm.of(1).mean == 0.25);
  CHECK(bdm.of(1).count == 2);
  CHECK_FALSE(bdm.overlaps(1, 2));
  CHECK(bdm.overlaps(3, 3));
  CHECK_THROWS_AS(class_stats(rows, "nope"), Error);
}
