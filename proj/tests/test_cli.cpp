#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "alab/cli.h"
#include "alab/complexity.h"
#include "alab/io.h"
#include "alab/turing.h"

using namespace alab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "alab");
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("alab_cli_" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("eca lambda --all") {
  const auto r = run({"eca", "lambda", "--all"});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(count_lines(r.out) == 257);
  CHECK(r.out.find("\n0,0.000000\n") != std::string::npos);
  CHECK(r.out.find("\n255,1.000000\n") != std::string::npos);
  CHECK(r.err.rfind("# meta {", 0) == 0);
}

TEST_CASE("eca simplify and evolve") {
  const auto s = run({"eca", "simplify", "--rule", "204"});
  REQUIRE(s.code == cli::kExitOk);
  CHECK(s.out.find("*1*->1") != std::string::npos);
  const auto e = run({"eca", "evolve", "--rule", "90", "--width", "5", "--steps", "1", "--init", "single",
                      "--format", "pbm"});
  REQUIRE(e.code == cli::kExitOk);
  CHECK(e.out == "P1\n5 2\n0 0 1 0 0\n0 1 0 1 0\n");
}

TEST_CASE("ctm build, query and bdm") {
  TempDir dir;
  const auto table = dir / "t22.txt";
  REQUIRE(run({"--output", table, "ctm", "build", "--states", "2", "--cutoff", "7"}).code == cli::kExitOk);
  CHECK(fs::exists(table + ".meta.json"));
  CHECK(io::load_ctm_table(fs::path(table)) == turing::build_ctm_table({2, 7}));

  const auto q = run({"ctm", "query", "--table", table, "--string", "1"});
  REQUIRE(q.code == cli::kExitOk);
  CHECK(q.out.rfind("string,bits,fallback\n1,1.605968,false\n", 0) == 0);

  const auto b = run({"bdm", "--table", table, "--input", "0000000000000000", "--d", "4"});
  REQUIRE(b.code == cli::kExitOk);
  const complexity::CtmEstimator est(std::make_shared<const turing::CtmTable>(turing::build_ctm_table({2, 7})),
                                     complexity::FallbackPolicy::kMaxPlusOne, complexity::GridMode::kDirect);
  // "0000" is not produced by any (2,2) machine, so this is the max+1 fallback
  const double expected = est.lookup(parse_bits("0000")).bits + 2.0;
  CHECK(b.out.find("string," + io::format_number(expected) + ",4,1,0,1,") != std::string::npos);

  // "0000" is absent from the (2,2) table: error policy is a data error
  const auto strict = run({"bdm", "--table", table, "--input", "0000", "--d", "4", "--fallback", "error"});
  CHECK(strict.code == cli::kExitData);
  CHECK(strict.err.find("MissingString") != std::string::npos);
}

TEST_CASE("ctm shards merge into the full table") {
  TempDir dir;
  const auto n = turing::machine_count({2, 7});
  const auto mid = std::to_string(n / 3);
  REQUIRE(run({"--output", dir / "a", "ctm", "build", "--states", "2", "--range", "0.." + mid}).code == 0);
  REQUIRE(run({"--output", dir / "b", "ctm", "build", "--states", "2", "--range", mid + ".." + std::to_string(n)})
              .code == 0);
  REQUIRE(run({"--output", dir / "m", "ctm", "merge", dir / "b", dir / "a"}).code == 0);
  REQUIRE(run({"--output", dir / "full", "ctm", "build", "--states", "2"}).code == 0);
  CHECK(io::read_file(dir / "m") == io::read_file(dir / "full"));

  const auto overlap = run({"ctm", "merge", dir / "a", dir / "full"});
  CHECK(overlap.code == cli::kExitData);
  CHECK(overlap.err.find("OverlappingRanges") != std::string::npos);
}

TEST_CASE("determinism across seeds and threads") {
  TempDir dir;
  const auto a = run({"--seed", "5", "ctm", "build", "--states", "3", "--samples", "20000"});
  const auto b = run({"--seed", "5", "ctm", "build", "--states", "3", "--samples", "20000"});
  const auto c = run({"--seed", "6", "ctm", "build", "--states", "3", "--samples", "20000"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);

  const auto t1 = run({"--threads", "1", "ctm", "build", "--states", "2"});
  const auto t8 = run({"--threads", "8", "ctm", "build", "--states", "2"});
  CHECK(t1.out == t8.out);
}

TEST_CASE("usage and data errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"eca", "lambda", "--rule", "300"}).code == cli::kExitUsage);
  CHECK(run({"eca", "simplify"}).code == cli::kExitUsage);
  CHECK(run({"ctm", "build", "--states", "4"}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"--format", "xml", "eca", "lambda", "--all"}).code == cli::kExitUsage);

  TempDir dir;
  io::write_file_atomic(dir / "bad.txt", "schema_version=1\n\n");
  const auto bad = run({"ctm", "query", "--table", dir / "bad.txt", "--string", "0"});
  CHECK(bad.code == cli::kExitData);
  CHECK(bad.err.find("SchemaMismatch") != std::string::npos);

  const auto interact = run({"eca", "interact", "--rule-a", "30", "--rule-b", "90", "--split", "50", "--width",
                             "10", "--steps", "2"});
  CHECK(interact.code == cli::kExitData);
  CHECK(interact.err.find("SplitOutOfRange") != std::string::npos);
}
