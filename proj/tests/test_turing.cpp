#include <doctest.h>

#include <algorithm>
#include <random>

#include "alab/error.h"
#include "alab/io.h"
#include "alab/turing.h"
#include "test_support.h"

using namespace alab;
using namespace alab::turing;

namespace {

// Frozen from the independent brute-force oracle (reference_census) over the
// full (2,2) space at cutoff 7.
constexpr std::uint64_t kHalting22 = 3044;
constexpr std::size_t kDistinct22 = 17;

const CtmTable& table22() {
  static const CtmTable t = build_ctm_table(TmSpace{2, 7});
  return t;
}

TmSpec machine(int states, std::vector<Transition> entries) {
  return TmSpec{TmSpace{states, 100}, std::move(entries)};
}

}  // namespace

TEST_CASE("machine_count") {
  CHECK(machine_count({1, 1}) == 36);
  CHECK(machine_count({2, 1}) == 10000);
  CHECK(machine_count({3, 1}) == 7529536);
  CHECK(machine_count({4, 1}) == 11019960576ull);
  CHECK_THROWS_AS(machine_count({7, 1}), Error);
  try {
    machine_count({9, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflow);
  }
}

TEST_CASE("decode extremes") {
  const TmSpace space{3, 22};
  const auto first = decode_machine(space, 0);
  for (const auto& t : first.entries) {
    CHECK_FALSE(t.halt);
    CHECK(t.write == 0);
    CHECK(t.move == Move::kLeft);
    CHECK(t.next == 1);
  }
  const auto last = decode_machine(space, machine_count(space) - 1);
  for (const auto& t : last.entries) {
    CHECK(t.halt);
    CHECK(t.write == 1);
  }
  CHECK_THROWS_AS(decode_machine(space, machine_count(space)), Error);
}

TEST_CASE("transition digits are a bijection") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d < 4 * n + 2; ++d) CHECK(transition_digit(n, transition_from_digit(n, d)) == d);
  }
}

TEST_CASE("encode(decode(i)) == i on random (3,2) indices") {
  const TmSpace space{3, 22};
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t index = rng() % machine_count(space);
    CHECK(encode_machine(decode_machine(space, index)) == index);
  }
}

TEST_CASE("run_machine basic cases") {
  const Transition halt1{1, true, Move::kLeft, 1};
  const Transition runner{0, false, Move::kRight, 1};
  auto r = run_machine(machine(1, {halt1, halt1}), 5);
  CHECK(r.halted);
  CHECK(r.steps == 1);
  CHECK(r.output == parse_bits("1"));

  auto nr = run_machine(machine(1, {runner, halt1}), 1000);
  CHECK_FALSE(nr.halted);
  CHECK_FALSE(nr.output.has_value());
  CHECK(nr.steps == 1000);
}

TEST_CASE("the (2,2) step champion") {
  // A0->1RB, A1->1LB, B0->1LA, B1->1 HALT
  const auto champ = machine(2, {{1, false, Move::kRight, 2},
                                 {1, false, Move::kLeft, 2},
                                 {1, false, Move::kLeft, 1},
                                 {1, true, Move::kLeft, 1}});
  const auto r = run_machine(champ, 7);
  CHECK(r.halted);
  CHECK(r.steps == 6);
  REQUIRE(r.output);
  CHECK(std::count(r.output->begin(), r.output->end(), 1) == 4);
  CHECK_FALSE(run_machine(champ, 5).halted);

  // No (2,2) machine halts later than step 6.
  std::uint64_t max_steps = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    if (auto o = testing::reference_run(2, i, 50)) max_steps = std::max(max_steps, o->steps);
  }
  CHECK(max_steps == 6);
}

TEST_CASE("run_machine agrees with the reference simulator") {
  std::mt19937_64 rng(2);
  const TmSpace space{3, 22};
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t index = rng() % machine_count(space);
    const auto ours = run_machine(decode_machine(space, index), 22);
    const auto ref = testing::reference_run(3, index, 22);
    REQUIRE(ours.halted == ref.has_value());
    if (ref) {
      CHECK(ours.steps == ref->steps);
      CHECK(format_bits(*ours.output) == ref->output);
      CHECK(ours.visited_span == ref->output.size());
    }
  }
}

TEST_CASE("(1,2) full space") {
  const auto t = build_ctm_table(TmSpace{1, 2});
  CHECK(t.total_machines == 36);
  CHECK(t.total_halting == 12);
  CHECK(t.count(parse_bits("0")) == 6);
  CHECK(t.count(parse_bits("1")) == 6);
}

TEST_CASE("(2,2) full space matches the brute-force oracle") {
  std::uint64_t halting = 0;
  const auto census = testing::reference_census(2, 7, &halting);
  CHECK(halting == kHalting22);
  CHECK(census.size() == kDistinct22);

  const auto& t = table22();
  CHECK(t.total_machines == 10000);
  CHECK(t.total_halting == kHalting22);
  CHECK(t.counts.size() == kDistinct22);
  CHECK_FALSE(t.censored);
  for (const auto& [s, n] : census) CHECK(t.count(parse_bits(s)) == n);
  CHECK(t.count(parse_bits("0")) == 1000);
}

TEST_CASE("raising the (2,2) cutoff changes nothing") {
  auto raised = build_ctm_table(TmSpace{2, 17});
  CHECK(raised.counts == table22().counts);
  CHECK(raised.total_halting == table22().total_halting);
}

TEST_CASE("empty range gives an empty table") {
  const auto t = build_ctm_table(TmSpace{2, 7}, IndexRange{500, 500});
  CHECK(t.total_machines == 0);
  CHECK(t.total_halting == 0);
  CHECK(t.counts.empty());
  CHECK_THROWS_AS(build_ctm_table(TmSpace{2, 7}, IndexRange{0, 10001}), Error);
}

TEST_CASE("shards merge to the full build, independent of partition and threads") {
  const auto& full = table22();
  const std::string full_bytes = io::save_ctm_table(full);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint64_t> cuts = {0, 10000};
    for (int i = 0; i < 7; ++i) cuts.push_back(rng() % 10001);
    std::sort(cuts.begin(), cuts.end());
    std::vector<CtmTable> shards;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      shards.push_back(build_ctm_table(TmSpace{2, 7}, IndexRange{cuts[i], cuts[i + 1]}));
    }
    std::shuffle(shards.begin(), shards.end(), rng);
    CtmTable merged = shards.front();
    for (std::size_t i = 1; i < shards.size(); ++i) merged = merge_ctm_tables(merged, shards[i]);
    CHECK(io::save_ctm_table(merged) == full_bytes);
  }
  for (unsigned threads : {2u, 3u, 8u}) {
    CHECK(io::save_ctm_table(build_ctm_table(TmSpace{2, 7}, std::nullopt, threads)) == full_bytes);
  }
}

TEST_CASE("merge identity, commutativity and errors") {
  const auto a = build_ctm_table(TmSpace{2, 7}, IndexRange{0, 3000});
  const auto b = build_ctm_table(TmSpace{2, 7}, IndexRange{3000, 7000});
  const auto empty = build_ctm_table(TmSpace{2, 7}, IndexRange{0, 0});
  CHECK(merge_ctm_tables(a, empty) == a);
  CHECK(merge_ctm_tables(a, b) == merge_ctm_tables(b, a));
  CHECK_THROWS_AS(merge_ctm_tables(a, a), Error);
  try {
    merge_ctm_tables(a, build_ctm_table(TmSpace{2, 8}, IndexRange{3000, 7000}));
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSpaceMismatch);
  }
  try {
    merge_ctm_tables(a, build_ctm_table(TmSpace{2, 7}, IndexRange{2999, 3001}));
    FAIL("expected OverlappingRanges");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverlappingRanges);
  }
}

TEST_CASE("every table entry is reproduced by some machine") {
  const TmSpace space{3, 22};
  const auto t = build_ctm_table(space, IndexRange{0, 200000});
  std::mt19937_64 rng(6);
  std::vector<std::string> keys;
  for (const auto& [obj, n] : t.counts) keys.push_back(format_bits(obj.cells()));
  // Find a witness for up to 100 random entries by scanning the range.
  std::shuffle(keys.begin(), keys.end(), rng);
  keys.resize(std::min<std::size_t>(keys.size(), 100));
  std::map<std::string, bool> found;
  for (std::uint64_t i = 0; i < 200000 && found.size() < keys.size(); ++i) {
    const auto r = run_machine(decode_machine(space, i), space.cutoff);
    if (!r.halted) continue;
    const auto s = format_bits(*r.output);
    if (std::find(keys.begin(), keys.end(), s) != keys.end()) found[s] = true;
  }
  CHECK(found.size() == keys.size());
}

TEST_CASE("halting fraction is strictly inside (0,1)") {
  for (int n = 1; n <= 2; ++n) {
    const auto t = build_ctm_table(TmSpace{n, *default_cutoff(n)});
    CHECK(t.total_halting > 0);
    CHECK(t.total_halting < t.total_machines);
  }
}

TEST_CASE("sampled builds are seeded and flagged") {
  const TmSpace space{4, 40};
  const auto a = build_ctm_sampled(space, 2000, 99);
  const auto b = build_ctm_sampled(space, 2000, 99);
  CHECK(a == b);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.censored);
  CHECK(a.seed == 99u);
  CHECK(a.total_machines == 2000);
  CHECK(a.total_halting > 0);
}

TEST_CASE("default cutoffs") {
  CHECK(default_cutoff(2) == 7u);
  CHECK(default_cutoff(3) == 22u);
  CHECK_FALSE(default_cutoff(4).has_value());
}
