#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alab/bits.h"

namespace alab::turing {

// Space of all n-state, 2-symbol machines run for at most `cutoff` steps.
struct TmSpace {
  int states = 2;
  std::uint64_t cutoff = 7;

  friend bool operator==(const TmSpace&, const TmSpace&) = default;
};

/// Busy-Beaver step bound plus one for n <= 3; spaces from (4,2) up have no
/// default and need an explicit cutoff.
std::optional<std::uint64_t> default_cutoff(int states);

/// Known maximum step count of a halting n-state machine, when certified.
std::optional<std::uint64_t> busy_beaver_steps(int states);

/// (4n+2)^(2n). Throws Overflow instead of wrapping.
std::uint64_t machine_count(const TmSpace& space);

enum class Move : std::uint8_t { kLeft = 0, kRight = 1 };

struct Transition {
  Bit write = 0;
  bool halt = false;
  Move move = Move::kLeft;
  int next = 1;  // 1-based; unused when halting

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Position of a transition within an entry's (4n+2)-way choice: moving
// transitions in (write, move, next) order, then (0, HALT), (1, HALT).
Transition transition_from_digit(int states, int digit);
int transition_digit(int states, const Transition& t);

// One machine: entries[2*(state-1) + read].
struct TmSpec {
  TmSpace space;
  std::vector<Transition> entries;

  const Transition& entry(int state, Bit read) const { return entries[2 * (state - 1) + read]; }
};

/// Mixed-radix decode; entry 0 (state 1, read 0) is the least significant
/// digit.
TmSpec decode_machine(const TmSpace& space, std::uint64_t index);
std::uint64_t encode_machine(const TmSpec& spec);

struct RunResult {
  bool halted = false;
  std::uint64_t steps = 0;
  std::optional<BitString> output;  // visited window, present iff halted
  std::size_t visited_span = 0;
};

/// Runs from state 1 on a blank (all-0) tape, head at cell 0. The halting
/// transition counts as the final step.
RunResult run_machine(const TmSpec& spec, std::uint64_t cutoff);

// Half-open machine index interval [lo, hi).
struct IndexRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  std::uint64_t size() const { return hi > lo ? hi - lo : 0; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
  friend auto operator<=>(const IndexRange&, const IndexRange&) = default;
};

enum class Dimensionality { k1D, k2D };

inline constexpr int kSchemaVersion = 1;

std::string default_protocol();

// Output-object -> halting-machine count. 1D objects are stored as 1xN grids.
struct CtmTable {
  int schema_version = kSchemaVersion;
  Dimensionality dimensionality = Dimensionality::k1D;
  int states = 0;
  int symbols = 2;
  std::uint64_t cutoff = 0;
  std::uint64_t total_machines = 0;
  std::uint64_t total_halting = 0;
  std::string protocol;
  bool exhaustive = true;
  bool censored = false;
  bool complement_completed = false;
  std::optional<std::uint64_t> seed;
  std::vector<IndexRange> ranges;  // sorted, disjoint; empty for ingested/sampled tables
  std::map<std::string, std::string> extra;  // ingested provenance keys, kept verbatim
  std::map<BitGrid, std::uint64_t> counts;

  std::uint64_t count(const BitString& s) const;
  std::uint64_t count(const BitGrid& g) const;
  TmSpace space() const { return TmSpace{states, cutoff}; }

  friend bool operator==(const CtmTable&, const CtmTable&) = default;
};

BitGrid as_row(const BitString& s);

CtmTable empty_table(const TmSpace& space);

/// Exhaustively runs every machine in `range` (whole space when absent),
/// split into `threads` contiguous shards merged in index order.
CtmTable build_ctm_table(const TmSpace& space, std::optional<IndexRange> range = std::nullopt,
                         unsigned threads = 1);

/// Runs `samples` uniformly drawn machine indices (with replacement).
CtmTable build_ctm_sampled(const TmSpace& space, std::uint64_t samples, std::uint64_t seed);

/// Adds the census of every machine run on a blank-1 tape. Swapping a
/// machine's read symbols and complementing its writes is a bijection on the
/// space that maps blank-1 runs onto complemented blank-0 runs, so this is
/// exact: count'(s) = count(s) + count(~s), totals doubled.
CtmTable complement_complete(const CtmTable& t);

/// Pointwise addition; throws SpaceMismatch or OverlappingRanges.
CtmTable merge_ctm_tables(const CtmTable& a, const CtmTable& b);

}  // namespace alab::turing
