#include "alab/turing.h"

#include <algorithm>
#include <random>
#include <span>
#include <thread>
#include <unordered_map>

#include "alab/error.h"

namespace alab::turing {

std::optional<std::uint64_t> busy_beaver_steps(int states) {
  switch (states) {
    case 1: return 1;
    case 2: return 6;
    case 3: return 21;
    case 4: return 107;
    default: return std::nullopt;
  }
}

std::optional<std::uint64_t> default_cutoff(int states) {
  if (states >= 1 && states <= 3) return *busy_beaver_steps(states) + 1;
  return std::nullopt;
}

std::uint64_t machine_count(const TmSpace& space) {
  if (space.states < 1) throw Error(ErrorCode::kInvalidArgument, "states must be >= 1", space.states);
  const std::uint64_t base = 4ull * static_cast<std::uint64_t>(space.states) + 2;
  std::uint64_t count = 1;
  for (int i = 0; i < 2 * space.states; ++i) {
    if (__builtin_mul_overflow(count, base, &count)) {
      throw Error(ErrorCode::kOverflow,
                  "machine count for " + std::to_string(space.states) + " states exceeds 64 bits",
                  space.states);
    }
  }
  return count;
}

Transition transition_from_digit(int states, int digit) {
  const int moving = 4 * states;
  if (digit < moving) {
    Transition t;
    t.write = static_cast<Bit>(digit / (2 * states));
    t.move = static_cast<Move>((digit / states) % 2);
    t.next = digit % states + 1;
    return t;
  }
  Transition t;
  t.halt = true;
  t.write = static_cast<Bit>(digit - moving);
  return t;
}

int transition_digit(int states, const Transition& t) {
  if (t.halt) return 4 * states + t.write;
  return t.write * 2 * states + static_cast<int>(t.move) * states + (t.next - 1);
}

TmSpec decode_machine(const TmSpace& space, std::uint64_t index) {
  const std::uint64_t total = machine_count(space);
  if (index >= total) {
    throw Error(ErrorCode::kIndexOutOfRange, "machine index outside the space",
                static_cast<long long>(index));
  }
  const std::uint64_t base = 4ull * space.states + 2;
  TmSpec spec{space, {}};
  spec.entries.reserve(2 * space.states);
  for (int e = 0; e < 2 * space.states; ++e) {
    spec.entries.push_back(transition_from_digit(space.states, static_cast<int>(index % base)));
    index /= base;
  }
  return spec;
}

std::uint64_t encode_machine(const TmSpec& spec) {
  const std::uint64_t base = 4ull * spec.space.states + 2;
  std::uint64_t index = 0;
  for (auto it = spec.entries.rbegin(); it != spec.entries.rend(); ++it) {
    index = index * base + static_cast<std::uint64_t>(transition_digit(spec.space.states, *it));
  }
  return index;
}

namespace {

// Flat transition table used by the hot loop.
struct Packed {
  Bit write;
  std::int8_t delta;  // -1, +1, or 0 for halt
  std::uint8_t next;  // 0 = halt, else 1-based state
};

// Simulates on a window-sized tape. Returns false if the cutoff was hit.
// On halt fills [lo, hi] (inclusive, tape coordinates) and step count.
class Simulator {
 public:
  explicit Simulator(std::uint64_t cutoff)
      : cutoff_(cutoff), tape_(2 * cutoff + 3, 0), origin_(cutoff + 1) {}

  bool run(const Packed* table) {
    std::fill(tape_.begin() + static_cast<std::ptrdiff_t>(lo_),
              tape_.begin() + static_cast<std::ptrdiff_t>(hi_) + 1, Bit{0});
    std::size_t head = origin_;
    lo_ = hi_ = origin_;
    unsigned state = 1;
    for (std::uint64_t step = 1; step <= cutoff_; ++step) {
      const Packed& t = table[2 * (state - 1) + tape_[head]];
      tape_[head] = t.write;
      if (t.next == 0) {
        steps_ = step;
        return true;
      }
      head += static_cast<std::ptrdiff_t>(t.delta);
      lo_ = std::min(lo_, head);
      hi_ = std::max(hi_, head);
      state = t.next;
    }
    steps_ = cutoff_;
    return false;
  }

  std::uint64_t steps() const { return steps_; }
  std::size_t span() const { return hi_ - lo_ + 1; }
  std::span<const Bit> window() const { return std::span<const Bit>(tape_).subspan(lo_, span()); }

 private:
  std::uint64_t cutoff_;
  std::vector<Bit> tape_;
  std::size_t origin_;
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
  std::uint64_t steps_ = 0;
};

Packed pack(const Transition& t) {
  if (t.halt) return Packed{t.write, 0, 0};
  return Packed{t.write, static_cast<std::int8_t>(t.move == Move::kLeft ? -1 : 1),
                static_cast<std::uint8_t>(t.next)};
}

// Packs windows of up to 64 cells as (length, value).
struct ShortKey {
  std::uint64_t bits;
  std::uint32_t length;
  friend bool operator==(const ShortKey&, const ShortKey&) = default;
};

struct ShortKeyHash {
  std::size_t operator()(const ShortKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.bits * 0x9E3779B97F4A7C15ull ^ k.length);
  }
};

class Accumulator {
 public:
  void add(std::span<const Bit> window) {
    if (window.size() <= 64) {
      std::uint64_t v = 0;
      for (Bit b : window) v = (v << 1) | b;
      ++short_[ShortKey{v, static_cast<std::uint32_t>(window.size())}];
    } else {
      ++long_[BitString(std::vector<Bit>(window.begin(), window.end()))];
    }
  }

  void drain_into(std::map<BitGrid, std::uint64_t>& out) const {
    for (const auto& [k, n] : short_) {
      std::vector<Bit> bits(k.length);
      for (std::uint32_t i = 0; i < k.length; ++i) bits[i] = (k.bits >> (k.length - 1 - i)) & 1;
      out[BitGrid(1, k.length, std::move(bits))] += n;
    }
    for (const auto& [s, n] : long_) out[as_row(s)] += n;
  }

 private:
  std::unordered_map<ShortKey, std::uint64_t, ShortKeyHash> short_;
  std::map<BitString, std::uint64_t> long_;
};

struct ShardResult {
  std::uint64_t halting = 0;
  Accumulator acc;
};

void run_shard(const TmSpace& space, IndexRange range, ShardResult& out) {
  if (range.size() == 0) return;
  const int entries = 2 * space.states;
  const int base = 4 * space.states + 2;
  std::vector<Packed> digit_table(base);
  for (int d = 0; d < base; ++d) digit_table[d] = pack(transition_from_digit(space.states, d));

  // Odometer over entry digits, least significant first.
  std::vector<int> digits(entries);
  std::uint64_t rest = range.lo;
  for (int e = 0; e < entries; ++e) {
    digits[e] = static_cast<int>(rest % base);
    rest /= base;
  }
  std::vector<Packed> table(entries);
  for (int e = 0; e < entries; ++e) table[e] = digit_table[digits[e]];

  Simulator sim(space.cutoff);
  for (std::uint64_t i = range.lo; i < range.hi; ++i) {
    if (sim.run(table.data())) {
      ++out.halting;
      out.acc.add(sim.window());
    }
    for (int e = 0; e < entries; ++e) {
      if (++digits[e] < base) {
        table[e] = digit_table[digits[e]];
        break;
      }
      digits[e] = 0;
      table[e] = digit_table[0];
    }
  }
}

void check_space(const TmSpace& space) {
  if (space.cutoff < 1) throw Error(ErrorCode::kInvalidArgument, "cutoff must be >= 1");
  if (space.states > 255) throw Error(ErrorCode::kInvalidArgument, "too many states");
}

bool is_censored(const TmSpace& space) {
  if (space.states >= 4) return true;
  const auto bb = busy_beaver_steps(space.states);
  return !bb || space.cutoff < *bb;
}

}  // namespace

std::string default_protocol() {
  return "rado-bb formalism (4n+2)^(2n); halt folded into transitions; blank=0; "
         "single blank tape; output=visited window; halt transition counts as a step";
}

BitGrid as_row(const BitString& s) {
  return BitGrid(1, s.size(), std::vector<Bit>(s.begin(), s.end()));
}

std::uint64_t CtmTable::count(const BitString& s) const {
  if (s.empty()) return 0;
  return count(as_row(s));
}

std::uint64_t CtmTable::count(const BitGrid& g) const {
  auto it = counts.find(g);
  return it == counts.end() ? 0 : it->second;
}

CtmTable empty_table(const TmSpace& space) {
  check_space(space);
  CtmTable t;
  t.states = space.states;
  t.cutoff = space.cutoff;
  t.protocol = default_protocol();
  t.censored = is_censored(space);
  return t;
}

RunResult run_machine(const TmSpec& spec, std::uint64_t cutoff) {
  if (cutoff < 1) throw Error(ErrorCode::kInvalidArgument, "cutoff must be >= 1");
  std::vector<Packed> table;
  table.reserve(spec.entries.size());
  for (const Transition& t : spec.entries) table.push_back(pack(t));
  Simulator sim(cutoff);
  RunResult r;
  r.halted = sim.run(table.data());
  r.steps = sim.steps();
  if (r.halted) {
    auto w = sim.window();
    r.output = BitString(std::vector<Bit>(w.begin(), w.end()));
    r.visited_span = w.size();
  } else {
    r.visited_span = sim.span();
  }
  return r;
}

CtmTable build_ctm_table(const TmSpace& space, std::optional<IndexRange> range, unsigned threads) {
  CtmTable table = empty_table(space);
  const std::uint64_t total = machine_count(space);
  const IndexRange full = range.value_or(IndexRange{0, total});
  if (full.lo > full.hi || full.hi > total) {
    throw Error(ErrorCode::kIndexOutOfRange, "range outside the machine space",
                static_cast<long long>(full.hi));
  }
  if (full.size() == 0) return table;

  threads = std::max(1u, threads);
  const std::uint64_t shards = std::min<std::uint64_t>(threads, full.size());
  std::vector<ShardResult> results(shards);
  std::vector<IndexRange> parts(shards);
  for (std::uint64_t s = 0; s < shards; ++s) {
    parts[s] = IndexRange{full.lo + full.size() * s / shards, full.lo + full.size() * (s + 1) / shards};
  }
  if (shards == 1) {
    run_shard(space, parts[0], results[0]);
  } else {
    std::vector<std::jthread> workers;
    for (std::uint64_t s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] { run_shard(space, parts[s], results[s]); });
    }
  }
  for (const auto& r : results) {
    table.total_halting += r.halting;
    r.acc.drain_into(table.counts);
  }
  table.total_machines = full.size();
  table.ranges = {full};
  return table;
}

CtmTable build_ctm_sampled(const TmSpace& space, std::uint64_t samples, std::uint64_t seed) {
  CtmTable table = empty_table(space);
  const std::uint64_t total = machine_count(space);
  table.exhaustive = false;
  table.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  ShardResult result;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t index = pick(rng);
    run_shard(space, IndexRange{index, index + 1}, result);
  }
  table.total_halting = result.halting;
  result.acc.drain_into(table.counts);
  table.total_machines = samples;
  return table;
}

CtmTable complement_complete(const CtmTable& t) {
  if (t.complement_completed) throw Error(ErrorCode::kInvalidArgument, "table is already complement-completed");
  CtmTable out = t;
  out.complement_completed = true;
  out.total_machines = 2 * t.total_machines;
  out.total_halting = 2 * t.total_halting;
  for (const auto& [obj, n] : t.counts) {
    std::vector<Bit> flipped(obj.cells().begin(), obj.cells().end());
    for (auto& b : flipped) b = 1 - b;
    out.counts[BitGrid(obj.rows(), obj.cols(), std::move(flipped))] += n;
  }
  return out;
}

CtmTable merge_ctm_tables(const CtmTable& a, const CtmTable& b) {
  if (a.schema_version != b.schema_version || a.dimensionality != b.dimensionality ||
      a.states != b.states || a.symbols != b.symbols || a.cutoff != b.cutoff ||
      a.exhaustive != b.exhaustive || a.protocol != b.protocol ||
      a.complement_completed != b.complement_completed) {
    throw Error(ErrorCode::kSpaceMismatch, "tables come from different spaces or protocols");
  }
  std::vector<IndexRange> ranges = a.ranges;
  ranges.insert(ranges.end(), b.ranges.begin(), b.ranges.end());
  std::sort(ranges.begin(), ranges.end());
  std::vector<IndexRange> merged;
  for (const IndexRange& r : ranges) {
    if (r.size() == 0) continue;
    if (!merged.empty() && r.lo < merged.back().hi) {
      throw Error(ErrorCode::kOverlappingRanges, "index ranges overlap", static_cast<long long>(r.lo));
    }
    if (!merged.empty() && r.lo == merged.back().hi) {
      merged.back().hi = r.hi;
    } else {
      merged.push_back(r);
    }
  }
  CtmTable out = a;
  out.ranges = std::move(merged);
  out.total_machines += b.total_machines;
  out.total_halting += b.total_halting;
  out.censored = a.censored || b.censored;
  if (a.seed != b.seed) out.seed.reset();
  for (const auto& [obj, n] : b.counts) out.counts[obj] += n;
  return out;
}

}  // namespace alab::turing
