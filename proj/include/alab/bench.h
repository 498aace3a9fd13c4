#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "alab/bits.h"
#include "alab/complexity.h"

namespace alab::bench {

struct WolframClassTable {
  std::array<int, 256> classes{};
  std::string source;

  int operator[](int rule) const { return classes.at(static_cast<std::size_t>(rule)); }
};

/// CSV "rule,class" lines, optional header. Lines starting with '#' are
/// comments; "# source=..." sets the provenance string.
WolframClassTable load_class_table(std::istream& in);

enum class InitialCondition { kSeededRandom, kSingleOne };

struct BenchConfig {
  int width = 100;
  int steps = 100;
  std::uint64_t seed = 1;
  InitialCondition initial = InitialCondition::kSeededRandom;
  int block_size = 4;
  int entropy_block = 4;
  unsigned threads = 1;
};

/// Seeded uniform row (one generator bit per cell), or a single 1 at width/2.
BitString initial_row(const BenchConfig& cfg);

struct BenchmarkRow {
  int rule = 0;
  int wolfram_class = 0;
  double lambda = 0.0;
  int simplified_icons = 0;
  double simplified_bits = 0.0;
  std::uint64_t lzw_bits = 0;
  double entropy = 0.0;
  double bdm = 0.0;
};

/// All 256 rules from one shared initial row, in rule order.
std::vector<BenchmarkRow> run_benchmark(const BenchConfig& cfg,
                                        const complexity::CtmEstimator& est,
                                        const WolframClassTable& classes);

inline const std::array<const char*, 5> kMeasures = {"lambda", "simplified_bits", "lzw_bits",
                                                      "entropy", "bdm"};

/// Raw column for a measure name; throws UnknownMeasure.
std::vector<double> measure_column(const std::vector<BenchmarkRow>& rows, const std::string& measure);

struct ClassSummary {
  int wolfram_class = 0;
  std::size_t count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct ClassStats {
  std::string measure;
  std::array<ClassSummary, 4> classes{};
  // overlap[i][j]: normalized ranges of classes i+1 and j+1 intersect.
  std::array<std::array<bool, 4>, 4> overlap{};

  const ClassSummary& of(int wolfram_class) const { return classes.at(wolfram_class - 1); }
  bool overlaps(int a, int b) const { return overlap.at(a - 1).at(b - 1); }
};

/// Per-class aggregates of the max-normalized measure.
ClassStats class_stats(const std::vector<BenchmarkRow>& rows, const std::string& measure);

}  // namespace alab::bench
