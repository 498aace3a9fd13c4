#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "alab/bits.h"
#include "alab/turing.h"

namespace alab::complexity {

enum class FallbackPolicy { kError, kMaxPlusOne };

// How grid blocks are scored. kDirect needs a table whose objects have the
// block's shape (2D tables for grids, 1D tables for strings). kRowFlatten is
// the degraded grid mode: a 1D table scores each block row separately and the
// block value is the sum over its rows.
enum class GridMode { kDirect, kRowFlatten };

std::string to_string(FallbackPolicy p);
std::string to_string(GridMode m);

// CTM(s) = -log2(count(s) / total_halting), additive constant taken as 0.
class CtmEstimator {
 public:
  CtmEstimator(std::shared_ptr<const turing::CtmTable> table, FallbackPolicy policy,
               GridMode grid_mode = GridMode::kDirect);

  const turing::CtmTable& table() const { return *table_; }
  FallbackPolicy policy() const { return policy_; }
  GridMode grid_mode() const { return grid_mode_; }
  // Largest value among objects present in the table.
  double max_value() const { return max_value_; }

  struct Lookup {
    double bits = 0.0;
    bool fallback = false;
  };

  Lookup lookup(const BitString& s) const;
  Lookup lookup_block(const BitGrid& block) const;

 private:
  Lookup lookup_object(const BitGrid& object) const;

  std::shared_ptr<const turing::CtmTable> table_;
  FallbackPolicy policy_;
  GridMode grid_mode_;
  double max_value_ = 0.0;
  std::map<BitGrid, double> values_;
};

/// Coding-theorem estimate in bits. Throws EmptyString, or MissingString when
/// the policy is kError.
double ctm_value(const CtmEstimator& est, const BitString& s);

struct BdmReport {
  double value = 0.0;
  int block_size = 0;
  std::vector<std::pair<BitGrid, std::uint64_t>> block_census;  // canonical order
  std::size_t dropped_cells = 0;
  std::size_t dropped_rows = 0;
  std::size_t dropped_cols = 0;
  std::size_t fallback_blocks = 0;  // distinct blocks scored via fallback
  FallbackPolicy fallback_policy = FallbackPolicy::kMaxPlusOne;
  GridMode grid_mode = GridMode::kDirect;
};

/// Non-overlapping blocks of `block_len`; the trailing remainder is dropped.
BdmReport bdm_string(const CtmEstimator& est, const BitString& s, int block_len);

/// Non-overlapping d x d tiles anchored at (0,0); partial tiles dropped.
BdmReport bdm_grid(const CtmEstimator& est, const BitGrid& g, int d);

/// Sum over census of K(block) + log2(multiplicity).
double bdm_from_census(const CtmEstimator& est,
                       const std::vector<std::pair<BitGrid, std::uint64_t>>& census,
                       std::size_t* fallback_blocks = nullptr);

/// Empirical entropy (bits per block) of non-overlapping blocks.
double shannon_block_entropy(const BitString& s, int block_len);

struct LzwResult {
  std::vector<std::uint32_t> codes;
  std::uint64_t bit_length = 0;
};

/// LZW over {0,1} with initial dictionary {"0":0, "1":1}. Each code is charged
/// ceil(log2(dictionary size at emission)) bits, minimum 1.
LzwResult lzw_compress(const BitString& s);

/// Divides every value by the maximum.
std::map<std::string, double> normalize_scores(const std::map<std::string, double>& scores);
std::vector<double> normalize_scores(const std::vector<double>& scores);

}  // namespace alab::complexity
