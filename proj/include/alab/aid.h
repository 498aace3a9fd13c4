#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alab/bits.h"
#include "alab/complexity.h"

namespace alab::aid {

enum class PerturbationKind { kBitFlip, kRowReplace };

struct Perturbation {
  PerturbationKind kind = PerturbationKind::kBitFlip;
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // bit_flip: (row, col)
  std::size_t row = 0;                                     // row_replace
  std::optional<BitString> replacement;

  static Perturbation flip(std::vector<std::pair<std::size_t, std::size_t>> cells);
  static Perturbation replace_row(std::size_t row, BitString replacement);
};

enum class Classification { kNeutral, kPositive, kNegative };

std::string to_string(Classification c);

struct PerturbationReport {
  double delta = 0.0;  // C(G) - C(G')
  double threshold = 0.0;
  Classification classification = Classification::kNeutral;
  double original_bdm = 0.0;
  double perturbed_bdm = 0.0;
  int block_size = 0;
  complexity::FallbackPolicy fallback_policy = complexity::FallbackPolicy::kMaxPlusOne;
  complexity::GridMode grid_mode = complexity::GridMode::kDirect;
};

/// Returns a new grid; throws OutOfBounds or LengthMismatch.
BitGrid apply_perturbation(const BitGrid& g, const Perturbation& p);

/// |delta| <= threshold is neutral; delta < -threshold positive (perturbed
/// object more complex); delta > threshold negative.
Classification classify(double delta, double threshold);

/// log2 of the cell count.
double neutrality_threshold(const BitGrid& g);

PerturbationReport information_delta(const complexity::CtmEstimator& est, const BitGrid& g,
                                     const Perturbation& p, int d);

struct ImpactMode {
  enum class Kind { kFlipAll, kReplaceRandom } kind = Kind::kFlipAll;
  std::uint64_t seed = 0;

  static ImpactMode flip_all() { return {Kind::kFlipAll, 0}; }
  static ImpactMode replace_random(std::uint64_t seed) { return {Kind::kReplaceRandom, seed}; }
};

/// impact(r) = |BDM(g) - BDM(g with row r perturbed)|, in row order. Random
/// replacement rows are drawn in row order from one generator seeded by
/// `mode.seed`.
std::vector<double> row_impact_profile(const complexity::CtmEstimator& est, const BitGrid& g,
                                       int d, const ImpactMode& mode);

/// Rows by impact descending (most disruptive first), ties by row index.
std::vector<std::size_t> order_by_impact(const std::vector<double>& impacts);

std::vector<std::size_t> reconstruct_time_order(const complexity::CtmEstimator& est,
                                                const BitGrid& g, int d, const ImpactMode& mode);

}  // namespace alab::aid
