#include "alab/aid.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "alab/error.h"

namespace alab::aid {

Perturbation Perturbation::flip(std::vector<std::pair<std::size_t, std::size_t>> cells) {
  Perturbation p;
  p.kind = PerturbationKind::kBitFlip;
  p.cells = std::move(cells);
  return p;
}

Perturbation Perturbation::replace_row(std::size_t row, BitString replacement) {
  Perturbation p;
  p.kind = PerturbationKind::kRowReplace;
  p.row = row;
  p.replacement = std::move(replacement);
  return p;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::kNeutral: return "neutral";
    case Classification::kPositive: return "positive";
    case Classification::kNegative: return "negative";
  }
  return "neutral";
}

BitGrid apply_perturbation(const BitGrid& g, const Perturbation& p) {
  BitGrid out = g;
  if (p.kind == PerturbationKind::kBitFlip) {
    for (const auto& [r, c] : p.cells) {
      if (r >= g.rows() || c >= g.cols()) {
        throw Error(ErrorCode::kOutOfBounds, "cell outside the grid", static_cast<long long>(r));
      }
      out.set(r, c, 1 - out.at(r, c));
    }
    return out;
  }
  if (p.row >= g.rows()) {
    throw Error(ErrorCode::kOutOfBounds, "row outside the grid", static_cast<long long>(p.row));
  }
  if (!p.replacement || p.replacement->size() != g.cols()) {
    throw Error(ErrorCode::kLengthMismatch, "replacement row must match grid width");
  }
  for (std::size_t c = 0; c < g.cols(); ++c) out.set(p.row, c, (*p.replacement)[c]);
  return out;
}

Classification classify(double delta, double threshold) {
  if (std::abs(delta) <= threshold) return Classification::kNeutral;
  return delta < 0 ? Classification::kPositive : Classification::kNegative;
}

double neutrality_threshold(const BitGrid& g) {
  return std::log2(static_cast<double>(g.cell_count()));
}

PerturbationReport information_delta(const complexity::CtmEstimator& est, const BitGrid& g,
                                     const Perturbation& p, int d) {
  PerturbationReport report;
  report.original_bdm = complexity::bdm_grid(est, g, d).value;
  report.perturbed_bdm = complexity::bdm_grid(est, apply_perturbation(g, p), d).value;
  report.delta = report.original_bdm - report.perturbed_bdm;
  report.threshold = neutrality_threshold(g);
  report.classification = classify(report.delta, report.threshold);
  report.block_size = d;
  report.fallback_policy = est.policy();
  report.grid_mode = est.grid_mode();
  return report;
}

std::vector<double> row_impact_profile(const complexity::CtmEstimator& est, const BitGrid& g,
                                       int d, const ImpactMode& mode) {
  if (g.rows() < 2) throw Error(ErrorCode::kGridTooSmall, "profile needs at least two rows");
  const double base = complexity::bdm_grid(est, g, d).value;
  std::mt19937_64 rng(mode.seed);
  std::vector<double> impacts;
  impacts.reserve(g.rows());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::vector<Bit> row(g.cols());
    if (mode.kind == ImpactMode::Kind::kFlipAll) {
      for (std::size_t c = 0; c < g.cols(); ++c) row[c] = 1 - g.at(r, c);
    } else {
      for (auto& b : row) b = static_cast<Bit>(rng() >> 63);
    }
    const BitGrid perturbed =
        apply_perturbation(g, Perturbation::replace_row(r, BitString(std::move(row))));
    impacts.push_back(std::abs(base - complexity::bdm_grid(est, perturbed, d).value));
  }
  return impacts;
}

std::vector<std::size_t> order_by_impact(const std::vector<double>& impacts) {
  std::vector<std::size_t> order(impacts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return impacts[a] > impacts[b]; });
  return order;
}

std::vector<std::size_t> reconstruct_time_order(const complexity::CtmEstimator& est,
                                                const BitGrid& g, int d, const ImpactMode& mode) {
  return order_by_impact(row_impact_profile(est, g, d, mode));
}

}  // namespace alab::aid
