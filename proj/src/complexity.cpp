#include "alab/complexity.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "alab/error.h"

namespace alab::complexity {

std::string to_string(FallbackPolicy p) {
  return p == FallbackPolicy::kError ? "error" : "max_plus_one";
}

std::string to_string(GridMode m) { return m == GridMode::kDirect ? "direct" : "row-flatten"; }

CtmEstimator::CtmEstimator(std::shared_ptr<const turing::CtmTable> table, FallbackPolicy policy,
                           GridMode grid_mode)
    : table_(std::move(table)), policy_(policy), grid_mode_(grid_mode) {
  if (!table_) throw Error(ErrorCode::kInvalidArgument, "estimator needs a table");
  if (grid_mode_ == GridMode::kRowFlatten && table_->dimensionality != turing::Dimensionality::k1D) {
    throw Error(ErrorCode::kInvalidArgument, "row-flatten mode needs a 1D table");
  }
  const double total = static_cast<double>(table_->total_halting);
  for (const auto& [obj, n] : table_->counts) {
    if (n == 0) continue;
    const double v = -std::log2(static_cast<double>(n) / total);
    values_.emplace(obj, v);
    max_value_ = std::max(max_value_, v);
  }
}

CtmEstimator::Lookup CtmEstimator::lookup_object(const BitGrid& object) const {
  if (auto it = values_.find(object); it != values_.end()) return {it->second, false};
  if (policy_ == FallbackPolicy::kError) {
    throw Error(ErrorCode::kMissingString, "object not in CTM table");
  }
  return {max_value_ + 1.0, true};
}

CtmEstimator::Lookup CtmEstimator::lookup(const BitString& s) const {
  if (s.empty()) throw Error(ErrorCode::kEmptyString, "CTM of the empty string is undefined");
  return lookup_object(turing::as_row(s));
}

CtmEstimator::Lookup CtmEstimator::lookup_block(const BitGrid& block) const {
  if (grid_mode_ == GridMode::kDirect) return lookup_object(block);
  Lookup total;
  for (std::size_t r = 0; r < block.rows(); ++r) {
    Lookup row = lookup_object(block.block(r, 0, 1, block.cols()));
    total.bits += row.bits;
    total.fallback = total.fallback || row.fallback;
  }
  return total;
}

double ctm_value(const CtmEstimator& est, const BitString& s) { return est.lookup(s).bits; }

double bdm_from_census(const CtmEstimator& est,
                       const std::vector<std::pair<BitGrid, std::uint64_t>>& census,
                       std::size_t* fallback_blocks) {
  double value = 0.0;
  std::size_t fallbacks = 0;
  for (const auto& [block, n] : census) {
    const auto k = est.lookup_block(block);
    fallbacks += k.fallback;
    value += k.bits + std::log2(static_cast<double>(n));
  }
  if (fallback_blocks) *fallback_blocks = fallbacks;
  return value;
}

namespace {

BdmReport finish(const CtmEstimator& est, std::map<BitGrid, std::uint64_t>&& census, int d) {
  BdmReport report;
  report.block_size = d;
  report.fallback_policy = est.policy();
  report.grid_mode = est.grid_mode();
  report.block_census.assign(census.begin(), census.end());
  report.value = bdm_from_census(est, report.block_census, &report.fallback_blocks);
  return report;
}

}  // namespace

BdmReport bdm_string(const CtmEstimator& est, const BitString& s, int block_len) {
  if (block_len < 1) throw Error(ErrorCode::kInvalidArgument, "block length must be >= 1", block_len);
  if (s.empty()) throw Error(ErrorCode::kEmptyString, "BDM of the empty string is undefined");
  const auto len = static_cast<std::size_t>(block_len);
  if (s.size() < len) throw Error(ErrorCode::kAllDropped, "string shorter than one block", block_len);
  std::map<BitGrid, std::uint64_t> census;
  const std::size_t blocks = s.size() / len;
  for (std::size_t b = 0; b < blocks; ++b) {
    auto bits = s.bits().subspan(b * len, len);
    ++census[BitGrid(1, len, std::vector<Bit>(bits.begin(), bits.end()))];
  }
  BdmReport report = finish(est, std::move(census), block_len);
  report.dropped_cells = report.dropped_cols = s.size() - blocks * len;
  return report;
}

BdmReport bdm_grid(const CtmEstimator& est, const BitGrid& g, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "block size must be >= 1", d);
  const auto n = static_cast<std::size_t>(d);
  if (g.rows() < n || g.cols() < n) {
    throw Error(ErrorCode::kGridTooSmall, "grid smaller than one block", d);
  }
  const std::size_t br = g.rows() / n;
  const std::size_t bc = g.cols() / n;
  std::map<BitGrid, std::uint64_t> census;
  for (std::size_t i = 0; i < br; ++i) {
    for (std::size_t j = 0; j < bc; ++j) ++census[g.block(i * n, j * n, n, n)];
  }
  BdmReport report = finish(est, std::move(census), d);
  report.dropped_rows = g.rows() - br * n;
  report.dropped_cols = g.cols() - bc * n;
  report.dropped_cells = g.cell_count() - br * bc * n * n;
  return report;
}

double shannon_block_entropy(const BitString& s, int block_len) {
  if (block_len < 1) throw Error(ErrorCode::kInvalidArgument, "block length must be >= 1", block_len);
  const auto len = static_cast<std::size_t>(block_len);
  const std::size_t blocks = s.size() / len;
  if (blocks == 0) throw Error(ErrorCode::kAllDropped, "no complete block", block_len);
  std::map<BitString, std::uint64_t> freq;
  for (std::size_t b = 0; b < blocks; ++b) ++freq[s.substr(b * len, len)];
  double h = 0.0;
  for (const auto& [block, n] : freq) {
    const double p = static_cast<double>(n) / static_cast<double>(blocks);
    h -= p * std::log2(p);
  }
  return h == 0.0 ? 0.0 : h;  // no negative zero
}

LzwResult lzw_compress(const BitString& s) {
  LzwResult out;
  if (s.empty()) return out;
  // (prefix code, next symbol) -> code
  std::unordered_map<std::uint64_t, std::uint32_t> dict;
  std::uint32_t next_code = 2;
  auto width = [](std::uint64_t dict_size) -> std::uint64_t {
    return std::max<std::uint64_t>(1, std::bit_width(dict_size - 1));
  };
  auto key = [](std::uint32_t prefix, Bit k) { return (std::uint64_t{prefix} << 1) | k; };

  std::uint32_t w = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Bit k = s[i];
    if (auto it = dict.find(key(w, k)); it != dict.end()) {
      w = it->second;
      continue;
    }
    out.codes.push_back(w);
    out.bit_length += width(next_code);
    dict.emplace(key(w, k), next_code++);
    w = k;
  }
  out.codes.push_back(w);
  out.bit_length += width(next_code);
  return out;
}

std::vector<double> normalize_scores(const std::vector<double>& scores) {
  if (scores.empty()) throw Error(ErrorCode::kEmptyInput, "no scores to normalize");
  const double max = *std::max_element(scores.begin(), scores.end());
  if (!(max > 0.0)) throw Error(ErrorCode::kNonPositiveMax, "maximum score must be positive");
  std::vector<double> out(scores.size());
  std::transform(scores.begin(), scores.end(), out.begin(), [max](double v) { return v / max; });
  return out;
}

std::map<std::string, double> normalize_scores(const std::map<std::string, double>& scores) {
  std::vector<double> values;
  for (const auto& [k, v] : scores) values.push_back(v);
  const auto norm = normalize_scores(values);
  std::map<std::string, double> out;
  std::size_t i = 0;
  for (const auto& [k, v] : scores) out.emplace(k, norm[i++]);
  return out;
}

}  // namespace alab::complexity
