#include "alab/bench.h"

#include <algorithm>
#include <random>
#include <thread>

#include "alab/eca.h"
#include "alab/error.h"

namespace alab::bench {

WolframClassTable load_class_table(std::istream& in) {
  WolframClassTable table;
  std::array<bool, 256> seen{};
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("source=");
      if (pos != std::string::npos) table.source = line.substr(pos + 7);
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kBadRecord, "expected rule,class", line_no);
    const std::string rule_text = line.substr(0, comma);
    const std::string class_text = line.substr(comma + 1);
    if (rule_text == "rule") continue;  // header
    int rule = -1, cls = -1;
    try {
      std::size_t used = 0;
      rule = std::stoi(rule_text, &used);
      if (used != rule_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kBadRecord, "bad rule number on line " + std::to_string(line_no), line_no);
    }
    if (rule < 0 || rule > 255) throw Error(ErrorCode::kBadRecord, "rule outside [0,255]", rule);
    try {
      std::size_t used = 0;
      cls = std::stoi(class_text, &used);
      if (used != class_text.size()) cls = -1;
    } catch (const std::exception&) {
      cls = -1;
    }
    if (cls < 1 || cls > 4) throw Error(ErrorCode::kBadClass, "class must be 1..4 for rule " + std::to_string(rule), rule);
    if (seen[rule]) throw Error(ErrorCode::kDuplicateRule, "rule listed twice", rule);
    seen[rule] = true;
    table.classes[rule] = cls;
  }
  for (int r = 0; r < 256; ++r) {
    if (!seen[r]) throw Error(ErrorCode::kMissingRule, "no class for rule " + std::to_string(r), r);
  }
  return table;
}

BitString initial_row(const BenchConfig& cfg) {
  if (cfg.width < 1) throw Error(ErrorCode::kInvalidArgument, "width must be >= 1", cfg.width);
  std::vector<Bit> bits(static_cast<std::size_t>(cfg.width), 0);
  if (cfg.initial == InitialCondition::kSingleOne) {
    bits[bits.size() / 2] = 1;
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (auto& b : bits) b = static_cast<Bit>(rng() >> 63);
  }
  return BitString(std::move(bits));
}

namespace {

BenchmarkRow evaluate(int rule_number, const BitString& initial, const BenchConfig& cfg,
                      const complexity::CtmEstimator& est, const WolframClassTable& classes) {
  const auto rule = eca::rule_from_number(rule_number);
  const BitGrid grid = eca::evolve(rule, initial, cfg.steps);
  const BitString flat = grid.flatten();
  const auto simplified = eca::simplify(rule);

  BenchmarkRow row;
  row.rule = rule_number;
  row.wolfram_class = classes[rule_number];
  row.lambda = eca::lambda(rule);
  row.simplified_icons = simplified.icon_count;
  row.simplified_bits = simplified.bits_upper_bound;
  row.lzw_bits = complexity::lzw_compress(flat).bit_length;
  row.entropy = complexity::shannon_block_entropy(flat, cfg.entropy_block);
  row.bdm = complexity::bdm_grid(est, grid, cfg.block_size).value;
  return row;
}

}  // namespace

std::vector<BenchmarkRow> run_benchmark(const BenchConfig& cfg,
                                        const complexity::CtmEstimator& est,
                                        const WolframClassTable& classes) {
  const BitString initial = initial_row(cfg);
  std::vector<BenchmarkRow> rows(256);
  const unsigned threads = std::clamp(cfg.threads, 1u, 256u);
  auto work = [&](unsigned worker) {
    for (int r = static_cast<int>(worker); r < 256; r += static_cast<int>(threads)) {
      rows[static_cast<std::size_t>(r)] = evaluate(r, initial, cfg, est, classes);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  return rows;
}

std::vector<double> measure_column(const std::vector<BenchmarkRow>& rows, const std::string& measure) {
  if (std::find(kMeasures.begin(), kMeasures.end(), measure) == kMeasures.end()) {
    throw Error(ErrorCode::kUnknownMeasure, "unknown measure '" + measure + "'");
  }
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (measure == "lambda") out.push_back(r.lambda);
    else if (measure == "simplified_bits") out.push_back(r.simplified_bits);
    else if (measure == "lzw_bits") out.push_back(static_cast<double>(r.lzw_bits));
    else if (measure == "entropy") out.push_back(r.entropy);
    else out.push_back(r.bdm);
  }
  return out;
}

ClassStats class_stats(const std::vector<BenchmarkRow>& rows, const std::string& measure) {
  const auto raw = measure_column(rows, measure);
  const auto norm = complexity::normalize_scores(raw);
  ClassStats stats;
  stats.measure = measure;
  std::array<double, 4> sums{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int c = rows[i].wolfram_class;
    if (c < 1 || c > 4) throw Error(ErrorCode::kBadClass, "row has no valid class", rows[i].rule);
    ClassSummary& s = stats.classes[c - 1];
    if (s.count == 0) {
      s.min = s.max = norm[i];
    } else {
      s.min = std::min(s.min, norm[i]);
      s.max = std::max(s.max, norm[i]);
    }
    ++s.count;
    sums[c - 1] += norm[i];
  }
  for (int c = 0; c < 4; ++c) {
    stats.classes[c].wolfram_class = c + 1;
    if (stats.classes[c].count) stats.classes[c].mean = sums[c] / static_cast<double>(stats.classes[c].count);
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto& x = stats.classes[a];
      const auto& y = stats.classes[b];
      stats.overlap[a][b] = x.count && y.count && x.min <= y.max && y.min <= x.max;
    }
  }
  return stats;
}

}  // namespace alab::bench
