#include "alab/io.h"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "alab/error.h"

namespace alab::io {

namespace {

constexpr const char* kKnownKeys[] = {"schema_version", "dimensionality", "states",  "symbols",
                                      "cutoff",         "total_machines", "total_halting",
                                      "protocol",       "exhaustive",     "censored", "complement_completed", "seed",
                                      "ranges"};

bool is_known_key(const std::string& key) {
  for (const char* k : kKnownKeys) {
    if (key == k) return true;
  }
  return false;
}

std::string format_ranges(const std::vector<turing::IndexRange>& ranges) {
  std::string out;
  for (const auto& r : ranges) {
    if (!out.empty()) out += ',';
    out += std::to_string(r.lo) + ".." + std::to_string(r.hi);
  }
  return out;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kSchemaMismatch, "bad value for " + what + ": '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kSchemaMismatch, "value out of range for " + what);
  }
}

bool parse_bool(const std::string& text, const std::string& what) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(ErrorCode::kSchemaMismatch, "bad boolean for " + what + ": '" + text + "'");
}

std::vector<turing::IndexRange> parse_ranges(const std::string& text) {
  std::vector<turing::IndexRange> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::kSchemaMismatch, "bad range '" + item + "'");
    out.push_back({parse_u64(item.substr(0, dots), "range"), parse_u64(item.substr(dots + 2), "range")});
  }
  return out;
}

std::string object_text(const BitGrid& g, turing::Dimensionality dim) {
  if (dim == turing::Dimensionality::k1D) return format_bits(g.cells());
  return std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + ":" + format_bits(g.cells());
}

}  // namespace

void save_ctm_table(const turing::CtmTable& t, std::ostream& sink) {
  sink << "schema_version=" << t.schema_version << '\n'
       << "dimensionality=" << (t.dimensionality == turing::Dimensionality::k1D ? "1D" : "2D") << '\n'
       << "states=" << t.states << '\n'
       << "symbols=" << t.symbols << '\n'
       << "cutoff=" << t.cutoff << '\n'
       << "total_machines=" << t.total_machines << '\n'
       << "total_halting=" << t.total_halting << '\n'
       << "protocol=" << t.protocol << '\n'
       << "exhaustive=" << (t.exhaustive ? "true" : "false") << '\n'
       << "censored=" << (t.censored ? "true" : "false") << '\n'
       << "complement_completed=" << (t.complement_completed ? "true" : "false") << '\n';
  if (t.seed) sink << "seed=" << *t.seed << '\n';
  sink << "ranges=" << format_ranges(t.ranges) << '\n';
  for (const auto& [k, v] : t.extra) sink << k << '=' << v << '\n';
  sink << '\n';
  for (const auto& [obj, n] : t.counts) sink << object_text(obj, t.dimensionality) << ',' << n << '\n';
  if (!sink) throw Error(ErrorCode::kSinkFailure, "failed writing CTM table");
}

std::string save_ctm_table(const turing::CtmTable& t) {
  std::ostringstream out;
  save_ctm_table(t, out);
  return out.str();
}

turing::CtmTable load_ctm_table(std::istream& source) {
  std::map<std::string, std::string> header;
  std::string line;
  long long line_no = 0;
  bool blank_seen = false;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      blank_seen = true;
      break;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kSchemaMismatch, "header line without '=' at line " + std::to_string(line_no), line_no);
    }
    header[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (!blank_seen && header.empty()) throw Error(ErrorCode::kSchemaMismatch, "empty table file");

  auto require = [&](const std::string& key) -> const std::string& {
    auto it = header.find(key);
    if (it == header.end()) throw Error(ErrorCode::kSchemaMismatch, "missing header key '" + key + "'");
    return it->second;
  };

  turing::CtmTable t;
  t.schema_version = static_cast<int>(parse_u64(require("schema_version"), "schema_version"));
  if (t.schema_version != turing::kSchemaVersion) {
    throw Error(ErrorCode::kSchemaMismatch, "unsupported schema version " + std::to_string(t.schema_version));
  }
  const std::string& dim = require("dimensionality");
  if (dim == "1D") t.dimensionality = turing::Dimensionality::k1D;
  else if (dim == "2D") t.dimensionality = turing::Dimensionality::k2D;
  else throw Error(ErrorCode::kSchemaMismatch, "bad dimensionality '" + dim + "'");
  t.states = static_cast<int>(parse_u64(require("states"), "states"));
  t.symbols = static_cast<int>(parse_u64(require("symbols"), "symbols"));
  if (t.symbols != 2) throw Error(ErrorCode::kSchemaMismatch, "only 2-symbol tables are supported");
  t.cutoff = parse_u64(require("cutoff"), "cutoff");
  t.total_machines = parse_u64(require("total_machines"), "total_machines");
  t.total_halting = parse_u64(require("total_halting"), "total_halting");
  t.protocol = require("protocol");
  t.exhaustive = parse_bool(require("exhaustive"), "exhaustive");
  if (auto it = header.find("censored"); it != header.end()) t.censored = parse_bool(it->second, "censored");
  if (auto it = header.find("complement_completed"); it != header.end()) {
    t.complement_completed = parse_bool(it->second, "complement_completed");
  }
  if (auto it = header.find("seed"); it != header.end()) t.seed = parse_u64(it->second, "seed");
  if (auto it = header.find("ranges"); it != header.end()) t.ranges = parse_ranges(it->second);
  for (const auto& [k, v] : header) {
    if (!is_known_key(k)) t.extra.emplace(k, v);
  }

  std::uint64_t sum = 0;
  const BitGrid* previous = nullptr;
  while (std::getline(source, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos || comma == 0) {
      throw Error(ErrorCode::kBadRecord, "malformed record at line " + std::to_string(line_no), line_no);
    }
    std::string object = line.substr(0, comma);
    std::size_t rows = 1, cols = 0;
    if (t.dimensionality == turing::Dimensionality::k2D) {
      const auto colon = object.find(':');
      const auto x = object.find('x');
      if (colon == std::string::npos || x == std::string::npos || x > colon) {
        throw Error(ErrorCode::kBadRecord, "2D record needs RxC: prefix at line " + std::to_string(line_no), line_no);
      }
      try {
        rows = std::stoul(object.substr(0, x));
        cols = std::stoul(object.substr(x + 1, colon - x - 1));
      } catch (const std::exception&) {
        throw Error(ErrorCode::kBadRecord, "bad 2D dimensions at line " + std::to_string(line_no), line_no);
      }
      object = object.substr(colon + 1);
    }
    BitString bits;
    try {
      bits = parse_bits(object);
    } catch (const Error&) {
      throw Error(ErrorCode::kBadRecord, "non-binary object at line " + std::to_string(line_no), line_no);
    }
    if (t.dimensionality == turing::Dimensionality::k1D) cols = bits.size();
    if (bits.empty() || rows == 0 || cols == 0 || bits.size() != rows * cols) {
      throw Error(ErrorCode::kBadRecord, "object size mismatch at line " + std::to_string(line_no), line_no);
    }
    std::uint64_t count = 0;
    try {
      count = parse_u64(line.substr(comma + 1), "count");
    } catch (const Error&) {
      throw Error(ErrorCode::kBadRecord, "bad count at line " + std::to_string(line_no), line_no);
    }
    if (count == 0) throw Error(ErrorCode::kBadRecord, "zero count at line " + std::to_string(line_no), line_no);
    BitGrid key(rows, cols, std::vector<Bit>(bits.begin(), bits.end()));
    if (previous && !(*previous < key)) {
      throw Error(ErrorCode::kBadRecord, "records out of canonical order at line " + std::to_string(line_no), line_no);
    }
    if (__builtin_add_overflow(sum, count, &sum)) {
      throw Error(ErrorCode::kChecksumMismatch, "count sum overflows");
    }
    auto [it, inserted] = t.counts.emplace(std::move(key), count);
    previous = &it->first;
  }
  if (sum != t.total_halting) {
    throw Error(ErrorCode::kChecksumMismatch,
                "record counts sum to " + std::to_string(sum) + " but header says " + std::to_string(t.total_halting));
  }
  if (t.total_halting > t.total_machines) {
    throw Error(ErrorCode::kChecksumMismatch, "more halting machines than machines");
  }
  return t;
}

turing::CtmTable load_ctm_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  return load_ctm_table(in);
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

std::string render(const Value& v, bool quote_strings) {
  if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  const auto& s = std::get<std::string>(v);
  if (!quote_strings) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

void export_results(const ResultTable& table, Format format, std::ostream& sink) {
  if (table.rows.empty()) throw Error(ErrorCode::kEmptyInput, "nothing to export");
  if (format == Format::kCsv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) sink << (c ? "," : "") << table.columns[c];
    sink << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) sink << (c ? "," : "") << render(row[c], false);
      sink << '\n';
    }
  } else {
    sink << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      sink << "  {";
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        sink << (c ? ", " : "") << '"' << table.columns[c] << "\": " << render(table.rows[r][c], true);
      }
      sink << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    sink << "]\n";
  }
  if (!sink) throw Error(ErrorCode::kSinkFailure, "failed writing results");
}

std::string export_results(const ResultTable& table, Format format) {
  std::ostringstream out;
  export_results(table, format, out);
  return out.str();
}

ResultTable benchmark_table(const std::vector<bench::BenchmarkRow>& rows) {
  ResultTable t;
  t.columns = {"rule", "class", "lambda", "simplified_icons", "simplified_bits", "lzw_bits", "entropy", "bdm"};
  if (rows.empty()) return t;
  std::vector<std::vector<double>> norms;
  for (const char* m : bench::kMeasures) {
    t.columns.push_back(std::string(m) + "_norm");
    norms.push_back(complexity::normalize_scores(bench::measure_column(rows, m)));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::vector<Value> row = {static_cast<long long>(r.rule), static_cast<long long>(r.wolfram_class),
                              r.lambda, static_cast<long long>(r.simplified_icons), r.simplified_bits,
                              static_cast<long long>(r.lzw_bits), r.entropy, r.bdm};
    for (const auto& n : norms) row.push_back(n[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

ResultTable report_table(const std::vector<aid::PerturbationReport>& reports) {
  ResultTable t;
  t.columns = {"delta", "threshold", "classification", "original_bdm", "perturbed_bdm",
               "block_size", "fallback_policy", "grid_mode"};
  for (const auto& r : reports) {
    t.rows.push_back({r.delta, r.threshold, aid::to_string(r.classification), r.original_bdm,
                      r.perturbed_bdm, static_cast<long long>(r.block_size),
                      complexity::to_string(r.fallback_policy), complexity::to_string(r.grid_mode)});
  }
  return t;
}

ResultTable class_stats_table(const bench::ClassStats& stats) {
  ResultTable t;
  t.columns = {"measure", "class", "count", "mean", "min", "max",
               "overlaps_1", "overlaps_2", "overlaps_3", "overlaps_4"};
  for (int c = 1; c <= 4; ++c) {
    const auto& s = stats.of(c);
    std::vector<Value> row = {stats.measure, static_cast<long long>(c), static_cast<long long>(s.count),
                              s.mean, s.min, s.max};
    for (int o = 1; o <= 4; ++o) row.push_back(static_cast<long long>(stats.overlaps(c, o)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kSinkFailure, "cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw Error(ErrorCode::kSinkFailure, "failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::kSinkFailure, "cannot rename onto " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace alab::io
