#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "alab/aid.h"
#include "alab/bench.h"
#include "alab/turing.h"

namespace alab::io {

// CTM table text format:
//   key=value header lines, one blank line, then "<object>,<count>" records in
//   canonical order. 1D objects are bit strings; 2D objects are "RxC:<bits>".
void save_ctm_table(const turing::CtmTable& t, std::ostream& sink);
std::string save_ctm_table(const turing::CtmTable& t);
turing::CtmTable load_ctm_table(std::istream& source);
turing::CtmTable load_ctm_table(const std::filesystem::path& path);

// Column-typed result table shared by the CSV and JSON exporters.
using Value = std::variant<long long, double, std::string>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

enum class Format { kCsv, kJson };

/// Doubles are rendered with six digits after the decimal point.
std::string format_number(double v);

void export_results(const ResultTable& table, Format format, std::ostream& sink);
std::string export_results(const ResultTable& table, Format format);

/// Column order: rule, class, the raw measures, then "<measure>_norm".
ResultTable benchmark_table(const std::vector<bench::BenchmarkRow>& rows);
ResultTable report_table(const std::vector<aid::PerturbationReport>& reports);
ResultTable class_stats_table(const bench::ClassStats& stats);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace alab::io
