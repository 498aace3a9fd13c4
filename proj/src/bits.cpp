#include "alab/bits.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "alab/error.h"

namespace alab {

namespace {

void check_binary(std::span<const Bit> bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw Error(ErrorCode::kInvalidCharacter, "non-binary element", static_cast<long long>(i));
    }
  }
}

std::strong_ordering compare_bits(std::span<const Bit> a, std::span<const Bit> b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) { check_binary(bits_); }

BitString::BitString(std::size_t length, Bit fill) : bits_(length, fill ? 1 : 0) {}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  return BitString(std::vector<Bit>(bits_.begin() + pos, bits_.begin() + pos + len));
}

BitString BitString::complemented() const {
  std::vector<Bit> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(), [](Bit b) { return Bit(1 - b); });
  return BitString(std::move(out));
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  return compare_bits(a.bits_, b.bits_);
}

BitGrid::BitGrid(std::size_t rows, std::size_t cols, Bit fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill ? 1 : 0) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be >= 1");
}

BitGrid::BitGrid(std::size_t rows, std::size_t cols, std::vector<Bit> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be >= 1");
  if (cells_.size() != rows * cols) {
    throw Error(ErrorCode::kLengthMismatch, "cell count does not match rows x cols");
  }
  check_binary(cells_);
}

BitGrid BitGrid::from_rows(std::span<const BitString> rows) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "no rows");
  const std::size_t cols = rows.front().size();
  std::vector<Bit> cells;
  cells.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::kLengthMismatch, "ragged rows");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return BitGrid(rows.size(), cols, std::move(cells));
}

void BitGrid::set(std::size_t r, std::size_t c, Bit v) { cells_[r * cols_ + c] = v ? 1 : 0; }

BitString BitGrid::row(std::size_t r) const {
  auto s = row_span(r);
  return BitString(std::vector<Bit>(s.begin(), s.end()));
}

BitGrid BitGrid::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  std::vector<Bit> out;
  out.reserve(h * w);
  for (std::size_t r = r0; r < r0 + h; ++r) {
    auto s = row_span(r).subspan(c0, w);
    out.insert(out.end(), s.begin(), s.end());
  }
  return BitGrid(h, w, std::move(out));
}

std::strong_ordering operator<=>(const BitGrid& a, const BitGrid& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return compare_bits(a.cells_, b.cells_);
}

BitString parse_bits(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::kInvalidCharacter,
                  "unexpected character at position " + std::to_string(i),
                  static_cast<long long>(i));
    }
    bits.push_back(static_cast<Bit>(ch - '0'));
  }
  return BitString(std::move(bits));
}

std::string format_bits(std::span<const Bit> bits) {
  std::string out(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = static_cast<char>('0' + bits[i]);
  return out;
}

std::string format_bits(const BitString& s) { return format_bits(s.bits()); }

std::string render_pbm(const BitGrid& grid) {
  std::string out = "P1\n" + std::to_string(grid.cols()) + " " + std::to_string(grid.rows()) + "\n";
  out.reserve(out.size() + grid.cell_count() * 2);
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      if (c) out.push_back(' ');
      out.push_back(static_cast<char>('0' + grid.at(r, c)));
    }
    out.push_back('\n');
  }
  return out;
}

BitGrid parse_pbm(std::string_view text) {
  // Tokenize, dropping '#' comments.
  std::vector<std::string> tokens;
  std::string cur;
  bool comment = false;
  for (char ch : text) {
    if (comment) {
      if (ch == '\n') comment = false;
      continue;
    }
    if (ch == '#') {
      comment = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
      continue;
    } else {
      cur.push_back(ch);
      continue;
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    cur.clear();
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  if (tokens.size() < 3 || tokens[0] != "P1") {
    throw Error(ErrorCode::kBadRecord, "missing P1 header");
  }
  std::size_t cols = 0, rows = 0;
  try {
    cols = std::stoul(tokens[1]);
    rows = std::stoul(tokens[2]);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadRecord, "bad PBM dimensions");
  }
  // Plain PBM allows bits without separators; concatenate the rest.
  std::string payload;
  for (std::size_t i = 3; i < tokens.size(); ++i) payload += tokens[i];
  if (payload.size() != rows * cols) {
    throw Error(ErrorCode::kLengthMismatch, "PBM bit count does not match header");
  }
  BitString bits = parse_bits(payload);
  return BitGrid(rows, cols, std::vector<Bit>(bits.begin(), bits.end()));
}

BitGrid parse_grid(std::string_view text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text.substr(start, 2) == "P1") return parse_pbm(text);
  std::vector<BitString> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    rows.push_back(parse_bits(line));
  }
  return BitGrid::from_rows(rows);
}

}  // namespace alab
