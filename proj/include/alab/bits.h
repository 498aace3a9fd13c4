#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alab {

using Bit = std::uint8_t;

// Ordered binary sequence. Every element is 0 or 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<Bit> bits);
  BitString(std::size_t length, Bit fill);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  std::span<const Bit> bits() const noexcept { return bits_; }
  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  BitString substr(std::size_t pos, std::size_t len) const;
  BitString complemented() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  // Canonical order: shorter first, then by binary value.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::vector<Bit> bits_;
};

// Dense row-major binary matrix with rows, cols >= 1.
class BitGrid {
 public:
  BitGrid(std::size_t rows, std::size_t cols, Bit fill = 0);
  BitGrid(std::size_t rows, std::size_t cols, std::vector<Bit> cells);
  static BitGrid from_rows(std::span<const BitString> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }

  Bit at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Bit v);
  std::span<const Bit> cells() const noexcept { return cells_; }
  std::span<const Bit> row_span(std::size_t r) const {
    return std::span<const Bit>(cells_).subspan(r * cols_, cols_);
  }
  BitString row(std::size_t r) const;
  BitString flatten() const { return BitString(cells_); }
  BitGrid block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;

  friend bool operator==(const BitGrid&, const BitGrid&) = default;
  // Canonical order: (rows, cols, row-major value).
  friend std::strong_ordering operator<=>(const BitGrid& a, const BitGrid& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Bit> cells_;
};

/// Parses a '0'/'1' text into a BitString. Throws InvalidCharacter with the
/// offending position.
BitString parse_bits(std::string_view text);
std::string format_bits(const BitString& s);
std::string format_bits(std::span<const Bit> bits);

/// ASCII PBM ("P1"), 1 = black.
std::string render_pbm(const BitGrid& grid);
BitGrid parse_pbm(std::string_view text);

/// Reads a grid from either PBM text or newline-separated bit rows.
BitGrid parse_grid(std::string_view text);

}  // namespace alab
