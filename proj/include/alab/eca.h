#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "alab/bits.h"

namespace alab::eca {

// Elementary CA rule under Wolfram numbering: neighborhood (a,b,c) maps to
// bit 4a+2b+c of the rule number.
class Rule {
 public:
  static Rule from_number(int n);

  int number() const noexcept { return number_; }
  Bit output(int left, int center, int right) const {
    return static_cast<Bit>((number_ >> (left * 4 + center * 2 + right)) & 1);
  }
  Bit output(int neighborhood) const { return static_cast<Bit>((number_ >> neighborhood) & 1); }

  // Left-right reflection: (a,b,c) -> (c,b,a).
  Rule mirrored() const;
  // Color complement: f'(x) = 1 - f(~x).
  Rule complemented() const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  explicit Rule(int n) : number_(n) {}
  int number_;
};

Rule rule_from_number(int n);

/// Space-time evolution with cyclic boundary; returns steps+1 rows, row 0 is
/// the initial condition.
BitGrid evolve(const Rule& rule, const BitString& initial, int steps);

/// Cells with index < split update under `left`, the rest under `right`.
/// Neighborhoods read raw cell values across the split; edges wrap.
BitGrid interact(const Rule& left, const Rule& right, const BitString& initial, int steps,
                 int split);

/// Langton's lambda for a two-state ECA: fraction of neighborhoods mapped to 1.
double lambda(const Rule& rule);

enum class Cell : std::uint8_t { kZero = 0, kOne = 1, kWild = 2 };

struct Icon {
  std::array<Cell, 3> pattern;
  Bit output;

  bool matches(int neighborhood) const;
  // Bitmask over the 8 neighborhoods this pattern matches.
  std::uint8_t match_mask() const;
  int specified_cells() const;
  std::string to_string() const;  // e.g. "1*0->1"

  friend bool operator==(const Icon&, const Icon&) = default;
  friend auto operator<=>(const Icon&, const Icon&) = default;
};

struct SimplifiedRule {
  int rule_number = 0;
  std::vector<Icon> icons;  // output-1 cover first, then output-0 cover
  int ones_icons = 0;
  int zeros_icons = 0;
  int icon_count = 0;
  int specified_cells = 0;
  double bits_upper_bound = 0.0;
};

/// Bits per wildcard icon: three ternary cells plus one output bit.
double icon_bits();

/// Minimum two-sided wildcard cover. Cost order: fewest icons, then fewest
/// specified cells, then lexicographically smallest icon set.
SimplifiedRule simplify(const Rule& rule);

double simplified_bits(const SimplifiedRule& s);

/// True if the icon set reproduces the rule's full truth table.
bool cover_reproduces(const SimplifiedRule& s, const Rule& rule);

}  // namespace alab::eca
