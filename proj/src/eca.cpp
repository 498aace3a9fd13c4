#include "alab/eca.h"

#include <bit>
#include <cmath>
#include <limits>

#include "alab/error.h"

namespace alab::eca {

Rule Rule::from_number(int n) {
  if (n < 0 || n > 255) {
    throw Error(ErrorCode::kOutOfRange, "rule number must be in [0,255], got " + std::to_string(n), n);
  }
  return Rule(n);
}

Rule Rule::mirrored() const {
  int n = 0;
  for (int x = 0; x < 8; ++x) {
    const int reflected = ((x & 1) << 2) | (x & 2) | ((x >> 2) & 1);
    n |= output(reflected) << x;
  }
  return Rule(n);
}

Rule Rule::complemented() const {
  int n = 0;
  for (int x = 0; x < 8; ++x) n |= (1 - output(7 - x)) << x;
  return Rule(n);
}

Rule rule_from_number(int n) { return Rule::from_number(n); }

namespace {

template <typename RuleOf>
BitGrid run(const BitString& initial, int steps, RuleOf&& rule_of) {
  if (initial.empty()) throw Error(ErrorCode::kEmptyInitial, "initial condition is empty");
  if (steps < 0) throw Error(ErrorCode::kInvalidArgument, "steps must be >= 0", steps);
  const std::size_t width = initial.size();
  std::vector<Bit> cells;
  cells.reserve(width * (static_cast<std::size_t>(steps) + 1));
  cells.insert(cells.end(), initial.begin(), initial.end());
  for (int t = 0; t < steps; ++t) {
    const std::size_t base = static_cast<std::size_t>(t) * width;
    for (std::size_t i = 0; i < width; ++i) {
      const Bit l = cells[base + (i + width - 1) % width];
      const Bit c = cells[base + i];
      const Bit r = cells[base + (i + 1) % width];
      cells.push_back(rule_of(i).output(l, c, r));
    }
  }
  return BitGrid(static_cast<std::size_t>(steps) + 1, width, std::move(cells));
}

}  // namespace

BitGrid evolve(const Rule& rule, const BitString& initial, int steps) {
  return run(initial, steps, [&](std::size_t) -> const Rule& { return rule; });
}

BitGrid interact(const Rule& left, const Rule& right, const BitString& initial, int steps,
                 int split) {
  if (split < 0 || static_cast<std::size_t>(split) > initial.size()) {
    throw Error(ErrorCode::kSplitOutOfRange, "split must be within [0, width]", split);
  }
  const auto s = static_cast<std::size_t>(split);
  return run(initial, steps,
             [&](std::size_t i) -> const Rule& { return i < s ? left : right; });
}

double lambda(const Rule& rule) {
  return std::popcount(static_cast<unsigned>(rule.number())) / 8.0;
}

bool Icon::matches(int neighborhood) const {
  for (int k = 0; k < 3; ++k) {
    const int bit = (neighborhood >> (2 - k)) & 1;
    if (pattern[k] != Cell::kWild && static_cast<int>(pattern[k]) != bit) return false;
  }
  return true;
}

std::uint8_t Icon::match_mask() const {
  std::uint8_t mask = 0;
  for (int x = 0; x < 8; ++x) {
    if (matches(x)) mask |= static_cast<std::uint8_t>(1u << x);
  }
  return mask;
}

int Icon::specified_cells() const {
  int n = 0;
  for (Cell c : pattern) n += c != Cell::kWild;
  return n;
}

std::string Icon::to_string() const {
  std::string s;
  for (Cell c : pattern) s.push_back(c == Cell::kWild ? '*' : static_cast<char>('0' + static_cast<int>(c)));
  s += "->";
  s.push_back(static_cast<char>('0' + output));
  return s;
}

double icon_bits() { return 3.0 * std::log2(3.0) + 1.0; }

namespace {

// All 27 patterns in lexicographic order (0 < 1 < WILD per cell).
std::array<Icon, 27> all_patterns(Bit output) {
  std::array<Icon, 27> out{};
  int k = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        out[k++] = Icon{{static_cast<Cell>(a), static_cast<Cell>(b), static_cast<Cell>(c)}, output};
  return out;
}

// Minimum-cost cover of `target` using icons whose match set lies inside it.
// Combinations are visited in lexicographic order per size, so the first
// cover with the lowest specified-cell total is also lexicographically least.
std::vector<Icon> min_cover(std::uint8_t target, Bit output) {
  if (target == 0) return {};
  std::vector<Icon> admissible;
  std::vector<std::uint8_t> masks;
  for (const Icon& icon : all_patterns(output)) {
    const std::uint8_t m = icon.match_mask();
    if ((m & ~target) == 0) {
      admissible.push_back(icon);
      masks.push_back(m);
    }
  }
  const int n = static_cast<int>(admissible.size());
  for (int k = 1; k <= 8 && k <= n; ++k) {
    std::vector<int> idx(k);
    std::vector<int> best;
    int best_cells = std::numeric_limits<int>::max();
    // Depth-first combination walk, pruned on specified-cell cost.
    auto walk = [&](auto&& self, int depth, int start, std::uint8_t covered, int cells) -> void {
      if (cells >= best_cells) return;
      if (depth == k) {
        if (covered == target) {
          best_cells = cells;
          best = idx;
        }
        return;
      }
      for (int i = start; i <= n - (k - depth); ++i) {
        idx[depth] = i;
        self(self, depth + 1, i + 1, static_cast<std::uint8_t>(covered | masks[i]),
             cells + admissible[i].specified_cells());
      }
    };
    walk(walk, 0, 0, 0, 0);
    if (!best.empty()) {
      std::vector<Icon> cover;
      for (int i : best) cover.push_back(admissible[i]);
      return cover;
    }
  }
  // Unreachable: singleton icons always cover.
  throw Error(ErrorCode::kInvalidArgument, "no cover found");
}

}  // namespace

SimplifiedRule simplify(const Rule& rule) {
  std::uint8_t ones = 0;
  for (int x = 0; x < 8; ++x) {
    if (rule.output(x)) ones |= static_cast<std::uint8_t>(1u << x);
  }
  const auto zeros = static_cast<std::uint8_t>(~ones);

  SimplifiedRule s;
  s.rule_number = rule.number();
  auto one_cover = min_cover(ones, 1);
  auto zero_cover = min_cover(zeros, 0);
  s.ones_icons = static_cast<int>(one_cover.size());
  s.zeros_icons = static_cast<int>(zero_cover.size());
  s.icons = std::move(one_cover);
  s.icons.insert(s.icons.end(), zero_cover.begin(), zero_cover.end());
  s.icon_count = static_cast<int>(s.icons.size());
  for (const Icon& icon : s.icons) s.specified_cells += icon.specified_cells();
  s.bits_upper_bound = simplified_bits(s);
  return s;
}

double simplified_bits(const SimplifiedRule& s) { return s.icon_count * icon_bits(); }

bool cover_reproduces(const SimplifiedRule& s, const Rule& rule) {
  for (int x = 0; x < 8; ++x) {
    bool hit = false;
    for (const Icon& icon : s.icons) {
      if (!icon.matches(x)) continue;
      if (icon.output != rule.output(x)) return false;
      hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace alab::eca
