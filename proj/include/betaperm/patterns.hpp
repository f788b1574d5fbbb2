#pragma once

#include "betaperm/permutation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace betaperm {

/// A classical pattern plus adjacency requirements. `adjacent[j]` (0-based)
/// demands that pattern letters j and j+1 land on neighbouring positions.
struct DashedPattern {
  Permutation base;
  std::vector<bool> adjacent;

  std::size_t size() const noexcept { return base.size(); }
  friend bool operator==(const DashedPattern&, const DashedPattern&) = default;
};

inline constexpr std::size_t kMaxPatternLength = 6;

/// Parses "3-1-4-2", "2-41-3" or "231". Letters within a block are adjacent;
/// a dash separates blocks. Patterns longer than six letters are rejected.
DashedPattern parse_pattern(std::string_view text);
std::string to_string(const DashedPattern& pattern);

/// Classical pattern (no adjacencies).
DashedPattern classical(const Permutation& base);

const DashedPattern& pattern_3_1_4_2();
const DashedPattern& pattern_2_41_3();

using Occurrence = std::vector<std::size_t>;

/// Every occurrence as strictly increasing 0-based positions, in
/// lexicographic order.
std::vector<Occurrence> occurrences(const Permutation& p, const DashedPattern& pattern);

bool avoids(const Permutation& p, const DashedPattern& pattern);

/// Avoids both 3-1-4-2 and 2-41-3.
bool is_avoider(const Permutation& p);

/// Avoids 2413 and the barred pattern 4-1-(3)-5-2: every 3142 occurrence
/// c a d b must see, strictly between a and d in position, a letter whose
/// value lies strictly between b and c.
bool is_nonseparable(const Permutation& p);

} // namespace betaperm
