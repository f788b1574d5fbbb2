#include "betaperm/patterns.hpp"

#include "betaperm/error.hpp"

#include <cctype>

namespace betaperm {

DashedPattern parse_pattern(std::string_view text) {
  std::vector<int> letters;
  std::vector<bool> adjacent;
  bool pending_dash = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == '-') {
      if (letters.empty() || pending_dash) throw ParseError("misplaced dash", i);
      pending_dash = true;
    } else if (std::isdigit(c)) {
      if (!letters.empty()) adjacent.push_back(!pending_dash);
      letters.push_back(c - '0');
      pending_dash = false;
    } else {
      throw ParseError("unexpected character in pattern", i);
    }
  }
  if (pending_dash) throw ParseError("trailing dash", text.size());
  if (letters.empty()) throw InvalidInput("empty pattern");
  if (letters.size() > kMaxPatternLength)
    throw InvalidInput("patterns are limited to " + std::to_string(kMaxPatternLength) + " letters");
  return DashedPattern{Permutation(std::move(letters)), std::move(adjacent)};
}

std::string to_string(const DashedPattern& pattern) {
  std::string out;
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    if (j > 0 && !pattern.adjacent[j - 1]) out += '-';
    out += std::to_string(pattern.base[j]);
  }
  return out;
}

DashedPattern classical(const Permutation& base) {
  return DashedPattern{base, std::vector<bool>(base.empty() ? 0 : base.size() - 1, false)};
}

const DashedPattern& pattern_3_1_4_2() {
  static const DashedPattern p = parse_pattern("3-1-4-2");
  return p;
}

const DashedPattern& pattern_2_41_3() {
  static const DashedPattern p = parse_pattern("2-41-3");
  return p;
}

namespace {

// Depth-first placement of pattern letters; `visit` returns true to stop.
class Matcher {
public:
  Matcher(const Permutation& text, const DashedPattern& pattern)
      : text_(text), pattern_(pattern), chosen_(pattern.size()) {}

  template <typename Visit>
  bool run(Visit&& visit) {
    return place(0, 0, visit);
  }

private:
  template <typename Visit>
  bool place(std::size_t j, std::size_t from, Visit& visit) {
    const std::size_t k = pattern_.size();
    if (j == k) return visit(chosen_);
    if (text_.size() < from + (k - j)) return false;
    std::size_t last = text_.size() - (k - j); // room for the remaining letters
    if (j > 0 && pattern_.adjacent[j - 1]) last = from;
    for (std::size_t pos = from; pos <= last; ++pos) {
      if (!consistent(j, text_[pos])) continue;
      chosen_[j] = pos;
      if (place(j + 1, pos + 1, visit)) return true;
    }
    return false;
  }

  bool consistent(std::size_t j, int value) const {
    const int want = pattern_.base[j];
    for (std::size_t l = 0; l < j; ++l) {
      const bool pattern_less = pattern_.base[l] < want;
      const bool text_less = text_[chosen_[l]] < value;
      if (pattern_less != text_less) return false;
    }
    return true;
  }

  const Permutation& text_;
  const DashedPattern& pattern_;
  std::vector<std::size_t> chosen_;
};

} // namespace

std::vector<Occurrence> occurrences(const Permutation& p, const DashedPattern& pattern) {
  std::vector<Occurrence> out;
  if (pattern.size() == 0 || pattern.size() > p.size()) return out;
  Matcher(p, pattern).run([&](const std::vector<std::size_t>& pos) {
    out.push_back(pos);
    return false;
  });
  return out;
}

bool avoids(const Permutation& p, const DashedPattern& pattern) {
  if (pattern.size() == 0) return false;
  if (pattern.size() > p.size()) return true;
  return !Matcher(p, pattern).run([](const std::vector<std::size_t>&) { return true; });
}

bool is_avoider(const Permutation& p) {
  return avoids(p, pattern_2_41_3()) && avoids(p, pattern_3_1_4_2());
}

bool is_nonseparable(const Permutation& p) {
  static const DashedPattern p2413 = classical(Permutation{2, 4, 1, 3});
  static const DashedPattern p3142 = classical(Permutation{3, 1, 4, 2});
  if (!avoids(p, p2413)) return false;
  if (p.size() < 4) return true;
  // Roles in 4-1-5-2: c (the 4), a (the 1), d (the 5), b (the 2).
  const bool all_extend = !Matcher(p, p3142).run([&](const std::vector<std::size_t>& pos) {
    const int low = p[pos[3]];
    const int high = p[pos[0]];
    for (std::size_t q = pos[1] + 1; q < pos[2]; ++q)
      if (p[q] > low && p[q] < high) return false;
    return true; // this occurrence does not extend: stop
  });
  return all_extend;
}

} // namespace betaperm
