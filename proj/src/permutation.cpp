#include "betaperm/permutation.hpp"

#include "betaperm/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace betaperm {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1)
    throw InvalidInput("word letters must be positive");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("word letters must be distinct");
}

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const auto n = static_cast<int>(letters_.size());
  std::vector<bool> seen(letters_.size() + 1, false);
  for (int x : letters_) {
    if (x < 1 || x > n)
      throw InvalidInput("letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[x])
      throw InvalidInput("duplicate letter " + std::to_string(x));
    seen[x] = true;
  }
}

Permutation Permutation::trusted(std::vector<int> letters) noexcept {
  Permutation p;
  p.letters_ = std::move(letters);
  return p;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return trusted(std::move(v));
}

std::size_t Permutation::position_of(int value) const {
  auto it = std::find(letters_.begin(), letters_.end(), value);
  if (it == letters_.end())
    throw InvalidInput("letter " + std::to_string(value) + " not present");
  return static_cast<std::size_t>(it - letters_.begin());
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

Permutation standardize(std::span<const int> letters) {
  std::vector<std::size_t> order(letters.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return letters[a] < letters[b]; });
  std::vector<int> out(letters.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && letters[order[rank]] == letters[order[rank - 1]])
      throw InvalidInput("cannot standardize a word with repeated letters");
    out[order[rank]] = static_cast<int>(rank + 1);
  }
  return Permutation::trusted(std::move(out));
}

Word unstandardize(const Permutation& p, std::span<const int> values) {
  if (values.size() != p.size())
    throw InvalidInput("value set size " + std::to_string(values.size()) +
                       " does not match permutation length " + std::to_string(p.size()));
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(p.size());
  for (int x : p) out.push_back(sorted[x - 1]);
  return Word(std::move(out));
}

Permutation direct_sum(const Permutation& lhs, const Permutation& rhs) {
  std::vector<int> out(lhs.begin(), lhs.end());
  const int shift = static_cast<int>(lhs.size());
  for (int x : rhs) out.push_back(x + shift);
  return Permutation::trusted(std::move(out));
}

std::vector<std::size_t> component_lengths(const Permutation& p) {
  std::vector<std::size_t> lengths;
  int running_max = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    running_max = std::max(running_max, p[k]);
    if (running_max == static_cast<int>(k + 1)) {
      lengths.push_back(k + 1 - start);
      start = k + 1;
    }
  }
  return lengths;
}

std::vector<Word> components(const Permutation& p) {
  std::vector<Word> out;
  std::size_t start = 0;
  for (std::size_t len : component_lengths(p)) {
    out.emplace_back(std::vector<int>(p.begin() + start, p.begin() + start + len));
    start += len;
  }
  return out;
}

int comp(const Permutation& p) { return static_cast<int>(component_lengths(p).size()); }

int asc(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] < p[i]) ++count;
  return count;
}

int des(const Permutation& p) {
  int count = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] > p[i]) ++count;
  return count;
}

namespace {

template <typename Iter, typename Better>
int count_records(Iter first, Iter last, Better better) {
  int count = 0;
  bool have = false;
  int best = 0;
  for (; first != last; ++first) {
    if (!have || better(*first, best)) {
      best = *first;
      have = true;
      ++count;
    }
  }
  return count;
}

} // namespace

int lmin(const Permutation& p) { return count_records(p.begin(), p.end(), std::less<>{}); }
int lmax(const Permutation& p) { return count_records(p.begin(), p.end(), std::greater<>{}); }
int rmin(const Permutation& p) {
  return count_records(p.vector().rbegin(), p.vector().rend(), std::less<>{});
}
int rmax(const Permutation& p) {
  return count_records(p.vector().rbegin(), p.vector().rend(), std::greater<>{});
}

int ldr(const Permutation& p) {
  if (p.empty()) return 0;
  int run = 1;
  while (static_cast<std::size_t>(run) < p.size() && p[run - 1] > p[run]) ++run;
  return run;
}

int lir(const Permutation& p) {
  if (p.empty()) return 0;
  int run = 1;
  while (static_cast<std::size_t>(run) < p.size() && p[run - 1] < p[run]) ++run;
  return run;
}

PermStats perm_stats(const Permutation& p) {
  return PermStats{comp(p), asc(p), des(p), lmin(p), rmin(p),
                   lmax(p), rmax(p), ldr(p), lir(p)};
}

std::vector<std::size_t> lmax_positions(const Permutation& p) {
  std::vector<std::size_t> out;
  int best = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > best) {
      best = p[i];
      out.push_back(i);
    }
  }
  return out;
}

bool is_indecomposable(const Permutation& p) { return comp(p) == 1; }

Permutation reverse(const Permutation& p) {
  return Permutation::trusted(std::vector<int>(p.vector().rbegin(), p.vector().rend()));
}

Permutation complement(const Permutation& p) {
  const int top = static_cast<int>(p.size()) + 1;
  std::vector<int> out;
  out.reserve(p.size());
  for (int x : p) out.push_back(top - x);
  return Permutation::trusted(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i + 1);
  return Permutation::trusted(std::move(out));
}

Permutation apply(Symmetry op, const Permutation& p) {
  switch (op) {
  case Symmetry::reverse: return reverse(p);
  case Symmetry::complement: return complement(p);
  case Symmetry::inverse: return inverse(p);
  case Symmetry::rc: return reverse(complement(p));
  case Symmetry::ri: return reverse(inverse(p));
  case Symmetry::ci: return complement(inverse(p));
  }
  return p;
}

Symmetry parse_symmetry(std::string_view name) {
  if (name == "r") return Symmetry::reverse;
  if (name == "c") return Symmetry::complement;
  if (name == "i") return Symmetry::inverse;
  if (name == "rc") return Symmetry::rc;
  if (name == "ri") return Symmetry::ri;
  if (name == "ci") return Symmetry::ci;
  throw InvalidInput("unknown symmetry '" + std::string(name) + "'");
}

std::string_view name_of(Symmetry op) {
  switch (op) {
  case Symmetry::reverse: return "r";
  case Symmetry::complement: return "c";
  case Symmetry::inverse: return "i";
  case Symmetry::rc: return "rc";
  case Symmetry::ri: return "ri";
  case Symmetry::ci: return "ci";
  }
  return "?";
}

namespace {

template <typename Range>
std::string join_letters(const Range& r) {
  std::string out;
  for (int x : r) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

} // namespace

std::string to_string(const Permutation& p) { return join_letters(p); }
std::string to_string(const Word& w) { return join_letters(w); }

Permutation parse_permutation(std::string_view text) {
  std::vector<int> letters;
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isspace(c); });
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (!std::isdigit(c)) throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    std::size_t j = i + 1;
    if (spaced)
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{}) throw ParseError("letter out of range", i);
    letters.push_back(value);
    i = j;
  }
  return Permutation(std::move(letters));
}

Permutation remove_letter(const Permutation& p, int value) {
  std::vector<int> out;
  out.reserve(p.size());
  for (int x : p) {
    if (x == value) continue;
    out.push_back(x > value ? x - 1 : x);
  }
  if (out.size() == p.size())
    throw InvalidInput("letter " + std::to_string(value) + " not present");
  return Permutation::trusted(std::move(out));
}

Permutation pattern_at(const Permutation& p, std::span<const std::size_t> positions) {
  std::vector<int> letters;
  letters.reserve(positions.size());
  for (auto pos : positions) letters.push_back(p[pos]);
  return standardize(letters);
}

} // namespace betaperm
