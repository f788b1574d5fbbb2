#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betaperm {

/// A finite sequence of pairwise distinct positive integers.
class Word {
public:
  Word() = default;
  /// Throws InvalidInput on duplicate or nonpositive letters.
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::span<const int> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<int> letters_;
};

/// A permutation of 1..n in one-line notation. The empty permutation is
/// the default-constructed value.
class Permutation {
public:
  Permutation() = default;
  /// Throws InvalidInput unless `letters` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> letters);
  Permutation(std::initializer_list<int> letters)
      : Permutation(std::vector<int>(letters)) {}

  /// Skips validation; the caller guarantees the letters form 1..n.
  static Permutation trusted(std::vector<int> letters) noexcept;
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::span<const int> letters() const noexcept { return letters_; }
  const std::vector<int>& vector() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Position of letter `value` (1-based value, 0-based position).
  std::size_t position_of(int value) const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic order on the one-line notation.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> letters_;
};

/// Statistics of a permutation. All fields are zero for the empty permutation.
struct PermStats {
  int comp = 0;
  int asc = 0;
  int des = 0;
  int lmin = 0;
  int rmin = 0;
  int lmax = 0;
  int rmax = 0;
  int ldr = 0;
  int lir = 0;

  friend bool operator==(const PermStats&, const PermStats&) = default;
};

Permutation standardize(std::span<const int> letters);
inline Permutation standardize(const Word& w) { return standardize(w.letters()); }

/// Relabels `p` with the values of `values` (any order; sorted internally).
Word unstandardize(const Permutation& p, std::span<const int> values);

Permutation direct_sum(const Permutation& lhs, const Permutation& rhs);

/// The factors of `p` between consecutive component boundaries. Each factor
/// keeps its original letters.
std::vector<Word> components(const Permutation& p);

/// Lengths of the components, left to right.
std::vector<std::size_t> component_lengths(const Permutation& p);

int comp(const Permutation& p);
int asc(const Permutation& p);
int des(const Permutation& p);
int lmin(const Permutation& p);
int rmin(const Permutation& p);
int lmax(const Permutation& p);
int rmax(const Permutation& p);
int ldr(const Permutation& p);
int lir(const Permutation& p);
PermStats perm_stats(const Permutation& p);

/// Positions (0-based) of the left-to-right maxima.
std::vector<std::size_t> lmax_positions(const Permutation& p);

bool is_indecomposable(const Permutation& p);

enum class Symmetry { reverse, complement, inverse, rc, ri, ci };

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation inverse(const Permutation& p);
/// rc = reverse after complement, ri = reverse after inverse,
/// ci = complement after inverse.
Permutation apply(Symmetry op, const Permutation& p);
Symmetry parse_symmetry(std::string_view name);
std::string_view name_of(Symmetry op);

/// Space separated letters; the empty permutation prints as "".
std::string to_string(const Permutation& p);
std::string to_string(const Word& w);

/// Accepts space separated letters, or a run of single digits with no
/// separators ("523147896"). Empty or blank text is the empty permutation.
Permutation parse_permutation(std::string_view text);

/// Removes the letter `value` and standardizes what remains.
Permutation remove_letter(const Permutation& p, int value);

/// Sub-permutation at the given 0-based positions, standardized.
Permutation pattern_at(const Permutation& p, std::span<const std::size_t> positions);

} // namespace betaperm
