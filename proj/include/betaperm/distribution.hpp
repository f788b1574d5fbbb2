#pragma once

#include "betaperm/beta_tree.hpp"
#include "betaperm/enumeration.hpp"
#include "betaperm/permutation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betaperm {

/// Joint distribution of a tuple of statistics over a finite family.
struct DistributionTable {
  std::vector<std::string> schema;
  std::map<std::vector<int>, std::uint64_t> rows;

  void add(const std::vector<int>& key, std::uint64_t count = 1);
  std::uint64_t total() const noexcept;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

const std::vector<std::string_view>& perm_stat_names();
const std::vector<std::string_view>& tree_stat_names();

/// Throws InvalidInput for names outside the vocabulary.
int perm_stat(const PermStats& s, std::string_view name);
int tree_stat(const TreeStats& s, std::string_view name);

std::vector<std::string> parse_stat_list(std::string_view comma_separated);

DistributionTable distribution(const EnumerationDomain& domain,
                               const std::vector<std::string>& stats);

/// Tabulates `stats` over an explicit list of permutations.
DistributionTable distribution_of(std::span<const Permutation> family,
                                  const std::vector<std::string>& stats);

struct DistributionDiff {
  std::vector<int> key;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};

/// std::nullopt when the row maps agree, else the smallest differing key.
/// Schemas of different arity throw InvalidInput; names are not compared.
std::optional<DistributionDiff> compare_distributions(const DistributionTable& a,
                                                      const DistributionTable& b);

/// Header row of statistic names plus "count", then one row per key.
std::string to_csv(const DistributionTable& t);
DistributionTable table_from_csv(std::string_view text);
std::string to_json(const DistributionTable& t);
DistributionTable table_from_json(std::string_view text);

} // namespace betaperm
