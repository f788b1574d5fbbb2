#pragma once

#include "betaperm/distribution.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace betaperm {

/// A failing object, its image under the map being checked (if any), and
/// what went wrong.
struct Counterexample {
  int n = 0;
  std::string object;
  std::string image;
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  int min_n = 0;
  int max_n = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::int64_t millis = 0;
};

/// Checks one size. Returns the lexicographically least failure at that
/// size, if any.
using SizeCheck = std::function<std::optional<Counterexample>(int n)>;

struct ClaimInfo {
  std::string id;
  std::string summary;
  int min_n;
  int limit; // largest max_n accepted
  SizeCheck check;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& find_claim(std::string_view id);

/// Runs the claim for n = min_n..max_n and stops at the first failing size.
VerificationReport verify(std::string_view claim, int max_n);

inline constexpr int kConjectureLimit = 10;

struct ConjectureReport {
  VerificationReport report; // passed means the two tables are equal
  DistributionTable avoiders;
  DistributionTable sortable;
};

/// Joint (comp, asc, ldr, rmax) over avoiders and over two-stack-sortable
/// permutations of length n. n above kConjectureLimit needs `force` and is
/// capped at kMaxScanLength.
ConjectureReport conjecture_check(int n, bool force = false);

std::string to_json(const VerificationReport& r);
std::string to_json(const ConjectureReport& r);
std::string describe(const VerificationReport& r);

} // namespace betaperm
