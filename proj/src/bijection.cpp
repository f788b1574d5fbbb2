#include "betaperm/bijection.hpp"

#include "betaperm/error.hpp"
#include "betaperm/patterns.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

namespace betaperm {

namespace {

struct ValueRun {
  int lo;
  int hi;
};

// Maximal runs of consecutive integers among `values`, ascending.
std::vector<ValueRun> value_runs(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  std::vector<ValueRun> runs;
  for (int x : values) {
    if (!runs.empty() && runs.back().hi + 1 == x)
      runs.back().hi = x;
    else
      runs.push_back({x, x});
  }
  return runs;
}

std::vector<int> complement_in(int n, const std::vector<int>& sorted_subset) {
  std::vector<int> out;
  out.reserve(n - sorted_subset.size());
  auto it = sorted_subset.begin();
  for (int x = 1; x <= n; ++x) {
    if (it != sorted_subset.end() && *it == x)
      ++it;
    else
      out.push_back(x);
  }
  return out;
}

std::optional<std::string> psi_domain_violation(const Permutation& p) {
  const auto n = static_cast<int>(p.size());
  if (n < 2) return "length must be at least 2";
  if (p[0] == n) return "first letter must not be n";
  if (p.position_of(n) > p.position_of(n - 1)) return "n must precede n-1";
  if (!is_avoider(p)) return "input must avoid 3-1-4-2 and 2-41-3";
  return std::nullopt;
}

void require_psi_domain(const Permutation& p, const char* op) {
  if (auto why = psi_domain_violation(p))
    throw InvalidInput(std::string(op) + "(" + to_string(p) + "): " + *why);
}

// sigma' n tau' with sigma' on `left` and tau' on the complement.
Permutation assemble(const Permutation& sigma_pattern, const Permutation& tau_pattern,
                     const std::vector<int>& left, const std::vector<int>& right, int n) {
  std::vector<int> out;
  out.reserve(n);
  for (int x : sigma_pattern) out.push_back(left[x - 1]);
  out.push_back(n);
  for (int x : tau_pattern) out.push_back(right[x - 1]);
  return Permutation::trusted(std::move(out));
}

PsiDecomposition build_psi_decomposition(const Permutation& p);

Permutation psi_core(const Permutation& p) {
  const PsiDecomposition d = build_psi_decomposition(p);
  const int n = static_cast<int>(p.size());
  return assemble(standardize(d.sigma), standardize(d.tau), d.left_values, d.right_values, n);
}

Permutation psi_inv_core(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const std::size_t pos = p.position_of(n);
  const std::vector<int> sigma(p.begin(), p.begin() + pos);
  const std::vector<int> tau(p.begin() + pos + 1, p.end());
  const auto runs = value_runs(sigma);

  std::vector<int> shifted;
  shifted.reserve(sigma.size());
  int previous_hi = 0;
  for (const auto& run : runs) {
    int first = 0;
    int count = 0;
    bool seen = false;
    for (int x : tau) {
      if (x <= previous_hi || x >= run.lo) continue;
      if (!seen) {
        first = x;
        seen = true;
      } else if (x > first) {
        ++count;
      }
    }
    if (!seen)
      throw InvalidInput("psi_inv(" + to_string(p) + "): no letters of tau below interval " +
                         std::to_string(run.lo) + ".." + std::to_string(run.hi));
    for (int x = run.lo; x <= run.hi; ++x) shifted.push_back(x - count - 1);
    previous_hi = run.hi;
  }
  std::sort(shifted.begin(), shifted.end());
  if (std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end() ||
      (!shifted.empty() && shifted.front() < 1))
    throw InvalidInput("psi_inv(" + to_string(p) + "): input is not in the image of psi");
  const auto right = complement_in(n - 1, shifted);
  return assemble(standardize(sigma), standardize(tau), shifted, right, n);
}

Permutation insert_before_lmax(int i, const Permutation& p) {
  const int n = static_cast<int>(p.size()) + 1;
  std::vector<int> out(p.begin(), p.end());
  if (i == 1) {
    out.insert(out.begin(), n);
  } else {
    const auto positions = lmax_positions(p);
    out.insert(out.begin() + positions[i - 1], n);
  }
  return Permutation::trusted(std::move(out));
}

void require_phi_index(int i, const Permutation& p, const char* op) {
  const int k = std::max(lmax(p), 1);
  if (i < 1 || i > k)
    throw InvalidInput(std::string(op) + ": index " + std::to_string(i) + " outside 1.." +
                       std::to_string(k));
}

Permutation phi_core(int i, const Permutation& p) {
  Permutation hat = insert_before_lmax(i, p);
  return i == 1 ? hat : psi_core(hat);
}

Permutation theta_core(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const auto lengths = component_lengths(p);
  const std::size_t start = p.size() - lengths.back();
  const std::size_t pos = p.position_of(n);
  std::vector<int> tau_rho(p.begin() + start, p.begin() + pos);
  const std::size_t tau_len = tau_rho.size();
  tau_rho.insert(tau_rho.end(), p.begin() + pos + 1, p.end());
  const Permutation st = standardize(tau_rho);
  const int shift = static_cast<int>(tau_rho.size());

  std::vector<int> out;
  out.reserve(n);
  out.insert(out.end(), st.begin(), st.begin() + tau_len);
  for (std::size_t k = 0; k < start; ++k) out.push_back(p[k] + shift);
  out.push_back(n);
  out.insert(out.end(), st.begin() + tau_len, st.end());
  return Permutation::trusted(std::move(out));
}

Permutation phi_theta_core(int i, const Permutation& p) {
  Permutation hat = insert_before_lmax(i, p);
  return i == 1 ? hat : theta_core(hat);
}

std::pair<int, Permutation> phi_inv_core(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  if (p[0] == n) return {1, Permutation::trusted(std::vector<int>(p.begin() + 1, p.end()))};
  return {lmax(p), remove_letter(psi_inv_core(p), n)};
}

template <typename Phi>
Permutation tree_to_perm_with(const BetaTree& t, Phi phi_fn) {
  struct Visitor {
    Phi& phi_fn;
    Permutation operator()(const Atom&) const { return {}; }
    Permutation operator()(const SumParts& s) const {
      return direct_sum(tree_to_perm_with(s.left, phi_fn), tree_to_perm_with(s.right, phi_fn));
    }
    Permutation operator()(const LambdaParts& l) const {
      return phi_fn(l.label, tree_to_perm_with(l.inner, phi_fn));
    }
  };
  return std::visit(Visitor{phi_fn}, decompose(t));
}

BetaTree perm_to_tree_core(const Permutation& p) {
  if (p.empty()) return BetaTree::single_node();
  const auto lengths = component_lengths(p);
  if (lengths.size() > 1) {
    const std::size_t len = lengths.front();
    const int shift = static_cast<int>(len);
    std::vector<int> head(p.begin(), p.begin() + len);
    std::vector<int> tail;
    tail.reserve(p.size() - len);
    for (std::size_t k = len; k < p.size(); ++k) tail.push_back(p[k] - shift);
    return tree_sum(perm_to_tree_core(Permutation::trusted(std::move(head))),
                    perm_to_tree_core(Permutation::trusted(std::move(tail))));
  }
  auto [i, rest] = phi_inv_core(p);
  return lambda_op(i, perm_to_tree_core(rest));
}

} // namespace

bool in_psi_domain(const Permutation& p) { return !psi_domain_violation(p).has_value(); }

PsiDecomposition psi_decomposition(const Permutation& p) {
  require_psi_domain(p, "psi_decomposition");
  return build_psi_decomposition(p);
}

namespace {

PsiDecomposition build_psi_decomposition(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const std::size_t pos = p.position_of(n);
  PsiDecomposition d;
  d.sigma = Word(std::vector<int>(p.begin(), p.begin() + pos));
  d.tau = Word(std::vector<int>(p.begin() + pos + 1, p.end()));
  const auto runs = value_runs(std::vector<int>(d.sigma.begin(), d.sigma.end()));

  auto letters_between = [&](int lo, int hi) {
    std::vector<int> w;
    for (int x : d.tau)
      if (x > lo && x < hi) w.push_back(x);
    return w;
  };

  d.below = Word(letters_between(0, runs.front().lo));
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::vector<int> run_letters;
    for (int x : d.sigma)
      if (x >= runs[i].lo && x <= runs[i].hi) run_letters.push_back(x);
    d.intervals.emplace_back(std::move(run_letters));

    const int upper = i + 1 < runs.size() ? runs[i + 1].lo : n;
    std::vector<int> w = letters_between(runs[i].hi, upper);
    const auto min_it = std::min_element(w.begin(), w.end());
    const int min_left = std::accumulate(
        w.begin(), min_it, std::numeric_limits<int>::max(),
        [](int a, int b) { return std::min(a, b); });
    const int m = static_cast<int>(std::count_if(
        min_it == w.end() ? w.end() : min_it + 1, w.end(), [&](int x) { return x < min_left; }));
    d.shifts.push_back(m);
    d.blocks.emplace_back(std::move(w));

    for (int x = runs[i].lo; x <= runs[i].hi; ++x) d.left_values.push_back(x + m + 1);
  }
  std::sort(d.left_values.begin(), d.left_values.end());
  d.right_values = complement_in(n - 1, d.left_values);
  return d;
}

} // namespace

Permutation psi(const Permutation& p) {
  require_psi_domain(p, "psi");
  return psi_core(p);
}

Permutation psi_inv(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  if (n < 2) throw InvalidInput("psi_inv: length must be at least 2");
  if (p[0] == n) throw InvalidInput("psi_inv: first letter must not be n");
  if (!is_indecomposable(p)) throw InvalidInput("psi_inv: input must be indecomposable");
  if (!is_avoider(p)) throw InvalidInput("psi_inv: input must avoid 3-1-4-2 and 2-41-3");
  Permutation out = psi_inv_core(p);
  if (auto why = psi_domain_violation(out))
    throw InvalidInput("psi_inv(" + to_string(p) + "): preimage leaves the domain: " + *why);
  return out;
}

Permutation phi(int i, const Permutation& p) {
  require_phi_index(i, p, "phi");
  if (!is_avoider(p)) throw InvalidInput("phi: input must avoid 3-1-4-2 and 2-41-3");
  return phi_core(i, p);
}

std::pair<int, Permutation> phi_inv(const Permutation& p) {
  if (p.empty()) throw InvalidInput("phi_inv: empty permutation");
  if (!is_indecomposable(p)) throw InvalidInput("phi_inv: input must be indecomposable");
  if (!is_avoider(p)) throw InvalidInput("phi_inv: input must avoid 3-1-4-2 and 2-41-3");
  return phi_inv_core(p);
}

Permutation tree_to_perm(const BetaTree& t) { return tree_to_perm_with(t, phi_core); }

BetaTree perm_to_tree(const Permutation& p) {
  if (!is_avoider(p))
    throw InvalidInput("perm_to_tree(" + to_string(p) + "): not an avoider");
  return perm_to_tree_core(p);
}

Permutation theta(const Permutation& p) {
  require_psi_domain(p, "theta");
  return theta_core(p);
}

Permutation phi_theta(int i, const Permutation& p) {
  require_phi_index(i, p, "phi_theta");
  if (!is_avoider(p)) throw InvalidInput("phi_theta: input must avoid 3-1-4-2 and 2-41-3");
  return phi_theta_core(i, p);
}

Permutation tree_to_perm_theta(const BetaTree& t) { return tree_to_perm_with(t, phi_theta_core); }

Permutation detail::phi_unchecked(int i, const Permutation& p) { return phi_core(i, p); }

} // namespace betaperm
