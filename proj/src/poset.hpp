#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace biham {

inline constexpr int kPosetMaxArity = 5;

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Element of Pi_n(Com2): a set partition of [n] with a Com2 label per block
/// (the number of first-type products, 0 <= t <= |block|-1).
struct PosetElement {
  std::vector<std::vector<int>> blocks;  // ascending elements, ordered by min
  std::vector<int> labels;               // parallel to blocks

  std::string render() const;  // "{1,3|0}{2|0}"
  /// Re-sorts blocks into the canonical layout after a relabeling.
  static PosetElement normalized(std::vector<std::vector<int>> blocks,
                                 std::vector<int> labels);
};

bool operator==(const PosetElement& a, const PosetElement& b);

/// All elements of Pi_n(Com2); count is sum over set partitions of the
/// product of block sizes.
std::vector<PosetElement> build_poset(int n);

/// Strict order: x refines y and on every merged block the label difference
/// label_y - sum(label_x) lies in [0, m-1] for m constituent blocks (labels
/// add under composition; the connecting element eta contributes 0..m-1).
bool less_than(const PosetElement& x, const PosetElement& y);

/// Structural covers: y merges exactly two blocks of x with label delta 0 or
/// 1 and leaves everything else untouched. Coincides with interval-emptiness
/// covers (property-tested).
bool covers_structural(const PosetElement& x, const PosetElement& y);

/// Finite poset snapshot with materialized strict order and cover relations.
class FinitePoset {
 public:
  FinitePoset(int size, const std::function<bool(int, int)>& less);

  int size() const { return n_; }
  bool less(int a, int b) const { return less_[idx(a, b)]; }
  bool covers(int a, int b) const { return covers_[idx(a, b)]; }

  /// Induced subposet on the segment [x, y] (requires x < y).
  FinitePoset segment(int x, int y) const;
  std::vector<int> segment_members(int x, int y) const;

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(b);
  }
  int n_;
  std::vector<char> less_, covers_;
};

FinitePoset poset_order(const std::vector<PosetElement>& elements);

struct SemimodularityResult {
  bool semimodular = false;
  // (c, a, b) with c covered by both a and b and no common upper cover.
  std::optional<std::array<int, 3>> counterexample;
};

/// Whenever c is covered by two distinct elements a, b, some d must cover
/// both.
SemimodularityResult is_upper_semimodular(const FinitePoset& p);

struct HomologyResult {
  std::vector<long long> chain_counts;  // chains with k+1 elements at index k
  std::vector<long long> betti;         // unreduced rational Betti numbers
  int max_chain_edges = 0;
  long long total_chains = 0;
};

inline constexpr long long kDefaultChainBudget = 2'000'000;

/// Rational homology of the order complex (all strict chains; the boundary
/// drops one element with alternating signs; d of a vertex is 0).
HomologyResult order_complex_homology(const FinitePoset& p,
                                      long long chain_budget = kDefaultChainBudget);

struct CmReport {
  bool cohen_macaulay = false;
  int max_chain_edges = 0;
  std::vector<long long> betti;
  std::vector<long long> chain_counts;
};

/// Cohen-Macaulay in the rational sense used here: Betti_i = 0 for all
/// 0 < i < max chain length (edge count).
CmReport is_cohen_macaulay(const FinitePoset& p,
                           long long chain_budget = kDefaultChainBudget);

struct SegmentsReport {
  bool all_semimodular = false;
  long long segments_total = 0;
  long long orbits_checked = 0;
  std::optional<std::pair<std::string, std::string>> counterexample;  // [x,y]
};

/// Upper semimodularity of every segment [x,y] of Pi_n, deduplicated up to
/// the S_n relabeling action.
SegmentsReport segments_upper_semimodular(int n);

/// Condition (*) for Com2 by enumeration: for fixed alpha_i the composition
/// beta(alpha_1..alpha_k) is injective in beta, for all arity splits with
/// total arity <= max_total.
bool check_condition_star(int max_total);

/// Grading facts behind "every maximal chain has length n-1": unique minimal
/// element, every cover raises the block-count rank by one, every maximal
/// element has full rank.
bool maximal_chains_have_length(const std::vector<PosetElement>& elements,
                                const FinitePoset& p, int expected_edges);

/// Cover-pair export, one "x < y" per line.
std::string edges_text(const std::vector<PosetElement>& elements, const FinitePoset& p);

}  // namespace biham
