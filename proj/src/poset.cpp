#include "poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "elim.hpp"
#include "symfunc.hpp"

namespace biham {

std::string PosetElement::render() const {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << '{';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ',';
      os << blocks[b][i];
    }
    os << '|' << labels[b] << '}';
  }
  return os.str();
}

PosetElement PosetElement::normalized(std::vector<std::vector<int>> blocks,
                                      std::vector<int> labels) {
  std::vector<std::size_t> order(blocks.size());
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return blocks[i][0] < blocks[j][0]; });
  PosetElement out;
  for (std::size_t i : order) {
    out.blocks.push_back(std::move(blocks[i]));
    out.labels.push_back(labels[i]);
  }
  return out;
}

bool operator==(const PosetElement& a, const PosetElement& b) {
  return a.blocks == b.blocks && a.labels == b.labels;
}

std::vector<PosetElement> build_poset(int n) {
  if (n < 1 || n > kPosetMaxArity)
    throw std::invalid_argument("build_poset: n must be in 1.." +
                                std::to_string(kPosetMaxArity));
  std::vector<PosetElement> out;
  for (const auto& partition : set_partitions(n)) {
    // Odometer over label ranges [0, |block|-1], last block fastest.
    std::vector<int> labels(partition.size(), 0);
    bool more = true;
    while (more) {
      out.push_back(PosetElement{partition, labels});
      more = false;
      std::size_t b = partition.size();
      while (b-- > 0) {
        if (labels[b] + 1 < static_cast<int>(partition[b].size())) {
          ++labels[b];
          more = true;
          break;
        }
        labels[b] = 0;
      }
    }
  }
  return out;
}

bool less_than(const PosetElement& x, const PosetElement& y) {
  if (x == y) return false;
  if (x.blocks.size() < y.blocks.size()) return false;
  // Locate each element's y-block.
  std::map<int, std::size_t> y_block_of;
  for (std::size_t j = 0; j < y.blocks.size(); ++j)
    for (int e : y.blocks[j]) y_block_of[e] = j;
  std::vector<int> count(y.blocks.size(), 0);
  std::vector<int> label_sum(y.blocks.size(), 0);
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    auto it = y_block_of.find(x.blocks[i][0]);
    if (it == y_block_of.end()) return false;
    const std::size_t j = it->second;
    for (int e : x.blocks[i]) {
      auto et = y_block_of.find(e);
      if (et == y_block_of.end() || et->second != j) return false;  // not a refinement
    }
    count[j] += 1;
    label_sum[j] += x.labels[i];
  }
  for (std::size_t j = 0; j < y.blocks.size(); ++j) {
    const int delta = y.labels[j] - label_sum[j];
    if (delta < 0 || delta > count[j] - 1) return false;
  }
  return true;
}

bool covers_structural(const PosetElement& x, const PosetElement& y) {
  if (y.blocks.size() + 1 != x.blocks.size()) return false;
  std::map<int, std::size_t> y_block_of;
  for (std::size_t j = 0; j < y.blocks.size(); ++j)
    for (int e : y.blocks[j]) y_block_of[e] = j;
  std::vector<std::vector<std::size_t>> constituents(y.blocks.size());
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    auto it = y_block_of.find(x.blocks[i][0]);
    if (it == y_block_of.end()) return false;
    for (int e : x.blocks[i]) {
      auto et = y_block_of.find(e);
      if (et == y_block_of.end() || et->second != it->second) return false;
    }
    constituents[it->second].push_back(i);
  }
  bool merged_seen = false;
  for (std::size_t j = 0; j < y.blocks.size(); ++j) {
    std::size_t total = 0;
    for (std::size_t i : constituents[j]) total += x.blocks[i].size();
    if (total != y.blocks[j].size()) return false;
    if (constituents[j].size() == 1) {
      if (x.labels[constituents[j][0]] != y.labels[j]) return false;
    } else if (constituents[j].size() == 2) {
      if (merged_seen) return false;
      merged_seen = true;
      const int delta =
          y.labels[j] - x.labels[constituents[j][0]] - x.labels[constituents[j][1]];
      if (delta != 0 && delta != 1) return false;
    } else {
      return false;
    }
  }
  return merged_seen;
}

FinitePoset::FinitePoset(int size, const std::function<bool(int, int)>& less) : n_(size) {
  less_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
  covers_.assign(less_.size(), 0);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (a != b && less(a, b)) less_[idx(a, b)] = 1;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      if (!less_[idx(a, b)]) continue;
      bool gap = false;
      for (int z = 0; z < size && !gap; ++z)
        if (less_[idx(a, z)] && less_[idx(z, b)]) gap = true;
      if (!gap) covers_[idx(a, b)] = 1;
    }
}

std::vector<int> FinitePoset::segment_members(int x, int y) const {
  std::vector<int> members;
  members.push_back(x);
  for (int z = 0; z < n_; ++z)
    if (less(x, z) && less(z, y)) members.push_back(z);
  members.push_back(y);
  return members;
}

FinitePoset FinitePoset::segment(int x, int y) const {
  const auto members = segment_members(x, y);
  return FinitePoset(static_cast<int>(members.size()), [&](int a, int b) {
    return less(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)]);
  });
}

FinitePoset poset_order(const std::vector<PosetElement>& elements) {
  return FinitePoset(static_cast<int>(elements.size()), [&](int a, int b) {
    return less_than(elements[static_cast<std::size_t>(a)],
                     elements[static_cast<std::size_t>(b)]);
  });
}

SemimodularityResult is_upper_semimodular(const FinitePoset& p) {
  for (int c = 0; c < p.size(); ++c) {
    std::vector<int> above;
    for (int a = 0; a < p.size(); ++a)
      if (p.covers(c, a)) above.push_back(a);
    for (std::size_t i = 0; i < above.size(); ++i)
      for (std::size_t j = i + 1; j < above.size(); ++j) {
        bool found = false;
        for (int d = 0; d < p.size() && !found; ++d)
          if (p.covers(above[i], d) && p.covers(above[j], d)) found = true;
        if (!found) return {false, std::array<int, 3>{c, above[i], above[j]}};
      }
  }
  return {true, std::nullopt};
}

namespace {

struct ChainComplex {
  // chains[k] holds the (k+1)-element chains; ids[k] maps a chain to its row.
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::map<std::vector<int>, int>> ids;
};

ChainComplex enumerate_chains(const FinitePoset& p, long long budget) {
  ChainComplex cx;
  long long total = 0;
  std::vector<int> current;
  auto record = [&](const std::vector<int>& chain) {
    if (++total > budget)
      throw BudgetExceeded("order complex exceeds the chain budget of " +
                           std::to_string(budget));
    const std::size_t k = chain.size() - 1;
    if (cx.chains.size() <= k) {
      cx.chains.resize(k + 1);
      cx.ids.resize(k + 1);
    }
    cx.ids[k].emplace(chain, static_cast<int>(cx.chains[k].size()));
    cx.chains[k].push_back(chain);
  };
  auto extend = [&](auto&& self, int last) -> void {
    for (int next = 0; next < p.size(); ++next) {
      if (!p.less(last, next)) continue;
      current.push_back(next);
      record(current);
      self(self, next);
      current.pop_back();
    }
  };
  for (int start = 0; start < p.size(); ++start) {
    current.assign(1, start);
    record(current);
    extend(extend, start);
  }
  return cx;
}

// d(a_0<...<a_k) = sum_i (-1)^i (chain with a_i dropped).
void verify_d_squared(const ChainComplex& cx) {
  for (std::size_t k = 2; k < cx.chains.size(); ++k)
    for (const auto& chain : cx.chains[k]) {
      std::map<std::vector<int>, int> acc;
      for (std::size_t i = 0; i <= k; ++i) {
        std::vector<int> face = chain;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const int si = i % 2 == 0 ? 1 : -1;
        for (std::size_t j = 0; j < k; ++j) {
          std::vector<int> face2 = face;
          face2.erase(face2.begin() + static_cast<std::ptrdiff_t>(j));
          const int sj = j % 2 == 0 ? 1 : -1;
          acc[face2] += si * sj;
        }
      }
      for (const auto& [key, value] : acc)
        if (value != 0) throw std::logic_error("order complex: d o d != 0");
    }
}

}  // namespace

HomologyResult order_complex_homology(const FinitePoset& p, long long chain_budget) {
  HomologyResult out;
  if (p.size() == 0) return out;
  ChainComplex cx = enumerate_chains(p, chain_budget);
  verify_d_squared(cx);
  const std::size_t kmax = cx.chains.size() - 1;
  out.max_chain_edges = static_cast<int>(kmax);
  std::vector<long long> rank(kmax + 2, 0);  // rank of d_k, k = 1..kmax
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<SparseRow> rows;
    rows.reserve(cx.chains[k].size());
    for (const auto& chain : cx.chains[k]) {
      SparseRow row;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        std::vector<int> face = chain;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        row.emplace_back(cx.ids[k - 1].at(face), Rational(i % 2 == 0 ? 1 : -1));
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
    rank[k] = sparse_rank(std::move(rows), static_cast<int>(cx.chains[k - 1].size()));
  }
  for (std::size_t k = 0; k <= kmax; ++k) {
    const long long ck = static_cast<long long>(cx.chains[k].size());
    out.chain_counts.push_back(ck);
    out.total_chains += ck;
    // Betti_k = dim ker d_k - rank d_{k+1}; d_0 = 0.
    out.betti.push_back(ck - rank[k] - rank[k + 1]);
  }
  return out;
}

CmReport is_cohen_macaulay(const FinitePoset& p, long long chain_budget) {
  HomologyResult h = order_complex_homology(p, chain_budget);
  CmReport report;
  report.max_chain_edges = h.max_chain_edges;
  report.betti = h.betti;
  report.chain_counts = h.chain_counts;
  report.cohen_macaulay = true;
  for (int i = 1; i < h.max_chain_edges; ++i)
    if (h.betti[static_cast<std::size_t>(i)] != 0) report.cohen_macaulay = false;
  return report;
}

namespace {

PosetElement apply_permutation(const PosetElement& e, const std::vector<int>& sigma) {
  std::vector<std::vector<int>> blocks = e.blocks;
  for (auto& block : blocks)
    for (int& v : block) v = sigma[static_cast<std::size_t>(v - 1)];
  return PosetElement::normalized(std::move(blocks), e.labels);
}

}  // namespace

SegmentsReport segments_upper_semimodular(int n) {
  const auto elements = build_poset(n);
  const FinitePoset p = poset_order(elements);
  // Deduplicate segments up to the S_n relabeling (homology and order
  // properties are isomorphism-invariant).
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  SegmentsReport report;
  report.all_semimodular = true;
  std::unordered_set<std::string> seen;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      ++report.segments_total;
      std::string key;
      for (const auto& perm : perms) {
        std::string candidate = apply_permutation(elements[static_cast<std::size_t>(x)], perm).render() +
                                " < " +
                                apply_permutation(elements[static_cast<std::size_t>(y)], perm).render();
        if (key.empty() || candidate < key) key = std::move(candidate);
      }
      if (!seen.insert(key).second) continue;
      ++report.orbits_checked;
      const auto verdict = is_upper_semimodular(p.segment(x, y));
      if (!verdict.semimodular) {
        report.all_semimodular = false;
        if (!report.counterexample)
          report.counterexample = {elements[static_cast<std::size_t>(x)].render(),
                                   elements[static_cast<std::size_t>(y)].render()};
      }
    }
  return report;
}

bool check_condition_star(int max_total) {
  // Enumerate arity splits (m_1..m_k) with sum <= max_total; all alpha label
  // tuples; verify beta -> beta(alpha_1..alpha_k) injective and in range.
  std::vector<int> arities;
  auto check_split = [&]() {
    const int k = static_cast<int>(arities.size());
    const int total = std::accumulate(arities.begin(), arities.end(), 0);
    std::vector<int> alpha(arities.size(), 0);
    bool more = true;
    while (more) {
      const int alpha_sum = std::accumulate(alpha.begin(), alpha.end(), 0);
      std::vector<char> hit(static_cast<std::size_t>(total), 0);
      for (int beta = 0; beta <= k - 1; ++beta) {
        const int image = beta + alpha_sum;
        if (image < 0 || image >= total) return false;  // leaves Com2(total)
        if (hit[static_cast<std::size_t>(image)]) return false;
        hit[static_cast<std::size_t>(image)] = 1;
      }
      more = false;
      std::size_t i = arities.size();
      while (i-- > 0) {
        if (alpha[i] + 1 < arities[i]) {
          ++alpha[i];
          more = true;
          break;
        }
        alpha[i] = 0;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int remaining) -> bool {
    if (!arities.empty() && !check_split()) return false;
    for (int m = 1; m <= remaining; ++m) {
      arities.push_back(m);
      if (!self(self, remaining - m)) return false;
      arities.pop_back();
    }
    return true;
  };
  return rec(rec, max_total);
}

bool maximal_chains_have_length(const std::vector<PosetElement>& elements,
                                const FinitePoset& p, int expected_edges) {
  // (a) unique minimal element, (b) every cover merges exactly two blocks,
  // (c) every maximal element is a single block. Together these grade the
  // poset, making every maximal chain exactly expected_edges long.
  int minimal = 0;
  for (int a = 0; a < p.size(); ++a) {
    bool has_below = false;
    for (int b = 0; b < p.size(); ++b)
      if (p.less(b, a)) has_below = true;
    if (!has_below) ++minimal;
  }
  if (minimal != 1) return false;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.covers(a, b) &&
          elements[static_cast<std::size_t>(a)].blocks.size() !=
              elements[static_cast<std::size_t>(b)].blocks.size() + 1)
        return false;
  for (int a = 0; a < p.size(); ++a) {
    bool has_above = false;
    for (int b = 0; b < p.size(); ++b)
      if (p.less(a, b)) has_above = true;
    if (!has_above &&
        static_cast<int>(elements[static_cast<std::size_t>(a)].blocks.size()) !=
            1)
      return false;
  }
  // The unique minimal element must sit expected_edges below the top rank.
  for (int a = 0; a < p.size(); ++a) {
    bool has_below = false;
    for (int b = 0; b < p.size(); ++b)
      if (p.less(b, a)) has_below = true;
    if (!has_below &&
        static_cast<int>(elements[static_cast<std::size_t>(a)].blocks.size()) !=
            expected_edges + 1)
      return false;
  }
  return true;
}

std::string edges_text(const std::vector<PosetElement>& elements, const FinitePoset& p) {
  std::ostringstream os;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.covers(a, b))
        os << elements[static_cast<std::size_t>(a)].render() << " < "
           << elements[static_cast<std::size_t>(b)].render() << "\n";
  return os.str();
}

}  // namespace biham
