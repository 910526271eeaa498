#include "basis.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace biham {

namespace {

std::mutex g_basis_mutex;

// B on the standard labels 1..m; arbitrary ordered sets relabel through the
// order isomorphism.
const std::vector<Tree>& standard_basis(int m) {
  static std::map<int, std::vector<Tree>> memo;
  {
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
  }
  std::vector<Tree> out;
  if (m == 1) {
    out.push_back(Tree::leaf(1));
  } else {
    // Clause 1: {a_i, b'}_1 with i < m, b' on the remaining labels.
    for (int i = 1; i <= m - 1; ++i) {
      std::vector<int> rest;
      for (int l = 1; l <= m; ++l)
        if (l != i) rest.push_back(l);
      for (const Tree& sub : standard_basis(m - 1))
        out.push_back(canonicalize(Tree::bracket(1, Tree::leaf(i), relabel(sub, rest))).tree);
    }
    // Clause 2: {b1, b2}_2 with m in the right part and b1 rooted at a
    // generator or a type-1 bracket.
    for (unsigned a1 = 1; a1 < (1u << (m - 1)); ++a1) {  // subsets avoiding m
      std::vector<int> left_labels, right_labels;
      for (int l = 1; l <= m; ++l)
        ((a1 >> (l - 1)) & 1u ? left_labels : right_labels).push_back(l);
      std::vector<Tree> lefts;
      for (const Tree& b1 : standard_basis(static_cast<int>(left_labels.size())))
        if (b1.is_leaf() || b1.type() == 1) lefts.push_back(relabel(b1, left_labels));
      if (lefts.empty()) continue;
      for (const Tree& b2s : standard_basis(static_cast<int>(right_labels.size()))) {
        const Tree b2 = relabel(b2s, right_labels);
        for (const Tree& b1 : lefts)
          out.push_back(canonicalize(Tree::bracket(2, b1, b2)).tree);
      }
    }
  }
  std::lock_guard<std::mutex> lock(g_basis_mutex);
  return memo.emplace(m, std::move(out)).first->second;
}

}  // namespace

std::vector<Tree> enumerate_basis(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("enumerate_basis: empty generator set");
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i - 1] >= labels[i])
      throw std::invalid_argument("enumerate_basis: labels must be strictly increasing");
  if (static_cast<int>(labels.size()) > kBasisMaxArity)
    throw std::invalid_argument("enumerate_basis: arity above limit " +
                                std::to_string(kBasisMaxArity));
  std::vector<Tree> out;
  out.reserve(standard_basis(static_cast<int>(labels.size())).size());
  for (const Tree& t : standard_basis(static_cast<int>(labels.size())))
    out.push_back(relabel(t, labels));
  return out;
}

std::vector<Tree> enumerate_basis(int n) {
  std::vector<int> labels;
  for (int l = 1; l <= n; ++l) labels.push_back(l);
  return enumerate_basis(labels);
}

IndependenceReport verify_independence(int n, int jobs) {
  if (n < 1 || n > kFreeAlgMaxArity)
    throw std::invalid_argument("verify_independence: n outside the oracle range");
  IndependenceReport report;
  report.n = n;
  const auto family = enumerate_basis(n);
  report.family_size = static_cast<long long>(family.size());
  const QuotientModel& model = quotient_model(n, jobs);
  report.quotient_dim = model.dimension();
  report.rank = model.rank_in_quotient(family);
  report.pass = report.rank == report.quotient_dim &&
                Rational(report.quotient_dim) == pow_int(Rational(n), static_cast<unsigned>(n - 1));
  return report;
}

std::string StarMonomial::render() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += '*';
    out += factors[i].render();
  }
  return out;
}

std::vector<StarMonomial> enumerate_p2_basis(int n) {
  if (n < 1 || n > kBasisMaxArity)
    throw std::invalid_argument("enumerate_p2_basis: n outside the basis range");
  std::vector<StarMonomial> out;
  for (const auto& partition : set_partitions(n)) {
    std::vector<std::vector<Tree>> choices;
    for (const auto& part : partition) choices.push_back(enumerate_basis(part));
    StarMonomial current;
    current.factors.reserve(partition.size());
    auto rec = [&](auto&& self, std::size_t part) -> void {
      if (part == choices.size()) {
        out.push_back(current);
        return;
      }
      for (const Tree& t : choices[part]) {
        current.factors.push_back(t);
        self(self, part + 1);
        current.factors.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

long long count_p2_basis(int n) {
  if (n < 1 || n > kBasisMaxArity)
    throw std::invalid_argument("count_p2_basis: n outside the basis range");
  long long total = 0;
  for (const auto& partition : set_partitions(n)) {
    long long prod = 1;
    for (const auto& part : partition) {
      const auto k = static_cast<unsigned>(part.size());
      prod *= pow_int(Rational(static_cast<long>(k)), k - 1).to_long();
    }
    total += prod;
  }
  return total;
}

}  // namespace biham
