#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "elim.hpp"
#include "symfunc.hpp"

namespace biham {

/// Binary tree monomial in the free algebra with two brackets. Leaves carry
/// distinct positive labels; internal nodes carry the bracket type (1 or 2).
/// Canonical orientation: at every internal node the minimal leaf label of
/// the left subtree is smaller than that of the right subtree. Immutable and
/// cheaply shareable.
class Tree {
 public:
  static Tree leaf(int label);
  static Tree bracket(int type, const Tree& left, const Tree& right);

  bool is_leaf() const { return !n_->l; }
  int label() const { return n_->value; }  // leaf only
  int type() const { return n_->value; }   // internal only
  Tree left() const { return Tree(n_->l); }
  Tree right() const { return Tree(n_->r); }
  int min_label() const { return n_->min_label; }
  int leaf_count() const { return n_->nleaves; }
  int type1_count() const { return n_->ntype1; }

  /// Compact structural key, e.g. "{1,{2,3}2}1".
  std::string encode() const;

  /// CLI listing form with generator names, e.g. "{a1,{a2,a3}_2}_1".
  std::string render() const;

  bool is_canonical() const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.encode() == b.encode(); }

 private:
  struct Node {
    int value;
    std::shared_ptr<const Node> l, r;
    int min_label;
    int nleaves;
    int ntype1;
  };
  explicit Tree(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct SignedTree {
  Tree tree;
  int sign;  // +1 or -1
};

/// Flips subtrees into canonical orientation; each flip contributes -1.
SignedTree canonicalize(const Tree& t);

/// Applies sigma to the leaf labels (sigma[i-1] is the image of i).
Tree relabel(const Tree& t, const std::vector<int>& sigma);

/// Arity cap of the brute-force oracle.
inline constexpr int kFreeAlgMaxArity = 6;

/// All canonical monomials on labels {1..n} in deterministic order.
/// Count: (2n-3)!! tree shapes times 2^{n-1} type assignments.
std::vector<Tree> enumerate_monomials(int n);

/// One relation instance: a sparse vector over canonical monomials.
struct RelationInstance {
  std::vector<std::pair<std::string, Rational>> terms;  // encode -> coeff
  int bidegree_t1 = -1;                                 // type-1 node count
};

/// All Jacobi (both types) and six-term relation instances in arity n,
/// obtained by substituting the sub-monomials at every internal node pattern
/// {X,{Y,Z}_i}_j of every canonical monomial. The spanning set is redundant;
/// duplicates are dropped. Every instance is bihomogeneous.
std::vector<RelationInstance> relation_vectors(int n);

/// The multilinear component Lie2(n) as an explicit quotient: per-bidegree
/// echelonized relation matrices with the free columns as a basis.
class QuotientModel {
 public:
  static QuotientModel build(int n, int jobs = 0);

  int n() const { return n_; }
  long long dimension() const;
  /// Dimension of the bidegree (t1, n-1-t1) block.
  long long block_dimension(int t1) const;
  const std::vector<Tree>& monomials() const { return monomials_; }

  /// Trace of sigma (images, 1-based) with torus weight q^{t1-t2}.
  LaurentPoly character_on(const std::vector<int>& sigma) const;

  /// Quotient coordinates of a single signed monomial, as a sparse vector on
  /// global free columns.
  SparseRow reduce_monomial(const Tree& t, const Rational& coeff) const;

  /// Rank of a family of monomial vectors inside the quotient.
  int rank_in_quotient(const std::vector<Tree>& family) const;

  int global_index(const std::string& encoded) const;

  // Cache hooks (format private to the tool).
  std::string serialize() const;
  static QuotientModel deserialize(const std::string& blob);

 private:
  QuotientModel() = default;
  int n_ = 0;
  std::vector<Tree> monomials_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> col_block_;  // global column -> t1
  std::vector<int> col_local_;  // global column -> block-local column
  struct Block {
    int t1 = 0;
    std::vector<int> cols;  // global ids, ordered
    std::unique_ptr<Echelonizer> ech;
  };
  std::vector<Block> blocks_;
  void index_monomials(int n);
};

/// Loads the model from the cache directory (BIHAM_CACHE_DIR) when present,
/// else builds it (and stores it when the cache is enabled).
const QuotientModel& quotient_model(int n, int jobs = 0);

/// Deterministic representative permutation of the class rho.
std::vector<int> class_representative(const Exponents& rho);

/// The degree-n slice of F_Lie2 assembled from explicit traces, one class at
/// a time, with no reliance on the closed-form character formulas.
SymL full_character(int n, int jobs = 0);

}  // namespace biham
