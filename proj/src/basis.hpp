#pragma once

#include "freealg.hpp"

namespace biham {

/// Arity cap of the basis recursion (pure counting/enumeration).
inline constexpr int kBasisMaxArity = 7;

/// The recursive monomial family B(A) over an ordered generator set, as
/// canonical trees. Cardinality |A|^{|A|-1}. Base case B({a}) = {a};
/// otherwise b = {a_i, b'}_1 with i < |A|, or b = {b1, b2}_2 with
/// A = A1 ⊔ A2, max(A) in A2, b1 in B(A1) rooted at a generator or a type-1
/// bracket, b2 in B(A2).
std::vector<Tree> enumerate_basis(const std::vector<int>& labels);
std::vector<Tree> enumerate_basis(int n);  // labels 1..n

struct IndependenceReport {
  int n = 0;
  long long family_size = 0;
  long long quotient_dim = 0;
  int rank = 0;
  bool pass = false;
};

/// Maps B({1..n}) into the free-algebra quotient and checks that its image
/// has full rank n^{n-1}.
IndependenceReport verify_independence(int n, int jobs = 0);

/// Star-product monomial of the P2 basis: one B-factor per part of a set
/// partition, parts ordered by smallest element.
struct StarMonomial {
  std::vector<Tree> factors;
  std::string render() const;  // e.g. "a1*{a2,a3}_1"
};

/// Basis of the multilinear part of the free bihamiltonian algebra;
/// cardinality (n+1)^{n-1}.
std::vector<StarMonomial> enumerate_p2_basis(int n);

/// Cardinality only (partition sum of products |A_j|^{|A_j|-1}).
long long count_p2_basis(int n);

}  // namespace biham
