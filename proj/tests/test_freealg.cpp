#include <doctest.h>

#include <numeric>
#include <random>

#include "charlib.hpp"
#include "freealg.hpp"

using namespace biham;

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
  // (a o b)(i) = a(b(i))
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& a) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[static_cast<std::size_t>(a[i] - 1)] = static_cast<int>(i + 1);
  return out;
}

}  // namespace

TEST_CASE("monomial enumeration counts") {
  CHECK(enumerate_monomials(1).size() == 1);
  CHECK(enumerate_monomials(2).size() == 2);
  CHECK(enumerate_monomials(3).size() == 12);
  // (2n-3)!! shapes times 2^{n-1} bracket typings.
  CHECK(enumerate_monomials(4).size() == 15 * 8);
  CHECK(enumerate_monomials(5).size() == 105 * 16);
  CHECK_THROWS(enumerate_monomials(kFreeAlgMaxArity + 1));
  for (const Tree& t : enumerate_monomials(4)) CHECK(t.is_canonical());
}

TEST_CASE("canonicalization signs") {
  Tree a1 = Tree::leaf(1), a2 = Tree::leaf(2), a3 = Tree::leaf(3);
  SignedTree flip = canonicalize(Tree::bracket(1, a2, a1));
  CHECK(flip.sign == -1);
  CHECK(flip.tree.encode() == "{1,2}1");
  SignedTree same = canonicalize(Tree::bracket(1, a1, a2));
  CHECK(same.sign == 1);
  CHECK(same.tree == Tree::bracket(1, a1, a2));
  // {{a3,a2}_2, a1}_1 -> ({a1,{a2,a3}_2}_1, +1): two flips.
  SignedTree two = canonicalize(Tree::bracket(1, Tree::bracket(2, a3, a2), a1));
  CHECK(two.sign == 1);
  CHECK(two.tree.encode() == "{1,{2,3}2}1");
  CHECK(two.tree.render() == "{a1,{a2,a3}_2}_1");
}

TEST_CASE("relation instance shapes") {
  auto rels = relation_vectors(3);
  int three_term_pure = 0, six_term_mixed = 0;
  for (const auto& inst : rels) {
    if (inst.terms.size() == 3) ++three_term_pure;
    if (inst.terms.size() == 6) ++six_term_mixed;
  }
  // One Jacobi instance per type and one six-term instance survive the
  // deduplication in arity 3.
  CHECK(three_term_pure == 2);
  CHECK(six_term_mixed == 1);
  CHECK(rels.size() == 3);
  for (const auto& inst : rels)
    for (const auto& [enc, coeff] : inst.terms) CHECK(!coeff.is_zero());
}

TEST_CASE("quotient dimensions") {
  const QuotientModel& m2 = quotient_model(2);
  CHECK(m2.dimension() == 2);
  CHECK(m2.block_dimension(0) == 1);
  CHECK(m2.block_dimension(1) == 1);

  const QuotientModel& m3 = quotient_model(3);
  CHECK(m3.dimension() == 9);
  CHECK(m3.block_dimension(2) == 2);  // bidegree (2,0)
  CHECK(m3.block_dimension(1) == 5);  // bidegree (1,1)
  CHECK(m3.block_dimension(0) == 2);  // bidegree (0,2)

  CHECK(quotient_model(4).dimension() == 64);
  CHECK(quotient_model(5).dimension() == 625);
}

TEST_CASE("reduction annihilates the relations") {
  const int n = 4;
  const QuotientModel& model = quotient_model(n);
  for (const auto& inst : relation_vectors(n)) {
    SparseRow acc;
    for (const auto& [enc, coeff] : inst.terms) {
      // Recover the tree through the model's column table.
      const Tree& t = model.monomials()[static_cast<std::size_t>(model.global_index(enc))];
      row_axpy(acc, Rational(1), model.reduce_monomial(t, coeff));
    }
    CHECK(acc.empty());
  }
}

TEST_CASE("reduction is idempotent") {
  const QuotientModel& model = quotient_model(4);
  std::mt19937_64 rng(13);
  const auto& monomials = model.monomials();
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    SparseRow once = model.reduce_monomial(monomials[pick(rng)], Rational(1));
    // Reduced vectors live on free columns; reducing any of those columns
    // again must change nothing.
    for (const auto& [g, c] : once) {
      SparseRow again = model.reduce_monomial(monomials[static_cast<std::size_t>(g)], c);
      REQUIRE(again.size() == 1);
      CHECK(again[0].first == g);
      CHECK(again[0].second == c);
    }
  }
}

TEST_CASE("character traces") {
  const QuotientModel& m2 = quotient_model(2);
  CHECK(m2.character_on({1, 2}) == sl2_irreducible_char(2));
  CHECK(m2.character_on({2, 1}) == -(sl2_irreducible_char(2)));
  const QuotientModel& m3 = quotient_model(3);
  CHECK(m3.character_on({2, 3, 1}) ==
        -(LaurentPoly::q_power(2) + LaurentPoly(1) + LaurentPoly::q_power(-2)));
  // Identity trace is the Corollary-dim q-product.
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 1);
    const LaurentPoly chi = quotient_model(n).character_on(id);
    CHECK(chi == identity_qchar_product(Operad::lie2, n));
    CHECK(chi.eval_at_one() == pow_int(Rational(n), static_cast<unsigned>(n - 1)));
  }
}

TEST_CASE("characters are class functions and palindromic") {
  std::mt19937_64 rng(77);
  for (int n = 2; n <= 5; ++n) {
    const QuotientModel& model = quotient_model(n);
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    for (const auto& rho : exponent_vectors_of_degree(n)) {
      const auto sigma = class_representative(rho);
      const LaurentPoly chi = model.character_on(sigma);
      CHECK(chi.is_palindromic());
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> tau = base;
        std::shuffle(tau.begin(), tau.end(), rng);
        const auto conj = compose_perm(tau, compose_perm(sigma, inverse_perm(tau)));
        CHECK(model.character_on(conj) == chi);
      }
    }
  }
}

TEST_CASE("full character assembles the Lie2 slice") {
  SymL f2 = full_character(2);
  CHECK(f2.coefficient(Exponents{2}) == sl2_irreducible_char(2) * Rational(1, 2));
  CHECK(f2.coefficient(Exponents{0, 1}) == sl2_irreducible_char(2) * Rational(-1, 2));
  CHECK(full_character(1) == SymL::p(1, 1));
  // Oracle versus formula route, coefficient by coefficient.
  for (int n = 1; n <= 4; ++n)
    CHECK(full_character(n) == f_lie2_char(n).slice(n).retruncated(n));
}

TEST_CASE("quotient model survives the cache roundtrip") {
  const QuotientModel& model = quotient_model(4);
  QuotientModel copy = QuotientModel::deserialize(model.serialize());
  CHECK(copy.dimension() == model.dimension());
  std::vector<int> sigma{2, 1, 4, 3};
  CHECK(copy.character_on(sigma) == model.character_on(sigma));
  CHECK_THROWS(QuotientModel::deserialize("{\"schema\":\"other\"}"));
}
