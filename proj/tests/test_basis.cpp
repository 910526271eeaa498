#include <doctest.h>

#include <set>

#include "basis.hpp"

using namespace biham;

TEST_CASE("basis cardinality is n^{n-1}") {
  long long expect[] = {0, 1, 2, 9, 64, 625, 7776, 117649};
  for (int n = 1; n <= kBasisMaxArity; ++n)
    CHECK(static_cast<long long>(enumerate_basis(n).size()) == expect[n]);
}

TEST_CASE("basis members are canonical monomials on the right labels") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> seen;
    for (const Tree& t : enumerate_basis(n)) {
      CHECK(t.is_canonical());
      CHECK(t.leaf_count() == n);
      CHECK(seen.insert(t.encode()).second);  // no duplicates
      // Leaf labels are exactly 1..n: min label 1 and distinctness are
      // enough given the count.
      CHECK(t.min_label() == 1);
    }
  }
  // Relabeled generator sets go through the order isomorphism.
  auto shifted = enumerate_basis(std::vector<int>{3, 5, 9});
  CHECK(shifted.size() == 9);
  for (const Tree& t : shifted) CHECK(t.min_label() == 3);
  CHECK_THROWS(enumerate_basis(std::vector<int>{2, 2}));
  CHECK_THROWS(enumerate_basis(std::vector<int>{}));
}

TEST_CASE("small basis listings") {
  auto b1 = enumerate_basis(1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].render() == "a1");
  auto b2 = enumerate_basis(2);
  std::set<std::string> rendered;
  for (const Tree& t : b2) rendered.insert(t.render());
  CHECK(rendered == std::set<std::string>{"{a1,a2}_1", "{a1,a2}_2"});
}

TEST_CASE("basis bidegrees refine the quotient blocks") {
  for (int n = 2; n <= 5; ++n) {
    const QuotientModel& model = quotient_model(n);
    std::map<int, long long> by_t1;
    for (const Tree& t : enumerate_basis(n)) ++by_t1[t.type1_count()];
    for (int t1 = 0; t1 <= n - 1; ++t1)
      CHECK(by_t1[t1] == model.block_dimension(t1));
  }
}

TEST_CASE("independence in the quotient") {
  for (int n = 1; n <= 4; ++n) {
    auto report = verify_independence(n);
    CHECK(report.pass);
    CHECK(report.rank == report.quotient_dim);
    CHECK(report.family_size == report.quotient_dim);
  }
}

TEST_CASE("p2 basis counts are (n+1)^{n-1}") {
  long long expect[] = {0, 1, 3, 16, 125, 1296, 16807, 262144};
  for (int n = 1; n <= kBasisMaxArity; ++n) CHECK(count_p2_basis(n) == expect[n]);
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(enumerate_p2_basis(n).size()) == expect[n]);
}

TEST_CASE("p2 basis listing for n = 2") {
  auto basis = enumerate_p2_basis(2);
  std::set<std::string> rendered;
  for (const auto& m : basis) rendered.insert(m.render());
  CHECK(rendered == std::set<std::string>{"{a1,a2}_1", "{a1,a2}_2", "a1*a2"});
}
