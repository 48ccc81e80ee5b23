#include <doctest.h>

#include "oracles.hpp"
#include "wmu/error.hpp"
#include "wmu/perm.hpp"

using namespace wmu;

namespace {

Permutation cyc(int L, std::vector<int> cycle) {
  std::vector<int> img(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) img[static_cast<std::size_t>(i)] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    img[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(img);
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0}), DomainError);
  const Permutation p = cyc(3, {0, 1, 2});
  CHECK(p * p.inverse() == Permutation::identity(3));
  CHECK((p * Permutation::transposition(3, 0, 1))(0) == p(1));
  CHECK(cycle_type(p) == IntegerPartition({3}));
  CHECK(cycle_type(Permutation::transposition(4, 1, 3)) == IntegerPartition({2, 1, 1}));
  CHECK(IntegerPartition({1, 2, 1}).to_string() == "(2,1,1)");
  CHECK_THROWS_AS(IntegerPartition({2, 0}), DomainError);
  CHECK(p.sign() == 1);
}

TEST_CASE("partitions") {
  const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int L = 1; L <= 8; ++L) {
    const auto ps = partitions(L);
    CHECK(static_cast<int>(ps.size()) == counts[static_cast<std::size_t>(L)]);
    CHECK(ps.front() == IntegerPartition({L}));
    for (const auto& mu : ps) CHECK(mu.size() == L);
    BigInt total = 0;
    for (const auto& mu : ps) total += class_size(mu);
    CHECK(total == factorial(L));
  }
}

TEST_CASE("norm") {
  CHECK(norm(Permutation::identity(3)) == 0);
  CHECK(norm(Permutation::transposition(3, 0, 1)) == 1);
  CHECK(norm(cyc(3, {0, 1, 2})) == 2);
  CHECK(norm(IntegerPartition({3, 2, 1})) == 3);
}

TEST_CASE("norm is the Cayley graph distance and a length function on S_4") {
  const auto dist = oracle::cayley_distances(4);
  const auto all = oracle::all_permutations(4);
  for (const auto& p : all) {
    CHECK(norm(p) == dist.at(p.images()));
    CHECK((norm(p) == 0) == (p == Permutation::identity(4)));
    for (const auto& q : all) CHECK(norm(p * q) <= norm(p) + norm(q));
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) CHECK(norm(Permutation::transposition(4, a, b)) == 1);
  }
}

TEST_CASE("leq examples against geodesics") {
  const auto t12 = Permutation::transposition(3, 0, 1);
  const auto c123 = cyc(3, {0, 1, 2});
  CHECK(leq(t12, c123));
  CHECK(leq(Permutation::identity(3), c123));
  const auto s12 = Permutation::transposition(4, 0, 1);
  const auto s34 = Permutation::transposition(4, 2, 3);
  CHECK(leq(s12, s12 * s34));
  CHECK_FALSE(leq(s12, s34));

  // s <= t iff s lies on a geodesic from id to t in the Cayley graph.
  for (int L = 2; L <= 4; ++L) {
    const auto dist = oracle::cayley_distances(L);
    const auto all = oracle::all_permutations(L);
    for (const auto& s : all) {
      for (const auto& t : all) {
        const bool geodesic = dist.at(s.images()) + dist.at((s.inverse() * t).images()) == dist.at(t.images());
        CHECK(leq(s, t) == geodesic);
      }
    }
  }
}

TEST_CASE("leq is a partial order on S_L for L <= 5") {
  for (int L = 1; L <= 5; ++L) {
    const auto all = oracle::all_permutations(L);
    const std::size_t m = all.size();
    std::vector<char> rel(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = leq(all[i], all[j]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      ok = ok && rel[i * m + i];
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && rel[i * m + j] && rel[j * m + i]) ok = false;
        if (!rel[i * m + j]) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (rel[j * m + k] && !rel[i * m + k]) ok = false;
        }
      }
    }
    CHECK_MESSAGE(ok, "L = " << L);
  }
}

TEST_CASE("catalan and factorial") {
  const std::vector<long> cat{1, 1, 2, 5, 14, 42, 132, 429};
  for (int m = 0; m < 8; ++m) CHECK(catalan(m) == cat[static_cast<std::size_t>(m)]);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("mobius examples") {
  CHECK(mobius(Permutation::identity(4)) == 1);
  CHECK(mobius(Permutation::transposition(5, 1, 4)) == -1);
  CHECK(mobius(cyc(3, {0, 1, 2})) == 2);
  CHECK(mobius(IntegerPartition({4})) == -5);
  CHECK(mobius(IntegerPartition({2, 2})) == 1);
  CHECK(mobius(IntegerPartition({3, 2})) == -2);
}

TEST_CASE("mobius satisfies the defining relation on intervals for L <= 4") {
  for (int L = 1; L <= 4; ++L) {
    const auto all = oracle::all_permutations(L);
    for (const auto& s : all) {
      for (const auto& t : all) {
        if (!leq(s, t)) continue;
        BigInt sum = 0;
        for (const auto& p : all) {
          if (leq(s, p) && leq(p, t)) sum += mobius(s.inverse() * p);
        }
        CHECK(sum == (s == t ? 1 : 0));
      }
    }
  }
}

TEST_CASE("character examples") {
  CHECK(character(IntegerPartition({4}), IntegerPartition({2, 1, 1})) == 1);
  CHECK(character(IntegerPartition({1, 1, 1, 1}), IntegerPartition({2, 1, 1})) == -1);
  CHECK(character(IntegerPartition({1, 1, 1, 1}), IntegerPartition({3, 1})) == 1);
  CHECK(character(IntegerPartition({2, 1}), IntegerPartition({1, 1, 1})) == 2);
  CHECK(character(IntegerPartition({2, 1}), IntegerPartition({3})) == -1);
  CHECK(character(IntegerPartition({2, 1}), IntegerPartition({2, 1})) == 0);
  CHECK_THROWS_AS(character(IntegerPartition({2, 1}), IntegerPartition({2})), DomainError);
}

TEST_CASE("character orthogonality for L <= 6") {
  for (int L = 1; L <= 6; ++L) {
    const auto ps = partitions(L);
    for (const auto& a : ps) {
      CHECK(character(a, IntegerPartition(std::vector<int>(static_cast<std::size_t>(L), 1))) == dimension(a));
      for (const auto& b : ps) {
        BigInt sum = 0;
        for (const auto& mu : ps) sum += class_size(mu) * character(a, mu) * character(b, mu);
        CHECK(sum == (a == b ? factorial(L) : BigInt(0)));
      }
    }
  }
}

TEST_CASE("dimensions") {
  CHECK(dimension(IntegerPartition({3})) == 1);
  CHECK(dimension(IntegerPartition({2, 1})) == 2);
  CHECK(dimension(IntegerPartition({2, 2})) == 2);
  CHECK(dimension(IntegerPartition({3, 2})) == 5);
  for (int L = 1; L <= 8; ++L) {
    BigInt sum = 0;
    for (const auto& lam : partitions(L)) sum += dimension(lam) * dimension(lam);
    CHECK(sum == factorial(L));
  }
}

TEST_CASE("content polynomials") {
  const Polynomial n = Polynomial::variable();
  CHECK(content_polynomial(IntegerPartition({1})) == n);
  CHECK(content_polynomial(IntegerPartition({2})) == n * (n + 1));
  CHECK(content_polynomial(IntegerPartition({2, 1})) == n * n * n - n);
  CHECK(content_polynomial(IntegerPartition({1, 1, 1})) == n * (n - 1) * (n - 2));
}
