#include <doctest.h>

#include <deque>

#include "oracles.hpp"
#include "wmu/classes.hpp"
#include "wmu/error.hpp"

using namespace wmu;

namespace {

WordTuple tup(std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(parse(w));
  return WordTuple(ws);
}

std::vector<MatchingPair> all_pairs(const OccurrenceTable& occ) {
  const auto ms = enumerate_matchings(occ);
  std::vector<MatchingPair> out;
  for (const auto& a : ms) {
    for (const auto& b : ms) out.push_back(analyze_pair(occ, a, b));
  }
  return out;
}

// Reachability over comparable pairs without dropping below chi(p).
bool incompressible_oracle(const std::vector<MatchingPair>& pairs, std::size_t start) {
  const int floor = pairs[start].euler_char;
  std::vector<char> seen(pairs.size(), 0);
  std::deque<std::size_t> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (pairs[i].euler_char > floor) return false;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (seen[j] || pairs[j].euler_char < floor) continue;
      if (pair_leq(pairs[i], pairs[j]) || pair_leq(pairs[j], pairs[i])) {
        seen[j] = 1;
        queue.push_back(j);
      }
    }
  }
  return true;
}

const std::vector<const char*> kRegression{
    "[x,y]", "[x^2,y]", "[x,y]^2", "[x,y]^3", "[x,y][x,z]", "[x,y][x^2 y^2,z]", "[x,y][x,z][x,t]"};

}  // namespace

TEST_CASE("pair order examples") {
  const auto occ = occurrences(tup({"[x,y][x,z]"}));
  const auto ms = enumerate_matchings(occ);
  REQUIRE(ms.size() == 2);
  for (const auto& d : ms) {
    CHECK(pair_leq(d, d, d, d));
    CHECK(pair_leq(d, d, ms[0], ms[1]));
    CHECK(pair_leq(d, d, ms[1], ms[0]));
    CHECK_FALSE(pair_leq(ms[0], ms[1], d, d));
  }
  CHECK_FALSE(pair_leq(ms[0], ms[1], ms[1], ms[0]));
}

TEST_CASE("pair order is a graded partial order and chi is monotone") {
  for (const WordTuple& t : oracle::small_balanced_tuples(6, 3)) {
    const auto occ = occurrences(t);
    const auto pairs = all_pairs(occ);
    const std::size_t m = pairs.size();
    std::vector<char> rel(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) rel[i * m + j] = pair_leq(pairs[i], pairs[j]);
    }
    auto rank = [&](std::size_t i) { return norm(relative(pairs[i].sigma, pairs[i].tau)); };
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i) {
      ok = ok && rel[i * m + i];
      for (std::size_t j = 0; j < m; ++j) {
        if (!rel[i * m + j] || i == j) continue;
        if (rel[j * m + i]) ok = false;
        if (pairs[i].euler_char < pairs[j].euler_char) ok = false;
        bool cover = true;
        for (std::size_t k = 0; k < m; ++k) {
          if (rel[j * m + k] && !rel[i * m + k]) ok = false;
          if (k != i && k != j && rel[i * m + k] && rel[k * m + j]) cover = false;
        }
        if (cover) {
          const int diff = pairs[i].euler_char - pairs[j].euler_char;
          if (rank(j) != rank(i) + 1 || (diff != 0 && diff != 2)) ok = false;
        }
      }
    }
    CHECK_MESSAGE(ok, t.to_string());
  }
}

TEST_CASE("incompressibility") {
  {
    const auto occ = occurrences(tup({"[x^2,y]"}));
    for (const auto& p : all_pairs(occ)) {
      if (p.sigma == p.tau) {
        CHECK(p.euler_char == -1);
        CHECK(is_incompressible(occ, p));
      }
    }
  }
  {
    const auto occ = occurrences(tup({"[x,y]^2"}));
    for (const auto& p : all_pairs(occ)) CHECK(is_incompressible(occ, p) == (p.euler_char == -3));
    CHECK_THROWS_AS(is_incompressible(occ, all_pairs(occ).back(), 1), LimitError);
  }
}

TEST_CASE("incompressibility matches reachability over comparable pairs") {
  for (const WordTuple& t : oracle::small_balanced_tuples(6, 3)) {
    const auto occ = occurrences(t);
    const auto pairs = all_pairs(occ);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      CHECK_MESSAGE(is_incompressible(occ, pairs[i]) == incompressible_oracle(pairs, i), t.to_string());
    }
  }
}

TEST_CASE("solution classes of the regression words") {
  {
    const auto r = solution_classes(tup({"[x,y][x,z]"}));
    REQUIRE(r.classes.size() == 1);
    const auto& c = r.classes.front();
    CHECK(c.pmp.elements.size() == 4);
    CHECK(c.complex.vertices == 4);
    CHECK(c.complex.edges.size() == 4);
    CHECK(c.complex.triangles.empty());
    CHECK(c.complex_euler == 0);
    CHECK(c.mobius_sum == 0);
    CHECK(c.pi1.generators == 1);
    CHECK(c.pi1.relators.empty());
    CHECK(c.pi1.to_string() == "<g1 | >");
  }
  {
    const auto r = solution_classes(tup({"[x^2,y]"}));
    REQUIRE(r.classes.size() == 2);
    for (const auto& c : r.classes) {
      CHECK(c.pmp.elements.size() == 1);
      CHECK(c.mobius_sum == 1);
      CHECK(c.pi1.generators == 0);
    }
  }
  {
    const auto r = solution_classes(tup({"[x,y]^3"}));
    CHECK(r.classes.size() == 9);
    for (const auto& c : r.classes) CHECK(c.pmp.elements.size() == 1);
  }
  {
    const auto r = solution_classes(tup({"[x,y]^2"}));
    REQUIRE(r.classes.size() == 1);
    const auto& c = r.classes.front();
    CHECK(c.complex.vertices == 12);
    CHECK(c.complex.edges.size() == 16);
    CHECK(c.complex_euler == -4);
    CHECK(c.mobius_sum == -4);
    CHECK(c.pi1.generators == 5);
    CHECK(c.pi1.relators.empty());
  }
  {
    const auto r = solution_classes(tup({"[x,y][x,z][x,t]"}));
    REQUIRE(r.classes.size() == 1);
    const auto& c = r.classes.front();
    CHECK(c.complex.vertices == 30);
    CHECK(c.complex.edges.size() == 102);
    CHECK(c.complex.triangles.size() == 72);
    CHECK(c.complex_euler == 0);
  }
  {
    const auto r = solution_classes(tup({"[x,y][x^2 y^2,z]"}));
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes.front().complex_euler == 1);
    CHECK(abelianization_rank(r.classes.front().pi1) == 0);
  }
  CHECK_FALSE(solution_classes(tup({"x"})).balanced);
}

TEST_CASE("order complex counts") {
  const auto r = solution_classes(tup({"[x,y][x,z]"}));
  const auto& c = r.classes.front().complex;
  CHECK(c.chain_counts == std::vector<BigInt>{4, 4});
  CHECK(c.h_euler == 0);
  const auto r2 = solution_classes(tup({"[x,y][x,z][x,t]"}));
  const auto& c2 = r2.classes.front().complex;
  CHECK(c2.chain_counts == std::vector<BigInt>{30, 102, 72});
  CHECK(complex_euler(c2) == 0);
}

TEST_CASE("presentations") {
  OrderComplex point;
  point.vertices = 1;
  CHECK(pi1_presentation(point).generators == 0);
  OrderComplex two;
  two.vertices = 2;
  CHECK_THROWS_AS(pi1_presentation(two), DomainError);
  OrderComplex tri;
  tri.vertices = 3;
  tri.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(pi1_presentation(tri).generators == 1);
  CHECK(abelianization_rank(pi1_presentation(tri)) == 1);
  tri.triangles = {{0, 1, 2}};
  const Presentation filled = pi1_presentation(tri);
  CHECK(filled.generators == 1);
  CHECK(filled.relators.size() == 1);
  CHECK(abelianization_rank(filled) == 0);
  Presentation p;
  p.generators = 2;
  p.relators = {{1, 2, -1, -2}};
  CHECK(abelianization_rank(p) == 2);
  CHECK(p.to_string() == "<g1, g2 | g1 g2 g1^-1 g2^-1>");
}

TEST_CASE("class invariants on regression words and small tuples") {
  std::vector<WordTuple> tuples;
  for (const char* w : kRegression) tuples.push_back(tup({w}));
  for (const WordTuple& t : oracle::small_balanced_tuples(6, 3)) tuples.push_back(t);
  for (const WordTuple& t : tuples) {
    const ClassReport r = solution_classes(t);
    CHECK(r.two_layer_agrees);
    for (const auto& c : r.classes) {
      CHECK(c.mobius_sum == c.complex_euler);
      CHECK(c.chi == r.ch - r.empty_words);
      CHECK_NOTHROW(pi1_presentation(c.complex));
    }
    const LeadingTerm a = leading_via_classes(r);
    const LeadingTerm b = trace_leading(t);
    CHECK(a.exponent == b.exponent);
    CHECK(a.coefficient == b.coefficient);
    CHECK(a.degenerate == b.degenerate);

    // Downward closure: any pair below a member with the same chi is in that class.
    const auto pairs = all_pairs(r.occ);
    for (const auto& c : r.classes) {
      for (const auto& q : pairs) {
        if (q.euler_char != c.chi) continue;
        bool below = false, member = false;
        for (const auto& e : c.pmp.elements) {
          below = below || pair_leq(q, e);
          member = member || (e.sigma == q.sigma && e.tau == q.tau);
        }
        if (below) CHECK(member);
      }
    }
  }
}

TEST_CASE("leading term through classes") {
  const LeadingTerm a = leading_via_classes(tup({"[x,y]^3"}));
  CHECK(a.exponent == -3);
  CHECK(a.coefficient == 9);
  const LeadingTerm b = leading_via_classes(tup({"[x,y][x^2 y^2,z]"}));
  CHECK(b.exponent == -3);
  CHECK(b.coefficient == 1);
  const LeadingTerm c = leading_via_classes(tup({"[x,y][x,z][x,t]"}));
  CHECK(c.exponent == -5);
  CHECK(c.coefficient == 0);
}
