#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wmu/error.hpp"
#include "wmu/word.hpp"

using namespace wmu;

namespace {

Word w(const char* text) { return parse(text); }

Word random_word(std::mt19937& rng, int length, int rank) {
  std::vector<Letter> letters;
  std::uniform_int_distribution<int> gen(1, rank), sign(0, 1);
  for (int i = 0; i < length; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word(letters);
}

}  // namespace

TEST_CASE("parse expands commutators and powers without reducing") {
  CHECK(parse("[x,y]", 2).to_string() == "x1 x2 X1 X2");
  CHECK(parse("x1 X1", 1).to_string() == "x1 X1");
  CHECK(parse("[x,y]^2", 2).to_string() == "x1 x2 X1 X2 x1 x2 X1 X2");
  CHECK(parse("X^3").to_string() == "X1 X1 X1");
  CHECK(parse("x^-2").to_string() == "X1 X1");
  CHECK(parse("(xy)^2 t").to_string() == "x1 x2 x1 x2 x4");
  CHECK(parse("[x^2 y^2, z]").to_string() == "x1 x1 x2 x2 x3 X2 X2 X1 X1 X3");
  CHECK(parse("x12 X3").to_string() == "x12 X3");
  CHECK(parse("1").empty());
  CHECK(parse("  x   y ").size() == 2);
}

TEST_CASE("parse reports the failing position") {
  auto position_of = [](const char* text, int rank) -> std::size_t {
    try {
      parse(text, rank);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("[x,y", 2) == 4);
  CHECK(position_of("x q", 2) == 2);
  CHECK(position_of("z", 2) == 0);
  CHECK(position_of("x^", 2) == 2);
  CHECK(position_of("", 2) == 0);
  CHECK(position_of("x2 x7", 5) == 3);
  CHECK_THROWS_AS(parse("x0"), ParseError);
}

TEST_CASE("free reduction") {
  CHECK(reduce(w("x X")).empty());
  CHECK(reduce(w("[x,y]")) == w("[x,y]"));
  CHECK(reduce(w("x y Y X x")) == w("x"));
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, i % 12, 3);
    const Word r = reduce(u);
    CHECK(reduce(r) == r);
    CHECK(r.size() <= u.size());
    CHECK(reduce(concat(u, invert(u))).empty());
  }
}

TEST_CASE("cyclic reduction") {
  CHECK(cyclically_reduce(w("X [x,y] x")) == w("y X Y x"));
  CHECK(cyclically_reduce(w("[x,y]")) == w("[x,y]"));
  CHECK(cyclically_reduce(Word()).empty());
  CHECK(cyclically_reduce(w("x y X")) == w("y"));
}

TEST_CASE("cyclic reduction is a shortest conjugate") {
  // Every freely reduced word of length <= 4 over x, y.
  std::vector<Word> conjugators{Word()};
  for (std::size_t i = 0; i < conjugators.size(); ++i) {
    if (conjugators[i].size() == 4) continue;
    for (const char* l : {"x", "X", "y", "Y"}) {
      const Word next = concat(conjugators[i], w(l));
      if (reduce(next).size() == next.size()) conjugators.push_back(next);
    }
  }
  REQUIRE(conjugators.size() == 161);
  std::mt19937 rng(11);
  for (int i = 0; i < 120; ++i) {
    const Word v = random_word(rng, 1 + i % 8, 2);
    const Word c = cyclically_reduce(v);
    bool reached = false;
    for (const Word& u : conjugators) {
      const Word conj = reduce(concat(concat(u, v), invert(u)));
      CHECK(conj.size() >= c.size());
      if (conj == c) reached = true;
      const Word conj2 = reduce(concat(concat(invert(u), v), u));
      CHECK(conj2.size() >= c.size());
      if (conj2 == c) reached = true;
    }
    CHECK(reached);
  }
}

TEST_CASE("free group operations") {
  CHECK(invert(w("[x,y]")) == w("y x Y X"));
  CHECK(power(w("x"), 3) == w("x x x"));
  CHECK(power(w("x y"), -2) == w("Y X Y X"));
  CHECK(power(w("x"), 0).empty());
  CHECK(commutator(w("x"), w("y")) == w("[x,y]"));
}

TEST_CASE("exponent sums and balance") {
  CHECK(exponent_sums(WordTuple({w("[x,y]")})) == std::vector<std::int64_t>{0, 0});
  CHECK(exponent_sums(WordTuple({w("x x y")})) == std::vector<std::int64_t>{2, 1});
  CHECK(exponent_sums(WordTuple({w("[x,y][x,z]")})) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(is_balanced(WordTuple({w("[x,y]^2")})));
  CHECK_FALSE(is_balanced(WordTuple({w("x")})));
  CHECK(is_balanced(WordTuple({w("x"), w("X")})));
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, i % 10, 3);
    const WordTuple t({u}, 3);
    const bool b = is_balanced(t);
    CHECK(b == (exponent_sums(t) == std::vector<std::int64_t>(3, 0)));
    CHECK(b == is_balanced(WordTuple({reduce(u)}, 3)));
    CHECK(b == is_balanced(WordTuple({cyclically_reduce(u)}, 3)));
  }
}

TEST_CASE("tuples validate rank") {
  CHECK_THROWS_AS(WordTuple({w("z")}, 2), DomainError);
  CHECK(WordTuple({w("z")}).rank() == 3);
  CHECK(WordTuple({Word()}).rank() == 1);
  CHECK(WordTuple({w("x"), Word()}).to_string() == "x1 ; 1");
}
