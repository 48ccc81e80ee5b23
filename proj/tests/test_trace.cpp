#include <doctest.h>

#include "oracles.hpp"
#include "wmu/error.hpp"
#include "wmu/trace.hpp"

using namespace wmu;

namespace {

const Polynomial n = Polynomial::variable();

WordTuple tup(std::initializer_list<const char*> words) {
  std::vector<Word> ws;
  for (const char* w : words) ws.push_back(parse(w));
  return WordTuple(ws);
}

RationalFunction tr(const WordTuple& t, bool cyclic = true) {
  TraceOptions o;
  o.enumeration.cyclic_reduce = cyclic;
  return trace_exact(t, o).function;
}

RationalFunction tr(const char* w) { return tr(tup({w})); }

const std::vector<const char*> kRegression{
    "[x,y]", "[x^2,y]", "[x,y]^2", "[x,y]^3", "[x,y][x,z]", "[x,y][x^2 y^2,z]", "[x,y][x,z][x,t]"};

}  // namespace

TEST_CASE("golden traces") {
  CHECK(tr("[x,y]") == RationalFunction(Polynomial(1), n));
  CHECK(tr("[x^2,y]") == RationalFunction(Polynomial(2), n));
  CHECK(tr("[x,y]^2") == RationalFunction(Polynomial(-4), n * n * n - n));
  CHECK(tr("[x,y]^3") == RationalFunction((n * n + 4) * BigRational(9), n * (n * n - 1) * (n * n - 4)));
  CHECK(tr("[x,y][x,z]").is_zero());
  CHECK(tr("[x,y][x^2 y^2,z]") == RationalFunction(n * n - 8, n * (n * n - 1) * (n * n - 4)));
  CHECK(tr("[x,y][x,z][x,t]").is_zero());
  CHECK(tr("[x,y]^2").to_string() == "(-4)/(n^3 - n)");
}

TEST_CASE("unbalanced tuples give zero") {
  const TraceResult r = trace_exact(tup({"x"}));
  CHECK_FALSE(r.balanced);
  CHECK(r.function.is_zero());
  CHECK(r.laurent.identically_zero);
  CHECK(tr(tup({"x y", "X"})).is_zero());
}

TEST_CASE("empty words contribute a factor n") {
  CHECK(tr(tup({"1"})) == RationalFunction(n));
  CHECK(tr(tup({"[x,y]", "1"})) == RationalFunction(1));
  CHECK(tr(tup({"x X", "1"})) == RationalFunction(n * n));
}

TEST_CASE("annuli") {
  CHECK(tr(tup({"x", "X"})) == RationalFunction(1));
  const TraceResult r = trace_exact(tup({"x^2", "X^2"}));
  CHECK(r.function == RationalFunction(2));
  CHECK(r.laurent.coefficient_at(0) == 2);
  CHECK(r.validity_threshold == 2);
  // E |tr U^3|^2 = 3 once n >= 3.
  CHECK(tr(tup({"x^3", "X^3"})) == RationalFunction(3));
}

TEST_CASE("traces match the index-sum oracle on small tuples") {
  for (const WordTuple& t : oracle::small_balanced_tuples(6, 3)) {
    const TraceResult r = trace_exact(t, TraceOptions{{kDefaultPairCap, 1, false}, 4});
    for (int k : {r.validity_threshold, r.validity_threshold + 1}) {
      CHECK_MESSAGE(evaluate_trace(r, k) == oracle::index_sum_trace(t, k), t.to_string() << " n=" << k);
    }
  }
}

TEST_CASE("golden traces match the index-sum oracle") {
  for (const char* w : {"[x,y]", "[x^2,y]", "[x,y]^2", "[x,y][x,z]"}) {
    const WordTuple t = tup({w});
    const TraceResult r = trace_exact(t);
    for (int k : {r.validity_threshold, r.validity_threshold + 1}) {
      CHECK_MESSAGE(evaluate_trace(r, k) == oracle::index_sum_trace(t, k), w << " n=" << k);
    }
  }
  const WordTuple t = tup({"[x,y]^3"});
  CHECK(evaluate_trace(trace_exact(t), 3) == oracle::index_sum_trace(t, 3));
}

TEST_CASE("multiplicative on disjoint generators") {
  const RationalFunction inv_n(Polynomial(1), n);
  CHECK(tr("[x,y][z,t]") == tr("[x,y]") * tr("[z,t]") * inv_n);
  CHECK(tr("[x,y]^2[z,t]") == tr("[x,y]^2") * tr("[z,t]") * inv_n);
  CHECK(tr("[x^2,y][z,t]") == tr("[x^2,y]") * tr("[z,t]") * inv_n);
}

TEST_CASE("conjugation and inversion invariance") {
  for (const char* w : kRegression) {
    const Word v = parse(w);
    const RationalFunction base = tr(w);
    CHECK_MESSAGE(tr(WordTuple({invert(v)})) == base, w);
    for (const char* u : {"x", "Y", "x y", "y X"}) {
      const Word c = concat(concat(parse(u), v), invert(parse(u)));
      if (c.size() > 14) continue;
      CHECK_MESSAGE(tr(WordTuple({c}), false) == base, w << " by " << u);
    }
  }
}

TEST_CASE("parity of the Laurent expansion") {
  for (const char* w : kRegression) CHECK_MESSAGE(parity_report(tup({w})), w);
  CHECK(parity_report(tup({"x", "X"})));
  CHECK(parity_report(tup({"x"})));
  for (const WordTuple& t : oracle::small_balanced_tuples(6, 3)) CHECK(parity_report(t));
}

TEST_CASE("leading term") {
  const LeadingTerm a = trace_leading(tup({"[x,y]^2"}));
  CHECK(a.exponent == -3);
  CHECK(a.coefficient == -4);
  CHECK_FALSE(a.degenerate);
  const LeadingTerm b = trace_leading(tup({"[x,y][x,z]"}));
  CHECK(b.exponent == -3);
  CHECK(b.coefficient == 0);
  CHECK(b.degenerate);
  const LeadingTerm c = trace_leading(tup({"[x^2,y]"}));
  CHECK(c.exponent == -1);
  CHECK(c.coefficient == 2);
  CHECK_FALSE(trace_leading(tup({"x"})).balanced);
}

TEST_CASE("leading term agrees with the Laurent expansion") {
  auto check = [](const WordTuple& t) {
    const TraceResult r = trace_exact(t);
    const LeadingTerm l = trace_leading(t);
    if (r.function.is_zero()) {
      CHECK(l.degenerate);
      return;
    }
    CHECK(r.leading_exponent <= l.exponent);
    if (!l.degenerate) {
      CHECK(r.leading_exponent == l.exponent);
      CHECK(r.leading_coefficient == BigRational(l.coefficient));
    } else {
      CHECK(r.leading_exponent <= l.exponent - 2);
    }
  };
  for (const char* w : kRegression) check(tup({w}));
  for (const WordTuple& t : oracle::small_balanced_tuples(6, 3)) check(t);
}

TEST_CASE("evaluation guards the validity threshold") {
  const TraceResult r = trace_exact(tup({"[x,y]^2"}));
  CHECK(r.validity_threshold == 2);
  CHECK(evaluate_trace(r, 2) == BigRational(-2, 3));
  CHECK_THROWS_AS(evaluate_trace(r, 1), DomainError);
  CHECK_THROWS_AS(evaluate_trace(r, 1, true), PoleError);
  CHECK(evaluate_trace(trace_exact(tup({"x"})), 1) == 0);
}

TEST_CASE("scl upper bounds") {
  const Word c = parse("[x,y]");
  CHECK(scl_upper_bound(c, 1) == BigRational(1, 2));
  CHECK(scl_upper_bound(c, 3) == BigRational(1, 2));
  CHECK_THROWS_AS(scl_upper_bound(parse("x"), 2), DomainError);
  CHECK_THROWS_AS(scl_upper_bound(parse("x X"), 2), DomainError);
  EnumerationConfig tiny;
  tiny.pair_cap = 1;
  CHECK_THROWS_AS(scl_upper_bound(parse("[x,y]^2"), 2, tiny), LimitError);
  for (const char* w : {"[x,y][x,z]", "[x^2,y]", "x y X Y x Y X y"}) {
    BigRational prev = scl_upper_bound(parse(w), 1);
    for (int b = 2; b <= 3; ++b) {
      const BigRational cur = scl_upper_bound(parse(w), b);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}
