#pragma once

// Expected products of traces of word maps on Haar-random unitaries, as exact
// rational functions of n.

#include "wmu/ratfn.hpp"
#include "wmu/surfaces.hpp"
#include "wmu/word.hpp"

namespace wmu {

inline constexpr int kDefaultLaurentDepth = 8;

struct TraceOptions {
  EnumerationConfig enumeration;
  int laurent_depth = kDefaultLaurentDepth;
};

struct TraceResult {
  bool balanced = false;
  RationalFunction function;
  int validity_threshold = 1;  // max_i L_i, at least 1
  LaurentSeries laurent;
  // First nonzero Laurent term; meaningless when the function is zero.
  int leading_exponent = 0;
  BigRational leading_coefficient;
};

// The zero function for unbalanced tuples. Throws LimitError on the pair cap.
TraceResult trace_exact(const WordTuple& t, const TraceOptions& options = {});

// Exact value at n. Throws DomainError below the validity threshold unless
// `allow_below` is set, PoleError at a pole.
BigRational evaluate_trace(const TraceResult& r, const BigRational& n,
                           bool allow_below = false);

struct LeadingTerm {
  bool balanced = false;
  int exponent = kMinusInfinity;  // ch
  BigInt coefficient = 0;         // sum of Mob(sigma^-1 tau) over pairs with chi = ch
  bool degenerate = false;        // coefficient vanished: true exponent <= ch - 2
};

LeadingTerm trace_leading(const WordTuple& t, const EnumerationConfig& config = {});

// Every nonzero Laurent coefficient sits at an exponent with the parity of
// the number of words. Vacuously true for unbalanced input.
bool parity_report(const WordTuple& t, const TraceOptions& options = {});
bool parity_report(const TraceResult& r, int word_count);

// min over j_1 >= ... >= j_l >= 1 with sum j <= budget of
// -ch(w^j_1, ..., w^j_l) / (2 sum j). Tuples over the pair cap are skipped;
// LimitError when every tuple is skipped. DomainError unless w is balanced
// and not conjugate to the identity.
BigRational scl_upper_bound(const Word& w, int budget, const EnumerationConfig& config = {});

}  // namespace wmu
