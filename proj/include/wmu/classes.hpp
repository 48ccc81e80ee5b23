#pragma once

// Solution classes of maximal-chi matching pairs, their posets, order
// complexes, Euler characteristics and fundamental group presentations.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wmu/surfaces.hpp"
#include "wmu/trace.hpp"

namespace wmu {

// (sigma', tau') <= (sigma, tau) iff
// |sigma^-1 tau| = |sigma^-1 sigma'| + |sigma'^-1 tau'| + |tau'^-1 tau|.
bool pair_leq(const Matching& sigma_low, const Matching& tau_low,
              const Matching& sigma, const Matching& tau);
bool pair_leq(const MatchingPair& low, const MatchingPair& high);

// BFS over single-transposition moves in either coordinate, never entering
// pairs with chi below chi(p). False iff a pair with larger chi is reached.
// Throws LimitError ("pair-cap") when the search visits more than `pair_cap`
// pairs.
bool is_incompressible(const OccurrenceTable& occ, const MatchingPair& p,
                       std::uint64_t pair_cap = kDefaultPairCap);

struct PairPoset {
  std::vector<MatchingPair> elements;  // sorted by (rank, sigma, tau)
  std::vector<int> rank;               // |sigma^-1 tau|
  std::vector<std::vector<int>> below;  // strictly smaller elements
  std::vector<std::vector<int>> covers;  // upper covers
};

PairPoset build_poset(std::vector<MatchingPair> elements);

struct OrderComplex {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;     // (lower, upper)
  std::vector<std::array<int, 3>> triangles;  // a < b < c
  std::vector<BigInt> chain_counts;           // chain_counts[k]: chains of k+1 elements
  BigInt h_euler = 0;                         // sum of h(x), h(x) = 1 - sum_{y<x} h(y)
};

OrderComplex order_complex(const PairPoset& p);

// Alternating chain count; throws DomainError if it disagrees with h_euler.
BigInt complex_euler(const OrderComplex& c);

BigInt mobius_sum(const PairPoset& p);

// Generators are signed 1-based indices; a relator is a word in them.
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
  std::string to_string() const;
};

// Spanning tree of the 1-skeleton, non-tree edges as generators, triangle
// boundaries as relators (freely reduced, empties and duplicates dropped).
// Throws DomainError for a disconnected complex.
Presentation pi1_presentation(const OrderComplex& c);

// Rank of the abelianisation of the presented group (dimension over Q).
int abelianization_rank(const Presentation& p);

struct SolutionClass {
  int chi = 0;
  PairPoset pmp;
  OrderComplex complex;
  BigInt complex_euler = 0;
  BigInt mobius_sum = 0;
  Presentation pi1;
};

struct ClassReport {
  bool balanced = false;
  int ch = kMinusInfinity;
  int empty_words = 0;
  OccurrenceTable occ;  // of the prepared tuple
  std::vector<SolutionClass> classes;
  // Partition obtained from the bottom two ranks alone matches the full one.
  bool two_layer_agrees = true;
};

ClassReport solution_classes(const WordTuple& t, const EnumerationConfig& config = {});

// (ch, sum of class Euler characteristics).
LeadingTerm leading_via_classes(const WordTuple& t, const EnumerationConfig& config = {});
LeadingTerm leading_via_classes(const ClassReport& report);

}  // namespace wmu
