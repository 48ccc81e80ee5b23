#pragma once

// Matchings of letter occurrences and the disc counts of the surface glued
// from a pair of matchings. Nothing geometric is built: type-o discs are
// union-find blocks, type-z discs are cycles of sigma^-1 tau.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wmu/perm.hpp"
#include "wmu/word.hpp"

namespace wmu {

struct Occurrence {
  int word = 0;      // index in the tuple
  int letter = 0;    // index in the word
  int position = 0;  // index in the flattened tuple
};

// Positive and negative occurrences, generator-major, each generator block
// in (word, letter) order.
struct OccurrenceTable {
  int rank = 0;
  std::vector<int> word_offsets;  // start of each word in the flattened tuple
  std::vector<int> word_lengths;
  std::vector<Occurrence> positive;
  std::vector<Occurrence> negative;
  std::vector<int> block_start;  // size rank + 1; generator g owns [block_start[g-1], block_start[g])
  std::vector<int> successor;    // cyclic successor of each flattened position

  int total_letters() const { return static_cast<int>(successor.size()); }
  int L() const { return static_cast<int>(positive.size()); }
  int L_i(int generator) const {
    return block_start[static_cast<std::size_t>(generator)] -
           block_start[static_cast<std::size_t>(generator - 1)];
  }
  int max_L_i() const;
};

// Throws DomainError when the tuple is not balanced.
OccurrenceTable occurrences(const WordTuple& t);

// images[k] is the negative occurrence matched with positive occurrence k;
// it always lies in the same generator block as k.
struct Matching {
  std::vector<int> images;
  auto operator<=>(const Matching&) const = default;
};

// Product of L_i! (saturating at UINT64_MAX).
std::uint64_t matching_count(const OccurrenceTable& occ);

inline constexpr std::uint64_t kDefaultPairCap = 100000000;

struct EnumerationConfig {
  std::uint64_t pair_cap = kDefaultPairCap;
  int threads = 0;  // 0: hardware concurrency
  bool cyclic_reduce = true;
};

// All matchings, lexicographic in the image vector. Throws LimitError
// ("pair-cap") when matching_count^2 exceeds the cap.
std::vector<Matching> enumerate_matchings(const OccurrenceTable& occ,
                                          std::uint64_t pair_cap = kDefaultPairCap);

// sigma^-1 tau as a permutation of the positive occurrences.
Permutation relative(const Matching& sigma, const Matching& tau);

int block_count(const OccurrenceTable& occ, const Matching& sigma, const Matching& tau);
int z_disc_count(const OccurrenceTable& occ, const Matching& sigma, const Matching& tau);
int euler_char(const OccurrenceTable& occ, const Matching& sigma, const Matching& tau);

struct MatchingPair {
  Matching sigma;
  Matching tau;
  int block_count = 0;
  int z_disc_count = 0;
  int euler_char = 0;
};

MatchingPair analyze_pair(const OccurrenceTable& occ, Matching sigma, Matching tau);

// Allocation-free evaluation of many pairs over one table.
class PairEvaluator {
 public:
  explicit PairEvaluator(const OccurrenceTable& occ);

  int block_count(const Matching& sigma, const Matching& tau);
  int z_disc_count(const Matching& sigma, const Matching& tau);
  // Cycle lengths of (sigma^-1 tau) restricted to each generator, each block
  // sorted descending and terminated by 0. Suitable as a map key.
  const std::vector<int>& cycle_signature(const Matching& sigma, const Matching& tau);
  int norm(const Matching& sigma, const Matching& tau);

 private:
  int find(int x);
  void relative_into(const Matching& sigma, const Matching& tau);

  const OccurrenceTable& occ_;
  std::vector<int> parent_;
  std::vector<int> inverse_;
  std::vector<int> pi_;
  std::vector<char> seen_;
  std::vector<int> signature_;
};

// Cyclic reduction (optional) and removal of empty words.
struct PreparedTuple {
  WordTuple core;       // no empty words
  int empty_words = 0;  // each contributes a disc to chi and a factor n to the trace
};

PreparedTuple prepare(const WordTuple& t, bool cyclic_reduce = true);

inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();
inline constexpr int kInfiniteLength = std::numeric_limits<int>::max();

struct EulerSummary {
  bool balanced = false;
  int ch = kMinusInfinity;           // includes +1 per empty word
  int diagonal_ch = kMinusInfinity;  // max over (sigma, sigma)
  std::uint64_t pairs = 0;
  std::map<int, std::uint64_t> histogram;
  // Achieving pairs as (sigma index, tau index) into `matchings`, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> argmax;
  std::vector<Matching> matchings;
};

EulerSummary max_euler(const WordTuple& t, const EnumerationConfig& config = {});

// (1 - ch) / 2 for one word; kInfiniteLength when unbalanced.
int commutator_length(const Word& w, const EnumerationConfig& config = {});

// "1->3 2->4": 1-based flattened positions, positive occurrence first.
std::string render_matching(const OccurrenceTable& occ, const Matching& m);

// Inverse of render_matching; also accepts "p:q" items and commas.
// Throws ParseError on malformed text, DomainError when the result is not a
// colour-preserving bijection.
Matching parse_matching(const OccurrenceTable& occ, const std::string& text);

}  // namespace wmu
