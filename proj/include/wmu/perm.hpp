#pragma once

// Permutations of {0, ..., L-1}, the transposition-length order on S_L, its
// Möbius function, and the irreducible characters of S_L.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wmu/ratfn.hpp"

namespace wmu {

class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless `images` is a bijection of {0..L-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // (p * q)(k) = p(q(k)): apply q first.
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  int cycle_count() const;
  // Cycle lengths sorted descending, fixed points included.
  std::vector<int> cycle_lengths() const;
  int sign() const;

  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const;  // cycle notation with fixed points

 private:
  std::vector<int> images_;
};

// Weakly decreasing positive parts. Also used for cycle types: a cycle type
// always lists fixed points explicitly, so its parts sum to L.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Parts are sorted descending; throws DomainError on a non-positive part.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }

  auto operator<=>(const IntegerPartition&) const = default;
  std::string to_string() const;  // "(2,1,1)"

 private:
  std::vector<int> parts_;
};

using CycleType = IntegerPartition;

CycleType cycle_type(const Permutation& p);

// All partitions of L in reverse lexicographic order, starting with (L).
std::vector<IntegerPartition> partitions(int L);

// L - #cycles; the length of a shortest transposition factorisation.
int norm(const Permutation& p);
int norm(const CycleType& mu);

// s <= t iff norm(t) == norm(s) + norm(s^-1 t).
bool leq(const Permutation& s, const Permutation& t);

BigInt catalan(int m);
BigInt factorial(int m);

// sgn(p) * prod over cycles C of catalan(|C| - 1).
BigInt mobius(const Permutation& p);
BigInt mobius(const CycleType& mu);

// Number of permutations with cycle type mu.
BigInt class_size(const CycleType& mu);

// Irreducible character chi_lambda at cycle type mu (Murnaghan–Nakayama).
// Results are memoised process-wide; safe to call concurrently.
BigInt character(const IntegerPartition& lambda, const CycleType& mu);

// chi_lambda(e) by the hook length formula.
BigInt dimension(const IntegerPartition& lambda);

// prod over cells (i, j) of lambda of (n + j - i).
Polynomial content_polynomial(const IntegerPartition& lambda);

}  // namespace wmu
