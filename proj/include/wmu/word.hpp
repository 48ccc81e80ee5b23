#pragma once

// Words in the free group F_r.
//
// A Word is a plain sequence of signed generator letters. Nothing reduces a
// word implicitly: `reduce` and `cyclically_reduce` are explicit operations,
// since the matching combinatorics downstream depend on the presentation.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wmu {

struct Letter {
  int generator = 1;  // 1-based: generator i means x_i
  int sign = 1;       // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  bool is_inverse_of(const Letter& o) const {
    return generator == o.generator && sign == -o.sign;
  }
  auto operator<=>(const Letter&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  // Single-letter word x_generator^sign.
  static Word generator(int index, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  // Largest generator index used, 0 for the empty word.
  int max_generator() const;

  // Canonical indexed form, e.g. "x1 x2 X1 X2"; the empty word is "1".
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// An ordered tuple of words together with the rank r of the ambient free
// group. Empty words are allowed.
class WordTuple {
 public:
  WordTuple() = default;
  WordTuple(std::vector<Word> words, int rank);
  // Rank defaults to the largest generator used (at least 1).
  explicit WordTuple(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  int rank() const { return rank_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }

  std::string to_string() const;  // words joined by " ; "

 private:
  std::vector<Word> words_;
  int rank_ = 1;
};

// Parses the word grammar:
//   word   := term { term }
//   term   := atom [ '^' signed-int ]
//   atom   := letter | '[' word ',' word ']' | '(' word ')' | '1'
//   letter := x y z t (generators 1..4) | X Y Z T (inverses)
//           | ('x' | 'X') digits
// Whitespace between terms is ignored. Commutators use [u,v] = u v U V.
// Throws ParseError on bad syntax or a generator index above `rank`.
Word parse(std::string_view text, int rank);

// Same, with no rank bound.
Word parse(std::string_view text);

Word reduce(const Word& w);
Word cyclically_reduce(const Word& w);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, int k);
Word commutator(const Word& u, const Word& v);

// Entry i-1 is the signed count of x_i over all words of the tuple.
std::vector<std::int64_t> exponent_sums(const WordTuple& t);
bool is_balanced(const WordTuple& t);

}  // namespace wmu
