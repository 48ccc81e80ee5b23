#include "wmu/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wmu/error.hpp"

namespace wmu {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.generator < 1 || (l.sign != 1 && l.sign != -1)) {
      throw DomainError("invalid letter: generator must be >= 1, sign +-1");
    }
  }
}

Word Word::generator(int index, int sign) {
  return Word({Letter{index, sign}});
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].sign > 0 ? 'x' : 'X';
    out += std::to_string(letters_[i].generator);
  }
  return out;
}

WordTuple::WordTuple(std::vector<Word> words, int rank)
    : words_(std::move(words)), rank_(rank) {
  if (rank_ < 1) throw DomainError("rank must be positive");
  for (const auto& w : words_) {
    if (w.max_generator() > rank_) {
      throw DomainError("word uses generator x" +
                        std::to_string(w.max_generator()) +
                        " beyond rank " + std::to_string(rank_));
    }
  }
}

WordTuple::WordTuple(std::vector<Word> words) : words_(std::move(words)) {
  rank_ = 1;
  for (const auto& w : words_) rank_ = std::max(rank_, w.max_generator());
}

std::string WordTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out += " ; ";
    out += words_[i].to_string();
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  Word parse_all() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    Word w = parse_word();
    skip_ws();
    if (!at_end()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'",
                       pos_);
    }
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  static bool starts_atom(char c) {
    return c == '[' || c == '(' || c == '1' || c == 'x' || c == 'y' ||
           c == 'z' || c == 't' || c == 'X' || c == 'Y' || c == 'Z' ||
           c == 'T';
  }

  Word parse_word() {
    std::vector<Letter> letters;
    skip_ws();
    if (at_end() || !starts_atom(peek())) {
      throw ParseError(at_end() ? "expected a term, found end of input"
                                : std::string("expected a term, found '") +
                                      peek() + "'",
                       pos_);
    }
    while (!at_end() && starts_atom(peek())) {
      Word term = parse_term();
      letters.insert(letters.end(), term.letters().begin(),
                     term.letters().end());
      skip_ws();
    }
    return Word(std::move(letters));
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      return power(atom, parse_signed_int());
    }
    return atom;
  }

  int parse_signed_int() {
    std::size_t start = pos_;
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected an integer exponent", pos_);
    }
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return sign * static_cast<int>(value);
  }

  Word parse_atom() {
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      skip_ws();
      expect(',');
      Word v = parse_word();
      skip_ws();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word u = parse_word();
      skip_ws();
      expect(')');
      return u;
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    ++pos_;
    const int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    int gen = 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == 'x' && !at_end() &&
        std::isdigit(static_cast<unsigned char>(peek()))) {
      long long idx = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        idx = idx * 10 + (peek() - '0');
        if (idx > std::numeric_limits<int>::max() / 16) {
          throw ParseError("generator index too large", start);
        }
        ++pos_;
      }
      if (idx < 1) throw ParseError("generator index must be >= 1", start);
      gen = static_cast<int>(idx);
    } else {
      switch (lower) {
        case 'x': gen = 1; break;
        case 'y': gen = 2; break;
        case 'z': gen = 3; break;
        case 't': gen = 4; break;
        default: throw ParseError("unknown letter", start);
      }
    }
    if (rank_ > 0 && gen > rank_) {
      throw ParseError("generator x" + std::to_string(gen) +
                           " exceeds rank " + std::to_string(rank_),
                       start);
    }
    return Word::generator(gen, sign);
  }

  void expect(char c) {
    if (at_end() || peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse(std::string_view text, int rank) {
  if (rank < 1) throw DomainError("rank must be positive");
  return Parser(text, rank).parse_all();
}

Word parse(std::string_view text) { return Parser(text, 0).parse_all(); }

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word cyclically_reduce(const Word& w) {
  const Word reduced = reduce(w);
  const auto& r = reduced.letters();
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].is_inverse_of(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.begin() + lo, r.begin() + hi));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(out));
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? invert(w) : w;
  const int times = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) {
    out.insert(out.end(), base.letters().begin(), base.letters().end());
  }
  return Word(std::move(out));
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert(u), invert(v)));
}

std::vector<std::int64_t> exponent_sums(const WordTuple& t) {
  int r = t.rank();
  for (const auto& w : t.words()) r = std::max(r, w.max_generator());
  std::vector<std::int64_t> sums(static_cast<std::size_t>(r), 0);
  for (const auto& w : t.words()) {
    for (const auto& l : w.letters()) sums[l.generator - 1] += l.sign;
  }
  return sums;
}

bool is_balanced(const WordTuple& t) {
  const auto sums = exponent_sums(t);
  return std::all_of(sums.begin(), sums.end(),
                     [](std::int64_t s) { return s == 0; });
}

}  // namespace wmu
