#include "wmu/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wmu/error.hpp"
#include "wmu/parallel.hpp"

namespace wmu {

int OccurrenceTable::max_L_i() const {
  int best = 0;
  for (int g = 1; g <= rank; ++g) best = std::max(best, L_i(g));
  return best;
}

OccurrenceTable occurrences(const WordTuple& t) {
  if (!is_balanced(t)) throw DomainError("tuple is not balanced: " + t.to_string());
  OccurrenceTable occ;
  occ.rank = t.rank();
  std::vector<std::vector<Occurrence>> pos(static_cast<std::size_t>(occ.rank));
  std::vector<std::vector<Occurrence>> neg(static_cast<std::size_t>(occ.rank));
  int offset = 0;
  for (std::size_t w = 0; w < t.size(); ++w) {
    const Word& word = t[w];
    const int len = static_cast<int>(word.size());
    occ.word_offsets.push_back(offset);
    occ.word_lengths.push_back(len);
    for (int i = 0; i < len; ++i) {
      const Letter& l = word[static_cast<std::size_t>(i)];
      Occurrence o{static_cast<int>(w), i, offset + i};
      auto& bucket = (l.sign > 0 ? pos : neg)[static_cast<std::size_t>(l.generator - 1)];
      bucket.push_back(o);
      occ.successor.push_back(offset + (i + 1) % len);
    }
    offset += len;
  }
  occ.block_start.push_back(0);
  for (int g = 0; g < occ.rank; ++g) {
    const auto& p = pos[static_cast<std::size_t>(g)];
    const auto& n = neg[static_cast<std::size_t>(g)];
    occ.positive.insert(occ.positive.end(), p.begin(), p.end());
    occ.negative.insert(occ.negative.end(), n.begin(), n.end());
    occ.block_start.push_back(static_cast<int>(occ.positive.size()));
  }
  return occ;
}

std::uint64_t matching_count(const OccurrenceTable& occ) {
  std::uint64_t total = 1;
  for (int g = 1; g <= occ.rank; ++g) {
    for (int k = 2; k <= occ.L_i(g); ++k) {
      if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      total *= static_cast<std::uint64_t>(k);
    }
  }
  return total;
}

namespace {

void check_pair_cap(std::uint64_t matchings, std::uint64_t cap) {
  const bool over = matchings > 0xFFFFFFFFull || matchings * matchings > cap;
  if (over) {
    throw LimitError("pair-cap", "pair enumeration needs " +
                                     (matchings > 0xFFFFFFFFull
                                          ? std::string("more than 2^64")
                                          : std::to_string(matchings * matchings)) +
                                     " pairs, cap is " + std::to_string(cap));
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const OccurrenceTable& occ,
                                          std::uint64_t pair_cap) {
  check_pair_cap(matching_count(occ), pair_cap);
  const int L = occ.L();
  Matching current;
  current.images.resize(static_cast<std::size_t>(L));
  std::iota(current.images.begin(), current.images.end(), 0);
  std::vector<Matching> out;
  // Mixed radix: the last generator block varies fastest.
  for (;;) {
    out.push_back(current);
    int g = occ.rank;
    for (; g >= 1; --g) {
      auto first = current.images.begin() + occ.block_start[static_cast<std::size_t>(g - 1)];
      auto last = current.images.begin() + occ.block_start[static_cast<std::size_t>(g)];
      if (std::next_permutation(first, last)) break;
    }
    if (g < 1) break;
  }
  return out;
}

Permutation relative(const Matching& sigma, const Matching& tau) {
  const std::size_t L = sigma.images.size();
  std::vector<int> inv(L);
  for (std::size_t k = 0; k < L; ++k) inv[static_cast<std::size_t>(sigma.images[k])] = static_cast<int>(k);
  std::vector<int> pi(L);
  for (std::size_t k = 0; k < L; ++k) pi[k] = inv[static_cast<std::size_t>(tau.images[k])];
  return Permutation(std::move(pi));
}

PairEvaluator::PairEvaluator(const OccurrenceTable& occ)
    : occ_(occ),
      parent_(static_cast<std::size_t>(occ.total_letters())),
      inverse_(static_cast<std::size_t>(occ.L())),
      pi_(static_cast<std::size_t>(occ.L())),
      seen_(static_cast<std::size_t>(occ.L())) {}

int PairEvaluator::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

int PairEvaluator::block_count(const Matching& sigma, const Matching& tau) {
  std::iota(parent_.begin(), parent_.end(), 0);
  int blocks = occ_.total_letters();
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(a)] = b;
      --blocks;
    }
  };
  const auto& succ = occ_.successor;
  for (std::size_t k = 0; k < occ_.positive.size(); ++k) {
    const int p = occ_.positive[k].position;
    const int s = occ_.negative[static_cast<std::size_t>(sigma.images[k])].position;
    const int t = occ_.negative[static_cast<std::size_t>(tau.images[k])].position;
    // in(m) ~ out(sigma(m)),  out(m) ~ in(tau(m)),  out(x) = in(succ(x))
    join(p, succ[static_cast<std::size_t>(s)]);
    join(succ[static_cast<std::size_t>(p)], t);
  }
  return blocks;
}

void PairEvaluator::relative_into(const Matching& sigma, const Matching& tau) {
  const std::size_t L = inverse_.size();
  for (std::size_t k = 0; k < L; ++k) inverse_[static_cast<std::size_t>(sigma.images[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < L; ++k) pi_[k] = inverse_[static_cast<std::size_t>(tau.images[k])];
}

int PairEvaluator::z_disc_count(const Matching& sigma, const Matching& tau) {
  relative_into(sigma, tau);
  std::fill(seen_.begin(), seen_.end(), 0);
  int cycles = 0;
  for (std::size_t s = 0; s < pi_.size(); ++s) {
    if (seen_[s]) continue;
    ++cycles;
    for (std::size_t k = s; !seen_[k]; k = static_cast<std::size_t>(pi_[k])) seen_[k] = 1;
  }
  return cycles;
}

int PairEvaluator::norm(const Matching& sigma, const Matching& tau) {
  return occ_.L() - z_disc_count(sigma, tau);
}

const std::vector<int>& PairEvaluator::cycle_signature(const Matching& sigma,
                                                       const Matching& tau) {
  relative_into(sigma, tau);
  std::fill(seen_.begin(), seen_.end(), 0);
  signature_.clear();
  for (int g = 1; g <= occ_.rank; ++g) {
    const auto begin = signature_.size();
    const int lo = occ_.block_start[static_cast<std::size_t>(g - 1)];
    const int hi = occ_.block_start[static_cast<std::size_t>(g)];
    for (int s = lo; s < hi; ++s) {
      if (seen_[static_cast<std::size_t>(s)]) continue;
      int len = 0;
      for (int k = s; !seen_[static_cast<std::size_t>(k)]; k = pi_[static_cast<std::size_t>(k)]) {
        seen_[static_cast<std::size_t>(k)] = 1;
        ++len;
      }
      signature_.push_back(len);
    }
    std::sort(signature_.begin() + static_cast<std::ptrdiff_t>(begin), signature_.end(),
              std::greater<int>());
    signature_.push_back(0);
  }
  return signature_;
}

int block_count(const OccurrenceTable& occ, const Matching& sigma, const Matching& tau) {
  return PairEvaluator(occ).block_count(sigma, tau);
}

int z_disc_count(const OccurrenceTable& occ, const Matching& sigma, const Matching& tau) {
  return PairEvaluator(occ).z_disc_count(sigma, tau);
}

int euler_char(const OccurrenceTable& occ, const Matching& sigma, const Matching& tau) {
  PairEvaluator ev(occ);
  return ev.block_count(sigma, tau) + ev.z_disc_count(sigma, tau) - occ.total_letters();
}

MatchingPair analyze_pair(const OccurrenceTable& occ, Matching sigma, Matching tau) {
  PairEvaluator ev(occ);
  MatchingPair p;
  p.block_count = ev.block_count(sigma, tau);
  p.z_disc_count = ev.z_disc_count(sigma, tau);
  p.euler_char = p.block_count + p.z_disc_count - occ.total_letters();
  p.sigma = std::move(sigma);
  p.tau = std::move(tau);
  return p;
}

PreparedTuple prepare(const WordTuple& t, bool cyclic_reduce) {
  PreparedTuple out;
  std::vector<Word> kept;
  for (const Word& w : t.words()) {
    Word r = cyclic_reduce ? wmu::cyclically_reduce(w) : w;
    if (r.empty()) {
      ++out.empty_words;
    } else {
      kept.push_back(std::move(r));
    }
  }
  out.core = WordTuple(std::move(kept), t.rank());
  return out;
}

namespace {

struct EulerChunk {
  std::map<int, std::uint64_t> histogram;
  int best = kMinusInfinity;
  int diagonal_best = kMinusInfinity;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> argmax;
};

}  // namespace

EulerSummary max_euler(const WordTuple& t, const EnumerationConfig& config) {
  EulerSummary summary;
  if (!is_balanced(t)) return summary;
  summary.balanced = true;
  const PreparedTuple prep = prepare(t, config.cyclic_reduce);
  const OccurrenceTable occ = occurrences(prep.core);
  summary.matchings = enumerate_matchings(occ, config.pair_cap);
  const auto& ms = summary.matchings;
  const int shift = prep.empty_words - occ.total_letters();

  auto chunks = parallel_chunks<EulerChunk>(
      ms.size(), config.threads, [&](std::size_t begin, std::size_t end, EulerChunk& st) {
        PairEvaluator ev(occ);
        for (std::size_t i = begin; i < end; ++i) {
          for (std::size_t j = 0; j < ms.size(); ++j) {
            const int chi = ev.block_count(ms[i], ms[j]) + ev.z_disc_count(ms[i], ms[j]) + shift;
            ++st.histogram[chi];
            if (i == j) st.diagonal_best = std::max(st.diagonal_best, chi);
            if (chi > st.best) {
              st.best = chi;
              st.argmax.clear();
            }
            if (chi == st.best) {
              st.argmax.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
            }
          }
        }
      });
  for (const auto& c : chunks) {
    for (const auto& [chi, count] : c.histogram) summary.histogram[chi] += count;
    summary.ch = std::max(summary.ch, c.best);
    summary.diagonal_ch = std::max(summary.diagonal_ch, c.diagonal_best);
  }
  for (const auto& c : chunks) {
    if (c.best == summary.ch) summary.argmax.insert(summary.argmax.end(), c.argmax.begin(), c.argmax.end());
  }
  std::sort(summary.argmax.begin(), summary.argmax.end());
  summary.pairs = static_cast<std::uint64_t>(ms.size()) * ms.size();
  return summary;
}

int commutator_length(const Word& w, const EnumerationConfig& config) {
  const EulerSummary s = max_euler(WordTuple({w}, std::max(1, w.max_generator())), config);
  if (!s.balanced) return kInfiniteLength;
  return (1 - s.ch) / 2;
}

std::string render_matching(const OccurrenceTable& occ, const Matching& m) {
  std::string out;
  for (std::size_t k = 0; k < m.images.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(occ.positive[k].position + 1) + "->" +
           std::to_string(occ.negative[static_cast<std::size_t>(m.images[k])].position + 1);
  }
  return out;
}

Matching parse_matching(const OccurrenceTable& occ, const std::string& text) {
  std::vector<int> pos_index(static_cast<std::size_t>(occ.total_letters()), -1);
  std::vector<int> neg_index(static_cast<std::size_t>(occ.total_letters()), -1);
  for (std::size_t k = 0; k < occ.positive.size(); ++k) {
    pos_index[static_cast<std::size_t>(occ.positive[k].position)] = static_cast<int>(k);
    neg_index[static_cast<std::size_t>(occ.negative[k].position)] = static_cast<int>(k);
  }
  Matching m;
  m.images.assign(occ.positive.size(), -1);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  auto number = [&]() -> int {
    const std::size_t start = i;
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) throw ParseError("position too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a letter position", start);
    return static_cast<int>(v);
  };
  skip();
  while (i < text.size()) {
    const std::size_t item = i;
    const int p = number();
    if (text.compare(i, 2, "->") == 0) {
      i += 2;
    } else if (i < text.size() && text[i] == ':') {
      ++i;
    } else {
      throw ParseError("expected '->' or ':'", i);
    }
    const int q = number();
    if (p < 1 || p > occ.total_letters() || q < 1 || q > occ.total_letters()) {
      throw ParseError("position out of range", item);
    }
    const int a = pos_index[static_cast<std::size_t>(p - 1)];
    const int b = neg_index[static_cast<std::size_t>(q - 1)];
    if (a < 0) throw ParseError("position " + std::to_string(p) + " is not a positive letter", item);
    if (b < 0) throw ParseError("position " + std::to_string(q) + " is not an inverse letter", item);
    if (m.images[static_cast<std::size_t>(a)] != -1) throw ParseError("position matched twice", item);
    m.images[static_cast<std::size_t>(a)] = b;
    skip();
  }
  std::vector<char> used(occ.negative.size(), 0);
  for (int g = 1; g <= occ.rank; ++g) {
    const int lo = occ.block_start[static_cast<std::size_t>(g - 1)];
    const int hi = occ.block_start[static_cast<std::size_t>(g)];
    for (int k = lo; k < hi; ++k) {
      const int img = m.images[static_cast<std::size_t>(k)];
      if (img < 0) throw DomainError("matching leaves a positive letter unmatched");
      if (img < lo || img >= hi) throw DomainError("matching does not preserve generators");
      if (used[static_cast<std::size_t>(img)]) throw DomainError("matching is not injective");
      used[static_cast<std::size_t>(img)] = 1;
    }
  }
  return m;
}

}  // namespace wmu
