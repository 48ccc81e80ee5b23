#include "wmu/trace.hpp"

#include <map>

#include "wmu/error.hpp"
#include "wmu/parallel.hpp"
#include "wmu/weingarten.hpp"

namespace wmu {

namespace {

using GroupKey = std::pair<std::vector<int>, int>;  // cycle signature, block count
using GroupCounts = std::map<GroupKey, std::uint64_t>;

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  return divmod(a * b, gcd(a, b)).first.primitive_part();
}

// Wg over a common denominator for one value of L_i.
struct PooledTable {
  Polynomial denominator = Polynomial(1);
  std::map<std::vector<int>, Polynomial> numerators;  // keyed by cycle lengths
};

PooledTable pooled_table(int L) {
  PooledTable pool;
  if (L == 0) {
    pool.numerators.emplace(std::vector<int>{}, Polynomial(1));
    return pool;
  }
  const WeingartenTable table = wg_table(L);
  for (const auto& [mu, wg] : table.entries) pool.denominator = lcm(pool.denominator, wg.denominator());
  for (const auto& [mu, wg] : table.entries) {
    pool.numerators.emplace(mu.parts(),
                            wg.numerator() * divmod(pool.denominator, wg.denominator()).first);
  }
  return pool;
}

BigInt signature_mobius(const std::vector<int>& signature) {
  BigInt m = 1;
  for (int len : signature) {
    if (len <= 0) continue;
    m *= catalan(len - 1);
    if ((len - 1) % 2) m = -m;
  }
  return m;
}

}  // namespace

TraceResult trace_exact(const WordTuple& t, const TraceOptions& options) {
  TraceResult result;
  if (!is_balanced(t)) {
    result.laurent = laurent_at_infinity(result.function, std::max(1, options.laurent_depth));
    return result;
  }
  result.balanced = true;
  const PreparedTuple prep = prepare(t, options.enumeration.cyclic_reduce);
  const OccurrenceTable occ = occurrences(prep.core);
  result.validity_threshold = std::max(1, occ.max_L_i());
  const std::vector<Matching> ms = enumerate_matchings(occ, options.enumeration.pair_cap);

  auto chunks = parallel_chunks<GroupCounts>(
      ms.size(), options.enumeration.threads,
      [&](std::size_t begin, std::size_t end, GroupCounts& counts) {
        PairEvaluator ev(occ);
        for (std::size_t i = begin; i < end; ++i) {
          for (const Matching& tau : ms) {
            const int b = ev.block_count(ms[i], tau);
            ++counts[GroupKey(ev.cycle_signature(ms[i], tau), b)];
          }
        }
      });
  GroupCounts counts;
  for (auto& c : chunks) {
    for (auto& [key, n] : c) counts[key] += n;
  }

  std::map<int, PooledTable> pools;
  Polynomial denominator(1);
  for (int g = 1; g <= occ.rank; ++g) {
    const int L = occ.L_i(g);
    auto it = pools.find(L);
    if (it == pools.end()) it = pools.emplace(L, pooled_table(L)).first;
    denominator *= it->second.denominator;
  }

  std::map<std::vector<int>, Polynomial> product_cache;
  Polynomial numerator;
  for (const auto& [key, count] : counts) {
    const auto& [signature, blocks] = key;
    auto cached = product_cache.find(signature);
    if (cached == product_cache.end()) {
      Polynomial prod(1);
      std::size_t pos = 0;
      for (int g = 1; g <= occ.rank; ++g) {
        std::vector<int> mu;
        while (signature[pos] != 0) mu.push_back(signature[pos++]);
        ++pos;
        prod *= pools.at(occ.L_i(g)).numerators.at(mu);
      }
      cached = product_cache.emplace(signature, std::move(prod)).first;
    }
    numerator += cached->second * Polynomial::monomial(BigRational(BigInt(std::to_string(count))),
                                                       blocks + prep.empty_words);
  }
  result.function = RationalFunction(numerator, denominator);
  result.laurent = laurent_at_infinity(result.function, std::max(1, options.laurent_depth));
  if (!result.function.is_zero()) {
    result.leading_exponent = result.laurent.leading_exponent;
    result.leading_coefficient = result.laurent.coefficients.front();
  }
  return result;
}

BigRational evaluate_trace(const TraceResult& r, const BigRational& n, bool allow_below) {
  if (!allow_below && n < r.validity_threshold) {
    throw DomainError("n = " + n.get_str() + " is below the validity threshold " +
                      std::to_string(r.validity_threshold));
  }
  return r.function.evaluate(n);
}

LeadingTerm trace_leading(const WordTuple& t, const EnumerationConfig& config) {
  LeadingTerm lead;
  const EulerSummary s = max_euler(t, config);
  if (!s.balanced) return lead;
  lead.balanced = true;
  lead.exponent = s.ch;
  const PreparedTuple prep = prepare(t, config.cyclic_reduce);
  const OccurrenceTable occ = occurrences(prep.core);
  PairEvaluator ev(occ);
  for (const auto& [i, j] : s.argmax) {
    lead.coefficient += signature_mobius(ev.cycle_signature(s.matchings[i], s.matchings[j]));
  }
  lead.degenerate = lead.coefficient == 0;
  return lead;
}

bool parity_report(const TraceResult& r, int word_count) {
  if (r.function.is_zero()) return true;
  const auto& c = r.laurent.coefficients;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const int e = r.laurent.leading_exponent - static_cast<int>(k);
    if ((e - word_count) % 2 != 0) return false;
  }
  return true;
}

bool parity_report(const WordTuple& t, const TraceOptions& options) {
  if (!is_balanced(t)) return true;
  return parity_report(trace_exact(t, options), static_cast<int>(t.size()));
}

BigRational scl_upper_bound(const Word& w, int budget, const EnumerationConfig& config) {
  if (budget < 1) throw DomainError("scl budget must be positive");
  const Word base = cyclically_reduce(w);
  const int rank = std::max(1, w.max_generator());
  if (!is_balanced(WordTuple({base}, rank))) throw DomainError("scl needs a balanced word");
  if (base.empty()) throw DomainError("scl needs a nontrivial word");
  std::vector<Word> powers{Word()};
  for (int j = 1; j <= budget; ++j) powers.push_back(power(base, j));

  bool found = false;
  BigRational best;
  std::uint64_t skipped = 0;
  for (int total = 1; total <= budget; ++total) {
    for (const auto& lambda : partitions(total)) {
      std::vector<Word> words;
      for (int j : lambda.parts()) words.push_back(powers[static_cast<std::size_t>(j)]);
      const WordTuple tuple(std::move(words), rank);
      const std::uint64_t m = matching_count(occurrences(tuple));
      if (m > 0xFFFFFFFFull || m * m > config.pair_cap) {
        ++skipped;
        continue;
      }
      const EulerSummary s = max_euler(tuple, config);
      BigRational value(-s.ch, 2 * total);
      value.canonicalize();
      if (!found || value < best) best = value;
      found = true;
    }
  }
  if (!found) {
    throw LimitError("pair-cap", "every tuple within budget " + std::to_string(budget) +
                                     " exceeds the pair cap (" + std::to_string(skipped) +
                                     " skipped)");
  }
  return best;
}

}  // namespace wmu
