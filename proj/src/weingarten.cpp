#include "wmu/weingarten.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "wmu/error.hpp"

namespace wmu {

namespace {

struct TableCache {
  std::shared_mutex mutex;
  std::map<int, WeingartenTable> tables;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

WeingartenTable compute_char_table(int L) {
  WeingartenTable table;
  table.L = L;
  const auto shapes = partitions(L);
  const BigInt lfact = factorial(L);
  // Denominators L! * content(lambda), shared across all mu.
  std::vector<Polynomial> contents;
  std::vector<BigInt> dims;
  for (const auto& lambda : shapes) {
    contents.push_back(content_polynomial(lambda));
    dims.push_back(dimension(lambda));
  }
  for (const auto& mu : shapes) {
    RationalFunction sum;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      const BigInt chi = character(shapes[i], mu);
      if (chi == 0) continue;
      BigRational coef(dims[i] * chi, lfact);
      coef.canonicalize();
      sum += RationalFunction(Polynomial(coef), contents[i]);
    }
    table.entries.emplace(mu, std::move(sum));
  }
  return table;
}

const WeingartenTable& cached_table(int L) {
  auto& cache = table_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.tables.find(L);
    if (it != cache.tables.end()) return it->second;
  }
  WeingartenTable fresh = compute_char_table(L);
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.tables.emplace(L, std::move(fresh));
  return it->second;
}

Permutation representative(const CycleType& mu) {
  std::vector<int> images(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int len : mu.parts()) {
    for (int k = 0; k < len; ++k) {
      images[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(images));
}

}  // namespace

RationalFunction wg_char(const CycleType& mu) {
  if (mu.size() == 0) return RationalFunction(1);
  const auto& table = cached_table(mu.size());
  return table.entries.at(mu);
}

WeingartenTable wg_table(int L) {
  if (L < 1) throw DomainError("Weingarten table needs L >= 1");
  return cached_table(L);
}

WeingartenTable wg_inversion(int L, int limit) {
  if (L < 1) throw DomainError("Weingarten table needs L >= 1");
  if (L > limit) {
    throw LimitError("inversion-limit",
                     "class-algebra inversion limited to L <= " +
                         std::to_string(limit) + ", requested " +
                         std::to_string(L));
  }
  const auto classes = partitions(L);
  const std::size_t k = classes.size();
  std::map<CycleType, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(classes[i], i);

  std::vector<Permutation> reps;
  for (const auto& mu : classes) reps.push_back(representative(mu));

  // counts[nu][mu][c] = #{pi in class mu : pi^-1 sigma_nu has c cycles}
  std::vector<std::vector<std::vector<long>>> counts(
      k, std::vector<std::vector<long>>(k, std::vector<long>(static_cast<std::size_t>(L + 1), 0)));
  std::vector<int> images(static_cast<std::size_t>(L));
  std::iota(images.begin(), images.end(), 0);
  do {
    const Permutation pi(images);
    const std::size_t mu = index.at(cycle_type(pi));
    const Permutation pinv = pi.inverse();
    for (std::size_t nu = 0; nu < k; ++nu) {
      ++counts[nu][mu][static_cast<std::size_t>((pinv * reps[nu]).cycle_count())];
    }
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<std::vector<RationalFunction>> a(k, std::vector<RationalFunction>(k + 1));
  const std::size_t id_class = index.at(CycleType(std::vector<int>(static_cast<std::size_t>(L), 1)));
  for (std::size_t nu = 0; nu < k; ++nu) {
    for (std::size_t mu = 0; mu < k; ++mu) {
      std::vector<BigRational> coeffs;
      for (long c : counts[nu][mu]) coeffs.emplace_back(c);
      a[nu][mu] = RationalFunction(Polynomial(std::move(coeffs)));
    }
    a[nu][k] = RationalFunction(nu == id_class ? 1 : 0);
  }

  // Gauss-Jordan over Q(n).
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && a[pivot][col].is_zero()) ++pivot;
    if (pivot == k) throw DomainError("singular class-algebra system");
    std::swap(a[pivot], a[col]);
    const RationalFunction inv = RationalFunction(1) / a[col][col];
    for (std::size_t j = col; j <= k; ++j) a[col][j] *= inv;
    for (std::size_t row = 0; row < k; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const RationalFunction factor = a[row][col];
      for (std::size_t j = col; j <= k; ++j) {
        if (!a[col][j].is_zero()) a[row][j] -= factor * a[col][j];
      }
    }
  }

  WeingartenTable table;
  table.L = L;
  for (std::size_t mu = 0; mu < k; ++mu) table.entries.emplace(classes[mu], a[mu][k]);
  return table;
}

std::pair<int, BigInt> wg_leading(const CycleType& mu) {
  return {-(mu.size() + norm(mu)), mobius(mu)};
}

namespace {

// All s in S_m with from[k] == to[s(k)] for every k.
std::vector<std::vector<int>> label_matchings(const std::vector<int>& from,
                                              const std::vector<int>& to) {
  std::vector<std::vector<int>> out;
  const std::size_t m = from.size();
  std::vector<int> current(m);
  std::vector<char> used(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == m) {
      out.push_back(current);
      return;
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || to[j] != from[k]) continue;
      used[j] = 1;
      current[k] = static_cast<int>(j);
      rec(k + 1);
      used[j] = 0;
    }
  };
  rec(0);
  return out;
}

}  // namespace

RationalFunction moment(const std::vector<MatrixEntry>& entries,
                        const std::vector<MatrixEntry>& conj_entries) {
  if (entries.size() != conj_entries.size()) {
    throw DomainError("moment: unbalanced monomial integrates to zero only "
                      "through an explicit size check; sizes differ");
  }
  const std::size_t m = entries.size();
  if (m == 0) return RationalFunction(1);
  std::vector<int> i(m), j(m), ic(m), jc(m);
  for (std::size_t k = 0; k < m; ++k) {
    i[k] = entries[k].row;
    j[k] = entries[k].col;
    ic[k] = conj_entries[k].row;
    jc[k] = conj_entries[k].col;
  }
  const auto sigmas = label_matchings(i, ic);
  if (sigmas.empty()) return RationalFunction(0);
  const auto taus = label_matchings(j, jc);
  if (taus.empty()) return RationalFunction(0);
  std::map<CycleType, long> tally;
  for (const auto& s : sigmas) {
    const Permutation sinv = Permutation(s).inverse();
    for (const auto& t : taus) ++tally[cycle_type(sinv * Permutation(t))];
  }
  RationalFunction sum;
  for (const auto& [mu, count] : tally) sum += wg_char(mu).scaled(count);
  return sum;
}

}  // namespace wmu
