#include "wmu/perm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "wmu/error.hpp"

namespace wmu {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int size, int a, int b) {
  Permutation p = identity(size);
  std::swap(p.images_[static_cast<std::size_t>(a)],
            p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k])] = static_cast<int>(k);
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("permutation size mismatch");
  std::vector<int> out(q.images_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p(q.images_[k]);
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(images_[k])) {
      seen[k] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int Permutation::cycle_count() const {
  return static_cast<int>(cycle_lengths().size());
}

int Permutation::sign() const { return (norm(*this) % 2) ? -1 : 1; }

std::string Permutation::to_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    out += '(';
    bool first = true;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(images_[k])) {
      seen[k] = 1;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(k + 1);
    }
    out += ')';
  }
  return out;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive");
  }
  std::sort(parts_.rbegin(), parts_.rend());
}

int IntegerPartition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string IntegerPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

CycleType cycle_type(const Permutation& p) {
  return CycleType(p.cycle_lengths());
}

std::vector<IntegerPartition> partitions(int L) {
  std::vector<IntegerPartition> out;
  if (L < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(L, L);
  return out;
}

int norm(const Permutation& p) { return p.size() - p.cycle_count(); }
int norm(const CycleType& mu) { return mu.size() - mu.length(); }

bool leq(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw DomainError("permutation size mismatch");
  return norm(t) == norm(s) + norm(s.inverse() * t);
}

BigInt factorial(int m) {
  BigInt f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

BigInt catalan(int m) {
  static std::mutex mu;
  static std::vector<BigInt> table{1};
  std::lock_guard<std::mutex> lock(mu);
  // c_{k+1} = c_k * 2(2k+1) / (k+2)
  while (static_cast<int>(table.size()) <= m) {
    const long k = static_cast<long>(table.size()) - 1;
    BigInt next = table.back() * (2 * (2 * k + 1));
    next /= (k + 2);
    table.push_back(next);
  }
  return table[static_cast<std::size_t>(m)];
}

BigInt mobius(const CycleType& mu) {
  BigInt m = (norm(mu) % 2) ? -1 : 1;
  for (int len : mu.parts()) m *= catalan(len - 1);
  return m;
}

BigInt mobius(const Permutation& p) { return mobius(cycle_type(p)); }

BigInt class_size(const CycleType& mu) {
  // L! / prod_k k^{m_k} m_k!
  BigInt z = 1;
  std::map<int, int> mult;
  for (int part : mu.parts()) ++mult[part];
  for (auto [k, m] : mult) {
    BigInt km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(m));
    z *= km * factorial(m);
  }
  return factorial(mu.size()) / z;
}

namespace {

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<CharKey, BigInt> table;
};

CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

// parts descending (may be empty); mu_parts consumed from the front.
BigInt murnaghan_nakayama(const std::vector<int>& lambda,
                          const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  CharKey key{lambda, mu};
  auto& memo = character_memo();
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.table.find(key);
    if (it != memo.table.end()) return it->second;
  }
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int k = static_cast<int>(lambda.size());
  // Beta numbers: distinct, strictly decreasing.
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (k - 1 - i);
  BigInt total = 0;
  for (int i = 0; i < k; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) {
      if (b > to && b < from) ++between;
    }
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = to;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> shape;
    for (int j = 0; j < k; ++j) {
      const int part = nb[static_cast<std::size_t>(j)] - (k - 1 - j);
      if (part > 0) shape.push_back(part);
    }
    BigInt sub = murnaghan_nakayama(shape, rest);
    if (between % 2) total -= sub; else total += sub;
  }
  {
    std::unique_lock lock(memo.mutex);
    memo.table.emplace(std::move(key), total);
  }
  return total;
}

}  // namespace

BigInt character(const IntegerPartition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) {
    throw DomainError("character: |lambda| = " + std::to_string(lambda.size()) +
                      " but |mu| = " + std::to_string(mu.size()));
  }
  return murnaghan_nakayama(lambda.parts(), mu.parts());
}

BigInt dimension(const IntegerPartition& lambda) {
  const auto& parts = lambda.parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      int below = 0;
      for (std::size_t i2 = i + 1; i2 < parts.size() && parts[i2] > j; ++i2) ++below;
      hooks *= (parts[i] - j - 1) + below + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

Polynomial content_polynomial(const IntegerPartition& lambda) {
  std::vector<long> roots;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j) {
      // factor n + (j - i) has root i - j (0-based cells)
      roots.push_back(static_cast<long>(i) - j);
    }
  }
  return Polynomial::from_roots(roots);
}

}  // namespace wmu
