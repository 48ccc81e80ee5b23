#include "wmu/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "wmu/error.hpp"

namespace wmu {

namespace {

int relative_norm(const Matching& a, const Matching& b) {
  const std::size_t L = a.images.size();
  std::vector<int> inv(L);
  for (std::size_t k = 0; k < L; ++k) inv[static_cast<std::size_t>(a.images[k])] = static_cast<int>(k);
  std::vector<char> seen(L, 0);
  int cycles = 0;
  for (std::size_t s = 0; s < L; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(inv[static_cast<std::size_t>(b.images[k])])) {
      seen[k] = 1;
    }
  }
  return static_cast<int>(L) - cycles;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

bool comparable(const MatchingPair& a, const MatchingPair& b) {
  return pair_leq(a, b) || pair_leq(b, a);
}

// Component label per element, labels numbered by first appearance.
std::vector<int> component_labels(UnionFind& uf, std::size_t n) {
  std::map<int, int> names;
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int root = uf.find(static_cast<int>(i));
    auto it = names.emplace(root, static_cast<int>(names.size())).first;
    labels[i] = it->second;
  }
  return labels;
}

std::vector<int> free_reduce(const std::vector<int>& word) {
  std::vector<int> out;
  for (int g : word) {
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool two_layer_check(const std::vector<MatchingPair>& elements,
                     const std::vector<int>& full_labels) {
  const std::size_t n = elements.size();
  std::vector<int> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = relative_norm(elements[i].sigma, elements[i].tau);
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] > 1) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rank[j] <= 1 && comparable(elements[i], elements[j])) {
        uf.join(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::vector<int> shadow(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] <= 1) {
      shadow[i] = uf.find(static_cast<int>(i));
      continue;
    }
    std::set<int> roots;
    for (std::size_t j = 0; j < n; ++j) {
      if (rank[j] <= 1 && pair_leq(elements[j], elements[i])) roots.insert(uf.find(static_cast<int>(j)));
    }
    if (roots.size() != 1) return false;
    shadow[i] = *roots.begin();
  }
  std::map<int, int> forward, backward;
  for (std::size_t i = 0; i < n; ++i) {
    auto [f, fnew] = forward.emplace(shadow[i], full_labels[i]);
    auto [b, bnew] = backward.emplace(full_labels[i], shadow[i]);
    if (f->second != full_labels[i] || b->second != shadow[i]) return false;
  }
  return true;
}

}  // namespace

bool pair_leq(const Matching& sigma_low, const Matching& tau_low,
              const Matching& sigma, const Matching& tau) {
  return relative_norm(sigma, tau) == relative_norm(sigma, sigma_low) +
                                          relative_norm(sigma_low, tau_low) +
                                          relative_norm(tau_low, tau);
}

bool pair_leq(const MatchingPair& low, const MatchingPair& high) {
  return pair_leq(low.sigma, low.tau, high.sigma, high.tau);
}

bool is_incompressible(const OccurrenceTable& occ, const MatchingPair& p,
                       std::uint64_t pair_cap) {
  PairEvaluator ev(occ);
  const int shift = -occ.total_letters();
  auto chi_of = [&](const Matching& s, const Matching& t) {
    return ev.block_count(s, t) + ev.z_disc_count(s, t) + shift;
  };
  const int base = chi_of(p.sigma, p.tau);
  using State = std::pair<std::vector<int>, std::vector<int>>;
  std::set<State> visited;
  std::deque<State> queue;
  visited.insert({p.sigma.images, p.tau.images});
  queue.push_back({p.sigma.images, p.tau.images});
  while (!queue.empty()) {
    State cur = std::move(queue.front());
    queue.pop_front();
    for (int side = 0; side < 2; ++side) {
      for (int g = 1; g <= occ.rank; ++g) {
        const int lo = occ.block_start[static_cast<std::size_t>(g - 1)];
        const int hi = occ.block_start[static_cast<std::size_t>(g)];
        for (int a = lo; a < hi; ++a) {
          for (int b = a + 1; b < hi; ++b) {
            State next = cur;
            auto& images = side == 0 ? next.first : next.second;
            std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
            if (visited.count(next)) continue;
            const int chi = chi_of(Matching{next.first}, Matching{next.second});
            if (chi > base) return false;
            if (chi < base) continue;
            visited.insert(next);
            if (visited.size() > pair_cap) {
              throw LimitError("pair-cap", "incompressibility search exceeded " +
                                               std::to_string(pair_cap) + " pairs");
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
  }
  return true;
}

PairPoset build_poset(std::vector<MatchingPair> elements) {
  PairPoset p;
  const std::size_t n = elements.size();
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < n; ++i) {
    order.emplace_back(relative_norm(elements[i].sigma, elements[i].tau), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    const auto& x = elements[a.second];
    const auto& y = elements[b.second];
    return std::tie(x.sigma, x.tau) < std::tie(y.sigma, y.tau);
  });
  for (const auto& [r, i] : order) {
    p.elements.push_back(std::move(elements[i]));
    p.rank.push_back(r);
  }
  p.below.resize(n);
  p.covers.resize(n);
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && p.rank[y] < p.rank[x] && pair_leq(p.elements[y], p.elements[x])) {
        p.below[x].push_back(static_cast<int>(y));
        less[y][x] = 1;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (int y : p.below[x]) {
      bool cover = true;
      for (int z : p.below[x]) {
        if (less[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)]) {
          cover = false;
          break;
        }
      }
      if (cover) p.covers[static_cast<std::size_t>(y)].push_back(static_cast<int>(x));
    }
  }
  return p;
}

OrderComplex order_complex(const PairPoset& p) {
  OrderComplex c;
  const std::size_t n = p.elements.size();
  c.vertices = static_cast<int>(n);
  // Elements are rank-sorted, so everything below x precedes x.
  std::vector<std::vector<BigInt>> ending(n);
  std::vector<BigInt> h(n);
  for (std::size_t x = 0; x < n; ++x) {
    ending[x].push_back(1);
    h[x] = 1;
    for (int y : p.below[x]) {
      const auto& ey = ending[static_cast<std::size_t>(y)];
      if (ending[x].size() < ey.size() + 1) ending[x].resize(ey.size() + 1, 0);
      for (std::size_t k = 0; k < ey.size(); ++k) ending[x][k + 1] += ey[k];
      h[x] -= h[static_cast<std::size_t>(y)];
      c.edges.emplace_back(y, static_cast<int>(x));
      for (int z : p.below[static_cast<std::size_t>(y)]) {
        c.triangles.push_back({z, y, static_cast<int>(x)});
      }
    }
    c.h_euler += h[x];
    if (c.chain_counts.size() < ending[x].size()) c.chain_counts.resize(ending[x].size(), 0);
    for (std::size_t k = 0; k < ending[x].size(); ++k) c.chain_counts[k] += ending[x][k];
  }
  std::sort(c.edges.begin(), c.edges.end());
  std::sort(c.triangles.begin(), c.triangles.end());
  return c;
}

BigInt complex_euler(const OrderComplex& c) {
  BigInt chi = 0;
  for (std::size_t k = 0; k < c.chain_counts.size(); ++k) {
    if (k % 2) chi -= c.chain_counts[k]; else chi += c.chain_counts[k];
  }
  if (chi != c.h_euler) {
    throw DomainError("chain count Euler characteristic " + chi.get_str() +
                      " disagrees with h-recursion " + c.h_euler.get_str());
  }
  return chi;
}

BigInt mobius_sum(const PairPoset& p) {
  BigInt total = 0;
  for (const auto& e : p.elements) total += mobius(relative(e.sigma, e.tau));
  return total;
}

std::string Presentation::to_string() const {
  std::string out = "<";
  for (int g = 1; g <= generators; ++g) {
    if (g > 1) out += ", ";
    out += "g" + std::to_string(g);
  }
  out += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out += ", ";
    for (std::size_t k = 0; k < relators[r].size(); ++k) {
      if (k) out += ' ';
      const int g = relators[r][k];
      out += "g" + std::to_string(std::abs(g));
      if (g < 0) out += "^-1";
    }
  }
  return out + ">";
}

Presentation pi1_presentation(const OrderComplex& c) {
  Presentation pres;
  const std::size_t n = static_cast<std::size_t>(c.vertices);
  if (n == 0) throw DomainError("empty complex has no fundamental group");
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    adj[static_cast<std::size_t>(c.edges[e].first)].emplace_back(c.edges[e].second, e);
    adj[static_cast<std::size_t>(c.edges[e].second)].emplace_back(c.edges[e].first, e);
  }
  std::vector<char> reached(n, 0), tree(c.edges.size(), 0);
  std::deque<std::size_t> queue{0};
  reached[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adj[v]) {
      if (reached[static_cast<std::size_t>(w)]) continue;
      reached[static_cast<std::size_t>(w)] = 1;
      tree[e] = 1;
      ++count;
      queue.push_back(static_cast<std::size_t>(w));
    }
  }
  if (count != n) throw DomainError("order complex is disconnected");

  std::map<std::pair<int, int>, int> generator;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    if (!tree[e]) generator.emplace(c.edges[e], ++pres.generators);
  }
  auto letter = [&](int a, int b) {
    auto it = generator.find({a, b});
    return it == generator.end() ? 0 : it->second;
  };
  std::set<std::vector<int>> seen;
  for (const auto& t : c.triangles) {
    std::vector<int> word;
    for (int g : {letter(t[0], t[1]), letter(t[1], t[2]), -letter(t[0], t[2])}) {
      if (g != 0) word.push_back(g);
    }
    word = free_reduce(word);
    if (word.empty() || !seen.insert(word).second) continue;
    pres.relators.push_back(std::move(word));
  }
  return pres;
}

int abelianization_rank(const Presentation& p) {
  const std::size_t cols = static_cast<std::size_t>(p.generators);
  std::vector<std::vector<BigRational>> m;
  for (const auto& r : p.relators) {
    std::vector<BigRational> row(cols, 0);
    for (int g : r) row[static_cast<std::size_t>(std::abs(g) - 1)] += g > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t row = rank + 1; row < m.size(); ++row) {
      if (m[row][col] == 0) continue;
      const BigRational f = m[row][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(cols - rank);
}

ClassReport solution_classes(const WordTuple& t, const EnumerationConfig& config) {
  ClassReport report;
  const EulerSummary s = max_euler(t, config);
  if (!s.balanced) return report;
  report.balanced = true;
  report.ch = s.ch;
  const PreparedTuple prep = prepare(t, config.cyclic_reduce);
  report.empty_words = prep.empty_words;
  report.occ = occurrences(prep.core);

  std::vector<MatchingPair> elements;
  for (const auto& [i, j] : s.argmax) {
    MatchingPair p = analyze_pair(report.occ, s.matchings[i], s.matchings[j]);
    p.euler_char += prep.empty_words;
    elements.push_back(std::move(p));
  }
  const std::size_t n = elements.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uf.find(static_cast<int>(i)) == uf.find(static_cast<int>(j))) continue;
      if (comparable(elements[i], elements[j])) uf.join(static_cast<int>(i), static_cast<int>(j));
    }
  }
  const std::vector<int> labels = component_labels(uf, n);
  report.two_layer_agrees = two_layer_check(elements, labels);

  const int classes = n == 0 ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<MatchingPair>> groups(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < n; ++i) groups[static_cast<std::size_t>(labels[i])].push_back(elements[i]);
  for (auto& g : groups) {
    SolutionClass sc;
    sc.chi = report.ch;
    sc.pmp = build_poset(std::move(g));
    sc.complex = order_complex(sc.pmp);
    sc.complex_euler = wmu::complex_euler(sc.complex);
    sc.mobius_sum = wmu::mobius_sum(sc.pmp);
    sc.pi1 = pi1_presentation(sc.complex);
    report.classes.push_back(std::move(sc));
  }
  return report;
}

LeadingTerm leading_via_classes(const ClassReport& report) {
  LeadingTerm lead;
  if (!report.balanced) return lead;
  lead.balanced = true;
  lead.exponent = report.ch;
  for (const auto& c : report.classes) lead.coefficient += c.complex_euler;
  lead.degenerate = lead.coefficient == 0;
  return lead;
}

LeadingTerm leading_via_classes(const WordTuple& t, const EnumerationConfig& config) {
  return leading_via_classes(solution_classes(t, config));
}

}  // namespace wmu
