#include "wmu/mc.hpp"

#include <cmath>
#include <numbers>

#include "wmu/error.hpp"
#include "wmu/parallel.hpp"

namespace wmu {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

namespace {

double uniform_open(std::mt19937_64& rng) {
  // (0, 1]: never zero, so log() is finite.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

std::complex<double> complex_normal(std::mt19937_64& rng) {
  const double r = std::sqrt(-std::log(uniform_open(rng)));
  const double theta = 2.0 * std::numbers::pi * uniform_open(rng);
  // E|z|^2 = 1
  return {r * std::cos(theta), r * std::sin(theta)};
}

struct Moments {
  std::complex<double> sum;
  double sum_re2 = 0;
  double sum_im2 = 0;
};

}  // namespace

ComplexMatrix sample_haar(int n, std::mt19937_64& rng) {
  if (n < 1) throw DomainError("dimension must be positive");
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) z(i, j) = complex_normal(rng);
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

ComplexMatrix evaluate_word(const Word& w, const std::vector<ComplexMatrix>& u) {
  const Eigen::Index n = u.empty() ? 1 : u.front().rows();
  ComplexMatrix acc = ComplexMatrix::Identity(n, n);
  for (const Letter& l : w.letters()) {
    const ComplexMatrix& m = u[static_cast<std::size_t>(l.generator - 1)];
    if (l.sign > 0) {
      acc = acc * m;
    } else {
      acc = acc * m.adjoint();
    }
  }
  return acc;
}

McEstimate estimate(const WordTuple& t, int n, std::uint64_t samples,
                    std::uint64_t seed, int threads) {
  if (n < 1) throw DomainError("dimension must be positive");
  if (samples < 2) throw DomainError("need at least two samples");
  std::vector<Word> words;
  for (const Word& w : t.words()) words.push_back(reduce(w));
  const int rank = t.rank();
  const std::uint64_t batches = (samples + kBatchSize - 1) / kBatchSize;

  auto states = parallel_chunks<std::vector<Moments>>(
      static_cast<std::size_t>(batches), threads,
      [&](std::size_t begin, std::size_t end, std::vector<Moments>& out) {
        std::vector<ComplexMatrix> u(static_cast<std::size_t>(rank));
        for (std::size_t b = begin; b < end; ++b) {
          std::mt19937_64 rng(splitmix64(seed + b));
          const std::uint64_t first = b * kBatchSize;
          const std::uint64_t count = std::min(kBatchSize, samples - first);
          Moments m;
          for (std::uint64_t s = 0; s < count; ++s) {
            for (auto& mat : u) mat = sample_haar(n, rng);
            std::complex<double> value = 1.0;
            for (const Word& w : words) value *= evaluate_word(w, u).trace();
            m.sum += value;
            m.sum_re2 += value.real() * value.real();
            m.sum_im2 += value.imag() * value.imag();
          }
          out.push_back(m);
        }
      });

  Moments total;
  for (const auto& chunk : states) {
    for (const auto& m : chunk) {
      total.sum += m.sum;
      total.sum_re2 += m.sum_re2;
      total.sum_im2 += m.sum_im2;
    }
  }
  McEstimate e;
  e.n = n;
  e.samples = samples;
  e.seed = seed;
  const double N = static_cast<double>(samples);
  e.mean = total.sum / N;
  const double var_re = std::max(0.0, (total.sum_re2 - N * e.mean.real() * e.mean.real()) / (N - 1));
  const double var_im = std::max(0.0, (total.sum_im2 - N * e.mean.imag() * e.mean.imag()) / (N - 1));
  e.std_error_real = std::sqrt(var_re / N);
  e.std_error_imag = std::sqrt(var_im / N);
  e.std_error = std::sqrt((var_re + var_im) / N);
  return e;
}

}  // namespace wmu
