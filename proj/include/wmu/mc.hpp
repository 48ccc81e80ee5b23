#pragma once

// Monte-Carlo estimates of expected products of traces.
//
// Randomness: each batch of kBatchSize samples owns an mt19937_64 seeded with
// splitmix64(seed + batch index); normals come from Box-Muller on 53-bit
// uniforms. Results therefore do not depend on the number of threads.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

#include "wmu/word.hpp"

namespace wmu {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::uint64_t kDefaultSeed = 0x5EED5EEDull;
inline constexpr std::uint64_t kBatchSize = 4096;

std::uint64_t splitmix64(std::uint64_t x);

// Ginibre matrix, Householder QR, columns rescaled by the phases of diag(R).
ComplexMatrix sample_haar(int n, std::mt19937_64& rng);

// Product of the matrices named by w; inverse letters use the adjoint and
// the empty word gives the identity.
ComplexMatrix evaluate_word(const Word& w, const std::vector<ComplexMatrix>& u);

struct McEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  std::complex<double> mean;
  double std_error = 0;       // sqrt(Var(re) + Var(im)) / sqrt(samples)
  double std_error_real = 0;
  double std_error_imag = 0;
  std::uint64_t seed = 0;
};

McEstimate estimate(const WordTuple& t, int n, std::uint64_t samples,
                    std::uint64_t seed = kDefaultSeed, int threads = 0);

}  // namespace wmu
