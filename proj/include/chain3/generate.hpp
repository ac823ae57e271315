#pragma once

// Deterministic random instances for tests and benchmarks: chain matrices
// drawn from integer value/threshold models, triples of them, and plain
// Bernoulli matrices.

#include <random>

#include "chain3/matrix.hpp"

namespace chain3 {

struct ChainTriple {
  BinaryMatrix c1;
  BinaryMatrix c2;
  BinaryMatrix c3;
};

// Chain graph sampled by row values against column thresholds; every output
// satisfies is_chain.
BinaryMatrix random_chain_matrix(std::size_t rows, std::size_t cols,
                                 std::mt19937_64& rng);

// Three independent chain matrices over the same labelled vertex sets.
ChainTriple random_chain_triple(std::size_t rows, std::size_t cols,
                                std::mt19937_64& rng);

// Entry-wise Bernoulli(density) matrix.
BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                           std::mt19937_64& rng);

}  // namespace chain3
