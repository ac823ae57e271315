#include "chain3/generate.hpp"

namespace chain3 {

BinaryMatrix random_chain_matrix(std::size_t rows, std::size_t cols,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> spread(
      0, static_cast<long long>(2 * (rows + cols)));
  std::vector<long long> values(rows), thresholds(cols);
  for (auto& v : values) v = spread(rng);
  for (auto& t : thresholds) t = spread(rng);
  BinaryMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (values[i] < thresholds[j]) m.set(i, j, true);
  return m;
}

ChainTriple random_chain_triple(std::size_t rows, std::size_t cols,
                                std::mt19937_64& rng) {
  BinaryMatrix c1 = random_chain_matrix(rows, cols, rng);
  BinaryMatrix c2 = random_chain_matrix(rows, cols, rng);
  BinaryMatrix c3 = random_chain_matrix(rows, cols, rng);
  return {std::move(c1), std::move(c2), std::move(c3)};
}

BinaryMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                           std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  BinaryMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng)) m.set(i, j, true);
  return m;
}

}  // namespace chain3
