#include "dqg/random.hpp"

#include <stdexcept>

namespace dqg {

Scalar random_scalar(std::mt19937_64& rng, ScalarMode mode) {
  const long p = static_cast<long>(rng() % 11) - 5;
  const long q = static_cast<long>(rng() % 4) + 1;
  return Scalar::rational(p, q).to_mode(mode);
}

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, ScalarMode mode) {
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, mode);
  return m;
}

Element random_element(const AlgebraPtr& algebra, const std::vector<Index>& pool, std::mt19937_64& rng,
                       ScalarMode mode, std::size_t max_blocks) {
  if (pool.empty()) throw std::invalid_argument("random_element needs a nonempty pool");
  Element e(algebra);
  const std::size_t count = 1 + rng() % std::max<std::size_t>(1, max_blocks);
  for (std::size_t k = 0; k < count; ++k) {
    const Index& i = pool[rng() % pool.size()];
    const auto n = algebra->block_dim(i);
    e.add_to_block(i, random_matrix(n, n, rng, mode));
  }
  return e;
}

}  // namespace dqg
