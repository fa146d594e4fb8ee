#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "dqg/element.hpp"

namespace dqg {

/// Small random scalar: p/q with |p| <= 5, 1 <= q <= 4 (converted to float in
/// float mode). Uses raw engine output so sequences match across standard libraries.
Scalar random_scalar(std::mt19937_64& rng, ScalarMode mode);

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, ScalarMode mode);

/// Element with random blocks on up to `max_blocks` indices drawn from `pool`.
Element random_element(const AlgebraPtr& algebra, const std::vector<Index>& pool, std::mt19937_64& rng,
                       ScalarMode mode, std::size_t max_blocks = 3);

}  // namespace dqg
