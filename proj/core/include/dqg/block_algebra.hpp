#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dqg {

/// Label of one matrix block. Integers and naturals use one coordinate,
/// integer pairs two, group words one signed letter per coordinate, finite
/// index sets the position in the list.
class Index {
 public:
  Index() = default;
  explicit Index(std::int64_t n) : coords_{n} {}
  Index(std::initializer_list<std::int64_t> c) : coords_(c) {}
  explicit Index(std::vector<std::int64_t> c) : coords_(std::move(c)) {}

  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  /// The single coordinate of a one-coordinate index.
  std::int64_t value() const;

  friend auto operator<=>(const Index&, const Index&) = default;
  friend bool operator==(const Index&, const Index&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

enum class IndexModel { Integers, IntegerPairs, GroupWords, Naturals, Finite };

std::string to_string(IndexModel model);

/// A direct sum of full matrix algebras ⊕_α M_{n_α} over an enumerable index
/// set, together with the nested windows used to exhaust it.
///
/// Window policy per index model:
///   Integers      [-W, W], W = 4·2^level
///   IntegerPairs  [-W, W]^2, W = 2·2^level
///   GroupWords    reduced words of length <= level + 1
///   Naturals      [0, N], N = 3·2^level (clipped to the cap when one is set)
///   Finite        every index at every level
class BlockAlgebra {
 public:
  static std::shared_ptr<const BlockAlgebra> integers(std::string name = "Z");
  static std::shared_ptr<const BlockAlgebra> integer_pairs(std::string name = "Z^2");
  static std::shared_ptr<const BlockAlgebra> group_words(std::size_t generators, std::string name);
  /// Naturals with block n of size n + 1 (spin ladder); window_cap bounds the windows.
  static std::shared_ptr<const BlockAlgebra> spin_ladder(std::optional<std::int64_t> window_cap,
                                                         std::string name = "SU(2)^");
  static std::shared_ptr<const BlockAlgebra> finite(std::vector<std::size_t> dims, std::string name);

  const std::string& name() const { return name_; }
  IndexModel model() const { return model_; }
  std::size_t generator_count() const { return generators_; }
  bool is_finite() const { return model_ == IndexModel::Finite; }

  bool contains(const Index& index) const;
  /// Throws std::out_of_range for indices outside the model.
  std::size_t block_dim(const Index& index) const;

  std::vector<Index> window(std::size_t level) const;
  std::string window_description(std::size_t level) const;
  /// Σ n_α² over the window.
  std::size_t window_dimension(std::size_t level) const;

 private:
  BlockAlgebra(std::string name, IndexModel model) : name_(std::move(name)), model_(model) {}

  std::string name_;
  IndexModel model_;
  std::size_t generators_ = 0;
  std::vector<std::size_t> finite_dims_;
  std::optional<std::int64_t> cap_;
};

using AlgebraPtr = std::shared_ptr<const BlockAlgebra>;

/// Throws AlgebraMismatch unless both refer to the same algebra object.
void require_same(const AlgebraPtr& a, const AlgebraPtr& b, const char* where);

}  // namespace dqg
