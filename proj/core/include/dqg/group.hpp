#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dqg/block_algebra.hpp"

namespace dqg {

/// A discrete group whose elements label the 1×1 blocks of its function algebra.
class GroupModel {
 public:
  enum class Kind { Integers, IntegerPairs, FiniteCayley, FreeWords };

  static GroupModel integers();
  static GroupModel integer_pairs();
  /// table[i][j] = index of g_i·g_j. Validated exhaustively (closure,
  /// associativity, identity, inverses); throws std::invalid_argument.
  static GroupModel finite_cayley(std::vector<std::vector<std::size_t>> table, std::size_t identity, std::string name);
  /// Permutations of {0,1,2} in lexicographic order, (gh)(x) = g(h(x)).
  static GroupModel symmetric_group_3();
  static GroupModel cyclic(std::size_t order);
  static GroupModel trivial() { return cyclic(1); }
  static GroupModel free_group(std::size_t generators);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool is_finite() const { return kind_ == Kind::FiniteCayley; }
  std::size_t order() const { return table_.size(); }
  std::size_t generator_count() const { return generators_; }
  const std::vector<std::vector<std::size_t>>& cayley_table() const { return table_; }

  Index identity() const;
  Index multiply(const Index& g, const Index& h) const;
  Index inverse(const Index& g) const;

  /// The block algebra of finitely supported functions on the group.
  AlgebraPtr make_algebra() const;

 private:
  GroupModel(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::size_t generators_ = 0;
};

}  // namespace dqg
