#include "dqg/group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dqg {

GroupModel GroupModel::integers() { return GroupModel(Kind::Integers, "Z"); }

GroupModel GroupModel::integer_pairs() { return GroupModel(Kind::IntegerPairs, "Z^2"); }

GroupModel GroupModel::finite_cayley(std::vector<std::vector<std::size_t>> table, std::size_t identity,
                                     std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("Cayley table must be square");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("Cayley table entry out of range");
  }
  if (identity >= n) throw std::invalid_argument("identity out of range");
  for (std::size_t g = 0; g < n; ++g)
    if (table[identity][g] != g || table[g][identity] != g)
      throw std::invalid_argument("declared identity is not a two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw std::invalid_argument("Cayley table is not associative");
  GroupModel g(Kind::FiniteCayley, std::move(name));
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) g.inverse_[a] = b;
    if (g.inverse_[a] == n) throw std::invalid_argument("element without inverse in Cayley table");
  }
  g.table_ = std::move(table);
  g.identity_ = identity;
  return g;
}

GroupModel GroupModel::symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return finite_cayley(std::move(table), 0, "S3");
}

GroupModel GroupModel::cyclic(std::size_t order) {
  if (order == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) table[i][j] = (i + j) % order;
  return finite_cayley(std::move(table), 0, order == 1 ? "trivial" : "C" + std::to_string(order));
}

GroupModel GroupModel::free_group(std::size_t generators) {
  if (generators == 0) throw std::invalid_argument("free group needs at least one generator");
  GroupModel g(Kind::FreeWords, "F" + std::to_string(generators));
  g.generators_ = generators;
  return g;
}

Index GroupModel::identity() const {
  switch (kind_) {
    case Kind::Integers: return Index(0);
    case Kind::IntegerPairs: return Index{0, 0};
    case Kind::FiniteCayley: return Index(static_cast<std::int64_t>(identity_));
    case Kind::FreeWords: return Index{};
  }
  return {};
}

Index GroupModel::multiply(const Index& g, const Index& h) const {
  switch (kind_) {
    case Kind::Integers: return Index(g.value() + h.value());
    case Kind::IntegerPairs: return Index{g[0] + h[0], g[1] + h[1]};
    case Kind::FiniteCayley:
      return Index(static_cast<std::int64_t>(table_.at(static_cast<std::size_t>(g.value())).at(static_cast<std::size_t>(h.value()))));
    case Kind::FreeWords: {
      std::vector<std::int64_t> w = g.coords();
      for (auto letter : h.coords()) {
        if (!w.empty() && w.back() == -letter) {
          w.pop_back();
        } else {
          w.push_back(letter);
        }
      }
      return Index(std::move(w));
    }
  }
  return {};
}

Index GroupModel::inverse(const Index& g) const {
  switch (kind_) {
    case Kind::Integers: return Index(-g.value());
    case Kind::IntegerPairs: return Index{-g[0], -g[1]};
    case Kind::FiniteCayley: return Index(static_cast<std::int64_t>(inverse_.at(static_cast<std::size_t>(g.value()))));
    case Kind::FreeWords: {
      std::vector<std::int64_t> w(g.coords().rbegin(), g.coords().rend());
      for (auto& l : w) l = -l;
      return Index(std::move(w));
    }
  }
  return {};
}

AlgebraPtr GroupModel::make_algebra() const {
  switch (kind_) {
    case Kind::Integers: return BlockAlgebra::integers("c_c(Z)");
    case Kind::IntegerPairs: return BlockAlgebra::integer_pairs("c_c(Z^2)");
    case Kind::FiniteCayley: return BlockAlgebra::finite(std::vector<std::size_t>(table_.size(), 1), "c(" + name_ + ")");
    case Kind::FreeWords: return BlockAlgebra::group_words(generators_, "c_c(" + name_ + ")");
  }
  return nullptr;
}

}  // namespace dqg
