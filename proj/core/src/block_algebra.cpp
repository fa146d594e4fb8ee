#include "dqg/block_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dqg/errors.hpp"

namespace dqg {

std::int64_t Index::value() const {
  if (coords_.size() != 1) throw std::logic_error("index " + to_string() + " is not one-coordinate");
  return coords_[0];
}

std::string Index::to_string() const {
  if (coords_.size() == 1) return std::to_string(coords_[0]);
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
  os << ')';
  return os.str();
}

std::string to_string(IndexModel model) {
  switch (model) {
    case IndexModel::Integers: return "integers";
    case IndexModel::IntegerPairs: return "integer_pairs";
    case IndexModel::GroupWords: return "group_words";
    case IndexModel::Naturals: return "naturals";
    case IndexModel::Finite: return "finite";
  }
  return "unknown";
}

std::shared_ptr<const BlockAlgebra> BlockAlgebra::integers(std::string name) {
  return std::shared_ptr<const BlockAlgebra>(new BlockAlgebra(std::move(name), IndexModel::Integers));
}

std::shared_ptr<const BlockAlgebra> BlockAlgebra::integer_pairs(std::string name) {
  return std::shared_ptr<const BlockAlgebra>(new BlockAlgebra(std::move(name), IndexModel::IntegerPairs));
}

std::shared_ptr<const BlockAlgebra> BlockAlgebra::group_words(std::size_t generators, std::string name) {
  if (generators == 0) throw std::invalid_argument("free group needs at least one generator");
  auto* a = new BlockAlgebra(std::move(name), IndexModel::GroupWords);
  a->generators_ = generators;
  return std::shared_ptr<const BlockAlgebra>(a);
}

std::shared_ptr<const BlockAlgebra> BlockAlgebra::spin_ladder(std::optional<std::int64_t> window_cap,
                                                              std::string name) {
  if (window_cap && *window_cap < 0) throw std::invalid_argument("negative window cap");
  auto* a = new BlockAlgebra(std::move(name), IndexModel::Naturals);
  a->cap_ = window_cap;
  return std::shared_ptr<const BlockAlgebra>(a);
}

std::shared_ptr<const BlockAlgebra> BlockAlgebra::finite(std::vector<std::size_t> dims, std::string name) {
  if (dims.empty()) throw std::invalid_argument("finite block algebra needs at least one block");
  if (std::find(dims.begin(), dims.end(), 0u) != dims.end())
    throw std::invalid_argument("block dimensions must be positive");
  auto* a = new BlockAlgebra(std::move(name), IndexModel::Finite);
  a->finite_dims_ = std::move(dims);
  return std::shared_ptr<const BlockAlgebra>(a);
}

bool BlockAlgebra::contains(const Index& index) const {
  switch (model_) {
    case IndexModel::Integers: return index.size() == 1;
    case IndexModel::IntegerPairs: return index.size() == 2;
    case IndexModel::Naturals: return index.size() == 1 && index[0] >= 0;
    case IndexModel::Finite:
      return index.size() == 1 && index[0] >= 0 && static_cast<std::size_t>(index[0]) < finite_dims_.size();
    case IndexModel::GroupWords: {
      const auto g = static_cast<std::int64_t>(generators_);
      const auto& c = index.coords();
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0 || c[k] > g || c[k] < -g) return false;
        if (k > 0 && c[k] == -c[k - 1]) return false;
      }
      return true;
    }
  }
  return false;
}

std::size_t BlockAlgebra::block_dim(const Index& index) const {
  if (!contains(index)) throw std::out_of_range("index " + index.to_string() + " not in " + name_);
  switch (model_) {
    case IndexModel::Naturals: return static_cast<std::size_t>(index[0]) + 1;
    case IndexModel::Finite: return finite_dims_[static_cast<std::size_t>(index[0])];
    default: return 1;
  }
}

namespace {

void extend_words(std::vector<Index>& out, std::vector<std::int64_t>& word, std::size_t remaining,
                  std::int64_t generators) {
  out.emplace_back(word);
  if (remaining == 0) return;
  for (std::int64_t g = -generators; g <= generators; ++g) {
    if (g == 0 || (!word.empty() && word.back() == -g)) continue;
    word.push_back(g);
    extend_words(out, word, remaining - 1, generators);
    word.pop_back();
  }
}

}  // namespace

std::vector<Index> BlockAlgebra::window(std::size_t level) const {
  std::vector<Index> out;
  switch (model_) {
    case IndexModel::Integers: {
      const std::int64_t w = std::int64_t{4} << level;
      for (std::int64_t n = -w; n <= w; ++n) out.emplace_back(n);
      break;
    }
    case IndexModel::IntegerPairs: {
      const std::int64_t w = std::int64_t{2} << level;
      for (std::int64_t a = -w; a <= w; ++a)
        for (std::int64_t b = -w; b <= w; ++b) out.push_back(Index{a, b});
      break;
    }
    case IndexModel::GroupWords: {
      std::vector<std::int64_t> word;
      extend_words(out, word, level + 1, static_cast<std::int64_t>(generators_));
      std::sort(out.begin(), out.end(), [](const Index& x, const Index& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
      });
      break;
    }
    case IndexModel::Naturals: {
      std::int64_t n = std::int64_t{3} << level;
      if (cap_) n = std::min(n, *cap_);
      for (std::int64_t k = 0; k <= n; ++k) out.emplace_back(k);
      break;
    }
    case IndexModel::Finite:
      for (std::size_t k = 0; k < finite_dims_.size(); ++k) out.emplace_back(static_cast<std::int64_t>(k));
      break;
  }
  return out;
}

std::string BlockAlgebra::window_description(std::size_t level) const {
  switch (model_) {
    case IndexModel::Integers: {
      auto w = std::to_string(std::int64_t{4} << level);
      return "[-" + w + "," + w + "]";
    }
    case IndexModel::IntegerPairs: {
      auto w = std::to_string(std::int64_t{2} << level);
      return "[-" + w + "," + w + "]^2";
    }
    case IndexModel::GroupWords: return "ball(" + std::to_string(level + 1) + ")";
    case IndexModel::Naturals: {
      std::int64_t n = std::int64_t{3} << level;
      if (cap_) n = std::min(n, *cap_);
      return "[0," + std::to_string(n) + "]";
    }
    case IndexModel::Finite: return "all(" + std::to_string(finite_dims_.size()) + ")";
  }
  return "";
}

std::size_t BlockAlgebra::window_dimension(std::size_t level) const {
  std::size_t total = 0;
  for (const auto& i : window(level)) {
    auto n = block_dim(i);
    total += n * n;
  }
  return total;
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b, const char* where) {
  if (!a || !b || a.get() != b.get())
    throw AlgebraMismatch(std::string(where) + ": " + (a ? a->name() : "null") + " vs " + (b ? b->name() : "null"));
}

}  // namespace dqg
