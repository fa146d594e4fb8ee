#include "dqg/nondegenerate.hpp"

#include <map>
#include <stdexcept>

namespace dqg {

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), table_(dim * dim) {}

void StructureConstants::set_product(std::size_t i, std::size_t j, std::vector<Term> terms) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("structure constant index");
  for (const auto& [k, _] : terms)
    if (k >= dim_) throw std::out_of_range("structure constant target");
  table_[i * dim_ + j] = std::move(terms);
}

StructureConstants StructureConstants::from_window(const BlockAlgebra& algebra, std::size_t level) {
  struct Unit {
    std::size_t block, row, col;
  };
  std::vector<Unit> units;
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> dims;
  std::size_t b = 0;
  for (const auto& idx : algebra.window(level)) {
    const auto n = algebra.block_dim(idx);
    offsets.push_back(units.size());
    dims.push_back(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) units.push_back({b, r, c});
    ++b;
  }
  StructureConstants sc(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = 0; j < units.size(); ++j) {
      const auto& u = units[i];
      const auto& v = units[j];
      // e_rc · e_r'c' = [c = r'] e_rc'
      if (u.block != v.block || u.col != v.row) continue;
      sc.set_product(i, j, {{offsets[u.block] + u.row * dims[u.block] + v.col, Scalar(1)}});
    }
  }
  return sc;
}

StructureConstants StructureConstants::tensor(const StructureConstants& b, const StructureConstants& a) {
  StructureConstants sc(b.dim() * a.dim());
  for (std::size_t i1 = 0; i1 < b.dim(); ++i1)
    for (std::size_t j1 = 0; j1 < b.dim(); ++j1) {
      const auto& pb = b.product(i1, j1);
      if (pb.empty()) continue;
      for (std::size_t i2 = 0; i2 < a.dim(); ++i2)
        for (std::size_t j2 = 0; j2 < a.dim(); ++j2) {
          const auto& pa = a.product(i2, j2);
          if (pa.empty()) continue;
          std::vector<Term> terms;
          for (const auto& [kb, cb] : pb)
            for (const auto& [ka, ca] : pa) terms.emplace_back(kb * a.dim() + ka, cb * ca);
          sc.set_product(i1 * a.dim() + i2, j1 * a.dim() + j2, std::move(terms));
        }
    }
  return sc;
}

namespace {

// Matrix of x ↦ (x·e_j)_j (left = true) or x ↦ (e_j·x)_j, restricted to nonzero rows.
DenseMatrix multiplication_operator(const StructureConstants& sc, bool left) {
  const auto n = sc.dim();
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& terms = left ? sc.product(i, j) : sc.product(j, i);
      for (const auto& [k, c] : terms) rows[{j, k}][i] += c;
    }
  DenseMatrix m(rows.size(), n);
  std::size_t r = 0;
  for (const auto& [_, entries] : rows) {
    for (const auto& [col, c] : entries) m(r, col) = c;
    ++r;
  }
  return m;
}

}  // namespace

bool check_nondegenerate(const StructureConstants& algebra, const NumericPolicy& policy) {
  if (algebra.dim() == 0) return true;
  return kernel_basis(multiplication_operator(algebra, true), policy).empty() &&
         kernel_basis(multiplication_operator(algebra, false), policy).empty();
}

}  // namespace dqg
