#include "dqg/functional.hpp"

#include <stdexcept>

#include "dqg/errors.hpp"
#include "dqg/linalg.hpp"

namespace dqg {

HaarPtr HaarData::counting(AlgebraPtr algebra) {
  return HaarPtr(new HaarData(std::move(algebra), Kind::Counting));
}

HaarPtr HaarData::block_dimension(AlgebraPtr algebra) {
  return HaarPtr(new HaarData(std::move(algebra), Kind::BlockDimension));
}

HaarPtr HaarData::explicit_weights(AlgebraPtr algebra, std::map<Index, BlockWeight> weights) {
  for (const auto& [i, w] : weights) {
    const auto n = algebra->block_dim(i);
    if (w.F.rows() != n || w.F.cols() != n) throw std::invalid_argument("weight matrix has wrong size");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r != c && !w.F(r, c).exactly_zero()) throw std::invalid_argument("weight matrix must be diagonal");
        if (r == c && w.F(r, c).exactly_zero()) throw std::invalid_argument("weight matrix must be invertible");
      }
    if (w.d.exactly_zero()) throw std::invalid_argument("block weight d must be nonzero");
  }
  auto* h = new HaarData(std::move(algebra), Kind::Explicit);
  h->explicit_ = std::move(weights);
  return HaarPtr(h);
}

HaarPtr HaarData::rescaled(const Scalar& factor) const {
  if (factor.exactly_zero()) throw std::invalid_argument("cannot rescale a functional by zero");
  auto* h = new HaarData(*this);
  h->scale_ = scale_ * factor;
  return HaarPtr(h);
}

bool HaarData::tracial() const {
  if (kind_ != Kind::Explicit) return true;
  for (const auto& [_, w] : explicit_)
    for (std::size_t r = 1; r < w.F.rows(); ++r)
      if (!(w.F(r, r) == w.F(0, 0))) return false;
  return true;
}

BlockWeight HaarData::weight(const Index& index) const {
  const auto n = algebra_->block_dim(index);
  switch (kind_) {
    case Kind::Counting: return {scale_, DenseMatrix::identity(n)};
    case Kind::BlockDimension: return {scale_ * Scalar(static_cast<long>(n)), DenseMatrix::identity(n)};
    case Kind::Explicit: {
      auto it = explicit_.find(index);
      if (it == explicit_.end()) throw std::out_of_range("no weight for block " + index.to_string());
      return {it->second.d * scale_, it->second.F};
    }
  }
  throw std::logic_error("unknown weight kind");
}

DenseMatrix HaarData::modular_block(const Index& index) const { return weight(index).F; }

DenseMatrix HaarData::modular_block_inverse(const Index& index) const {
  DenseMatrix f = weight(index).F;
  for (std::size_t r = 0; r < f.rows(); ++r) f(r, r) = Scalar(1) / f(r, r);
  return f;
}

Scalar HaarData::block_value(const Index& index, const DenseMatrix& x) const {
  const auto w = weight(index);
  Scalar t;
  for (std::size_t r = 0; r < x.rows(); ++r) t += w.F(r, r) * x(r, r);
  return w.d * t;
}

Scalar HaarData::operator()(const Element& a) const {
  require_same(algebra_, a.algebra(), "haar evaluate");
  Scalar total;
  for (const auto& [i, m] : a.blocks()) total += block_value(i, m);
  return total;
}

Element HaarData::modular_apply(const Element& a) const {
  require_same(algebra_, a.algebra(), "modular_apply");
  if (tracial()) return a;
  Element out(algebra_);
  for (const auto& [i, m] : a.blocks()) out.set_block(i, modular_block(i) * m * modular_block_inverse(i));
  return out;
}

Element HaarData::modular_apply_inverse(const Element& a) const {
  require_same(algebra_, a.algebra(), "modular_apply_inverse");
  if (tracial()) return a;
  Element out(algebra_);
  for (const auto& [i, m] : a.blocks()) out.set_block(i, modular_block_inverse(i) * m * modular_block(i));
  return out;
}

ReducedFunctional::ReducedFunctional(HaarPtr haar, Element representative, FunctionalSide side)
    : haar_(std::move(haar)), representative_(std::move(representative)), side_(side) {
  if (!haar_) throw std::invalid_argument("reduced functional needs Haar data");
  require_same(haar_->algebra(), representative_.algebra(), "reduced functional");
}

ReducedFunctional ReducedFunctional::matrix_unit(HaarPtr haar, const Index& index, std::size_t i, std::size_t j) {
  auto e = Element::matrix_unit(haar->algebra(), index, i, j);
  return {std::move(haar), std::move(e), FunctionalSide::LeftOfPhi};
}

ReducedFunctional ReducedFunctional::point_mass(HaarPtr haar, const Index& index, const Scalar& c) {
  auto e = Element::block_identity(haar->algebra(), index, c);
  return {std::move(haar), std::move(e), FunctionalSide::LeftOfPhi};
}

Scalar ReducedFunctional::evaluate_block(const Index& index, const DenseMatrix& x) const {
  const auto* r = representative_.find_block(index);
  if (!r) return Scalar(0);
  return haar_->block_value(index, side_ == FunctionalSide::LeftOfPhi ? x * *r : *r * x);
}

DenseMatrix ReducedFunctional::block_density(const Index& index) const {
  const auto* r = representative_.find_block(index);
  const auto n = algebra()->block_dim(index);
  if (!r) return DenseMatrix(n, n);
  const auto w = haar_->weight(index);
  // φ(x·r) = d·tr(r·F·x), φ(r·x) = d·tr(F·r·x)
  return side_ == FunctionalSide::LeftOfPhi ? w.d * (*r * w.F) : w.d * (w.F * *r);
}

Scalar ReducedFunctional::evaluate(const Element& x) const {
  require_same(algebra(), x.algebra(), "evaluate");
  Scalar total;
  for (const auto& [i, m] : x.blocks()) total += evaluate_block(i, m);
  return total;
}

Scalar ReducedFunctional::evaluate(const Multiplier& m) const {
  require_same(algebra(), m.algebra(), "evaluate_on_multiplier");
  Scalar total;
  for (const auto& [i, r] : representative_.blocks()) {
    DenseMatrix mb = m.block(i);
    total += haar_->block_value(i, side_ == FunctionalSide::LeftOfPhi ? mb * r : r * mb);
  }
  return total;
}

ReducedFunctional ReducedFunctional::converted() const {
  if (side_ == FunctionalSide::LeftOfPhi)  // aφ = φ·σ⁻¹(a)
    return {haar_, haar_->modular_apply_inverse(representative_), FunctionalSide::RightOfPhi};
  return {haar_, haar_->modular_apply(representative_), FunctionalSide::LeftOfPhi};
}

ReducedFunctional ReducedFunctional::on_side(FunctionalSide side) const {
  return side == side_ ? *this : converted();
}

ReducedFunctional& ReducedFunctional::operator+=(const ReducedFunctional& o) {
  require_same(algebra(), o.algebra(), "functional +");
  representative_ += o.on_side(side_).representative_;
  return *this;
}

ReducedFunctional& ReducedFunctional::operator*=(const Scalar& c) {
  representative_ *= c;
  return *this;
}

bool ReducedFunctional::same_functional(const ReducedFunctional& o, double tol) const {
  if (algebra().get() != o.algebra().get()) return false;
  return approx_equal(representative_, o.on_side(side_).representative_, tol);
}

Scalar evaluate(const ReducedFunctional& xi, const Element& x) { return xi.evaluate(x); }

Scalar evaluate_on_multiplier(const ReducedFunctional& xi, const Multiplier& m) { return xi.evaluate(m); }

ReducedFunctional functional_side_convert(const ReducedFunctional& xi) { return xi.converted(); }

WindowFunctional::WindowFunctional(AlgebraPtr algebra, std::set<Index> window)
    : algebra_(std::move(algebra)), window_(std::move(window)) {
  for (const auto& i : window_)
    if (!algebra_->contains(i)) throw std::out_of_range("window index " + i.to_string() + " not in algebra");
}

void WindowFunctional::set_density(const Index& index, DenseMatrix density) {
  if (!window_.count(index)) throw WindowTooSmall("block " + index.to_string() + " is outside the functional's window");
  const auto n = algebra_->block_dim(index);
  if (density.rows() != n || density.cols() != n) throw std::invalid_argument("density has wrong size");
  density_[index] = std::move(density);
}

DenseMatrix WindowFunctional::density(const Index& index) const {
  if (!window_.count(index)) throw WindowTooSmall("block " + index.to_string() + " is outside the functional's window");
  auto it = density_.find(index);
  if (it != density_.end()) return it->second;
  const auto n = algebra_->block_dim(index);
  return DenseMatrix(n, n);
}

Scalar WindowFunctional::operator()(const Element& x) const {
  require_same(algebra_, x.algebra(), "window functional");
  Scalar total;
  for (const auto& [i, m] : x.blocks()) total += (density(i) * m).trace();
  return total;
}

DenseMatrix riesz_block(const HaarData& haar, const Index& index, const DenseMatrix& density, FunctionalSide side,
                        const NumericPolicy& policy) {
  const auto n = haar.algebra()->block_dim(index);
  if (density.rows() != n || density.cols() != n) throw std::invalid_argument("density has wrong size");
  // Unknown r = Σ r_ij e_ij; one equation per matrix unit x = e_kl.
  // With F diagonal: φ(e_kl e_ij) = [l=i][k=j]·d·F_kk, φ(e_ij e_kl) = [j=k][i=l]·d·F_ii.
  const auto w = haar.weight(index);
  DenseMatrix system(n * n, n * n);
  Vector rhs(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const auto row = k * n + l;
      rhs[row] = density(l, k);
      if (side == FunctionalSide::LeftOfPhi) system(row, l * n + k) = w.d * w.F(k, k);
      else system(row, l * n + k) = w.d * w.F(l, l);
    }
  auto sol = solve(system, rhs, policy);
  if (!sol) throw SingularMatrix("functional is not faithful on block " + index.to_string());
  return DenseMatrix(n, n, std::move(*sol));
}

ReducedFunctional bimodule_act(const Element& a, const WindowFunctional& f, const Element& b, HaarPtr haar,
                               const NumericPolicy& policy) {
  require_same(a.algebra(), b.algebra(), "bimodule_act");
  require_same(a.algebra(), f.algebra(), "bimodule_act (functional)");
  require_same(a.algebra(), haar->algebra(), "bimodule_act (haar)");
  Element rep(a.algebra());
  // (afb)(x) = f(b·x·a) = Σ_α trace(a_α D_α b_α · x_α)
  for (const auto& [i, ma] : a.blocks()) {
    const auto* mb = b.find_block(i);
    if (!mb) continue;
    DenseMatrix density = ma * f.density(i) * *mb;
    if (density.exactly_zero()) continue;
    rep.set_block(i, riesz_block(*haar, i, density, FunctionalSide::LeftOfPhi, policy));
  }
  return {std::move(haar), std::move(rep), FunctionalSide::LeftOfPhi};
}

}  // namespace dqg
