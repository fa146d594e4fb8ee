#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>

#include "dqg/linalg.hpp"
#include "dqg/multiplier.hpp"

namespace dqg {

/// Weight of one block in φ(a) = Σ_α d_α·trace(F_α a_α).
struct BlockWeight {
  Scalar d;
  DenseMatrix F;  // positive diagonal
};

/// The invariant functional φ and its modular automorphism σ.
///
/// σ acts block-wise as σ(a)_α = Q_α a_α Q_α⁻¹ with Q_α = F_α, which gives
/// φ(ab) = φ(b·σ(a)).
class HaarData {
 public:
  enum class Kind { Counting, BlockDimension, Explicit };

  /// d_α = 1, F_α = I (counting measure / plain trace).
  static std::shared_ptr<const HaarData> counting(AlgebraPtr algebra);
  /// d_α = n_α, F_α = I.
  static std::shared_ptr<const HaarData> block_dimension(AlgebraPtr algebra);
  /// Weights given per block of a finite algebra.
  static std::shared_ptr<const HaarData> explicit_weights(AlgebraPtr algebra, std::map<Index, BlockWeight> weights);

  /// Same functional times a nonzero constant.
  std::shared_ptr<const HaarData> rescaled(const Scalar& factor) const;

  const AlgebraPtr& algebra() const { return algebra_; }
  Kind kind() const { return kind_; }
  const Scalar& scale() const { return scale_; }
  bool tracial() const;

  /// d_α (including the scale) and F_α.
  BlockWeight weight(const Index& index) const;
  DenseMatrix modular_block(const Index& index) const;
  DenseMatrix modular_block_inverse(const Index& index) const;

  /// d_α·trace(F_α x) for a block matrix x.
  Scalar block_value(const Index& index, const DenseMatrix& x) const;
  Scalar operator()(const Element& a) const;

  Element modular_apply(const Element& a) const;
  Element modular_apply_inverse(const Element& a) const;

 private:
  HaarData(AlgebraPtr algebra, Kind kind) : algebra_(std::move(algebra)), kind_(kind) {}

  AlgebraPtr algebra_;
  Kind kind_;
  Scalar scale_{1};
  std::map<Index, BlockWeight> explicit_;
};

using HaarPtr = std::shared_ptr<const HaarData>;

/// σ(a) block-wise.
inline Element modular_apply(const HaarData& haar, const Element& a) { return haar.modular_apply(a); }

/// aφ (LeftOfPhi) evaluates x ↦ φ(x·a); φa (RightOfPhi) evaluates x ↦ φ(a·x).
enum class FunctionalSide { LeftOfPhi, RightOfPhi };

/// Element of Â = {aφ} = {φa}, stored by representative and side.
class ReducedFunctional {
 public:
  ReducedFunctional(HaarPtr haar, Element representative, FunctionalSide side = FunctionalSide::LeftOfPhi);

  /// e^α_ij φ.
  static ReducedFunctional matrix_unit(HaarPtr haar, const Index& index, std::size_t i, std::size_t j);
  /// δ_index φ, the block identity on the left of φ.
  static ReducedFunctional point_mass(HaarPtr haar, const Index& index, const Scalar& c = 1);

  const HaarPtr& haar() const { return haar_; }
  const AlgebraPtr& algebra() const { return haar_->algebra(); }
  const Element& representative() const { return representative_; }
  FunctionalSide side() const { return side_; }

  Scalar operator()(const Element& x) const { return evaluate(x); }
  Scalar evaluate(const Element& x) const;
  /// Natural extension to M(A): φ(m·a) for aφ, φ(a·m) for φa.
  Scalar evaluate(const Multiplier& m) const;
  /// Value on the block matrix x placed at `index`.
  Scalar evaluate_block(const Index& index, const DenseMatrix& x) const;
  /// D_α with ξ(x) = Σ_α trace(D_α x_α); zero outside the representative's support.
  DenseMatrix block_density(const Index& index) const;
  /// Blocks where the functional can be nonzero.
  std::vector<Index> support() const { return representative_.support(); }

  /// Same functional, other side, via φa = σ(a)φ.
  ReducedFunctional converted() const;
  ReducedFunctional on_side(FunctionalSide side) const;

  ReducedFunctional& operator+=(const ReducedFunctional& o);
  ReducedFunctional& operator*=(const Scalar& c);
  friend ReducedFunctional operator+(ReducedFunctional a, const ReducedFunctional& b) { return a += b; }
  friend ReducedFunctional operator*(const Scalar& c, ReducedFunctional a) { return a *= c; }

  /// Equality as functionals, decided on representatives (faithfulness of φ).
  bool same_functional(const ReducedFunctional& o, double tol = 0.0) const;

 private:
  HaarPtr haar_;
  Element representative_;
  FunctionalSide side_;
};

Scalar evaluate(const ReducedFunctional& xi, const Element& x);
Scalar evaluate_on_multiplier(const ReducedFunctional& xi, const Multiplier& m);
ReducedFunctional functional_side_convert(const ReducedFunctional& xi);

/// Arbitrary linear functional known on a finite window of blocks:
/// f(x) = Σ_α trace(D_α x_α) with densities D_α. Represents A^♯ where it matters.
class WindowFunctional {
 public:
  WindowFunctional(AlgebraPtr algebra, std::set<Index> window);

  void set_density(const Index& index, DenseMatrix density);
  const std::set<Index>& window() const { return window_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  DenseMatrix density(const Index& index) const;

  /// Throws WindowTooSmall if x has a block outside the window.
  Scalar operator()(const Element& x) const;

 private:
  AlgebraPtr algebra_;
  std::set<Index> window_;
  std::map<Index, DenseMatrix> density_;
};

/// Representative r_α of the block functional x ↦ trace(D·x) on block α:
/// LeftOfPhi solves φ(x·r) = trace(D·x), RightOfPhi solves φ(r·x) = trace(D·x).
/// Solved as a linear system over the matrix units of the block.
DenseMatrix riesz_block(const HaarData& haar, const Index& index, const DenseMatrix& density, FunctionalSide side,
                        const NumericPolicy& policy = {});

/// a·f·b as an element of Â: the representative r with φ(x·r) = f(b·x·a).
ReducedFunctional bimodule_act(const Element& a, const WindowFunctional& f, const Element& b, HaarPtr haar,
                               const NumericPolicy& policy = {});

}  // namespace dqg
