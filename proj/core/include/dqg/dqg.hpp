#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dqg/functional.hpp"
#include "dqg/group.hpp"
#include "dqg/tensor.hpp"

namespace dqg {

/// One summand of H_β ⊗ H_γ: an isometric intertwiner V: H_α → H_β ⊗ H_γ
/// of shape (n_β·n_γ) × n_α.
struct FusionChannel {
  Index target;
  DenseMatrix isometry;
};

/// Block-pair fusion data; determines the comultiplication via
/// δ(a)_{βγ} = Σ_{(α,V) ∈ channels(β,γ)} V·a_α·V†.
class FusionRules {
 public:
  virtual ~FusionRules() = default;
  virtual std::vector<FusionChannel> channels(const Index& beta, const Index& gamma) const = 0;
  /// All γ with α among the targets of channels(β, γ).
  virtual std::vector<Index> right_partners(const Index& beta, const Index& alpha) const = 0;
  /// All β with α among the targets of channels(β, γ).
  virtual std::vector<Index> left_partners(const Index& alpha, const Index& gamma) const = 0;
  virtual std::string describe() const = 0;
};

/// Comultiplication (as fusion data) plus the invariant functional.
class DQGDescriptor {
 public:
  DQGDescriptor(std::string name, AlgebraPtr algebra, std::shared_ptr<const FusionRules> fusion, HaarPtr haar);

  const std::string& name() const { return name_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const HaarPtr& haar() const { return haar_; }
  const FusionRules& fusion() const { return *fusion_; }

  std::vector<FusionChannel> channels(const Index& beta, const Index& gamma) const {
    return fusion_->channels(beta, gamma);
  }
  std::vector<Index> right_partners(const Index& beta, const Index& alpha) const {
    return fusion_->right_partners(beta, alpha);
  }
  std::vector<Index> left_partners(const Index& alpha, const Index& gamma) const {
    return fusion_->left_partners(alpha, gamma);
  }

  /// The opposite comultiplication δ' = flip ∘ δ.
  DQGDescriptor flipped() const;
  DQGDescriptor with_haar(HaarPtr haar) const;

 private:
  std::string name_;
  AlgebraPtr algebra_;
  std::shared_ptr<const FusionRules> fusion_;
  HaarPtr haar_;
};

/// Finitely supported functions on a discrete group: 1×1 blocks, δ(f)(g,h) = f(gh),
/// φ the counting measure, σ = id.
DQGDescriptor dual_of_group(const GroupModel& group);

/// ⊕_n M_{n+1} over spin indices n = 2j with Clebsch–Gordan fusion
/// (Condon–Shortley phases), d_n = n + 1, F = I. Windows are capped at
/// max_spin_index; fusion partners are never truncated.
DQGDescriptor dual_of_su2(std::size_t max_spin_index);

/// Isometries of H_{j1} ⊗ H_{j2} → ⊕ H_J for doubled spins, built by the
/// ladder-operator recursion. Basis vector i of spin n has 2m = n - 2i;
/// product basis index i1·(n2+1) + i2.
std::vector<FusionChannel> clebsch_gordan(std::int64_t j1_doubled, std::int64_t j2_doubled);

/// δ(a) for a finitely supported element.
TensorMultiplier coproduct(const DQGDescriptor& dqg, const Element& a);
/// The extension of δ to M(A): (β,γ) ↦ Σ over all channels V·x_α·V†.
TensorMultiplier coproduct_of_multiplier(const DQGDescriptor& dqg, const Multiplier& x);

}  // namespace dqg
