#include "dqg/dqg.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "dqg/errors.hpp"

namespace dqg {

DQGDescriptor::DQGDescriptor(std::string name, AlgebraPtr algebra, std::shared_ptr<const FusionRules> fusion,
                             HaarPtr haar)
    : name_(std::move(name)), algebra_(std::move(algebra)), fusion_(std::move(fusion)), haar_(std::move(haar)) {
  if (!algebra_ || !fusion_ || !haar_) throw std::invalid_argument("incomplete quantum group descriptor");
  require_same(algebra_, haar_->algebra(), "descriptor haar");
}

namespace {

class GroupFusion final : public FusionRules {
 public:
  explicit GroupFusion(GroupModel group) : group_(std::move(group)) {}

  std::vector<FusionChannel> channels(const Index& beta, const Index& gamma) const override {
    return {{group_.multiply(beta, gamma), DenseMatrix::identity(1)}};
  }
  std::vector<Index> right_partners(const Index& beta, const Index& alpha) const override {
    return {group_.multiply(group_.inverse(beta), alpha)};
  }
  std::vector<Index> left_partners(const Index& alpha, const Index& gamma) const override {
    return {group_.multiply(alpha, group_.inverse(gamma))};
  }
  std::string describe() const override { return "group(" + group_.name() + ")"; }

 private:
  GroupModel group_;
};

class Su2Fusion final : public FusionRules {
 public:
  std::vector<FusionChannel> channels(const Index& beta, const Index& gamma) const override {
    const auto key = std::make_pair(beta.value(), gamma.value());
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, clebsch_gordan(key.first, key.second)).first;
    return it->second;
  }
  std::vector<Index> right_partners(const Index& beta, const Index& alpha) const override {
    return triangle(alpha.value(), beta.value());
  }
  std::vector<Index> left_partners(const Index& alpha, const Index& gamma) const override {
    return triangle(alpha.value(), gamma.value());
  }
  std::string describe() const override { return "su2-clebsch-gordan"; }

 private:
  // x with α ∈ x ⊗ y: |α - y| <= x <= α + y, same parity.
  static std::vector<Index> triangle(std::int64_t alpha, std::int64_t y) {
    std::vector<Index> out;
    for (std::int64_t x = std::abs(alpha - y); x <= alpha + y; x += 2) out.emplace_back(x);
    return out;
  }

  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, std::vector<FusionChannel>> cache_;
};

class FlippedFusion final : public FusionRules {
 public:
  FlippedFusion(std::shared_ptr<const FusionRules> inner, AlgebraPtr algebra)
      : inner_(std::move(inner)), algebra_(std::move(algebra)) {}

  std::vector<FusionChannel> channels(const Index& beta, const Index& gamma) const override {
    const DenseMatrix swap = swap_matrix(algebra_->block_dim(gamma), algebra_->block_dim(beta));
    auto chans = inner_->channels(gamma, beta);
    for (auto& c : chans) c.isometry = swap * c.isometry;
    return chans;
  }
  std::vector<Index> right_partners(const Index& beta, const Index& alpha) const override {
    return inner_->left_partners(alpha, beta);
  }
  std::vector<Index> left_partners(const Index& alpha, const Index& gamma) const override {
    return inner_->right_partners(gamma, alpha);
  }
  std::string describe() const override { return "flip(" + inner_->describe() + ")"; }

 private:
  std::shared_ptr<const FusionRules> inner_;
  AlgebraPtr algebra_;
};

}  // namespace

DQGDescriptor DQGDescriptor::flipped() const {
  return {name_ + "'", algebra_, std::make_shared<FlippedFusion>(fusion_, algebra_), haar_};
}

DQGDescriptor DQGDescriptor::with_haar(HaarPtr haar) const { return {name_, algebra_, fusion_, std::move(haar)}; }

DQGDescriptor dual_of_group(const GroupModel& group) {
  auto algebra = group.make_algebra();
  auto haar = HaarData::counting(algebra);
  return {"dual_of_group(" + group.name() + ")", algebra, std::make_shared<GroupFusion>(group), haar};
}

DQGDescriptor dual_of_su2(std::size_t max_spin_index) {
  auto algebra = BlockAlgebra::spin_ladder(static_cast<std::int64_t>(max_spin_index), "SU(2)^");
  auto haar = HaarData::block_dimension(algebra);
  return {"dual_of_su2(" + std::to_string(max_spin_index) + ")", algebra, std::make_shared<Su2Fusion>(), haar};
}

std::vector<FusionChannel> clebsch_gordan(std::int64_t j1, std::int64_t j2) {
  if (j1 < 0 || j2 < 0) throw std::invalid_argument("spins must be non-negative");
  const auto n1 = static_cast<Eigen::Index>(j1 + 1);
  const auto n2 = static_cast<Eigen::Index>(j2 + 1);
  const Eigen::Index dim = n1 * n2;
  // 2m of product basis vector (i1, i2).
  auto m_of = [&](Eigen::Index row) { return (j1 - 2 * (row / n2)) + (j2 - 2 * (row % n2)); };
  // J- = J1- ⊗ I + I ⊗ J2-, with J-|j m> = sqrt((j+m)(j-m+1)) |j m-1> in doubled units.
  Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i1 = 0; i1 < n1; ++i1)
    for (Eigen::Index i2 = 0; i2 < n2; ++i2) {
      const Eigen::Index row = i1 * n2 + i2;
      const std::int64_t m1 = j1 - 2 * i1, m2 = j2 - 2 * i2;
      if (i1 + 1 < n1) lower((i1 + 1) * n2 + i2, row) = std::sqrt(double((j1 + m1) * (j1 - m1 + 2)) / 4.0);
      if (i2 + 1 < n2) lower(i1 * n2 + i2 + 1, row) = std::sqrt(double((j2 + m2) * (j2 - m2 + 2)) / 4.0);
    }

  std::vector<Eigen::VectorXd> built;
  std::vector<FusionChannel> out;
  for (std::int64_t J = j1 + j2; J >= std::abs(j1 - j2); J -= 2) {
    // Highest-weight vector: weight-J vector orthogonal to every state built so far.
    Eigen::VectorXd top = Eigen::VectorXd::Zero(dim);
    double best = 0.0;
    for (Eigen::Index row = 0; row < dim; ++row) {
      if (m_of(row) != J) continue;
      Eigen::VectorXd v = Eigen::VectorXd::Unit(dim, row);
      for (const auto& w : built) v -= w.dot(v) * w;
      for (const auto& w : built) v -= w.dot(v) * w;
      if (v.norm() > best + 1e-12) {
        best = v.norm();
        top = v;
      }
    }
    if (best < 1e-8) throw std::logic_error("Clebsch-Gordan recursion lost a highest-weight vector");
    top /= top.norm();
    // Condon–Shortley: <j1 j1; j2 (J - j1) | J J> > 0.
    const std::int64_t m2 = J - j1;
    const Eigen::Index cs_row = (j2 - m2) / 2;
    if (top(cs_row) < 0) top = -top;

    DenseMatrix iso(static_cast<std::size_t>(dim), static_cast<std::size_t>(J + 1));
    Eigen::VectorXd v = top;
    for (std::int64_t k = 0; k <= J; ++k) {
      built.push_back(v);
      for (Eigen::Index r = 0; r < dim; ++r)
        if (v(r) != 0.0) iso(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = Scalar::from_double(v(r));
        else iso(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = Scalar(std::complex<double>(0.0));
      if (k == J) break;
      const std::int64_t M = J - 2 * k;
      v = lower * v / std::sqrt(double((J + M) * (J - M + 2)) / 4.0);
    }
    out.push_back({Index(J), std::move(iso)});
  }
  return out;
}

namespace {

class CoproductElementRule final : public TensorRule {
 public:
  CoproductElementRule(DQGDescriptor dqg, Element a) : dqg_(std::move(dqg)), a_(std::move(a)) {}
  DenseMatrix block(const Index& beta, const Index& gamma) const override {
    const auto& alg = *dqg_.algebra();
    const auto n = alg.block_dim(beta) * alg.block_dim(gamma);
    DenseMatrix acc(n, n);
    if (a_.is_zero()) return acc;
    for (const auto& ch : dqg_.channels(beta, gamma)) {
      const auto* ab = a_.find_block(ch.target);
      if (ab) acc += ch.isometry * *ab * ch.isometry.adjoint();
    }
    return acc;
  }
  std::string describe() const override {
    return "coproduct(element on " + std::to_string(a_.blocks().size()) + " blocks)";
  }

 private:
  DQGDescriptor dqg_;
  Element a_;
};

class CoproductMultiplierRule final : public TensorRule {
 public:
  CoproductMultiplierRule(DQGDescriptor dqg, Multiplier x) : dqg_(std::move(dqg)), x_(std::move(x)) {}
  DenseMatrix block(const Index& beta, const Index& gamma) const override {
    const auto& alg = *dqg_.algebra();
    const auto n = alg.block_dim(beta) * alg.block_dim(gamma);
    DenseMatrix acc(n, n);
    for (const auto& ch : dqg_.channels(beta, gamma)) acc += ch.isometry * x_.block(ch.target) * ch.isometry.adjoint();
    return acc;
  }
  std::string describe() const override { return "coproduct(" + x_.describe() + ")"; }

 private:
  DQGDescriptor dqg_;
  Multiplier x_;
};

}  // namespace

TensorMultiplier coproduct(const DQGDescriptor& dqg, const Element& a) {
  require_same(dqg.algebra(), a.algebra(), "coproduct");
  return {dqg.algebra(), dqg.algebra(), std::make_shared<CoproductElementRule>(dqg, a)};
}

TensorMultiplier coproduct_of_multiplier(const DQGDescriptor& dqg, const Multiplier& x) {
  require_same(dqg.algebra(), x.algebra(), "coproduct_of_multiplier");
  return {dqg.algebra(), dqg.algebra(), std::make_shared<CoproductMultiplierRule>(dqg, x)};
}

}  // namespace dqg
