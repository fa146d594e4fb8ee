#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dqg/dqg.hpp"

namespace dqg {

struct Check {
  std::string name;
  bool passed = true;
  double max_deviation = 0.0;
  /// True when the answer only holds for the windows that were examined.
  bool window_relative = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

struct VerifyOptions {
  std::size_t level = 0;
  /// Cap on probe triples; exhaustive below it, evenly strided above.
  std::size_t max_probes = 4096;
  double tolerance = 1e-9;
  NumericPolicy policy{};
};

/// Σ V·V† = I per block pair and V†·V = I per channel, over window pairs.
VerificationReport verify_fusion(const DQGDescriptor& dqg, const VerifyOptions& options = {});

/// (δ⊗ι)δ(a) = (ι⊗δ)δ(a) on window triples, for each probe element.
VerificationReport verify_coassociativity(const DQGDescriptor& dqg, const std::vector<Element>& probes,
                                          const VerifyOptions& options = {});

/// T1(a⊗b) = δ(a)(1⊗b) and T2(a⊗b) = (a⊗1)δ(b), for δ and for the flipped δ':
/// support, injectivity and surjectivity per preserved leg, and the
/// commutation (T2⊗ι)(ι⊗T1) = (ι⊗T1)(T2⊗ι) on probe triples.
/// Finite models are decided exhaustively; infinite ones per window.
VerificationReport verify_mhopf_axioms(const DQGDescriptor& dqg, const VerifyOptions& options = {});

/// (ι⊗φ)δ(a) = φ(a)·1 on the blocks of the window.
VerificationReport verify_left_invariance(const DQGDescriptor& dqg, const Element& a, const VerifyOptions& options = {});

/// Block β of (ι⊗φ)δ(a), summing over every γ that fuses with β into supp(a).
DenseMatrix left_invariance_block(const DQGDescriptor& dqg, const Element& a, const Index& beta);

}  // namespace dqg
