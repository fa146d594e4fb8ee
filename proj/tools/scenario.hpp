#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dqg/convolution.hpp"
#include "dqg/nondegenerate.hpp"
#include "dqg/slice.hpp"

namespace dqgm {

/// Malformed document; the message carries the byte offset when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document that does not type-check (unknown name, wrong size,
/// irrational scalar in exact mode, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One side of a scenario: a block algebra with its functional and, for
/// quantum group models, its comultiplication.
struct ModelSide {
  std::string description;
  dqg::AlgebraPtr algebra;
  dqg::HaarPtr haar;
  std::optional<dqg::DQGDescriptor> dqg;
  /// Only for the synthetic zero-product control.
  std::optional<dqg::StructureConstants> structure;
};

enum class AlgebraSide { A, B };

class Scenario {
 public:
  dqg::ScalarMode mode = dqg::ScalarMode::Exact;
  ModelSide a;
  ModelSide b;
  nlohmann::json params = nlohmann::json::object();

  const ModelSide& side(AlgebraSide s) const { return s == AlgebraSide::A ? a : b; }
  const dqg::DQGDescriptor& require_dqg() const;

  bool has(const std::string& name) const { return defs_.contains(name); }
  std::string kind_of(const std::string& name) const;

  dqg::Multiplier multiplier(const std::string& name) const;
  dqg::Element element(const std::string& name) const;
  dqg::ReducedFunctional functional(const std::string& name) const;
  dqg::WindowFunctional window_functional(const std::string& name) const;
  dqg::TensorMultiplier tensor(const std::string& name) const;

  /// Name stored under params[key]; ValidationError when missing.
  std::string param_name(const std::string& key) const;

  dqg::Scalar scalar(const nlohmann::json& j) const;
  dqg::Index index(const nlohmann::json& j) const;
  dqg::DenseMatrix matrix(const nlohmann::json& j, std::size_t n) const;
  dqg::Multiplier rule(const nlohmann::json& j, AlgebraSide side) const;
  dqg::TensorMultiplier tensor_rule(const nlohmann::json& j) const;
  dqg::Element element_spec(const nlohmann::json& j, AlgebraSide side) const;

  /// Resolves every declared object once so errors surface at parse time.
  void validate_all() const;

 private:
  friend Scenario parse_scenario(std::string_view text);

  const nlohmann::json& def(const std::string& name, const std::string& kind) const;
  AlgebraSide side_of(const nlohmann::json& def) const;

  nlohmann::json defs_ = nlohmann::json::object();
  mutable std::set<std::string> resolving_;
  mutable std::map<std::string, dqg::Multiplier> multipliers_;
  mutable std::map<std::string, dqg::Element> elements_;
  mutable std::map<std::string, dqg::TensorMultiplier> tensors_;
};

/// Parses and validates a scenario document. Throws ParseError or ValidationError.
Scenario parse_scenario(std::string_view text);

ModelSide build_model(const nlohmann::json& j, dqg::ScalarMode mode);

}  // namespace dqgm
