#include "scenario.hpp"

#include <numeric>

#include "dqg/errors.hpp"

namespace dqgm {

using nlohmann::json;
using namespace dqg;

namespace {

std::string dump(const json& j) {
  std::string s = j.dump();
  return s.size() > 80 ? s.substr(0, 77) + "..." : s;
}

GroupModel build_group(const json& g) {
  if (g.is_string()) {
    const auto name = g.get<std::string>();
    if (name == "Z") return GroupModel::integers();
    if (name == "Z2" || name == "Z^2") return GroupModel::integer_pairs();
    if (name == "S3") return GroupModel::symmetric_group_3();
    if (name == "trivial") return GroupModel::trivial();
    throw ValidationError("unknown group \"" + name + "\" (known: Z, Z^2, S3, trivial, {cyclic}, {free}, {cayley})");
  }
  if (g.is_object()) {
    if (g.contains("cyclic")) return GroupModel::cyclic(g.at("cyclic").get<std::size_t>());
    if (g.contains("free")) return GroupModel::free_group(g.at("free").get<std::size_t>());
    if (g.contains("cayley")) {
      try {
        return GroupModel::finite_cayley(g.at("cayley").get<std::vector<std::vector<std::size_t>>>(),
                                         g.value("identity", std::size_t{0}), g.value("name", std::string("G")));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("invalid Cayley table: ") + e.what());
      }
    }
  }
  throw ValidationError("cannot read group from " + dump(g));
}

}  // namespace

ModelSide build_model(const json& j, ScalarMode mode) {
  if (!j.is_object() || !j.contains("type")) throw ValidationError("model needs a \"type\"");
  const auto type = j.at("type").get<std::string>();
  ModelSide side;
  if (type == "dual_of_group") {
    auto d = dual_of_group(build_group(j.at("group")));
    side.description = d.name();
    side.algebra = d.algebra();
    side.haar = d.haar();
    side.dqg = std::move(d);
    return side;
  }
  if (type == "dual_of_su2") {
    if (mode == ScalarMode::Exact)
      throw ValidationError("dual_of_su2 needs square roots in its Clebsch-Gordan data; set \"scalar_mode\": \"float\"");
    auto d = dual_of_su2(j.value("max_spin_index", std::size_t{3}));
    side.description = d.name();
    side.algebra = d.algebra();
    side.haar = d.haar();
    side.dqg = std::move(d);
    return side;
  }
  if (type == "block_sum") {
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    side.algebra = BlockAlgebra::finite(dims, j.value("name", std::string("block_sum")));
    side.description = side.algebra->name();
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      if (!w.is_array() || w.size() != dims.size()) throw ValidationError("one weight per block expected");
      std::map<Index, BlockWeight> weights;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        Vector diag;
        for (const auto& f : w[k].at("F")) diag.push_back(Scalar::parse(f.is_string() ? f.get<std::string>() : f.dump(), mode));
        if (diag.size() != dims[k]) throw ValidationError("weight F of block " + std::to_string(k) + " has wrong size");
        const auto& d = w[k].at("d");
        weights.emplace(Index(static_cast<std::int64_t>(k)),
                        BlockWeight{Scalar::parse(d.is_string() ? d.get<std::string>() : d.dump(), mode),
                                    DenseMatrix::diagonal(diag)});
      }
      try {
        side.haar = HaarData::explicit_weights(side.algebra, std::move(weights));
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
    } else {
      side.haar = HaarData::counting(side.algebra);
    }
    return side;
  }
  if (type == "zero_product") {
    const auto dim = j.value("dim", std::size_t{1});
    side.algebra = BlockAlgebra::finite(std::vector<std::size_t>(dim, 1), "zero_product");
    side.haar = HaarData::counting(side.algebra);
    side.structure = StructureConstants::zero_product(dim);
    side.description = "zero_product(" + std::to_string(dim) + ")";
    return side;
  }
  throw ValidationError("unknown model type \"" + type + "\"");
}

const DQGDescriptor& Scenario::require_dqg() const {
  if (!a.dqg) throw ValidationError("model " + a.description + " has no comultiplication");
  return *a.dqg;
}

std::string Scenario::kind_of(const std::string& name) const {
  if (!defs_.contains(name)) throw ValidationError("undefined object \"" + name + "\"");
  return defs_.at(name).value("kind", std::string("multiplier"));
}

const json& Scenario::def(const std::string& name, const std::string& kind) const {
  const auto k = kind_of(name);
  if (k != kind) throw ValidationError("object \"" + name + "\" is a " + k + ", expected a " + kind);
  return defs_.at(name);
}

AlgebraSide Scenario::side_of(const json& d) const {
  const auto s = d.value("algebra", std::string("A"));
  if (s == "A") return AlgebraSide::A;
  if (s == "B") return AlgebraSide::B;
  throw ValidationError("\"algebra\" must be \"A\" or \"B\", got \"" + s + "\"");
}

std::string Scenario::param_name(const std::string& key) const {
  if (!params.contains(key) || !params.at(key).is_string())
    throw ValidationError("params." + key + " must name an object");
  return params.at(key).get<std::string>();
}

Scalar Scenario::scalar(const json& j) const {
  try {
    if (j.is_number_integer()) return Scalar(j.get<long>()).to_mode(mode);
    if (j.is_number_float()) return Scalar::parse(j.dump(), mode);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), mode);
  } catch (const std::invalid_argument& e) {
    throw ValidationError("bad scalar " + dump(j) + ": " + e.what());
  }
  throw ValidationError("expected a scalar, got " + dump(j));
}

Index Scenario::index(const json& j) const {
  if (j.is_number_integer()) return Index(j.get<std::int64_t>());
  if (j.is_array()) return Index(j.get<std::vector<std::int64_t>>());
  throw ValidationError("expected a block index (integer or array), got " + dump(j));
}

DenseMatrix Scenario::matrix(const json& j, std::size_t n) const {
  if (!j.is_array() || j.size() != n) throw ValidationError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " + dump(j));
  DenseMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ValidationError("matrix row " + std::to_string(r) + " has wrong size");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar(j[r][c]);
  }
  return m;
}

Multiplier Scenario::rule(const json& j, AlgebraSide s) const {
  const AlgebraPtr& alg = side(s).algebra;
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "identity") return Multiplier::identity(alg);
    if (name == "zero") return Multiplier::zero(alg);
    throw ValidationError("unknown rule \"" + name + "\"");
  }
  if (!j.is_object() || j.empty()) throw ValidationError("rule must be a string or an object, got " + dump(j));
  try {
    if (j.contains("scalar")) return Multiplier::scalar(alg, scalar(j.at("scalar")));
    if (j.contains("polynomial")) {
      Vector coeffs;
      for (const auto& c : j.at("polynomial")) coeffs.push_back(scalar(c));
      return Multiplier::polynomial(alg, std::move(coeffs));
    }
    if (j.contains("character")) {
      const auto& c = j.at("character");
      if (c.contains("angle")) {
        if (mode == ScalarMode::Exact)
          throw ValidationError("character by angle needs float scalars; set \"scalar_mode\": \"float\"");
        return Multiplier::character_angle(alg, scalar(c.at("angle")).to_complex().real());
      }
      const long order = c.at("order").get<long>();
      const long power = c.value("power", 1L);
      if (order <= 0) throw ValidationError("character order must be positive");
      const long reduced = order / std::gcd(std::abs(power), order);
      if (mode == ScalarMode::Exact && 4 % reduced != 0)
        throw ValidationError("character of order " + std::to_string(reduced) +
                              " has irrational values; exact mode supports orders dividing 4. Hint: set "
                              "\"scalar_mode\": \"float\"");
      return Multiplier::character(alg, power, order, mode);
    }
    if (j.contains("point_mass")) {
      const Index i = index(j.at("point_mass"));
      const Scalar v = j.contains("value") ? scalar(j.at("value")) : Scalar(1).to_mode(mode);
      return embed_element(Element::block_identity(alg, i, v));
    }
    if (j.contains("table")) {
      std::map<Index, DenseMatrix> blocks;
      for (const auto& e : j.at("table")) {
        const Index i = index(e.at("index"));
        blocks.emplace(i, matrix(e.at("matrix"), alg->block_dim(i)));
      }
      std::optional<Multiplier> fallback;
      if (j.contains("default")) fallback = rule(j.at("default"), s);
      return Multiplier::table(alg, std::move(blocks), std::move(fallback));
    }
    if (j.contains("sum")) {
      std::vector<std::pair<Scalar, Multiplier>> terms;
      for (const auto& t : j.at("sum"))
        terms.emplace_back(t.contains("coeff") ? scalar(t.at("coeff")) : Scalar(1), rule(t.at("rule"), s));
      return Multiplier::linear_combination(alg, std::move(terms));
    }
    if (j.contains("product")) {
      const auto& f = j.at("product");
      if (!f.is_array() || f.empty()) throw ValidationError("product needs a nonempty list of rules");
      Multiplier m = rule(f[0], s);
      for (std::size_t k = 1; k < f.size(); ++k) m = Multiplier::product(m, rule(f[k], s));
      return m;
    }
    if (j.contains("ref")) {
      Multiplier m = multiplier(j.at("ref").get<std::string>());
      if (m.algebra() != alg) throw ValidationError("multiplier \"" + j.at("ref").get<std::string>() + "\" lives on the other algebra");
      return m;
    }
    if (j.contains("embed")) {
      Element e = element_spec(j.at("embed"), s);
      return embed_element(e);
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const json::exception& e) {
    throw ValidationError("rule " + dump(j) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError("rule " + dump(j) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ValidationError("rule " + dump(j) + ": " + e.what());
  }
  throw ValidationError("unknown rule " + dump(j));
}

Element Scenario::element_spec(const json& j, AlgebraSide s) const {
  if (j.is_string()) {
    Element e = element(j.get<std::string>());
    if (e.algebra() != side(s).algebra) throw ValidationError("element \"" + j.get<std::string>() + "\" lives on the other algebra");
    return e;
  }
  const AlgebraPtr& alg = side(s).algebra;
  try {
    if (j.contains("point_mass")) {
      const Scalar v = j.contains("value") ? scalar(j.at("value")) : Scalar(1).to_mode(mode);
      return Element::block_identity(alg, index(j.at("point_mass")), v);
    }
    if (j.contains("matrix_unit")) {
      const auto& u = j.at("matrix_unit");
      const Index i = index(u.at("index"));
      const auto n = alg->block_dim(i);
      const auto r = u.value("i", std::size_t{0}), c = u.value("j", std::size_t{0});
      if (r >= n || c >= n) throw ValidationError("matrix unit outside block " + i.to_string());
      const Scalar v = u.contains("coeff") ? scalar(u.at("coeff")) : Scalar(1).to_mode(mode);
      return Element::matrix_unit(alg, i, r, c, v);
    }
    if (j.contains("blocks")) {
      Element e(alg);
      for (const auto& b : j.at("blocks")) {
        const Index i = index(b.at("index"));
        e.add_to_block(i, matrix(b.at("matrix"), alg->block_dim(i)));
      }
      return e;
    }
  } catch (const ValidationError&) {
    throw;
  } catch (const json::exception& e) {
    throw ValidationError("element " + dump(j) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ValidationError("element " + dump(j) + ": " + e.what());
  }
  throw ValidationError("cannot read element from " + dump(j));
}

TensorMultiplier Scenario::tensor_rule(const json& j) const {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return TensorMultiplier::identity(b.algebra, a.algebra);
    throw ValidationError("unknown tensor rule \"" + j.get<std::string>() + "\"");
  }
  if (!j.is_object()) throw ValidationError("tensor rule must be a string or an object, got " + dump(j));
  auto need_same = [&] {
    if (a.algebra != b.algebra) throw ValidationError("coproduct tensors need B = A (omit b_model)");
  };
  if (j.contains("coproduct")) {
    need_same();
    return coproduct_of_multiplier(require_dqg(), rule(j.at("coproduct"), AlgebraSide::A));
  }
  if (j.contains("coproduct_of_element")) {
    need_same();
    return coproduct(require_dqg(), element_spec(j.at("coproduct_of_element"), AlgebraSide::A));
  }
  if (j.contains("elementary")) {
    const auto& e = j.at("elementary");
    if (!e.is_array() || e.size() != 2) throw ValidationError("elementary needs [rule on B, rule on A]");
    return TensorMultiplier::elementary(rule(e[0], AlgebraSide::B), rule(e[1], AlgebraSide::A));
  }
  if (j.contains("sum")) {
    std::vector<std::pair<Scalar, TensorMultiplier>> terms;
    for (const auto& t : j.at("sum"))
      terms.emplace_back(t.contains("coeff") ? scalar(t.at("coeff")) : Scalar(1), tensor_rule(t.at("rule")));
    return TensorMultiplier::linear_combination(b.algebra, a.algebra, std::move(terms));
  }
  if (j.contains("product")) {
    const auto& f = j.at("product");
    if (!f.is_array() || f.empty()) throw ValidationError("product needs a nonempty list of tensor rules");
    TensorMultiplier t = tensor_rule(f[0]);
    for (std::size_t k = 1; k < f.size(); ++k) t = TensorMultiplier::product(t, tensor_rule(f[k]));
    return t;
  }
  if (j.contains("ref")) return tensor(j.at("ref").get<std::string>());
  throw ValidationError("unknown tensor rule " + dump(j));
}

namespace {

// Guards recursive name resolution against cycles.
class Resolving {
 public:
  Resolving(std::set<std::string>& set, const std::string& name) : set_(set), name_(name) {
    if (!set_.insert(name_).second) throw ValidationError("object \"" + name_ + "\" refers to itself");
  }
  ~Resolving() { set_.erase(name_); }

 private:
  std::set<std::string>& set_;
  std::string name_;
};

}  // namespace

Multiplier Scenario::multiplier(const std::string& name) const {
  if (auto it = multipliers_.find(name); it != multipliers_.end()) return it->second;
  const auto& d = def(name, "multiplier");
  Resolving guard(resolving_, name);
  if (!d.contains("rule")) throw ValidationError("multiplier \"" + name + "\" needs a \"rule\"");
  Multiplier m = rule(d.at("rule"), side_of(d));
  multipliers_.emplace(name, m);
  return m;
}

Element Scenario::element(const std::string& name) const {
  if (auto it = elements_.find(name); it != elements_.end()) return it->second;
  const auto& d = def(name, "element");
  Resolving guard(resolving_, name);
  Element e = element_spec(d, side_of(d));
  elements_.emplace(name, e);
  return e;
}

ReducedFunctional Scenario::functional(const std::string& name) const {
  const auto& d = def(name, "functional");
  Resolving guard(resolving_, name);
  const AlgebraSide s = side_of(d);
  const auto& haar = side(s).haar;
  try {
    if (d.contains("bimodule")) {
      const auto& bm = d.at("bimodule");
      return bimodule_act(element_spec(bm.at("a"), s), window_functional(bm.at("f").get<std::string>()),
                          element_spec(bm.at("b"), s), haar);
    }
    FunctionalSide fs = FunctionalSide::LeftOfPhi;
    const auto sd = d.value("side", std::string("left"));
    if (sd == "right") fs = FunctionalSide::RightOfPhi;
    else if (sd != "left") throw ValidationError("functional side must be \"left\" (aφ) or \"right\" (φa)");
    const json& rep = d.contains("element") ? d.at("element") : d;
    return ReducedFunctional(haar, element_spec(rep, s), fs);
  } catch (const ValidationError&) {
    throw;
  } catch (const json::exception& e) {
    throw ValidationError("functional \"" + name + "\": " + e.what());
  }
}

WindowFunctional Scenario::window_functional(const std::string& name) const {
  const auto& d = def(name, "window_functional");
  const AlgebraSide s = side_of(d);
  const auto& alg = side(s).algebra;
  try {
    std::set<Index> window;
    std::vector<std::pair<Index, DenseMatrix>> dens;
    for (const auto& blk : d.at("blocks")) {
      const Index i = index(blk.at("index"));
      window.insert(i);
      dens.emplace_back(i, matrix(blk.at("density"), alg->block_dim(i)));
    }
    WindowFunctional f(alg, window);
    for (auto& [i, m] : dens) f.set_density(i, std::move(m));
    return f;
  } catch (const ValidationError&) {
    throw;
  } catch (const json::exception& e) {
    throw ValidationError("window functional \"" + name + "\": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ValidationError("window functional \"" + name + "\": " + e.what());
  }
}

TensorMultiplier Scenario::tensor(const std::string& name) const {
  if (auto it = tensors_.find(name); it != tensors_.end()) return it->second;
  const auto& d = def(name, "tensor");
  Resolving guard(resolving_, name);
  if (!d.contains("rule")) throw ValidationError("tensor \"" + name + "\" needs a \"rule\"");
  TensorMultiplier t = tensor_rule(d.at("rule"));
  tensors_.emplace(name, t);
  return t;
}

void Scenario::validate_all() const {
  for (const auto& [name, d] : defs_.items()) {
    const auto k = kind_of(name);
    if (k == "multiplier") multiplier(name);
    else if (k == "element") element(name);
    else if (k == "functional") functional(name);
    else if (k == "window_functional") window_functional(name);
    else if (k == "tensor") tensor(name);
    else throw ValidationError("object \"" + name + "\" has unknown kind \"" + k + "\"");
  }
}

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("byte 0: scenario must be a JSON object");
  Scenario s;
  try {
    const auto mode = doc.value("scalar_mode", std::string("exact"));
    if (mode == "exact") s.mode = ScalarMode::Exact;
    else if (mode == "float") s.mode = ScalarMode::Float;
    else throw ValidationError("scalar_mode must be \"exact\" or \"float\"");
    if (!doc.contains("model")) throw ValidationError("scenario needs a \"model\"");
    s.a = build_model(doc.at("model"), s.mode);
    s.b = doc.contains("b_model") ? build_model(doc.at("b_model"), s.mode) : s.a;
    if (doc.contains("objects")) {
      if (!doc.at("objects").is_object()) throw ValidationError("\"objects\" must map names to definitions");
      s.defs_ = doc.at("objects");
    }
    if (doc.contains("params")) s.params = doc.at("params");
    for (const auto& [key, _] : doc.items())
      if (key != "scalar_mode" && key != "model" && key != "b_model" && key != "objects" && key != "params")
        throw ValidationError("unknown top-level key \"" + key + "\"");
  } catch (const json::exception& e) {
    throw ValidationError(e.what());
  }
  s.validate_all();
  return s;
}

}  // namespace dqgm
