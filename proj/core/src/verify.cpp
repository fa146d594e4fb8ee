#include "dqg/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "dqg/linalg.hpp"

namespace dqg {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void compare(Check& check, const DenseMatrix& got, const DenseMatrix& want, double tol) {
  check.max_deviation = std::max(check.max_deviation, max_abs_diff(got, want));
  if (!approx_equal(got, want, tol)) check.passed = false;
}

// Indices 0..total-1, or `cap` of them evenly strided.
std::vector<std::size_t> probe_indices(std::size_t total, std::size_t cap) {
  std::vector<std::size_t> out;
  if (total <= cap) {
    for (std::size_t k = 0; k < total; ++k) out.push_back(k);
  } else {
    for (std::size_t k = 0; k < cap; ++k) out.push_back(k * total / cap);
  }
  return out;
}

struct Unit {
  Index index;
  std::size_t i, j;
};

std::vector<Unit> units_of(const BlockAlgebra& alg, const std::vector<Index>& window) {
  std::vector<Unit> out;
  for (const auto& a : window) {
    const auto n = alg.block_dim(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back({a, i, j});
  }
  return out;
}

// Σ over channels (β,γ) → α of V·x·V†.
DenseMatrix fuse(const DQGDescriptor& dqg, const Index& beta, const Index& gamma, const Index& alpha,
                 const DenseMatrix& x) {
  const auto& alg = *dqg.algebra();
  const auto n = alg.block_dim(beta) * alg.block_dim(gamma);
  DenseMatrix acc(n, n);
  for (const auto& ch : dqg.channels(beta, gamma))
    if (ch.target == alpha) acc += ch.isometry * x * ch.isometry.adjoint();
  return acc;
}

std::vector<Index> unique_sorted(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

enum class TMap { T1, T2 };

// Image of one basis tensor under T1 or T2, keyed by the non-preserved leg.
// T1: a = e^α_pq, b = e^g_kl, T1(a⊗b) = δ(a)(1⊗b), blocks (β, g).
// T2: a = e^g_kl, b = e^α_pq, T2(a⊗b) = (a⊗1)δ(b), blocks (g, γ).
std::map<Index, DenseMatrix> t_image(const DQGDescriptor& dqg, TMap which, const Index& g, std::size_t k,
                                     std::size_t l, const Index& alpha, std::size_t p, std::size_t q) {
  const auto& alg = *dqg.algebra();
  const auto ng = alg.block_dim(g);
  const auto na = alg.block_dim(alpha);
  const DenseMatrix src = DenseMatrix::unit(na, p, q);
  const DenseMatrix fixed = DenseMatrix::unit(ng, k, l);
  std::map<Index, DenseMatrix> out;
  if (which == TMap::T1) {
    for (const auto& beta : unique_sorted(dqg.left_partners(alpha, g))) {
      DenseMatrix m = fuse(dqg, beta, g, alpha, src) * kron(DenseMatrix::identity(alg.block_dim(beta)), fixed);
      if (!m.exactly_zero()) out.emplace(beta, std::move(m));
    }
  } else {
    for (const auto& gamma : unique_sorted(dqg.right_partners(g, alpha))) {
      DenseMatrix m = kron(fixed, DenseMatrix::identity(alg.block_dim(gamma))) * fuse(dqg, g, gamma, alpha, src);
      if (!m.exactly_zero()) out.emplace(gamma, std::move(m));
    }
  }
  return out;
}

// Injectivity, surjectivity and support of one T-map. T1 never mixes the
// column index s of the preserved second leg (b = e^g_ks), T2 never mixes the
// row index s of the preserved first leg (a = e^g_sl), so the map splits into
// independent pieces per (g, s).
void check_t_map(const DQGDescriptor& dqg, TMap which, const std::string& label, const VerifyOptions& opt,
                 VerificationReport& report) {
  const auto& alg = *dqg.algebra();
  const bool finite = alg.is_finite();
  const auto window = alg.window(opt.level);

  Check support{label + " support", true, 0.0, false, ""};
  Check injective{label + " injective", true, 0.0, !finite, ""};
  Check surjective{label + " surjective", true, 0.0, !finite, ""};
  std::size_t columns_total = 0;

  for (const auto& g : window) {
    const auto ng = alg.block_dim(g);
    // Sources: the next window plus every block the window targets fuse into.
    std::vector<Index> sources = finite ? window : alg.window(opt.level + 1);
    for (const auto& b : window) {
      const Index& x = which == TMap::T1 ? b : g;
      const Index& y = which == TMap::T1 ? g : b;
      for (const auto& ch : dqg.channels(x, y)) sources.push_back(ch.target);
    }
    sources = unique_sorted(std::move(sources));

    for (std::size_t s = 0; s < ng; ++s) {
      // Entry (r, c) of a block (other, g) or (g, other) belongs to piece s?
      auto in_piece = [&](std::size_t r, std::size_t c, std::size_t n_other) {
        return which == TMap::T1 ? c % ng == s : r / n_other == s;
      };
      std::map<std::tuple<Index, std::size_t, std::size_t>, std::size_t> row_id;
      auto row_of = [&](const Index& other, std::size_t r, std::size_t c) {
        auto [it, fresh] = row_id.try_emplace({other, r, c}, row_id.size());
        (void)fresh;
        return it->second;
      };
      std::vector<std::size_t> target_rows;
      auto add_targets = [&](const Index& b) {
        const auto n = alg.block_dim(b) * ng;
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            if (in_piece(r, c, alg.block_dim(b))) target_rows.push_back(row_of(b, r, c));
      };
      for (const auto& b : window) add_targets(b);

      std::vector<std::map<std::size_t, Scalar>> cols;
      for (const auto& alpha : sources) {
        const auto na = alg.block_dim(alpha);
        for (std::size_t p = 0; p < na; ++p)
          for (std::size_t q = 0; q < na; ++q)
            for (std::size_t t = 0; t < ng; ++t) {
              const std::size_t k = which == TMap::T1 ? t : s;
              const std::size_t l = which == TMap::T1 ? s : t;
              std::map<std::size_t, Scalar> col;
              for (const auto& [other, m] : t_image(dqg, which, g, k, l, alpha, p, q)) {
                if (!alg.contains(other)) {
                  support.passed = false;
                  support.detail = "image block " + other.to_string() + " outside the algebra";
                  continue;
                }
                const auto no = alg.block_dim(other);
                for (std::size_t r = 0; r < m.rows(); ++r)
                  for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (m(r, c).exactly_zero()) continue;
                    if (!in_piece(r, c, no)) {
                      support.passed = false;
                      support.detail = "image leaves its invariant piece";
                      continue;
                    }
                    col[row_of(other, r, c)] = m(r, c);
                  }
              }
              cols.push_back(std::move(col));
            }
      }
      columns_total += cols.size();
      if (finite) {
        // Every row of the whole algebra is a target.
        target_rows.clear();
        for (const auto& b : window) add_targets(b);
        for (const auto& [key, id] : row_id) (void)key, target_rows.push_back(id);
        std::sort(target_rows.begin(), target_rows.end());
        target_rows.erase(std::unique(target_rows.begin(), target_rows.end()), target_rows.end());
      }
      const std::size_t rows = row_id.size();
      DenseMatrix mat(rows, cols.size());
      DenseMatrix aug(rows, cols.size() + target_rows.size());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c]) {
          mat(r, c) = v;
          aug(r, c) = v;
        }
      for (std::size_t t = 0; t < target_rows.size(); ++t) aug(target_rows[t], cols.size() + t) = 1;
      const auto r = rank(mat, opt.policy);
      if (r != cols.size()) {
        injective.passed = false;
        injective.detail =
            "kernel of dimension " + std::to_string(cols.size() - r) + " at fixed leg " + g.to_string();
      }
      if (rank(aug, opt.policy) != r) {
        surjective.passed = false;
        surjective.detail = "window target outside the image at fixed leg " + g.to_string();
      }
    }
  }
  if (support.detail.empty()) support.detail = std::to_string(columns_total) + " basis tensors mapped";
  if (injective.detail.empty()) injective.detail = "rank equals source dimension on " + alg.window_description(opt.level);
  if (surjective.detail.empty())
    surjective.detail = finite ? "image is all of A⊗A" : "every window matrix unit has a preimage";
  report.checks.push_back(std::move(support));
  report.checks.push_back(std::move(injective));
  report.checks.push_back(std::move(surjective));
}

using Triple = std::tuple<Index, Index, Index>;

void add_to(std::map<Index, DenseMatrix>& m, const Index& key, const DenseMatrix& x) {
  auto it = m.find(key);
  if (it == m.end()) m.emplace(key, x);
  else it->second += x;
}

// (T2⊗ι)(ι⊗T1) and (ι⊗T1)(T2⊗ι) on a⊗b⊗c, keyed by the middle leg.
void check_commutation(const DQGDescriptor& dqg, const std::string& label, const VerifyOptions& opt,
                       VerificationReport& report) {
  const auto& alg = *dqg.algebra();
  const auto units = units_of(alg, alg.window(opt.level));
  const std::size_t u = units.size();
  Check check{label + " commutation (T2⊗ι)(ι⊗T1) = (ι⊗T1)(T2⊗ι)", true, 0.0, !alg.is_finite(), ""};
  const auto picks = probe_indices(u * u * u, opt.max_probes);
  for (auto t : picks) {
    const Unit& a = units[t / (u * u)];
    const Unit& b = units[(t / u) % u];
    const Unit& c = units[t % u];
    const Index& x = a.index;
    const Index& z = c.index;
    const auto nx = alg.block_dim(x), nz = alg.block_dim(z);
    const DenseMatrix ea = DenseMatrix::unit(nx, a.i, a.j);
    const DenseMatrix ec = DenseMatrix::unit(nz, c.i, c.j);

    std::map<Index, DenseMatrix> lhs, rhs;
    // ι⊗T1 first: M = δ(b)(1⊗c) on (y, z); then (a⊗1)δ on the first leg.
    for (const auto& [y, m] : t_image(dqg, TMap::T1, z, c.i, c.j, b.index, b.i, b.j)) {
      for (const auto& y2 : unique_sorted(dqg.right_partners(x, y))) {
        const auto n2 = alg.block_dim(y2);
        DenseMatrix acc(nx * n2 * nz, nx * n2 * nz);
        for (const auto& ch : dqg.channels(x, y2)) {
          if (ch.target != y) continue;
          const DenseMatrix lift = kron(ch.isometry, DenseMatrix::identity(nz));
          acc += lift * m * lift.adjoint();
        }
        add_to(lhs, y2, kron(ea, DenseMatrix::identity(n2 * nz)) * acc);
      }
    }
    // T2⊗ι first: N = (a⊗1)δ(b) on (x, w); then δ on the second leg, times 1⊗1⊗c.
    for (const auto& [w, n] : t_image(dqg, TMap::T2, x, a.i, a.j, b.index, b.i, b.j)) {
      for (const auto& y : unique_sorted(dqg.left_partners(w, z))) {
        const auto ny = alg.block_dim(y);
        DenseMatrix acc(nx * ny * nz, nx * ny * nz);
        for (const auto& ch : dqg.channels(y, z)) {
          if (ch.target != w) continue;
          const DenseMatrix lift = kron(DenseMatrix::identity(nx), ch.isometry);
          acc += lift * n * lift.adjoint();
        }
        add_to(rhs, y, acc * kron(DenseMatrix::identity(nx * ny), ec));
      }
    }
    std::set<Index> keys;
    for (const auto& [k, _] : lhs) keys.insert(k);
    for (const auto& [k, _] : rhs) keys.insert(k);
    for (const auto& y : keys) {
      const auto n = nx * alg.block_dim(y) * nz;
      auto li = lhs.find(y);
      auto ri = rhs.find(y);
      compare(check, li == lhs.end() ? DenseMatrix(n, n) : li->second, ri == rhs.end() ? DenseMatrix(n, n) : ri->second,
              opt.tolerance);
    }
  }
  check.detail = std::to_string(picks.size()) + " of " + std::to_string(u * u * u) + " basis triples";
  report.checks.push_back(std::move(check));
}

}  // namespace

VerificationReport verify_fusion(const DQGDescriptor& dqg, const VerifyOptions& opt) {
  const auto& alg = *dqg.algebra();
  const auto window = alg.window(opt.level);
  VerificationReport report{"fusion of " + dqg.name(), {}};
  Check completeness{"completeness Σ V V† = 1", true, 0.0, !alg.is_finite(), ""};
  Check isometry{"isometry V† V = 1", true, 0.0, !alg.is_finite(), ""};
  std::size_t pairs = 0;
  for (const auto& beta : window)
    for (const auto& gamma : window) {
      const auto n = alg.block_dim(beta) * alg.block_dim(gamma);
      DenseMatrix acc(n, n);
      for (const auto& ch : dqg.channels(beta, gamma)) {
        const auto na = alg.block_dim(ch.target);
        if (ch.isometry.rows() != n || ch.isometry.cols() != na) {
          isometry.passed = false;
          isometry.detail = "channel " + ch.target.to_string() + " has the wrong shape";
          continue;
        }
        acc += ch.isometry * ch.isometry.adjoint();
        compare(isometry, ch.isometry.adjoint() * ch.isometry, DenseMatrix::identity(na), opt.tolerance);
      }
      compare(completeness, acc, DenseMatrix::identity(n), opt.tolerance);
      ++pairs;
    }
  completeness.detail = std::to_string(pairs) + " block pairs over " + alg.window_description(opt.level);
  if (isometry.detail.empty()) isometry.detail = completeness.detail;
  report.checks.push_back(std::move(completeness));
  report.checks.push_back(std::move(isometry));
  return report;
}

VerificationReport verify_coassociativity(const DQGDescriptor& dqg, const std::vector<Element>& probes,
                                          const VerifyOptions& opt) {
  const auto& alg = *dqg.algebra();
  const auto window = alg.window(opt.level);
  const std::size_t w = window.size();
  VerificationReport report{"coassociativity of " + dqg.name(), {}};
  Check check{"(δ⊗ι)δ = (ι⊗δ)δ", true, 0.0, !alg.is_finite(), ""};
  const auto picks = probe_indices(w * w * w, std::max<std::size_t>(1, opt.max_probes / std::max<std::size_t>(1, probes.size())));
  for (const auto& a : probes) {
    const auto y = coproduct(dqg, a);
    std::map<std::pair<Index, Index>, DenseMatrix> cache;
    auto yb = [&](const Index& p, const Index& q) -> const DenseMatrix& {
      auto key = std::make_pair(p, q);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, y.block(p, q)).first;
      return it->second;
    };
    for (auto t : picks) {
      const Index& x = window[t / (w * w)];
      const Index& m = window[(t / w) % w];
      const Index& z = window[t % w];
      const auto nx = alg.block_dim(x), nm = alg.block_dim(m), nz = alg.block_dim(z);
      const auto n = nx * nm * nz;
      DenseMatrix lhs(n, n), rhs(n, n);
      for (const auto& ch : dqg.channels(x, m)) {
        const DenseMatrix lift = kron(ch.isometry, DenseMatrix::identity(nz));
        lhs += lift * yb(ch.target, z) * lift.adjoint();
      }
      for (const auto& ch : dqg.channels(m, z)) {
        const DenseMatrix lift = kron(DenseMatrix::identity(nx), ch.isometry);
        rhs += lift * yb(x, ch.target) * lift.adjoint();
      }
      compare(check, lhs, rhs, opt.tolerance);
    }
  }
  check.detail = std::to_string(probes.size()) + " probe elements × " + std::to_string(picks.size()) +
                 " block triples over " + alg.window_description(opt.level);
  report.checks.push_back(std::move(check));
  return report;
}

VerificationReport verify_mhopf_axioms(const DQGDescriptor& dqg, const VerifyOptions& opt) {
  VerificationReport report{"multiplier Hopf axioms of " + dqg.name(), {}};
  const DQGDescriptor flipped = dqg.flipped();
  check_t_map(dqg, TMap::T1, "T1", opt, report);
  check_t_map(dqg, TMap::T2, "T2", opt, report);
  check_commutation(dqg, "δ", opt, report);
  check_t_map(flipped, TMap::T1, "T1'", opt, report);
  check_t_map(flipped, TMap::T2, "T2'", opt, report);
  check_commutation(flipped, "δ'", opt, report);
  return report;
}

DenseMatrix left_invariance_block(const DQGDescriptor& dqg, const Element& a, const Index& beta) {
  const auto& alg = *dqg.algebra();
  const auto& haar = *dqg.haar();
  const auto nb = alg.block_dim(beta);
  std::vector<Index> gammas;
  for (const auto& alpha : a.support())
    for (auto& g : dqg.right_partners(beta, alpha)) gammas.push_back(std::move(g));
  DenseMatrix acc(nb, nb);
  for (const auto& gamma : unique_sorted(std::move(gammas))) {
    DenseMatrix yb(nb * alg.block_dim(gamma), nb * alg.block_dim(gamma));
    for (const auto& [alpha, m] : a.blocks()) yb += fuse(dqg, beta, gamma, alpha, m);
    const auto w = haar.weight(gamma);
    acc += w.d * partial_trace_second(kron(DenseMatrix::identity(nb), w.F) * yb, nb, alg.block_dim(gamma));
  }
  return acc;
}

VerificationReport verify_left_invariance(const DQGDescriptor& dqg, const Element& a, const VerifyOptions& opt) {
  require_same(dqg.algebra(), a.algebra(), "verify_left_invariance");
  const auto& alg = *dqg.algebra();
  VerificationReport report{"left invariance of φ on " + dqg.name(), {}};
  Check check{"(ι⊗φ)δ(a) = φ(a)1", true, 0.0, !alg.is_finite(), ""};
  const Scalar phi_a = (*dqg.haar())(a);
  const auto window = alg.window(opt.level);
  for (const auto& beta : window)
    compare(check, left_invariance_block(dqg, a, beta), phi_a * DenseMatrix::identity(alg.block_dim(beta)),
            opt.tolerance);
  check.detail = "φ(a) = " + phi_a.to_string() + " checked on " + alg.window_description(opt.level);
  report.checks.push_back(std::move(check));
  return report;
}

}  // namespace dqg
