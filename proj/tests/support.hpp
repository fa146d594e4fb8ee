#pragma once

#include <random>
#include <string>

#include <doctest.h>

#include "dqg/convolution.hpp"
#include "dqg/linalg.hpp"
#include "dqg/errors.hpp"
#include "dqg/random.hpp"

namespace doctest {
template <>
struct StringMaker<dqg::Scalar> {
  static String convert(const dqg::Scalar& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<dqg::DenseMatrix> {
  static String convert(const dqg::DenseMatrix& m) { return m.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

inline dqg::Scalar q(long n, long d = 1) { return dqg::Scalar::rational(n, d); }

// Single block M_2 with d = 1, F = diag(1, 2).
inline dqg::HaarPtr m2_haar() {
  auto alg = dqg::BlockAlgebra::finite({2}, "M2");
  std::map<dqg::Index, dqg::BlockWeight> w;
  w.emplace(dqg::Index(0), dqg::BlockWeight{q(1), dqg::DenseMatrix{{q(1), q(0)}, {q(0), q(2)}}});
  return dqg::HaarData::explicit_weights(alg, std::move(w));
}

inline dqg::Element point(const dqg::AlgebraPtr& alg, long n, const dqg::Scalar& c = 1) {
  return dqg::Element::block_identity(alg, dqg::Index(n), c);
}

inline std::vector<dqg::Index> range(long lo, long hi) {
  std::vector<dqg::Index> out;
  for (long n = lo; n <= hi; ++n) out.emplace_back(n);
  return out;
}

}  // namespace testing
