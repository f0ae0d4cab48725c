#ifndef PARACONTACT_TEST_HELPERS_HPP
#define PARACONTACT_TEST_HELPERS_HPP

#include <gtest/gtest.h>

#include <random>

#include "paracontact/frame.hpp"

namespace paracontact::testing {

using Q = Rational;

inline Q q(long p, long d = 1) { return Q(p, d); }

inline Model<Q> fix_a(long a, long b) { return builtin_example<Q>("fix-a", {q(a), q(b)}); }
inline Model<Q> fix_b() { return builtin_example<Q>("fix-b", {}); }
inline Model<Q> fix_c() { return builtin_example<Q>("fix-c", {}); }

// Contact (0,0)-structure on a 3-dimensional unimodular Lie algebra.
inline Model<Q> contact_e2() {
  FrameAlgebra<Q> alg(3, {"e1", "e2", "xi"});
  Vec<Q> v = Vec<Q>::Zero(3);
  v(2) = q(2);
  alg.set_bracket(0, 1, v);
  v.setZero();
  v(0) = q(2);
  alg.set_bracket(1, 2, v);
  Mat<Q> phi = Mat<Q>::Zero(3, 3);
  phi(1, 0) = q(1);
  phi(0, 1) = q(-1);
  return make_model<Q>(alg, StructureKind::contact, phi, unit_vector<Q>(3, 2), Mat<Q>::Identity(3, 3),
                       std::nullopt, "contact-e2");
}

inline Vec<Q> e(int dim, int i) { return unit_vector<Q>(dim, i); }

template <class S>
Mat<S> diag(std::initializer_list<S> entries) {
  Mat<S> m = Mat<S>::Zero(static_cast<Eigen::Index>(entries.size()), static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& v : entries) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline Mat<Q> random_rational(std::mt19937& rng, int rows, int cols, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  Mat<Q> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Q(num(rng), den(rng));
  return m;
}

inline Model<Q> abelian(int dim) {
  FrameAlgebra<Q> alg(dim);
  Mat<Q> phi = Mat<Q>::Zero(dim, dim);
  Mat<Q> gram = Mat<Q>::Identity(dim, dim);
  return make_model<Q>(alg, StructureKind::paracontact, phi, unit_vector<Q>(dim, dim - 1), gram);
}

#define EXPECT_THROW_KIND(stmt, k)                             \
  do {                                                         \
    try {                                                      \
      stmt;                                                    \
      ADD_FAILURE() << "expected " << ::paracontact::error_name(k); \
    } catch (const ::paracontact::Error& err) {                \
      EXPECT_EQ(err.kind(), k) << err.what();                  \
    }                                                          \
  } while (0)

}  // namespace paracontact::testing

#endif
