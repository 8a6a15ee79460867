#include "conequot/lattice.hpp"

#include "random_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace conequot;
using conequot::testing::random_matrix;
using conequot::testing::random_vectors;
using conequot::testing::uniform;

namespace {

bool same(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_diagonal_chain(const IntMatrix& s) {
  for (Index i = 0; i < s.rows(); ++i)
    for (Index j = 0; j < s.cols(); ++j)
      if (i != j && s(i, j) != 0) return false;
  const Index n = std::min(s.rows(), s.cols());
  for (Index i = 0; i < n; ++i) {
    if (s(i, i) < 0) return false;
    if (i + 1 < n) {
      if (s(i, i) == 0 && s(i + 1, i + 1) != 0) return false;
      if (s(i, i) != 0 && s(i + 1, i + 1) % s(i, i) != 0) return false;
    }
  }
  return true;
}

// Membership by solving over Q and checking integrality; independent of the HNF path.
bool member_by_solving(const Sublattice& l, const IntVector& v) {
  const auto x = solve_in_row_space(l.basis_vectors(), v);
  if (!x) return false;
  for (Index i = 0; i < x->size(); ++i)
    if (bmp::denominator((*x)[i]) != 1) return false;
  return true;
}

}  // namespace

TEST(SmithNormalForm, SmallExample) {
  const IntMatrix m = int_matrix({{1, 0}, {2, 3}});
  const auto snf = smith_normal_form(m);
  EXPECT_TRUE(same(snf.diagonal, int_matrix({{1, 0}, {0, 3}})));
  EXPECT_TRUE(same(snf.transform_left * m * snf.transform_right, snf.diagonal));
  EXPECT_EQ(abs(determinant(snf.transform_left)), 1);
  EXPECT_EQ(abs(determinant(snf.transform_right)), 1);
}

TEST(SmithNormalForm, IdentityAndZero) {
  EXPECT_TRUE(same(smith_normal_form(IntMatrix(IntMatrix::Identity(2, 2))).diagonal, IntMatrix::Identity(2, 2)));
  EXPECT_TRUE(same(smith_normal_form(IntMatrix(IntMatrix::Zero(2, 2))).diagonal, IntMatrix::Zero(2, 2)));
}

TEST(SmithNormalForm, WorksOverMachineIntegers) {
  MatrixX<long long> m(2, 2);
  m << 2, 4, 6, 8;
  const auto snf = smith_normal_form<long long>(m);
  EXPECT_EQ(snf.diagonal(0, 0), 2);
  EXPECT_EQ(snf.diagonal(1, 1), 4);
}

TEST(SmithNormalForm, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const IntMatrix m = random_matrix(rng, uniform(rng, 0, 4), uniform(rng, 0, 4), -6, 6);
    const auto snf = smith_normal_form(m);
    ASSERT_TRUE(same(snf.transform_left * m * snf.transform_right, snf.diagonal));
    ASSERT_TRUE(is_diagonal_chain(snf.diagonal));
    ASSERT_EQ(abs(determinant(snf.transform_left)), 1);
    ASSERT_EQ(abs(determinant(snf.transform_right)), 1);
  }
}

TEST(Hermite, CanonicalBasisIsLowerTriangular) {
  const IntMatrix h = canonical_hermite_basis(int_matrix({{2, 3}, {1, 0}}));
  ASSERT_EQ(h.rows(), 2);
  EXPECT_EQ(h(0, 1), 0);
  EXPECT_GT(h(0, 0), 0);
  EXPECT_GT(h(1, 1), 0);
  EXPECT_EQ(abs(determinant(h)), 3);
}

TEST(Hermite, PermutationInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = uniform(rng, 1, 4);
    auto gens = random_vectors(rng, static_cast<std::size_t>(uniform(rng, 0, 5)), n, -5, 5);
    const auto a = Sublattice::generated_by(n, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    ASSERT_EQ(Sublattice::generated_by(n, gens), a);
  }
}

TEST(GeneratesFullLattice, Examples) {
  EXPECT_TRUE(generates_full_lattice({int_vector({1, 0}), int_vector({1, 1})}, 2));
  EXPECT_FALSE(generates_full_lattice({int_vector({1, 0}), int_vector({2, 3})}, 2));
  EXPECT_TRUE(generates_full_lattice({}, 0));
  EXPECT_FALSE(generates_full_lattice({}, 1));
  EXPECT_THROW(generates_full_lattice({int_vector({1})}, 2), InputError);
}

TEST(GeneratesFullLattice, AgreesWithIndex) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = uniform(rng, 1, 4);
    const auto gens = random_vectors(rng, static_cast<std::size_t>(uniform(rng, 0, 5)), n, -3, 3);
    const auto idx = sublattice_index(Sublattice::generated_by(n, gens), n);
    ASSERT_EQ(generates_full_lattice(gens, n), idx.has_value() && *idx == 1);
  }
}

TEST(ImageLattice, Examples) {
  const IntMatrix q = int_matrix({{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(image_lattice(q, {int_vector({0, 1, 0})}), Sublattice::generated_by(2, {int_vector({1, 1})}));
  EXPECT_EQ(image_lattice(q, {}), Sublattice(2));
  const IntMatrix id = IntMatrix::Identity(2, 2);
  EXPECT_EQ(image_lattice(id, {int_vector({1, 0}), int_vector({0, 1})}), Sublattice::full(2));
  EXPECT_THROW(image_lattice(q, {int_vector({1, 0})}), InputError);
}

TEST(IntersectSublattices, Examples) {
  const auto diag = Sublattice::generated_by(2, {int_vector({1, 1})});
  const auto x_axis = Sublattice::generated_by(2, {int_vector({1, 0})});
  EXPECT_EQ(intersect_sublattices(diag, Sublattice::full(2)), diag);
  EXPECT_EQ(intersect_sublattices(diag, x_axis), Sublattice(2));
  const auto a = Sublattice::generated_by(2, {int_vector({2, 0}), int_vector({0, 1})});
  EXPECT_EQ(intersect_sublattices(a, x_axis), Sublattice::generated_by(2, {int_vector({2, 0})}));
  EXPECT_THROW(intersect_sublattices(diag, Sublattice(3)), InputError);
}

TEST(IntersectSublattices, BruteForceOnAxis) {
  // smallest positive t with t*(1,0) in a, found by trying multiples
  const auto a = Sublattice::generated_by(2, {int_vector({2, 0}), int_vector({0, 1})});
  long long smallest = 0;
  for (long long t = 1; t <= 10 && smallest == 0; ++t)
    if (member_by_solving(a, int_vector({t, 0}))) smallest = t;
  EXPECT_EQ(smallest, 2);
}

TEST(IntersectSublattices, Properties) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 250; ++trial) {
    const Index n = uniform(rng, 1, 4);
    const auto a = Sublattice::generated_by(n, random_vectors(rng, static_cast<std::size_t>(uniform(rng, 0, 4)), n, -4, 4));
    const auto b = Sublattice::generated_by(n, random_vectors(rng, static_cast<std::size_t>(uniform(rng, 0, 4)), n, -4, 4));
    const auto ab = intersect_sublattices(a, b);
    ASSERT_EQ(ab, intersect_sublattices(b, a));
    ASSERT_EQ(intersect_sublattices(a, a), a);
    for (const auto& v : ab.basis_vectors()) {
      ASSERT_TRUE(member_by_solving(a, v));
      ASSERT_TRUE(member_by_solving(b, v));
    }
  }
}

TEST(SublatticeIndex, Examples) {
  EXPECT_EQ(*sublattice_index(Sublattice::generated_by(2, {int_vector({1, 0}), int_vector({2, 3})}), 2), 3);
  EXPECT_EQ(*sublattice_index(Sublattice::full(2), 2), 1);
  EXPECT_FALSE(sublattice_index(Sublattice::generated_by(2, {int_vector({1, 1})}), 2).has_value());
}

TEST(RationalHelpers, ComplementAndProjection) {
  const auto comp = orthogonal_complement({int_vector({1, 1, 0})}, 3);
  ASSERT_EQ(comp.size(), 2u);
  for (const auto& c : comp) EXPECT_EQ(c.dot(int_vector({1, 1, 0})), 0);
  const IntVector p = project_away(int_vector({2, 0}), {int_vector({1, 1})});
  EXPECT_TRUE(equal(p, int_vector({1, -1})));
  EXPECT_EQ(rank_of({int_vector({1, 2}), int_vector({2, 4})}, 2), 1);
}
