#include "conequot/geometry.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace conequot;
using namespace conequot::testing;

namespace {

IndexSet one_based(std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> v;
  for (std::size_t i : idx) v.push_back(i - 1);
  return IndexSet::from_indices(v);
}

Bunch bunch(std::initializer_list<Cone> cones) { return make_bunch(std::vector<Cone>(cones)); }

// all subsets of {0..r-1} that are relevant and inclusion-minimal, by exhaustive search
std::vector<IndexSet> brute_force_cov(const GradingInput& in, const Bunch& phi) {
  std::vector<IndexSet> rlv;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << in.generator_count()); ++m)
    if (is_relevant(in, phi, IndexSet::from_bits(m))) rlv.push_back(IndexSet::from_bits(m));
  return covering_collection(rlv);
}

const Cone k1 = cone(2, {{1, 0}, {1, 1}});
const Cone k0 = cone(2, {{1, 1}});
const Cone k2 = cone(2, {{1, 1}, {0, 1}});

}  // namespace

TEST(RelevantFaces, Smoothemb) {
  const auto in = smoothemb_input();
  // generators 1-4 have degree (1,0), 5-8 (1,1), 9-12 (0,1)
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 5; j <= 8; ++j) EXPECT_TRUE(is_relevant(in, bunch({k1}), one_based({i, j})));
  EXPECT_FALSE(is_relevant(in, bunch({k1}), one_based({9})));
  EXPECT_FALSE(is_relevant(in, bunch({k1}), one_based({5, 9})));
  EXPECT_TRUE(is_relevant(in, bunch({in.image(IndexSet::all(12))}), IndexSet::all(12)));

  const auto omega = orbit_cones(in);
  const auto rlv = relevant_faces(in, omega, bunch({k1}));
  const auto cov = covering_collection(rlv);
  // pairs of degrees (1,0),(1,1) and pairs (1,0),(0,1), whose image is the whole quadrant
  EXPECT_EQ(expand_face_classes(in, cov).size(), 32u);
  for (const auto& f : expand_face_classes(in, cov)) EXPECT_EQ(f.size(), 2u);
}

TEST(CoveringCollection, SmoothembPhi0) {
  const auto in = smoothemb_input();
  const auto omega = orbit_cones(in);
  const auto cov = expand_face_classes(in, covering_collection(relevant_faces(in, omega, bunch({k0}))));
  std::vector<IndexSet> expected;
  for (std::size_t i = 5; i <= 8; ++i) expected.push_back(one_based({i}));
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 9; j <= 12; ++j) expected.push_back(one_based({i, j}));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(cov, expected);
}

TEST(CoveringCollection, Trivial) {
  EXPECT_EQ(covering_collection({one_based({1, 2})}), (std::vector<IndexSet>{one_based({1, 2})}));
  EXPECT_EQ(covering_collection({one_based({1, 2, 3}), one_based({1}), one_based({1, 2})}),
            (std::vector<IndexSet>{one_based({1})}));
}

TEST(CoveringCollection, MatchesBruteForceOnSmallInputs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const GradingInput in = random_suitable_input(rng, 2, 4, -2, 2, false, 9);
    const auto omega = orbit_cones(in);
    for (const auto& c : interior_collections(two_maximal_collections(omega), omega)) {
      const Bunch phi = bunch_from_collection(c, omega);
      const auto cov = expand_face_classes(in, covering_collection(relevant_faces(in, omega, phi)));
      EXPECT_EQ(cov, brute_force_cov(in, phi));
    }
  }
}

TEST(Factoriality, Examples) {
  const auto in = smoothemb_input();
  const auto omega = orbit_cones(in);
  EXPECT_TRUE(local_factoriality(in, relevant_faces(in, omega, bunch({k1}))));
  EXPECT_FALSE(local_factoriality(in, relevant_faces(in, omega, bunch({k0}))));
  EXPECT_TRUE(q_factoriality(bunch({k1}), 2));
  EXPECT_FALSE(q_factoriality(bunch({k0}), 2));

  const auto ns = nosmoothemb_input();
  const auto nomega = orbit_cones(ns);
  EXPECT_FALSE(local_factoriality(ns, relevant_faces(ns, nomega, bunch({cone(2, {{1, 0}, {2, 3}})}))));
}

TEST(Picard, Examples) {
  const auto in = smoothemb_input();
  const auto omega = orbit_cones(in);
  const Sublattice p0 = picard_lattice(in, covering_collection(relevant_faces(in, omega, bunch({k0}))));
  EXPECT_EQ(p0, Sublattice::generated_by(2, {int_vector({1, 1})}));
  EXPECT_FALSE(sublattice_index(p0, 2).has_value());
  const Sublattice p1 = picard_lattice(in, covering_collection(relevant_faces(in, omega, bunch({k1}))));
  EXPECT_EQ(p1, Sublattice::full(2));
  EXPECT_EQ(picard_lattice(in, {IndexSet::all(12)}), Sublattice::full(2));
}

TEST(Ample, Examples) {
  const auto a1 = ample_cones(bunch({k1}), 2);
  EXPECT_EQ(a1.semiample, k1);
  ASSERT_TRUE(a1.ample_sample.has_value());
  EXPECT_TRUE(equal(*a1.ample_sample, int_vector({2, 1})));
  const auto a0 = ample_cones(bunch({k0}), 2);
  EXPECT_EQ(a0.semiample, k0);
  EXPECT_TRUE(equal(*a0.ample_sample, int_vector({1, 1})));
  EXPECT_FALSE(ample_cones(bunch({k1, k2}), 2).ample_nonempty);
}

TEST(GeometryReport, Smoothemb) {
  const auto in = smoothemb_input();
  const auto omega = orbit_cones(in);
  const auto fan = git_fan(omega);
  const auto cs = interior_collections(two_maximal_collections(omega), omega);
  ASSERT_EQ(cs.size(), 3u);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto rep = geometry_report(in, omega, fan, cs[i], i);
    ASSERT_EQ(rep.bunch.members.size(), 1u);
    const Cone& tau = rep.bunch.members[0];
    EXPECT_EQ(rep.class_group_rank, 2);
    EXPECT_TRUE(rep.quasiprojective && rep.projective);
    EXPECT_EQ(*rep.git_witness, tau);
    if (tau == k0) {
      EXPECT_FALSE(rep.locally_factorial);
      EXPECT_FALSE(rep.q_factorial);
      EXPECT_EQ(rep.picard.rank(), 1);
    } else {
      EXPECT_TRUE(rep.locally_factorial);
      EXPECT_TRUE(rep.q_factorial);
      EXPECT_EQ(rep.smooth_toric_mode, std::optional<bool>(true));
      EXPECT_EQ(rep.picard, Sublattice::full(2));
    }
  }
}

TEST(GeometryReport, Nosmoothemb) {
  const auto in = nosmoothemb_input();
  const auto omega = orbit_cones(in);
  const auto fan = git_fan(omega);
  const auto cs = interior_collections(two_maximal_collections(omega), omega);
  ASSERT_EQ(cs.size(), 3u);
  int q = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto rep = geometry_report(in, omega, fan, cs[i], i);
    EXPECT_FALSE(rep.locally_factorial);
    EXPECT_TRUE(rep.projective);
    q += rep.q_factorial;
  }
  EXPECT_EQ(q, 2);
}

TEST(GeometryProperty, InvariantsOnRandomInputs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const GradingInput in = random_suitable_input(rng, 3, 4, -2, 2);
    const auto omega = orbit_cones(in);
    const auto fan = git_fan(omega);
    const auto psis = psi_table(fan, omega);
    const auto cs = interior_collections(two_maximal_collections(omega), omega);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto rep = geometry_report(in, omega, fan, psis, cs[i], i);
      for (const auto& f : rep.covering) {
        EXPECT_TRUE(std::find(rep.relevant.begin(), rep.relevant.end(), f) != rep.relevant.end());
        const Sublattice face_lattice = Sublattice::generated_by(in.lattice_rank, in.degrees_of(f));
        for (const auto& b : rep.picard.basis_vectors()) {
          EXPECT_TRUE(face_lattice.contains(b));
          EXPECT_TRUE(solve_in_row_space(face_lattice.basis_vectors(), b).has_value());
        }
      }
      for (const auto& tau : rep.bunch.members) {
        EXPECT_TRUE(tau.contains(rep.ample.semiample));
        if (rep.ample.ample_sample) EXPECT_TRUE(relint_contains(tau, *rep.ample.ample_sample));
      }
      const bool full_dim_cov = std::all_of(rep.covering.begin(), rep.covering.end(), [&](const IndexSet& f) {
        return in.image(f).dim() == in.lattice_rank;
      });
      if (rep.locally_factorial && full_dim_cov && is_pointed_grading(in)) EXPECT_TRUE(rep.q_factorial);
      // adding a cone never enlarges the semiample cone
      for (const auto& w : omega.cones) {
        std::vector<Cone> more = rep.bunch.members;
        more.push_back(w);
        EXPECT_TRUE(rep.ample.semiample.contains(ample_cones(make_bunch(more), in.lattice_rank).semiample));
      }
    }
  }
}
