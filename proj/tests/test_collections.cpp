#include "conequot/collections.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace conequot;
using namespace conequot::testing;

namespace {

std::set<Cone> cones_of(const Collection& c, const OrbitConeSet& omega) {
  std::set<Cone> out;
  for (std::size_t i : c.members) out.insert(omega.cones[i]);
  return out;
}

std::set<std::set<Cone>> all_cones_of(const std::vector<Collection>& cs, const OrbitConeSet& omega) {
  std::set<std::set<Cone>> out;
  for (const auto& c : cs) out.insert(cones_of(c, omega));
  return out;
}

const Collection& find_collection(const std::vector<Collection>& cs, const OrbitConeSet& omega,
                                  const std::set<Cone>& members) {
  for (const auto& c : cs)
    if (cones_of(c, omega) == members) return c;
  throw std::runtime_error("collection not found");
}

}  // namespace

TEST(OverlapGraph, Hyperbolic) {
  const auto omega = orbit_cones(hyperbolic_input());
  const auto g = overlap_graph(omega);
  const std::size_t q = *omega.find(Cone::full(1)), pos = *omega.find(cone(1, {{1}})),
                    neg = *omega.find(cone(1, {{-1}})), zero = *omega.find(Cone::zero(1));
  EXPECT_TRUE(g.edge(q, pos) && g.edge(q, neg) && g.edge(q, zero));
  EXPECT_FALSE(g.edge(pos, neg) || g.edge(pos, zero) || g.edge(neg, zero));
}

TEST(OverlapGraph, SmoothembChambersDoNotOverlap) {
  const auto omega = orbit_cones(smoothemb_input());
  const auto g = overlap_graph(omega);
  EXPECT_FALSE(g.edge(*omega.find(cone(2, {{1, 0}, {1, 1}})), *omega.find(cone(2, {{1, 1}, {0, 1}}))));
  EXPECT_TRUE(g.edge(omega.generic, *omega.find(cone(2, {{1, 1}}))));
}

TEST(TwoMaximal, Hyperbolic) {
  const auto omega = orbit_cones(hyperbolic_input());
  const auto cs = two_maximal_collections(omega);
  const Cone q = Cone::full(1);
  EXPECT_EQ(all_cones_of(cs, omega), (std::set<std::set<Cone>>{{q, Cone::zero(1)}, {q, cone(1, {{1}})},
                                                                {q, cone(1, {{-1}})}}));
  EXPECT_EQ(interior_collections(cs, omega).size(), 3u);
  const GitFan fan = git_fan(omega);
  for (const auto& c : cs) {
    const auto v = is_quasiprojective(c, fan, omega, is_pointed_grading(hyperbolic_input()));
    EXPECT_TRUE(v.quasiprojective);
    EXPECT_FALSE(v.projective);
  }
  EXPECT_EQ(*is_quasiprojective(find_collection(cs, omega, {q, Cone::zero(1)}), fan, omega, false).witness,
            Cone::zero(1));
}

TEST(TwoMaximal, Smoothemb) {
  const auto omega = orbit_cones(smoothemb_input());
  const auto cs = two_maximal_collections(omega);
  const auto interior = interior_collections(cs, omega);
  const Cone gen = omega.generic_cone();
  const Cone k1 = cone(2, {{1, 0}, {1, 1}}), k0 = cone(2, {{1, 1}}), k2 = cone(2, {{1, 1}, {0, 1}});
  EXPECT_EQ(all_cones_of(interior, omega), (std::set<std::set<Cone>>{{gen, k1}, {gen, k0}, {gen, k2}}));
  EXPECT_EQ(cs.size(), 6u);

  const GitFan fan = git_fan(omega);
  for (const auto& c : interior) {
    const auto v = is_quasiprojective(c, fan, omega, true);
    EXPECT_TRUE(v.projective);
  }
  EXPECT_EQ(*is_quasiprojective(find_collection(cs, omega, {gen, k1}), fan, omega, true).witness, k1);
}

TEST(TwoMaximal, SingleCone) {
  OrbitConeSet one;
  one.rank = 1;
  one.cones = {Cone::zero(1)};
  const auto cs = two_maximal_collections(one);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].interior);
  EXPECT_TRUE(overlap_graph(one).adjacent[0].size() == 1 && !overlap_graph(one).edge(0, 0));

  const auto omega = orbit_cones(suitable_input(1, {{{1}, 1}}));
  EXPECT_EQ(two_maximal_collections(omega).size(), 2u);
  EXPECT_THROW(two_maximal_collections(omega, 1), CapExceeded);
}

TEST(Psi, Examples) {
  const auto hyp = orbit_cones(hyperbolic_input());
  EXPECT_EQ(cones_of(psi_from_git_cone(hyp, Cone::zero(1)), hyp), (std::set<Cone>{Cone::full(1), Cone::zero(1)}));
  EXPECT_EQ(cones_of(psi_from_git_cone(hyp, cone(1, {{1}})), hyp), (std::set<Cone>{Cone::full(1), cone(1, {{1}})}));

  const auto se = orbit_cones(smoothemb_input());
  EXPECT_EQ(cones_of(psi_from_git_cone(se, cone(2, {{1, 1}})), se),
            (std::set<Cone>{se.generic_cone(), cone(2, {{1, 1}})}));
}

TEST(FaceRelation, Smoothemb) {
  const auto omega = orbit_cones(smoothemb_input());
  const auto cs = interior_collections(two_maximal_collections(omega), omega);
  const Cone gen = omega.generic_cone();
  const auto& p1 = find_collection(cs, omega, {gen, cone(2, {{1, 0}, {1, 1}})});
  const auto& p0 = find_collection(cs, omega, {gen, cone(2, {{1, 1}})});
  const auto& p2 = find_collection(cs, omega, {gen, cone(2, {{1, 1}, {0, 1}})});
  EXPECT_TRUE(face_relation(p0, p1, omega));
  EXPECT_TRUE(face_relation(p0, p2, omega));
  EXPECT_TRUE(face_relation(p1, p1, omega));
  EXPECT_FALSE(face_relation(p1, p2, omega));
  EXPECT_FALSE(face_relation(p1, p0, omega));

  const auto poset = morphism_poset(cs, omega);
  std::set<std::pair<std::size_t, std::size_t>> hasse;
  for (const auto& [i, j] : poset.hasse()) hasse.insert({i, j});
  const auto idx = [&](const Collection& c) {
    return static_cast<std::size_t>(std::find(cs.begin(), cs.end(), c) - cs.begin());
  };
  EXPECT_EQ(hasse, (std::set<std::pair<std::size_t, std::size_t>>{{idx(p0), idx(p1)}, {idx(p0), idx(p2)}}));
}

TEST(FaceRelation, HyperbolicPoset) {
  const auto omega = orbit_cones(hyperbolic_input());
  const auto cs = two_maximal_collections(omega);
  const auto poset = morphism_poset(cs, omega);
  const auto& p0 = find_collection(cs, omega, {Cone::full(1), Cone::zero(1)});
  const auto i0 = static_cast<std::size_t>(std::find(cs.begin(), cs.end(), p0) - cs.begin());
  const auto hasse = poset.hasse();
  EXPECT_EQ(hasse.size(), 2u);
  for (const auto& [i, j] : hasse) EXPECT_EQ(i, i0);

  const auto single = morphism_poset({p0}, omega);
  EXPECT_EQ(single.arrows.size(), 1u);
  EXPECT_TRUE(single.hasse().empty());
}

TEST(Bunches, Dictionary) {
  const auto hyp = orbit_cones(hyperbolic_input());
  const auto hcs = two_maximal_collections(hyp);
  EXPECT_EQ(bunch_from_collection(find_collection(hcs, hyp, {Cone::full(1), cone(1, {{1}})}), hyp).members,
            (std::vector<Cone>{cone(1, {{1}})}));

  const auto se = orbit_cones(smoothemb_input());
  const auto cs = interior_collections(two_maximal_collections(se), se);
  const auto& p0 = find_collection(cs, se, {se.generic_cone(), cone(2, {{1, 1}})});
  EXPECT_EQ(bunch_from_collection(p0, se).members, (std::vector<Cone>{cone(2, {{1, 1}})}));

  Collection gen_only;
  gen_only.members = {se.generic};
  EXPECT_EQ(bunch_from_collection(gen_only, se).members, (std::vector<Cone>{se.generic_cone()}));
  EXPECT_THROW(collection_from_bunch(make_bunch({cone(2, {{1, 0}, {1, 1}}), cone(2, {{1, 1}, {0, 1}})}), se),
               InputError);

  for (const auto& c : cs) {
    const Bunch b = bunch_from_collection(c, se);
    EXPECT_EQ(collection_from_bunch(b, se), c);
    EXPECT_TRUE(check_bunch(b, smoothemb_input(), se).ok());
  }
}

TEST(Bunches, CheckReportsViolations) {
  const auto in = smoothemb_input();
  const auto se = orbit_cones(in);
  const auto pair = check_bunch(make_bunch({cone(2, {{1, 0}, {1, 1}}), cone(2, {{1, 1}, {0, 1}})}), in, se);
  EXPECT_FALSE(pair.pairwise);
  EXPECT_FALSE(check_bunch(make_bunch({cone(2, {{1, 2}})}), in, se).members_are_orbit_cones);
  EXPECT_FALSE(check_bunch(make_bunch({cone(2, {{1, 0}})}), in, se).ok());
}

TEST(CollectionsProperty, MatchBruteForce) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 60) {
    const auto omega = orbit_cones(random_suitable_input(rng, 3, 5, -2, 2));
    if (omega.size() > 12) continue;
    ++checked;
    std::vector<std::vector<std::size_t>> got;
    for (const auto& c : two_maximal_collections(omega)) {
      got.push_back(c.members);
      EXPECT_TRUE(is_two_maximal(c.members, omega));
      EXPECT_EQ(c.interior, c.contains(omega.generic));
    }
    EXPECT_EQ(got, brute_force_collections(omega));
  }
}

TEST(CollectionsProperty, PointedRankTwoIsQuasiprojective) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const GradingInput in = random_suitable_input(rng, 2, 5, -2, 3, true, 10);
    if (!is_pointed_grading(in)) continue;
    const auto omega = orbit_cones(in);
    const GitFan fan = git_fan(omega);
    for (const auto& c : interior_collections(two_maximal_collections(omega), omega))
      EXPECT_TRUE(is_quasiprojective(c, fan, omega, true).quasiprojective);
  }
}

TEST(CollectionsProperty, PosetAndDictionary) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const GradingInput in = random_suitable_input(rng, 3, 4, -2, 2);
    const auto omega = orbit_cones(in);
    const auto cs = two_maximal_collections(omega);
    const auto poset = morphism_poset(cs, omega);
    const std::size_t n = cs.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(poset.precedes(i, i));
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) EXPECT_FALSE(poset.precedes(i, j) && poset.precedes(j, i));
        for (std::size_t m = 0; m < n; ++m)
          if (poset.precedes(i, j) && poset.precedes(j, m)) EXPECT_TRUE(poset.precedes(i, m));
      }
    }
    for (const auto& c : interior_collections(cs, omega))
      EXPECT_EQ(collection_from_bunch(bunch_from_collection(c, omega), omega), c);
    GradingInput doubled = in;
    for (const auto& g : in.generators) doubled.generators.push_back(g);
    EXPECT_EQ(two_maximal_collections(orbit_cones(doubled)).size(), cs.size());
  }
}
