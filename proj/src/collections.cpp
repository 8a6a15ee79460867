#include "conequot/collections.hpp"

#include <algorithm>
#include <map>

namespace conequot {

bool Collection::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

bool MorphismPoset::precedes(std::size_t i, std::size_t j) const {
  return std::find(arrows.begin(), arrows.end(), std::make_pair(i, j)) != arrows.end();
}

std::vector<std::pair<std::size_t, std::size_t>> MorphismPoset::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [i, j] : arrows) {
    if (i == j) continue;
    bool covered = true;
    for (std::size_t m = 0; m < nodes.size() && covered; ++m)
      if (m != i && m != j && precedes(i, m) && precedes(m, j)) covered = false;
    if (covered) out.emplace_back(i, j);
  }
  return out;
}

OverlapGraph overlap_graph(const OrbitConeSet& omega) {
  const std::size_t n = omega.size();
  OverlapGraph g;
  g.adjacent.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.adjacent[i][j] = g.adjacent[j][i] = relints_intersect(omega.cones[i], omega.cones[j]);
  return g;
}

bool is_two_connected(const std::vector<std::size_t>& members, const OrbitConeSet& omega) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (!relints_intersect(omega.cones[members[a]], omega.cones[members[b]])) return false;
  return true;
}

bool is_two_maximal(const std::vector<std::size_t>& members, const OrbitConeSet& omega) {
  if (!is_two_connected(members, omega)) return false;
  for (std::size_t w = 0; w < omega.size(); ++w) {
    if (std::binary_search(members.begin(), members.end(), w)) continue;
    const bool extends = std::all_of(members.begin(), members.end(), [&](std::size_t m) {
      return relints_intersect(omega.cones[w], omega.cones[m]);
    });
    if (extends) return false;
  }
  return true;
}

namespace {

using VertexSet = std::vector<std::size_t>;

VertexSet neighbours_in(const OverlapGraph& g, const VertexSet& s, std::size_t v) {
  VertexSet out;
  for (std::size_t u : s)
    if (g.edge(u, v)) out.push_back(u);
  return out;
}

void bron_kerbosch(const OverlapGraph& g, VertexSet& r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    VertexSet clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  // pivot: the vertex of P u X with most neighbours in P
  std::size_t pivot = 0, best = 0;
  bool have = false;
  for (const VertexSet* s : {&p, &x})
    for (std::size_t u : *s) {
      const std::size_t deg = neighbours_in(g, p, u).size();
      if (!have || deg > best) {
        pivot = u;
        best = deg;
        have = true;
      }
    }
  VertexSet candidates;
  for (std::size_t v : p)
    if (!g.edge(pivot, v)) candidates.push_back(v);
  for (std::size_t v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, neighbours_in(g, p, v), neighbours_in(g, x, v), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<Collection> two_maximal_collections(const OrbitConeSet& omega, std::size_t max_omega) {
  if (omega.size() > max_omega)
    throw CapExceeded("orbit cone set has " + std::to_string(omega.size()) + " members; cap is " +
                      std::to_string(max_omega) + " (raise with --max-omega)");
  const OverlapGraph g = overlap_graph(omega);
  VertexSet all(omega.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<VertexSet> cliques;
  VertexSet r;
  bron_kerbosch(g, r, all, {}, cliques);
  std::sort(cliques.begin(), cliques.end());

  std::vector<Collection> out;
  for (auto& clique : cliques) {
    Collection c;
    c.members = std::move(clique);
    c.two_connected = true;
    c.two_maximal = true;
    c.interior = c.contains(omega.generic);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Collection> interior_collections(const std::vector<Collection>& all, const OrbitConeSet& omega) {
  std::vector<Collection> out;
  for (const auto& c : all)
    if (c.contains(omega.generic)) out.push_back(c);
  return out;
}

Collection psi_from_git_cone(const OrbitConeSet& omega, const Cone& kappa) {
  Collection c;
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (relint_within(kappa, omega.cones[i])) c.members.push_back(i);
  c.two_connected = is_two_connected(c.members, omega);
  c.two_maximal = c.two_connected && is_two_maximal(c.members, omega);
  c.interior = c.contains(omega.generic);
  return c;
}

std::vector<Collection> psi_table(const GitFan& fan, const OrbitConeSet& omega) {
  std::vector<Collection> out;
  for (const auto& kappa : fan.cones) out.push_back(psi_from_git_cone(omega, kappa));
  return out;
}

QuasiprojectiveVerdict is_quasiprojective(const Collection& c, const GitFan& fan, const OrbitConeSet& omega,
                                          bool pointed_grading) {
  return is_quasiprojective(c, fan, psi_table(fan, omega), pointed_grading);
}

QuasiprojectiveVerdict is_quasiprojective(const Collection& c, const GitFan& fan, const std::vector<Collection>& psis,
                                          bool pointed_grading) {
  QuasiprojectiveVerdict v;
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (psis[i].members == c.members) {
      v.quasiprojective = true;
      v.projective = pointed_grading;
      v.witness = fan.cones[i];
      break;
    }
  }
  return v;
}

bool face_relation(const Collection& a, const Collection& b, const OrbitConeSet& omega) {
  return std::all_of(b.members.begin(), b.members.end(), [&](std::size_t wb) {
    return std::any_of(a.members.begin(), a.members.end(),
                       [&](std::size_t wa) { return is_face(omega.cones[wa], omega.cones[wb]); });
  });
}

MorphismPoset morphism_poset(const std::vector<Collection>& cs, const OrbitConeSet& omega) {
  std::map<std::pair<std::size_t, std::size_t>, bool> face_memo;
  auto face = [&](std::size_t f, std::size_t c) {
    auto [it, fresh] = face_memo.try_emplace({f, c}, false);
    if (fresh) it->second = is_face(omega.cones[f], omega.cones[c]);
    return it->second;
  };
  MorphismPoset poset;
  poset.nodes = cs;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const bool rel = std::all_of(cs[j].members.begin(), cs[j].members.end(), [&](std::size_t wb) {
        return std::any_of(cs[i].members.begin(), cs[i].members.end(), [&](std::size_t wa) { return face(wa, wb); });
      });
      if (rel) poset.arrows.emplace_back(i, j);
    }
  return poset;
}

Bunch make_bunch(std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return Bunch{std::move(cones)};
}

Bunch bunch_from_collection(const Collection& c, const OrbitConeSet& omega) {
  std::vector<Cone> minimal;
  for (std::size_t a : c.members) {
    const Cone& ca = omega.cones[a];
    const bool has_smaller = std::any_of(c.members.begin(), c.members.end(), [&](std::size_t b) {
      return b != a && ca.contains(omega.cones[b]);
    });
    if (!has_smaller) minimal.push_back(ca);
  }
  return make_bunch(std::move(minimal));
}

Collection collection_from_bunch(const Bunch& b, const OrbitConeSet& omega) {
  Collection c;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const bool hit = std::any_of(b.members.begin(), b.members.end(),
                                 [&](const Cone& tau) { return relint_within(tau, omega.cones[i]); });
    if (hit) c.members.push_back(i);
  }
  c.two_connected = is_two_connected(c.members, omega);
  c.two_maximal = c.two_connected && is_two_maximal(c.members, omega);
  if (!c.two_maximal) throw InputError("the collection induced by the bunch is not 2-maximal");
  c.interior = c.contains(omega.generic);
  return c;
}

namespace {

// the bunch condition for the pair: relints meet and sigma° is not inside tau°
bool bunch_pair_ok(const Cone& tau, const Cone& sigma) {
  return relints_intersect(tau, sigma) && !relint_within(sigma, tau);
}

}  // namespace

BunchCheck check_bunch(const Bunch& b, const GradingInput& input, const OrbitConeSet& omega) {
  BunchCheck check;
  if (b.members.empty()) {
    check.pairwise = false;
    check.problems.push_back("bunch is empty");
    return check;
  }
  for (const auto& tau : b.members)
    if (!omega.find(tau)) {
      check.members_are_orbit_cones = false;
      check.problems.push_back(tau.label() + " is not an orbit cone");
    }
  for (const auto& tau : b.members)
    for (const auto& sigma : b.members)
      if (!(tau == sigma) && !bunch_pair_ok(tau, sigma)) {
        check.pairwise = false;
        check.problems.push_back("pair " + tau.label() + " / " + sigma.label() + " violates the overlap condition");
      }
  for (const auto& w : omega.cones) {
    if (std::find(b.members.begin(), b.members.end(), w) != b.members.end()) continue;
    const bool fits = std::all_of(b.members.begin(), b.members.end(),
                                  [&](const Cone& sigma) { return bunch_pair_ok(w, sigma); });
    if (fits) {
      check.maximal = false;
      check.problems.push_back("orbit cone " + w.label() + " satisfies the overlap condition but is missing");
    }
  }
  const IndexSet full = IndexSet::all(input.generator_count());
  for (std::size_t i = 0; i < input.generator_count(); ++i) {
    const Cone facet_image = input.image(full.without(i));
    const bool covered = std::any_of(b.members.begin(), b.members.end(),
                                     [&](const Cone& tau) { return relint_within(tau, facet_image); });
    if (!covered) {
      check.covering = false;
      check.problems.push_back("facet dropping generator " + std::to_string(i + 1) + " covers no member");
    }
  }
  return check;
}

}  // namespace conequot
