#pragma once

// 2-maximal collections of orbit cones, the Psi_kappa map, bunches and the face-relation
// poset between collections.

#include "conequot/cone.hpp"
#include "conequot/git.hpp"
#include "conequot/grading.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conequot {

/// A set of orbit cones, stored as sorted positions into OrbitConeSet::cones.
struct Collection {
  std::vector<std::size_t> members;
  bool two_connected = false;
  bool two_maximal = false;
  bool interior = false;
  bool quasiprojective = false;
  bool projective = false;
  std::optional<Cone> git_witness;

  bool contains(std::size_t i) const;
  friend bool operator==(const Collection& a, const Collection& b) { return a.members == b.members; }
};

/// Pairwise: relative interiors meet, and neither contains the other.
struct Bunch {
  std::vector<Cone> members;  // canonical order
};

/// Edge i-j iff the relative interiors of orbit cones i and j meet (no self loops).
struct OverlapGraph {
  std::vector<std::vector<bool>> adjacent;

  std::size_t size() const { return adjacent.size(); }
  bool edge(std::size_t i, std::size_t j) const { return i != j && adjacent[i][j]; }
};

/// arrows (i, j): nodes[i] is a face of nodes[j], i.e. a morphism X_j -> X_i.
struct MorphismPoset {
  std::vector<Collection> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // reflexive pairs included

  bool precedes(std::size_t i, std::size_t j) const;
  /// Covering relations only (no reflexive or transitive arrows).
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
};

inline constexpr std::size_t kDefaultMaxOmega = 64;

OverlapGraph overlap_graph(const OrbitConeSet& omega);

bool is_two_connected(const std::vector<std::size_t>& members, const OrbitConeSet& omega);
bool is_two_maximal(const std::vector<std::size_t>& members, const OrbitConeSet& omega);

/// Maximal cliques of the overlap graph (Bron-Kerbosch with pivoting), sorted by member list.
/// Sets two_connected, two_maximal and interior. Throws CapExceeded above `max_omega` cones.
std::vector<Collection> two_maximal_collections(const OrbitConeSet& omega, std::size_t max_omega = kDefaultMaxOmega);

std::vector<Collection> interior_collections(const std::vector<Collection>& all, const OrbitConeSet& omega);

/// {omega : kappa° inside omega°}
Collection psi_from_git_cone(const OrbitConeSet& omega, const Cone& kappa);

struct QuasiprojectiveVerdict {
  bool quasiprojective = false;
  bool projective = false;
  std::optional<Cone> witness;
};

/// Psi_kappa for every member of the fan, in fan order.
std::vector<Collection> psi_table(const GitFan& fan, const OrbitConeSet& omega);

/// c equals Psi_kappa for some kappa of the fan; projective additionally needs a pointed grading.
QuasiprojectiveVerdict is_quasiprojective(const Collection& c, const GitFan& fan, const OrbitConeSet& omega,
                                          bool pointed_grading);
/// As above with a precomputed psi_table(fan, omega).
QuasiprojectiveVerdict is_quasiprojective(const Collection& c, const GitFan& fan, const std::vector<Collection>& psis,
                                          bool pointed_grading);

/// a is a face of b: every member of b has a face among the members of a.
bool face_relation(const Collection& a, const Collection& b, const OrbitConeSet& omega);

MorphismPoset morphism_poset(const std::vector<Collection>& cs, const OrbitConeSet& omega);

/// Set-theoretically minimal members.
Bunch bunch_from_collection(const Collection& c, const OrbitConeSet& omega);

/// {omega : tau° inside omega° for some tau in b}; throws InputError unless 2-maximal.
Collection collection_from_bunch(const Bunch& b, const OrbitConeSet& omega);

struct BunchCheck {
  bool members_are_orbit_cones = true;
  bool pairwise = true;      // relints meet, neither contains the other
  bool maximal = true;       // no further orbit cone satisfies the pairwise condition
  bool covering = true;      // every facet image contains some member's relint
  std::vector<std::string> problems;

  bool ok() const { return members_are_orbit_cones && pairwise && maximal && covering; }
};

BunchCheck check_bunch(const Bunch& b, const GradingInput& input, const OrbitConeSet& omega);

Bunch make_bunch(std::vector<Cone> cones);

}  // namespace conequot
