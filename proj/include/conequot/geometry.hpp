#pragma once

// Geometric verdicts for the variety of a bunch: relevant and covering faces, local and
// Q-factoriality, the Picard lattice and the (semi)ample cones.

#include "conequot/collections.hpp"
#include "conequot/grading.hpp"
#include "conequot/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace conequot {

/// tau° lies in the relative interior of the image of `face` for some tau in phi.
bool is_relevant(const GradingInput& input, const Bunch& phi, const IndexSet& face);

/// Relevant F-faces. Explicit mode: the listed F-faces that are relevant. Suitable mode: one
/// group-saturated representative per class of faces with the same set of distinct degrees;
/// relevance, lattice generation and images depend only on that set.
std::vector<IndexSet> relevant_faces(const GradingInput& input, const OrbitConeSet& omega, const Bunch& phi);

/// Inclusion-minimal members.
std::vector<IndexSet> covering_collection(const std::vector<IndexSet>& rlv);

/// Suitable mode: every index set picking exactly one generator from each degree group met by a
/// class representative. Throws CapExceeded beyond `limit` sets. Explicit mode: the input itself.
std::vector<IndexSet> expand_face_classes(const GradingInput& input, const std::vector<IndexSet>& classes,
                                          std::size_t limit = 100000);

/// The degrees of every given face generate K.
bool local_factoriality(const GradingInput& input, const std::vector<IndexSet>& faces);

/// Every cone of phi is full-dimensional.
bool q_factoriality(const Bunch& phi, Index k);

/// Intersection over the covering faces of the lattices generated by their degrees.
Sublattice picard_lattice(const GradingInput& input, const std::vector<IndexSet>& cov);

struct AmpleCones {
  Cone semiample;
  bool ample_nonempty = false;
  std::optional<IntVector> ample_sample;
};

AmpleCones ample_cones(const Bunch& phi, Index k);

struct GeometryReport {
  std::size_t collection_id = 0;
  Bunch bunch;
  bool locally_factorial = false;
  bool q_factorial = false;
  std::optional<bool> smooth_toric_mode;  // suitable mode only
  Index class_group_rank = 0;
  Sublattice picard{0};
  std::optional<BigInt> picard_index;  // nullopt: infinite
  AmpleCones ample;
  bool quasiprojective = false;
  bool projective = false;
  std::optional<Cone> git_witness;
  std::vector<IndexSet> relevant;
  std::vector<IndexSet> covering;
};

/// Full report for an interior 2-maximal collection. Local factoriality is evaluated over both
/// rlv and cov; disagreement throws InternalError.
GeometryReport geometry_report(const GradingInput& input, const OrbitConeSet& omega, const GitFan& fan,
                               const Collection& c, std::size_t collection_id);
GeometryReport geometry_report(const GradingInput& input, const OrbitConeSet& omega, const GitFan& fan,
                               const std::vector<Collection>& psis, const Collection& c, std::size_t collection_id);

}  // namespace conequot
