#include "conequot/geometry.hpp"

#include <algorithm>
#include <set>

namespace conequot {

namespace {

bool relint_covers(const Bunch& phi, const Cone& image) {
  return std::any_of(phi.members.begin(), phi.members.end(),
                     [&](const Cone& tau) { return relint_within(tau, image); });
}

}  // namespace

bool is_relevant(const GradingInput& input, const Bunch& phi, const IndexSet& face) {
  return relint_covers(phi, input.image(face));
}

std::vector<IndexSet> relevant_faces(const GradingInput& /*input*/, const OrbitConeSet& omega, const Bunch& phi) {
  std::vector<bool> cone_relevant(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) cone_relevant[i] = relint_covers(phi, omega.cones[i]);
  std::vector<IndexSet> out;
  for (const auto& fi : omega.faces)
    if (cone_relevant[fi.cone]) out.push_back(fi.indices);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> covering_collection(const std::vector<IndexSet>& rlv) {
  std::vector<IndexSet> out;
  for (const auto& a : rlv) {
    const bool minimal = std::none_of(rlv.begin(), rlv.end(),
                                      [&](const IndexSet& b) { return b != a && b.is_subset_of(a); });
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IndexSet> expand_face_classes(const GradingInput& input, const std::vector<IndexSet>& classes,
                                          std::size_t limit) {
  if (input.mode == FaceMode::explicit_list) return classes;
  const DegreeGroups groups = group_degrees(input);
  std::set<IndexSet> out;
  for (const auto& rep : classes) {
    std::vector<std::vector<std::size_t>> choices;
    for (const auto& members : groups.members)
      if (!members.empty() && members.bits() & rep.bits()) choices.push_back(members.indices());
    std::vector<IndexSet> partial{IndexSet()};
    for (const auto& options : choices) {
      std::vector<IndexSet> next;
      for (const auto& p : partial)
        for (std::size_t i : options) next.push_back(p.with(i));
      partial = std::move(next);
      if (partial.size() + out.size() > limit)
        throw CapExceeded("expanding face classes yields more than " + std::to_string(limit) + " index sets");
    }
    out.insert(partial.begin(), partial.end());
  }
  return {out.begin(), out.end()};
}

bool local_factoriality(const GradingInput& input, const std::vector<IndexSet>& faces) {
  return std::all_of(faces.begin(), faces.end(), [&](const IndexSet& f) {
    return generates_full_lattice(input.degrees_of(f), input.lattice_rank);
  });
}

bool q_factoriality(const Bunch& phi, Index k) {
  return std::all_of(phi.members.begin(), phi.members.end(), [&](const Cone& tau) { return tau.dim() == k; });
}

Sublattice picard_lattice(const GradingInput& input, const std::vector<IndexSet>& cov) {
  const Index k = input.lattice_rank;
  const auto r = static_cast<Index>(input.generator_count());
  const IntMatrix q = input.projection();
  Sublattice acc = Sublattice::full(k);
  for (const auto& face : cov) {
    std::vector<IntVector> basis;
    for (std::size_t i : face.indices()) {
      IntVector e = IntVector::Zero(r);
      e[static_cast<Index>(i)] = 1;
      basis.push_back(e);
    }
    acc = intersect_sublattices(acc, image_lattice(q, basis));
  }
  return acc;
}

AmpleCones ample_cones(const Bunch& phi, Index k) {
  AmpleCones out;
  out.semiample = intersect(phi.members, k);
  const IntVector p = out.semiample.relative_interior_point();
  out.ample_nonempty = std::all_of(phi.members.begin(), phi.members.end(),
                                   [&](const Cone& tau) { return relint_contains(tau, p); });
  if (out.ample_nonempty) out.ample_sample = p;
  return out;
}

GeometryReport geometry_report(const GradingInput& input, const OrbitConeSet& omega, const GitFan& fan,
                               const Collection& c, std::size_t collection_id) {
  return geometry_report(input, omega, fan, psi_table(fan, omega), c, collection_id);
}

GeometryReport geometry_report(const GradingInput& input, const OrbitConeSet& omega, const GitFan& fan,
                               const std::vector<Collection>& psis, const Collection& c, std::size_t collection_id) {
  const Index k = input.lattice_rank;
  GeometryReport rep;
  rep.collection_id = collection_id;
  rep.bunch = bunch_from_collection(c, omega);
  rep.relevant = relevant_faces(input, omega, rep.bunch);
  rep.covering = covering_collection(rep.relevant);

  rep.locally_factorial = local_factoriality(input, rep.relevant);
  if (local_factoriality(input, rep.covering) != rep.locally_factorial)
    throw InternalError("local factoriality over relevant and covering faces disagree");
  rep.q_factorial = q_factoriality(rep.bunch, k);
  if (input.mode == FaceMode::suitable) rep.smooth_toric_mode = rep.locally_factorial;
  rep.class_group_rank = k;

  rep.picard = picard_lattice(input, rep.covering);
  rep.picard_index = sublattice_index(rep.picard, k);
  rep.ample = ample_cones(rep.bunch, k);

  const auto verdict = is_quasiprojective(c, fan, psis, is_pointed_grading(input));
  rep.quasiprojective = verdict.quasiprojective;
  rep.projective = verdict.projective;
  rep.git_witness = verdict.witness;
  return rep;
}

}  // namespace conequot
