#pragma once

// GIT cones kappa(u) = intersection of the orbit cones containing u, and the fan they form.

#include "conequot/cone.hpp"
#include "conequot/grading.hpp"

#include <vector>

namespace conequot {

struct GitFan {
  std::vector<Cone> cones;  // canonical order, faces included
  std::vector<bool> chamber;
  std::vector<bool> interior;  // kappa° inside the relative interior of the weight cone

  std::vector<Cone> chambers() const;
  std::vector<Cone> interior_cones() const;
  std::optional<std::size_t> find(const Cone& c) const;
};

namespace detail {
Cone intersect_containing(const OrbitConeSet& omega, const std::vector<bool>& selected);
}

/// kappa(u); throws DomainError when u lies outside the weight cone.
template <typename Derived>
Cone git_cone(const OrbitConeSet& omega, const Eigen::MatrixBase<Derived>& u) {
  if (!omega.generic_cone().contains(u)) throw DomainError("point lies outside the weight cone");
  std::vector<bool> selected(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) selected[i] = omega.cones[i].contains(u);
  return detail::intersect_containing(omega, selected);
}

/// All GIT cones: closes the orbit cones under intersection, evaluates kappa at a relative
/// interior point of every resulting cone, then checks the fan axioms (InternalError).
GitFan git_fan(const OrbitConeSet& omega);

/// Members of the fan whose relative interior lies in the relative interior of the weight cone.
std::vector<Cone> interior_git_cones(const GitFan& fan, const OrbitConeSet& omega);

/// Throws InternalError if two members meet outside a common face or a member is not
/// kappa of its own interior point.
void verify_fan(const GitFan& fan, const OrbitConeSet& omega);

}  // namespace conequot
