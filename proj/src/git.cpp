#include "conequot/git.hpp"

#include <algorithm>
#include <set>

namespace conequot {

namespace detail {

Cone intersect_containing(const OrbitConeSet& omega, const std::vector<bool>& selected) {
  Cone acc = omega.generic_cone();
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (selected[i]) acc = intersect(acc, omega.cones[i]);
  return acc;
}

}  // namespace detail

std::vector<Cone> GitFan::chambers() const {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (chamber[i]) out.push_back(cones[i]);
  return out;
}

std::vector<Cone> GitFan::interior_cones() const {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (interior[i]) out.push_back(cones[i]);
  return out;
}

std::optional<std::size_t> GitFan::find(const Cone& c) const {
  auto it = std::lower_bound(cones.begin(), cones.end(), c);
  if (it == cones.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cones.begin());
}

GitFan git_fan(const OrbitConeSet& omega) {
  // intersection closure of the orbit cones; intersecting with single orbit cones suffices
  std::set<Cone> closure(omega.cones.begin(), omega.cones.end());
  std::vector<Cone> frontier(omega.cones.begin(), omega.cones.end());
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (const auto& c : frontier)
      for (const auto& w : omega.cones) {
        if (w.contains(c)) continue;
        Cone x = intersect(c, w);
        if (closure.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }

  std::set<Cone> kappas;
  for (const auto& c : closure) kappas.insert(git_cone(omega, c.relative_interior_point()));

  GitFan fan;
  fan.cones.assign(kappas.begin(), kappas.end());
  const Cone& generic = omega.generic_cone();
  for (const auto& k : fan.cones) {
    const bool maximal = std::none_of(fan.cones.begin(), fan.cones.end(),
                                      [&](const Cone& other) { return !(other == k) && other.contains(k); });
    fan.chamber.push_back(maximal);
    fan.interior.push_back(relint_within(k, generic));
  }
  verify_fan(fan, omega);
  return fan;
}

std::vector<Cone> interior_git_cones(const GitFan& fan, const OrbitConeSet& omega) {
  std::vector<Cone> out;
  for (const auto& k : fan.cones)
    if (relint_within(k, omega.generic_cone())) out.push_back(k);
  return out;
}

void verify_fan(const GitFan& fan, const OrbitConeSet& omega) {
  for (const auto& k : fan.cones) {
    const IntVector p = k.relative_interior_point();
    if (!(git_cone(omega, p) == k)) throw InternalError("GIT cone " + k.label() + " is not kappa of its interior point");
    for (const auto& f : faces(k))
      if (!fan.find(f)) throw InternalError("face " + f.label() + " of GIT cone " + k.label() + " is missing");
  }
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      const Cone x = intersect(fan.cones[i], fan.cones[j]);
      if (!is_face(x, fan.cones[i]) || !is_face(x, fan.cones[j]))
        throw InternalError("GIT cones " + fan.cones[i].label() + " and " + fan.cones[j].label() +
                            " do not meet in a common face");
    }
}

}  // namespace conequot
