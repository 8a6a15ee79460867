#pragma once

// Exact rational polyhedral cones in Q^n with both descriptions kept in canonical form.

#include "conequot/errors.hpp"
#include "conequot/lattice.hpp"
#include "conequot/scalar.hpp"

#include <compare>
#include <string>
#include <vector>

namespace conequot {

/// Generators of {x : <e, x> = 0 for e in equations, <a, x> >= 0 for a in inequalities}:
/// a basis of the lineality space plus one representative per extremal ray (modulo lineality).
struct DoubleDescription {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

DoubleDescription solve_homogeneous(Index rank, const std::vector<IntVector>& equations,
                                    const std::vector<IntVector>& inequalities);

/// A polyhedral cone with canonical generator and constraint descriptions.
///
/// Canonical form:
///  - span_equations: primitive RREF rows cutting out the linear span
///  - facet_normals: primitive, taken inside the linear span, sorted
///  - lineality: primitive RREF basis of the lineality space
///  - rays: extremal rays of the pointed part (orthogonal to lineality), primitive, sorted
///  - generators: rays together with +/- each lineality basis vector, sorted
/// Two cones are equal iff their canonical forms are identical.
class Cone {
 public:
  Cone() = default;

  static Cone zero(Index rank);
  static Cone full(Index rank);
  static Cone from_generators(Index rank, const std::vector<IntVector>& rays);
  static Cone from_constraints(Index rank, const std::vector<IntVector>& equations,
                               const std::vector<IntVector>& inequalities);

  Index ambient_rank() const { return rank_; }
  Index dim() const { return rank_ - static_cast<Index>(equations_.size()); }
  Index lineality_dim() const { return static_cast<Index>(lineality_.size()); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_zero() const { return dim() == 0; }
  bool is_linear_subspace() const { return facets_.empty(); }

  const std::vector<IntVector>& generators() const { return generators_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facet_normals() const { return facets_; }
  const std::vector<IntVector>& span_equations() const { return equations_; }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const;
  bool contains(const Cone& other) const;

  /// Sum of the canonical generators; lies in the relative interior.
  IntVector relative_interior_point() const;

  /// "{0}", "cone((1,0),(1,1))", "lin((1))" or "lin(...)+cone(...)".
  std::string label() const;

  friend bool operator==(const Cone& a, const Cone& b);
  /// Canonical order: by dimension, then generators lexicographically.
  friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

 private:
  Index rank_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

namespace detail {

template <typename Derived>
int dot_sign(const IntVector& a, const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  Scalar acc = 0;
  for (Index i = 0; i < a.size(); ++i) acc += Scalar(a[i]) * v(i);
  return sign(acc);
}

}  // namespace detail

template <typename Derived>
bool Cone::contains(const Eigen::MatrixBase<Derived>& v) const {
  if (v.size() != rank_) return false;
  for (const auto& e : equations_)
    if (detail::dot_sign(e, v) != 0) return false;
  for (const auto& a : facets_)
    if (detail::dot_sign(a, v) < 0) return false;
  return true;
}

Cone cone_from_generators(Index rank, const std::vector<IntVector>& rays);

/// True iff f is a face of c (the improper face c included).
bool is_face(const Cone& f, const Cone& c);

/// All faces of c, sorted canonically; each contains the lineality space of c.
std::vector<Cone> faces(const Cone& c);

/// v lies in the relative interior of c.
template <typename Derived>
bool relint_contains(const Cone& c, const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != c.ambient_rank()) return false;
  for (const auto& e : c.span_equations())
    if (detail::dot_sign(e, v) != 0) return false;
  for (const auto& a : c.facet_normals())
    if (detail::dot_sign(a, v) <= 0) return false;
  return true;
}

Cone intersect(const Cone& a, const Cone& b);
Cone intersect(const std::vector<Cone>& cones, Index rank);

/// Relative interiors of a and b meet.
bool relints_intersect(const Cone& a, const Cone& b);

/// inner° is contained in outer° (inner is a subset of outer meeting its relative interior).
bool relint_within(const Cone& inner, const Cone& outer);

bool cone_equal(const Cone& a, const Cone& b);

}  // namespace conequot
