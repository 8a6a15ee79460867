#include "conequot/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace conequot {

namespace {

BigInt dot(const IntVector& a, const IntVector& b) { return a.dot(b); }

std::vector<bool> tight_set(const std::vector<IntVector>& constraints, const IntVector& r) {
  std::vector<bool> out(constraints.size());
  for (std::size_t i = 0; i < constraints.size(); ++i) out[i] = dot(constraints[i], r) == 0;
  return out;
}

Index tight_rank(const std::vector<IntVector>& constraints, const std::vector<bool>& tight, Index n) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < constraints.size(); ++i)
    if (tight[i]) rows.push_back(constraints[i]);
  return rank_of(rows, n);
}

// r' = |s| r - sgn(s) <a,r> p, which satisfies <a, r'> = 0 when s = <a,p>.
IntVector eliminate(const IntVector& r, const IntVector& a, const IntVector& p, const BigInt& s) {
  const BigInt t = dot(a, r);
  if (t == 0) return r;
  const BigInt abs_s = s < 0 ? BigInt(-s) : s;
  const BigInt coeff = s < 0 ? BigInt(-t) : t;
  return primitive(IntVector(abs_s * r - coeff * p));
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), LexLess{});
  v.erase(std::unique(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) { return equal(a, b); }),
          v.end());
}

}  // namespace

DoubleDescription solve_homogeneous(Index rank, const std::vector<IntVector>& equations,
                                    const std::vector<IntVector>& inequalities) {
  DoubleDescription dd;
  for (Index i = 0; i < rank; ++i) {
    IntVector e = IntVector::Zero(rank);
    e[i] = 1;
    dd.lineality.push_back(e);
  }
  std::vector<IntVector> processed;

  auto add = [&](const IntVector& raw, bool is_equation) {
    if (raw.size() != rank) throw InputError("constraint has wrong length");
    const IntVector a = primitive(raw);
    if (is_zero(a)) return;
    processed.push_back(a);

    auto pivot = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != dd.lineality.end()) {
      IntVector p = *pivot;
      dd.lineality.erase(pivot);
      BigInt s = dot(a, p);
      if (s < 0 && !is_equation) {
        p = -p;
        s = -s;
      }
      for (auto& l : dd.lineality) l = eliminate(l, a, p, s);
      for (auto& r : dd.rays) r = eliminate(r, a, p, s);
      if (!is_equation) dd.rays.push_back(p);
      return;
    }

    std::vector<IntVector> pos, neg, next;
    for (const auto& r : dd.rays) {
      const int sg = sign(dot(a, r));
      if (sg > 0)
        pos.push_back(r);
      else if (sg < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    if (!is_equation) next.insert(next.end(), pos.begin(), pos.end());

    const Index target = rank - static_cast<Index>(dd.lineality.size()) - 1;
    std::set<std::vector<bool>> seen;
    for (const auto& p : pos) {
      const BigInt ap = dot(a, p);
      for (const auto& q : neg) {
        const BigInt aq = dot(a, q);
        IntVector c = primitive(IntVector(ap * q - aq * p));
        auto tight = tight_set(processed, c);
        if (seen.count(tight)) continue;
        if (tight_rank(processed, tight, rank) != target) continue;
        seen.insert(tight);
        next.push_back(std::move(c));
      }
    }
    dd.rays = std::move(next);
  };

  for (const auto& e : equations) add(e, true);
  for (const auto& a : inequalities) add(a, false);
  return dd;
}

namespace {

// Builds the canonical form from a spanning generator set (extremal rays plus
// anything redundant) and a superset of the facet-defining inequalities.
struct Canonicalizer {
  Index rank;

  void run(const std::vector<IntVector>& gens, const std::vector<IntVector>& candidates,
           std::vector<IntVector>& equations, std::vector<IntVector>& facets,
           std::vector<IntVector>& lineality, std::vector<IntVector>& rays) const {
    equations = orthogonal_complement(gens, rank);
    const Index dim = rank - static_cast<Index>(equations.size());

    facets.clear();
    for (const auto& a : candidates) {
      std::vector<IntVector> tight;
      bool any_loose = false;
      for (const auto& g : gens) {
        const int s = sign(dot(a, g));
        if (s < 0) throw InternalError("candidate inequality violated by a generator");
        if (s == 0)
          tight.push_back(g);
        else
          any_loose = true;
      }
      if (!any_loose) continue;
      if (rank_of(tight, rank) != dim - 1) continue;
      facets.push_back(project_away(a, equations));
    }
    sort_unique(facets);

    std::vector<IntVector> eq_and_facets = equations;
    eq_and_facets.insert(eq_and_facets.end(), facets.begin(), facets.end());
    lineality = dim == 0 ? std::vector<IntVector>{} : orthogonal_complement(eq_and_facets, rank);
    const Index lin = static_cast<Index>(lineality.size());

    rays.clear();
    for (const auto& g : gens) {
      const auto tight = tight_set(facets, g);
      if (std::all_of(tight.begin(), tight.end(), [](bool b) { return b; })) continue;  // in lineality
      if (tight_rank(facets, tight, rank) != dim - lin - 1) continue;
      rays.push_back(project_away(g, lineality));
    }
    sort_unique(rays);
  }
};

}  // namespace

Cone Cone::zero(Index rank) { return from_generators(rank, {}); }

Cone Cone::full(Index rank) {
  std::vector<IntVector> gens;
  for (Index i = 0; i < rank; ++i) {
    IntVector e = IntVector::Zero(rank);
    e[i] = 1;
    gens.push_back(e);
    gens.push_back(-e);
  }
  return from_generators(rank, gens);
}

Cone Cone::from_generators(Index rank, const std::vector<IntVector>& input) {
  std::vector<IntVector> gens;
  for (const auto& r : input) {
    if (r.size() != rank) throw InputError("ray length does not match ambient rank");
    if (!conequot::is_zero(r)) gens.push_back(primitive(r));
  }
  sort_unique(gens);

  Cone c;
  c.rank_ = rank;
  // facets of cone(gens) are the extremal rays of its dual
  const auto dual = solve_homogeneous(rank, {}, gens);
  Canonicalizer{rank}.run(gens, dual.rays, c.equations_, c.facets_, c.lineality_, c.rays_);

  c.generators_ = c.rays_;
  for (const auto& l : c.lineality_) {
    c.generators_.push_back(l);
    c.generators_.push_back(-l);
  }
  sort_unique(c.generators_);

  for (const auto& g : gens)
    if (!c.contains(g)) throw InternalError("double description round trip lost a generator");
  return c;
}

Cone Cone::from_constraints(Index rank, const std::vector<IntVector>& equations,
                            const std::vector<IntVector>& inequalities) {
  const auto dd = solve_homogeneous(rank, equations, inequalities);
  std::vector<IntVector> gens = dd.rays;
  for (const auto& l : dd.lineality) {
    gens.push_back(l);
    gens.push_back(-l);
  }
  for (auto& g : gens) g = primitive(g);
  sort_unique(gens);

  std::vector<IntVector> candidates;
  for (const auto& a : inequalities)
    if (!conequot::is_zero(a)) candidates.push_back(primitive(a));

  Cone c;
  c.rank_ = rank;
  Canonicalizer{rank}.run(gens, candidates, c.equations_, c.facets_, c.lineality_, c.rays_);
  c.generators_ = c.rays_;
  for (const auto& l : c.lineality_) {
    c.generators_.push_back(l);
    c.generators_.push_back(-l);
  }
  sort_unique(c.generators_);

  for (const auto& g : c.generators_) {
    for (const auto& e : equations)
      if (dot(e, g) != 0) throw InternalError("double description round trip violates an equation");
    for (const auto& a : inequalities)
      if (dot(a, g) < 0) throw InternalError("double description round trip violates an inequality");
  }
  return c;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) return false;
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const IntVector& g) { return contains(g); });
}

IntVector Cone::relative_interior_point() const {
  IntVector p = IntVector::Zero(rank_);
  for (const auto& g : generators_) p += g;
  return p;
}

std::string Cone::label() const {
  if (generators_.empty()) return "{0}";
  std::ostringstream os;
  auto list = [&](const std::vector<IntVector>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << to_string(vs[i]);
  };
  if (!lineality_.empty()) {
    os << "lin(";
    list(lineality_);
    os << ')';
    if (!rays_.empty()) os << '+';
  }
  if (!rays_.empty()) {
    os << "cone(";
    list(rays_);
    os << ')';
  }
  return os.str();
}

bool operator==(const Cone& a, const Cone& b) { return (a <=> b) == std::strong_ordering::equal; }

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const std::size_t n = std::min(a.generators_.size(), b.generators_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = lex_compare(a.generators_[i], b.generators_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.generators_.size() <=> b.generators_.size();
}

Cone cone_from_generators(Index rank, const std::vector<IntVector>& rays) {
  return Cone::from_generators(rank, rays);
}

bool cone_equal(const Cone& a, const Cone& b) { return a == b; }

namespace {

// The smallest face of c containing all of `points`.
Cone face_hull(const Cone& c, const std::vector<IntVector>& points) {
  std::vector<IntVector> eqs = c.span_equations(), ineqs;
  for (const auto& a : c.facet_normals()) {
    const bool tight = std::all_of(points.begin(), points.end(), [&](const IntVector& p) { return dot(a, p) == 0; });
    (tight ? eqs : ineqs).push_back(a);
  }
  return Cone::from_constraints(c.ambient_rank(), eqs, ineqs);
}

}  // namespace

bool is_face(const Cone& f, const Cone& c) {
  if (f.ambient_rank() != c.ambient_rank()) return false;
  if (!c.contains(f)) return false;
  return face_hull(c, f.generators()) == f;
}

std::vector<Cone> faces(const Cone& c) {
  const auto& normals = c.facet_normals();
  const auto& gens = c.generators();
  auto closure_of = [&](const std::vector<IntVector>& pts) {
    std::vector<bool> tight(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i)
      tight[i] = std::all_of(pts.begin(), pts.end(), [&](const IntVector& p) { return dot(normals[i], p) == 0; });
    return tight;
  };

  std::map<std::vector<bool>, std::vector<IntVector>> found;  // tight facet set -> generators
  std::vector<std::vector<bool>> queue;
  const auto top = closure_of(gens);
  found[top] = gens;
  queue.push_back(top);
  while (!queue.empty()) {
    const auto cur = queue.back();
    queue.pop_back();
    const auto cur_gens = found[cur];
    for (std::size_t i = 0; i < normals.size(); ++i) {
      if (cur[i]) continue;
      std::vector<IntVector> sub;
      for (const auto& g : cur_gens)
        if (dot(normals[i], g) == 0) sub.push_back(g);
      auto tight = closure_of(sub);
      if (sub.empty()) std::fill(tight.begin(), tight.end(), true);
      if (found.emplace(tight, sub).second) queue.push_back(tight);
    }
  }
  std::vector<Cone> out;
  for (const auto& [tight, sub] : found) out.push_back(Cone::from_generators(c.ambient_rank(), sub));
  std::sort(out.begin(), out.end());
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw InputError("intersecting cones of different rank");
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  std::vector<IntVector> eqs = a.span_equations(), ineqs = a.facet_normals();
  eqs.insert(eqs.end(), b.span_equations().begin(), b.span_equations().end());
  ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
  return Cone::from_constraints(a.ambient_rank(), eqs, ineqs);
}

Cone intersect(const std::vector<Cone>& cones, Index rank) {
  Cone acc = Cone::full(rank);
  for (const auto& c : cones) acc = intersect(acc, c);
  return acc;
}

bool relints_intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  const Cone rho = intersect(a, b);
  const IntVector p = rho.relative_interior_point();
  return relint_contains(a, p) && relint_contains(b, p);
}

bool relint_within(const Cone& inner, const Cone& outer) {
  return outer.contains(inner) && relint_contains(outer, inner.relative_interior_point());
}

}  // namespace conequot
