#include "conequot/lattice.hpp"

#include <algorithm>

namespace conequot {

namespace {

// Any solution of a x = b over Q (free variables set to zero).
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
  RatMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const RatMatrix r = reduced_row_echelon(aug);
  RatVector x = RatVector::Zero(a.cols());
  for (Index i = 0; i < r.rows(); ++i) {
    Index lead = 0;
    while (lead < r.cols() && r(i, lead) == 0) ++lead;
    if (lead == a.cols()) return std::nullopt;  // 0 = nonzero
    x[lead] = r(i, a.cols());
  }
  return x;
}

}  // namespace

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sgn = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sgn = -sgn;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

Sublattice::Sublattice(Index ambient_rank) : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

Sublattice Sublattice::generated_by(Index ambient_rank, const std::vector<IntVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != ambient_rank) throw InputError("sublattice generator has wrong length");
  Sublattice out(ambient_rank);
  if (!generators.empty()) out.basis_ = canonical_hermite_basis(stack_rows(generators, ambient_rank));
  return out;
}

Sublattice Sublattice::full(Index ambient_rank) {
  Sublattice out(ambient_rank);
  out.basis_ = IntMatrix::Identity(ambient_rank, ambient_rank);
  return out;
}

bool Sublattice::contains(const IntVector& v) const {
  if (v.size() != ambient_rank_) return false;
  auto gens = basis_vectors();
  gens.push_back(v);
  return generated_by(ambient_rank_, gens) == *this;
}

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  for (const auto& b : other.basis_vectors())
    if (!contains(b)) return false;
  return true;
}

bool operator==(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank_ != b.ambient_rank_ || a.basis_.rows() != b.basis_.rows()) return false;
  for (Index i = 0; i < a.basis_.rows(); ++i)
    for (Index j = 0; j < a.basis_.cols(); ++j)
      if (a.basis_(i, j) != b.basis_(i, j)) return false;
  return true;
}

SmithForm<BigInt> smith_normal_form(const IntMatrix& m) { return smith_normal_form<BigInt>(m); }

bool generates_full_lattice(const std::vector<IntVector>& vectors, Index rank) {
  for (const auto& v : vectors)
    if (v.size() != rank) throw InputError("vector length does not match lattice rank");
  if (rank == 0) return true;
  if (vectors.empty()) return false;
  const auto snf = smith_normal_form(stack_rows(vectors, rank));
  const auto inv = snf.invariants();
  return static_cast<Index>(inv.size()) == rank &&
         std::all_of(inv.begin(), inv.end(), [](const BigInt& d) { return d == 1; });
}

Sublattice image_lattice(const IntMatrix& q, const std::vector<IntVector>& generators) {
  std::vector<IntVector> images;
  images.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != q.cols()) throw InputError("generator length does not match projection");
    images.emplace_back(q * g);
  }
  return Sublattice::generated_by(q.rows(), images);
}

Sublattice intersect_sublattices(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw InputError("sublattices live in different ambient lattices");
  const Index n = a.ambient_rank();
  if (a.rank() == 0 || b.rank() == 0) return Sublattice(n);
  // x*A = y*B  <=>  (x, y) in the left kernel of [A; -B]
  IntMatrix stacked(a.rank() + b.rank(), n);
  stacked.topRows(a.rank()) = a.basis();
  stacked.bottomRows(b.rank()) = -b.basis();
  const auto hf = hermite_form(stacked);
  std::vector<IntVector> gens;
  for (Index i = hf.rank; i < stacked.rows(); ++i) {
    const IntVector x = hf.transform.row(i).head(a.rank()).transpose();
    gens.emplace_back(a.basis().transpose() * x);
  }
  return Sublattice::generated_by(n, gens);
}

std::optional<BigInt> sublattice_index(const Sublattice& sub, Index ambient_rank) {
  if (sub.ambient_rank() != ambient_rank) throw InputError("sublattice rank mismatch");
  if (sub.rank() < ambient_rank) return std::nullopt;
  BigInt index = 1;
  for (const auto& d : smith_normal_form(sub.basis()).invariants()) index *= d;
  return index;
}

Index rank_of(const IntMatrix& m) {
  IntMatrix a = m;
  Index rank = 0;
  for (Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Index p = rank;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(rank).swap(a.row(p));
    for (Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const BigInt f = a(i, c), g = a(rank, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(rank, j) * f;
      // keep entries small
      IntVector row = a.row(i).transpose();
      a.row(i) = primitive(row).transpose();
    }
    ++rank;
  }
  return rank;
}

Index rank_of(const std::vector<IntVector>& rows, Index cols) {
  if (rows.empty()) return 0;
  return rank_of(stack_rows(rows, cols));
}

RatMatrix reduced_row_echelon(const RatMatrix& m) {
  RatMatrix a = m;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.row(r).swap(a.row(p));
    const Rational lead = a(r, c);
    for (Index j = c; j < a.cols(); ++j) a(r, j) /= lead;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return a.topRows(r);
}

std::vector<IntVector> row_space_basis(const std::vector<IntVector>& rows, Index cols) {
  if (rows.empty()) return {};
  const RatMatrix r = reduced_row_echelon(stack_rows(rows, cols).cast<Rational>());
  std::vector<IntVector> out;
  for (Index i = 0; i < r.rows(); ++i) out.push_back(primitive(RatVector(r.row(i).transpose())));
  return out;
}

std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& rows, Index cols) {
  std::vector<IntVector> kernel;
  if (rows.empty()) {
    for (Index i = 0; i < cols; ++i) {
      IntVector e = IntVector::Zero(cols);
      e[i] = 1;
      kernel.push_back(e);
    }
    return kernel;
  }
  const RatMatrix r = reduced_row_echelon(stack_rows(rows, cols).cast<Rational>());
  std::vector<Index> pivot_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index i = 0; i < r.rows(); ++i) {
    Index lead = 0;
    while (r(i, lead) == 0) ++lead;
    pivot_of_row.push_back(lead);
    is_pivot[static_cast<std::size_t>(lead)] = true;
  }
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RatVector x = RatVector::Zero(cols);
    x[f] = 1;
    for (Index i = 0; i < r.rows(); ++i) x[pivot_of_row[static_cast<std::size_t>(i)]] = -r(i, f);
    kernel.push_back(primitive(x));
  }
  return row_space_basis(kernel, cols);
}

IntVector project_away(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(v);
  const RatMatrix b = stack_rows(basis, v.size()).cast<Rational>();
  const RatVector vr = v.cast<Rational>();
  const RatMatrix gram = b * b.transpose();
  const auto y = solve_linear(gram, RatVector(b * vr));
  if (!y) throw InternalError("projection: singular Gram matrix");
  const RatVector w = vr - b.transpose() * (*y);
  return primitive(w);
}

std::optional<RatVector> solve_in_row_space(const std::vector<IntVector>& rows, const IntVector& v) {
  if (rows.empty()) {
    if (is_zero(v)) return RatVector(0);
    return std::nullopt;
  }
  const RatMatrix bt = stack_rows(rows, v.size()).cast<Rational>().transpose();
  return solve_linear(bt, v.cast<Rational>());
}

}  // namespace conequot
