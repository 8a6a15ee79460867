#pragma once

// Exact integer lattice algebra: Hermite and Smith normal forms, sublattices
// of Z^n and a handful of rational linear-algebra helpers used by the cone code.

#include "conequot/errors.hpp"
#include "conequot/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace conequot {

namespace detail {

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  Scalar r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
void swap_rows(MatrixX<Scalar>& m, Index i, Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}

template <typename Scalar>
void swap_cols(MatrixX<Scalar>& m, Index i, Index j) {
  if (i != j) m.col(i).swap(m.col(j));
}

// row_i -= q * row_j
template <typename Scalar>
void sub_row(MatrixX<Scalar>& m, Index i, Index j, const Scalar& q) {
  for (Index c = 0; c < m.cols(); ++c) m(i, c) -= q * m(j, c);
}

template <typename Scalar>
void sub_col(MatrixX<Scalar>& m, Index i, Index j, const Scalar& q) {
  for (Index r = 0; r < m.rows(); ++r) m(r, i) -= q * m(r, j);
}

}  // namespace detail

/// Row Hermite form together with the unimodular transform: `transform * input == form`.
/// The first `rank` rows of `form` are in upper echelon form with positive pivots and
/// entries above each pivot reduced into [0, pivot); the remaining rows are zero, and the
/// matching rows of `transform` span the left kernel of the input.
template <typename Scalar>
struct HermiteForm {
  MatrixX<Scalar> form;
  MatrixX<Scalar> transform;
  Index rank = 0;
};

template <typename Scalar>
HermiteForm<Scalar> hermite_form(const MatrixX<Scalar>& m) {
  using detail::abs_value;
  using detail::floor_div;
  HermiteForm<Scalar> out;
  out.form = m;
  out.transform = MatrixX<Scalar>::Identity(m.rows(), m.rows());
  auto& h = out.form;
  auto& u = out.transform;
  Index r = 0;
  for (Index c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      Index best = -1;
      for (Index i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best < 0 || abs_value<Scalar>(h(i, c)) < abs_value<Scalar>(h(best, c))) best = i;
      }
      if (best < 0) break;
      have_pivot = true;
      detail::swap_rows(h, r, best);
      detail::swap_rows(u, r, best);
      bool done = true;
      for (Index i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Scalar q = floor_div<Scalar>(h(i, c), h(r, c));
        detail::sub_row(h, i, r, q);
        detail::sub_row(u, i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
    }
    for (Index i = 0; i < r; ++i) {
      const Scalar q = floor_div<Scalar>(h(i, c), h(r, c));
      if (q == 0) continue;
      detail::sub_row(h, i, r, q);
      detail::sub_row(u, i, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

/// Canonical basis of the row lattice of `m`: lower-triangular row HNF. Row i has its
/// pivot (last nonzero entry, positive) at column p_i with p_0 < p_1 < ...; in later
/// rows the entry in column p_i is reduced into [0, pivot_i). Zero rows are dropped.
template <typename Scalar>
MatrixX<Scalar> canonical_hermite_basis(const MatrixX<Scalar>& m) {
  const MatrixX<Scalar> reversed = m.rowwise().reverse();
  const auto hf = hermite_form(reversed);
  MatrixX<Scalar> top = hf.form.topRows(hf.rank);
  return top.colwise().reverse().rowwise().reverse().eval();
}

/// `transform_left * input * transform_right == diagonal`, both transforms unimodular,
/// diagonal entries nonnegative with d_0 | d_1 | ... (zeros last).
template <typename Scalar>
struct SmithForm {
  MatrixX<Scalar> diagonal;
  MatrixX<Scalar> transform_left;
  MatrixX<Scalar> transform_right;

  std::vector<Scalar> invariants() const {
    std::vector<Scalar> out;
    for (Index i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i)
      if (diagonal(i, i) != 0) out.push_back(diagonal(i, i));
    return out;
  }
};

template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const MatrixX<Scalar>& m) {
  using detail::abs_value;
  using detail::floor_div;
  SmithForm<Scalar> out;
  out.diagonal = m;
  out.transform_left = MatrixX<Scalar>::Identity(m.rows(), m.rows());
  out.transform_right = MatrixX<Scalar>::Identity(m.cols(), m.cols());
  auto& s = out.diagonal;
  auto& u = out.transform_left;
  auto& v = out.transform_right;
  const Index n = std::min(s.rows(), s.cols());
  for (Index t = 0; t < n; ++t) {
    for (;;) {
      Index bi = -1, bj = -1;
      for (Index i = t; i < s.rows(); ++i)
        for (Index j = t; j < s.cols(); ++j)
          if (s(i, j) != 0 &&
              (bi < 0 || abs_value<Scalar>(s(i, j)) < abs_value<Scalar>(s(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi < 0) return out;
      detail::swap_rows(s, t, bi);
      detail::swap_rows(u, t, bi);
      detail::swap_cols(s, t, bj);
      detail::swap_cols(v, t, bj);
      bool clean = true;
      for (Index i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        const Scalar q = floor_div<Scalar>(s(i, t), s(t, t));
        detail::sub_row(s, i, t, q);
        detail::sub_row(u, i, t, q);
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        const Scalar q = floor_div<Scalar>(s(t, j), s(t, t));
        detail::sub_col(s, j, t, q);
        detail::sub_col(v, j, t, q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      Index bad = -1;
      for (Index i = t + 1; i < s.rows() && bad < 0; ++i)
        for (Index j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      // pull the offending row up; the next round reduces the pivot
      detail::sub_row(s, t, bad, Scalar(-1));
      detail::sub_row(u, t, bad, Scalar(-1));
    }
    if (s(t, t) < 0) {
      s.row(t) = -s.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return out;
}

/// Determinant by fraction-free elimination.
BigInt determinant(const IntMatrix& m);

/// A sublattice of Z^n, stored by its canonical Hermite basis; equality is basis equality.
class Sublattice {
 public:
  explicit Sublattice(Index ambient_rank = 0);

  static Sublattice generated_by(Index ambient_rank, const std::vector<IntVector>& generators);
  static Sublattice full(Index ambient_rank);

  Index ambient_rank() const { return ambient_rank_; }
  Index rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> basis_vectors() const { return rows_of(basis_); }

  bool contains(const IntVector& v) const;
  bool contains(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b);

 private:
  Index ambient_rank_;
  IntMatrix basis_;
};

/// Smith form of `m` (free-function spelling of the templated kernel).
SmithForm<BigInt> smith_normal_form(const IntMatrix& m);

/// True iff the integer span of `vectors` is all of Z^rank.
bool generates_full_lattice(const std::vector<IntVector>& vectors, Index rank);

/// The sublattice of Z^k spanned by Q*v for the given v in Z^r (Q is k x r).
Sublattice image_lattice(const IntMatrix& q, const std::vector<IntVector>& generators);

Sublattice intersect_sublattices(const Sublattice& a, const Sublattice& b);

/// [Z^rank : sub], or nullopt when sub has rank below `rank`.
std::optional<BigInt> sublattice_index(const Sublattice& sub, Index ambient_rank);

// ---- rational linear algebra --------------------------------------------------------

/// Rank over Q.
Index rank_of(const IntMatrix& m);
Index rank_of(const std::vector<IntVector>& rows, Index cols);

/// Reduced row echelon form over Q; zero rows dropped.
RatMatrix reduced_row_echelon(const RatMatrix& m);

/// Canonical integer basis of the row space: RREF rows scaled to primitive vectors.
std::vector<IntVector> row_space_basis(const std::vector<IntVector>& rows, Index cols);

/// Canonical integer basis of {x : <row, x> = 0 for all rows}.
std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& rows, Index cols);

/// Orthogonal projection of v onto the orthogonal complement of span(basis),
/// rescaled to a primitive integer vector.
IntVector project_away(const IntVector& v, const std::vector<IntVector>& basis);

/// Solves sum x_i * rows_i = v over Q; nullopt if v is outside the row space.
std::optional<RatVector> solve_in_row_space(const std::vector<IntVector>& rows, const IntVector& v);

}  // namespace conequot
