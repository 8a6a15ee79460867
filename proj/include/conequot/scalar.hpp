#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace conequot {

namespace bmp = boost::multiprecision;

// Expression templates off: Eigen and boost's own expression templates do not mix.
using BigInt = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<BigInt>;
using IntVector = VectorX<BigInt>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

IntVector int_vector(std::initializer_list<long long> entries);
IntVector int_vector(const std::vector<long long>& entries);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);

/// Stacks vectors (all of length `cols`) as the rows of a matrix.
IntMatrix stack_rows(const std::vector<IntVector>& rows, Index cols);
std::vector<IntVector> rows_of(const IntMatrix& m);

/// gcd of the entries; zero for the zero vector.
BigInt content(const IntVector& v);
/// Divides by the content. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);
/// Clears denominators and divides by the content.
IntVector primitive(const RatVector& v);

bool is_zero(const IntVector& v);
int sign(const BigInt& x);
int sign(const Rational& x);

/// Lexicographic order on vectors; shorter vectors first.
template <typename Scalar>
int lex_compare(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

struct LexLess {
  template <typename Scalar>
  bool operator()(const VectorX<Scalar>& a, const VectorX<Scalar>& b) const {
    return lex_compare(a, b) < 0;
  }
};

template <typename Scalar>
bool equal(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return lex_compare(a, b) == 0;
}

/// "(1,0,-2)"
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);
std::vector<long long> to_longs(const IntVector& v);

}  // namespace conequot
