#include "conequot/scalar.hpp"

#include <sstream>

namespace conequot {

IntVector int_vector(std::initializer_list<long long> entries) {
  return int_vector(std::vector<long long>(entries));
}

IntVector int_vector(const std::vector<long long>& entries) {
  IntVector v(static_cast<Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) v[static_cast<Index>(i)] = entries[i];
  return v;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix stack_rows(const std::vector<IntVector>& rows, Index cols) {
  IntMatrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = rows[i].transpose();
  return m;
}

std::vector<IntVector> rows_of(const IntMatrix& m) {
  std::vector<IntVector> out;
  out.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).transpose());
  return out;
}

BigInt content(const IntVector& v) {
  BigInt g = 0;
  for (Index i = 0; i < v.size(); ++i) g = bmp::gcd(g, v[i]);
  return g < 0 ? BigInt(-g) : g;
}

IntVector primitive(const IntVector& v) {
  const BigInt g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out = v;
  for (Index i = 0; i < out.size(); ++i) out[i] /= g;
  return out;
}

IntVector primitive(const RatVector& v) {
  BigInt den = 1;
  for (Index i = 0; i < v.size(); ++i) den = bmp::lcm(den, BigInt(bmp::denominator(v[i])));
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * Rational(den);
    out[i] = bmp::numerator(scaled);
  }
  return primitive(out);
}

bool is_zero(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

int sign(const BigInt& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<long long> to_longs(const IntVector& v) {
  std::vector<long long> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v[i].convert_to<long long>());
  return out;
}

}  // namespace conequot
