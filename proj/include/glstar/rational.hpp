#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glstar/errors.hpp"

namespace glstar {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// "p/q" with q > 0, always carrying the denominator ("3/1", "0/1").
inline std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    if (den == 0) throw InvalidInput("zero denominator in rational '" + std::string(text) + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
}

inline Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Row vector times matrix.
inline Vector times(const Vector& v, const Matrix& m) {
  std::size_t cols = m.empty() ? 0 : m.front().size();
  Vector out(cols, Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

/// Matrix times column vector.
inline Vector times(const Matrix& m, const Vector& v) {
  Vector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Incrementally maintained row-echelon basis. Supports exact span
/// membership and expressing a vector in terms of the inserted generators.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dimension) : dim_(dimension) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  bool contains(const Vector& v) const { return is_zero(reduce(v).first); }

  /// Adds v if independent; returns whether it was added.
  bool insert(const Vector& v) {
    auto [rest, coeffs] = reduce(v);
    if (is_zero(rest)) return false;
    std::size_t pivot = 0;
    while (rest[pivot] == 0) ++pivot;
    // Track rest as combination of generators: rest = v - sum coeffs_i * echelon_i.
    Vector combo(generators_ + 1, Rational(0));
    combo[generators_] = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        for (std::size_t g = 0; g < combos_[i].size(); ++g) combo[g] -= coeffs[i] * combos_[i][g];
    for (auto& c : combos_) c.resize(generators_ + 1, Rational(0));
    rows_.push_back(std::move(rest));
    pivots_.push_back(pivot);
    combos_.push_back(std::move(combo));
    ++generators_;
    return true;
  }

  /// Coefficients c with sum c_i * generator_i == v, generators in insertion
  /// order; nothing if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const {
    auto [rest, coeffs] = reduce(v);
    if (!is_zero(rest)) return std::nullopt;
    Vector out(generators_, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        for (std::size_t g = 0; g < combos_[i].size(); ++g) out[g] += coeffs[i] * combos_[i][g];
    return out;
  }

 private:
  // Returns (v reduced against echelon rows, multipliers per echelon row).
  std::pair<Vector, Vector> reduce(Vector v) const {
    if (v.size() != dim_) throw ContractViolation("SpanBasis: dimension mismatch");
    Vector coeffs(rows_.size(), Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& x = v[pivots_[i]];
      if (x == 0) continue;
      Rational f = x / rows_[i][pivots_[i]];
      coeffs[i] = f;
      for (std::size_t j = 0; j < dim_; ++j)
        if (rows_[i][j] != 0) v[j] -= f * rows_[i][j];
    }
    return {std::move(v), std::move(coeffs)};
  }

  std::size_t dim_;
  std::size_t generators_ = 0;
  Matrix rows_;                       // echelon rows
  std::vector<std::size_t> pivots_;   // pivot column of each echelon row
  Matrix combos_;                     // echelon row i as a combination of generators
};

/// Exact rank by Gaussian elimination with first-nonzero pivoting.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace glstar
