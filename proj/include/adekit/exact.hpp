#pragma once

// Exact arithmetic shared by every module: arbitrary-precision integers and
// rationals, a small dense matrix template, and the integer-lattice
// primitives (Hermite normal form, integer kernels) that the lattice code
// builds on.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "adekit/error.hpp"

namespace adekit {

// Expression templates off: values behave like plain arithmetic types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVector = std::vector<long long>;
using RatVector = std::vector<Rational>;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q" with q > 0, or just "p" when the value is an integer.
inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& text) {
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  auto parse_int = [&](const std::string& s) {
    std::string t = trim(s);
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw InputError("malformed rational '" + text + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') throw InputError("malformed rational '" + text + "'");
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  template <typename U, typename F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<long long>;

template <typename T>
RatMatrix to_rational(const Matrix<T>& m) {
  return m.template map<Rational>([](const T& v) { return Rational(v); });
}

/// Determinant by Gaussian elimination over the rationals.
inline Rational determinant(RatMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw InputError("determinant of non-square matrix");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

inline RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InputError("inverse of non-square matrix");
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw InputError("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Exact test via leading pivots of an LDLᵀ factorization.
inline bool is_positive_definite(const RatMatrix& g) {
  if (!g.is_symmetric()) return false;
  RatMatrix m = g;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (m(c, c) <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return true;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// xᵀ G y for integer coefficient vectors.
inline Rational bilinear(const RatMatrix& g, const IntVector& x, const IntVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) row += g(i, j) * y[j];
    s += row * x[i];
  }
  return s;
}

inline BigInt lcm_of_denominators(const RatMatrix& m) {
  BigInt l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(m(i, j))));
  return l;
}

inline bool is_integral(const RatMatrix& m) { return lcm_of_denominators(m) == 1; }

inline long long to_ll(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<long long>::max()) ||
      v < BigInt(std::numeric_limits<long long>::min()))
    throw VerificationError("integer overflow converting " + v.str());
  return v.convert_to<long long>();
}

namespace detail {

// Row-reduce `rows` over ℤ on the first `width` columns; row operations are
// applied to full rows so that trailing columns record the transformation.
inline void integer_row_echelon(std::vector<std::vector<BigInt>>& rows, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < width && pivot_row < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (rows[r][c] != 0 &&
            (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const BigInt q = rows[r][c] / rows[pivot_row][c];
        for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[pivot_row][j];
        if (rows[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (pivot_row < rows.size() && rows[pivot_row][c] != 0) {
      if (rows[pivot_row][c] < 0)
        for (auto& v : rows[pivot_row]) v = -v;
      for (std::size_t r = 0; r < pivot_row; ++r) {
        BigInt q = rows[r][c] / rows[pivot_row][c];
        if (rows[r][c] - q * rows[pivot_row][c] < 0) q -= 1;
        if (q != 0)
          for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= q * rows[pivot_row][j];
      }
      ++pivot_row;
    }
  }
}

}  // namespace detail

/// Hermite normal form basis of the ℤ-span of the given integer vectors.
inline std::vector<std::vector<BigInt>> integer_row_basis(std::vector<std::vector<BigInt>> gens) {
  if (gens.empty()) return {};
  const std::size_t width = gens.front().size();
  detail::integer_row_echelon(gens, width);
  std::vector<std::vector<BigInt>> basis;
  for (auto& row : gens)
    if (std::any_of(row.begin(), row.end(), [](const BigInt& v) { return v != 0; }))
      basis.push_back(std::move(row));
  return basis;
}

/// Basis of {x ∈ ℤⁿ : A x = 0} for an m×n integer matrix A.
inline std::vector<std::vector<BigInt>> integer_kernel(const Matrix<BigInt>& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(m + n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows[j][i] = a(i, j);
    rows[j][m + j] = 1;
  }
  detail::integer_row_echelon(rows, m);
  std::vector<std::vector<BigInt>> kernel;
  for (const auto& row : rows) {
    if (std::any_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m),
                    [](const BigInt& v) { return v != 0; }))
      continue;
    kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return kernel;
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace adekit
