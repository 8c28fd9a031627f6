#pragma once

// Test-side oracles and seeded generators. Nothing here calls into the
// library's algorithms except where a test states it compares against them.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "adekit/diagram.hpp"
#include "adekit/exact.hpp"
#include "adekit/lattice.hpp"

namespace adekit::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Labels of a complete graph on n ≤ 5 nodes; code 0 is "no edge" (m = 2),
/// code c ≥ 1 is m = c + 2.
struct LabelMatrix {
  int n = 0;
  std::array<std::array<int, 5>, 5> code{};

  CoxeterDiagram diagram() const {
    std::map<NodePair, int> labels;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (code[i][j]) labels[{i, j}] = code[i][j] + 2;
    return CoxeterDiagram(n, labels);
  }

  bool connected() const {
    std::vector<int> seen{0};
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    mark[0] = 1;
    for (std::size_t k = 0; k < seen.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (!mark[static_cast<std::size_t>(j)] && code[seen[k]][j]) {
          mark[static_cast<std::size_t>(j)] = 1;
          seen.push_back(j);
        }
    return static_cast<int>(seen.size()) == n;
  }
};

namespace detail {

/// True when no relabelling of the first k nodes gives a lexicographically
/// larger column-major upper triangle.
inline bool prefix_is_maximal(const LabelMatrix& m, int k) {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  while (std::next_permutation(p.begin(), p.begin() + k)) {
    int verdict = 0;
    for (int j = 1; j < k && verdict == 0; ++j)
      for (int i = 0; i < j && verdict == 0; ++i) {
        const int permuted = m.code[p[i]][p[j]], current = m.code[i][j];
        if (permuted != current) verdict = permuted > current ? 1 : -1;
      }
    if (verdict > 0) return false;
  }
  return true;
}

inline void extend(LabelMatrix& m, int k, int n_max, int codes, const std::function<void(const LabelMatrix&)>& visit) {
  m.n = k;
  visit(m);
  if (k == n_max) return;
  // column k: entries (0,k) .. (k-1,k)
  std::vector<int> column(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i) m.code[i][k] = m.code[k][i] = column[static_cast<std::size_t>(i)];
    m.n = k + 1;
    if (prefix_is_maximal(m, k + 1)) extend(m, k + 1, n_max, codes, visit);
    int pos = 0;
    while (pos < k && ++column[static_cast<std::size_t>(pos)] == codes) column[static_cast<std::size_t>(pos++)] = 0;
    if (pos == k) break;
  }
  for (int i = 0; i < k; ++i) m.code[i][k] = m.code[k][i] = 0;
}

}  // namespace detail

/// One representative per isomorphism class of Coxeter diagrams on 1..n_max
/// nodes with labels 2..max_label (orderly generation).
inline void for_each_coxeter_class(int n_max, int max_label, const std::function<void(const LabelMatrix&)>& visit) {
  LabelMatrix m;
  detail::extend(m, 1, n_max, max_label - 1, visit);
}

/// Positive definiteness of the cosine form 1 on the diagonal, −cos(π/m)
/// off it, by double-precision LDLᵀ. Forms here are either clearly definite
/// or have a pivot ≤ 0 up to rounding.
inline bool cosine_form_positive_definite(const LabelMatrix& m) {
  double a[5][5];
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      a[i][j] = i == j ? 1.0 : m.code[i][j] ? -std::cos(std::numbers::pi / (m.code[i][j] + 2)) : 0.0;
  for (int k = 0; k < m.n; ++k) {
    if (a[k][k] <= 1e-9) return false;
    for (int i = k + 1; i < m.n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (int j = k; j < m.n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

/// Bareiss fraction-free determinant after clearing denominators.
inline Rational bareiss_determinant(const RatMatrix& g) {
  const std::size_t n = g.rows();
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scale = boost::multiprecision::lcm(scale, BigInt(boost::multiprecision::denominator(g(i, j))));
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = boost::multiprecision::numerator(g(i, j) * Rational(scale));
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Rational det = Rational(a[n - 1][n - 1]) * sign;
  for (std::size_t i = 0; i < n; ++i) det /= Rational(scale);
  return det;
}

/// ℤᶻ ⊕ (ADE root lattices) in a scrambled basis whose vectors still have
/// norm 1 or 2.
struct WittCase {
  RatMatrix gram;
  RatMatrix scrambled;
  int z = 0;
  std::vector<DiagramType> parts;  // sorted
};

inline WittCase random_witt_case(Rng& rng) {
  static const std::vector<DiagramType> pool{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                             {Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7}};
  WittCase c;
  c.z = uniform(rng, 0, 2);
  int dim = c.z;
  for (int k = uniform(rng, c.z == 0 ? 1 : 0, 3); k > 0; --k) {
    const auto t = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
    c.parts.push_back(t);
    dim += t.rank();
  }
  const auto n = static_cast<std::size_t>(dim);
  c.gram = RatMatrix(n, n);
  std::size_t at = 0;
  for (; at < static_cast<std::size_t>(c.z); ++at) c.gram(at, at) = 1;
  for (const auto& t : c.parts) {
    const RatMatrix r = root_lattice(dynkin_diagram(t)).gram();
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.rows(); ++j) c.gram(at + i, at + j) = r(i, j);
    at += r.rows();
  }
  // bⱼ ← bⱼ − (bᵢ·bⱼ)bᵢ for norm-2 bᵢ keeps |bⱼ|²; also sign flips and swaps
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 30; ++step) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, dim - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, dim - 1));
    const RatMatrix cur = to_rational(u) * c.gram * to_rational(u).transposed();
    if (i == j) {
      for (std::size_t k = 0; k < n; ++k) u(i, k) = -u(i, k);
    } else if (cur(i, i) == 2) {
      const auto f = static_cast<long long>(boost::multiprecision::numerator(cur(i, j)));
      for (std::size_t k = 0; k < n; ++k) u(j, k) -= f * u(i, k);
    } else {
      for (std::size_t k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
    }
  }
  c.scrambled = to_rational(u) * c.gram * to_rational(u).transposed();
  std::sort(c.parts.begin(), c.parts.end());
  return c;
}

}  // namespace adekit::testing
