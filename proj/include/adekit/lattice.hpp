#pragma once

// Exact lattice arithmetic: root lattices, explicit coordinate models of
// A_n, D_n and E8, duals, determinants, short-vector enumeration, packing
// densities, gluing, orthogonal slices, Witt decomposition and similarity.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adekit/diagram.hpp"
#include "adekit/error.hpp"
#include "adekit/exact.hpp"
#include "adekit/reflection.hpp"

namespace adekit {

class Lattice {
 public:
  Lattice() = default;

  /// `gram` must be symmetric positive definite. When `basis` is given its
  /// pairwise dot products must reproduce `gram` exactly.
  explicit Lattice(RatMatrix gram, std::optional<std::vector<RatVector>> basis = std::nullopt)
      : gram_(std::move(gram)), basis_(std::move(basis)) {
    if (gram_.rows() != gram_.cols()) throw InputError("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw InputError("Gram matrix must be symmetric");
    if (!is_positive_definite(gram_)) throw InputError("Gram matrix is not positive definite");
    if (basis_) {
      if (basis_->size() != gram_.rows()) throw InputError("basis size does not match the Gram matrix");
      for (std::size_t i = 0; i < basis_->size(); ++i)
        for (std::size_t j = 0; j < basis_->size(); ++j)
          if (dot((*basis_)[i], (*basis_)[j]) != gram_(i, j))
            throw InputError("coordinate basis does not reproduce the Gram matrix");
    }
  }

  int rank() const { return static_cast<int>(gram_.rows()); }
  const RatMatrix& gram() const { return gram_; }
  const std::optional<std::vector<RatVector>>& basis() const { return basis_; }

  /// Ambient coordinates of the lattice vector with these coefficients.
  RatVector coordinates(const IntVector& coeffs) const {
    if (!basis_) throw InputError("lattice has no coordinate basis");
    RatVector v(basis_->front().size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        for (std::size_t k = 0; k < v.size(); ++k) v[k] += (*basis_)[i][k] * coeffs[i];
    return v;
  }

  Lattice scaled(const Rational& factor) const {
    return Lattice(gram_.map<Rational>([&](const Rational& x) { return x * factor; }));
  }

 private:
  RatMatrix gram_;
  std::optional<std::vector<RatVector>> basis_;
};

inline Rational determinant(const Lattice& l) { return determinant(l.gram()); }

inline Lattice root_lattice(const DynkinDiagram& d) { return Lattice(simple_root_gram(d)); }

/// ℤⁿ with the standard basis.
inline Lattice integer_lattice(int n) {
  std::vector<RatVector> basis;
  for (int i = 0; i < n; ++i) {
    RatVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    basis.push_back(e);
  }
  return Lattice(RatMatrix::identity(static_cast<std::size_t>(n)), basis);
}

inline RatMatrix gram_of(const std::vector<RatVector>& basis) {
  RatMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = dot(basis[i], basis[j]);
  return g;
}

/// Lattice spanned by arbitrary rational generators (Hermite normal form
/// over a common denominator picks the basis).
inline Lattice lattice_from_generators(const std::vector<RatVector>& gens) {
  if (gens.empty()) throw InputError("no generators");
  BigInt den = 1;
  for (const auto& g : gens)
    for (const auto& x : g) den = boost::multiprecision::lcm(den, BigInt(boost::multiprecision::denominator(x)));
  std::vector<std::vector<BigInt>> rows;
  for (const auto& g : gens) {
    std::vector<BigInt> row;
    for (const auto& x : g) row.push_back(boost::multiprecision::numerator(x * Rational(den)));
    rows.push_back(std::move(row));
  }
  std::vector<RatVector> basis;
  for (const auto& row : integer_row_basis(std::move(rows))) {
    RatVector v;
    for (const auto& x : row) v.push_back(Rational(x, den));
    basis.push_back(std::move(v));
  }
  return Lattice(gram_of(basis), basis);
}

/// Explicit coordinate models:
///   A_n = {x ∈ ℤⁿ⁺¹ : Σx = 0}, basis eᵢ − eᵢ₊₁;
///   D_n = {x ∈ ℤⁿ : Σx even}, basis e₁ + e₂, e₁ − e₂, e₂ − e₃, …;
///   E8 = D8 ∪ (D8 + ½·𝟙), basis e₁+e₂, e₂−e₁, …, e₇−e₆, ½(1,−1,…,−1,1).
inline Lattice coordinate_model(const DiagramType& type) {
  std::vector<RatVector> basis;
  auto unit = [](std::size_t dim, std::size_t i, std::size_t j, int sj) {
    RatVector v(dim, 0);
    v[i] = 1;
    v[j] = sj;
    return v;
  };
  switch (type.family) {
    case Family::A: {
      const auto n = static_cast<std::size_t>(type.parameter);
      for (std::size_t i = 0; i < n; ++i) basis.push_back(unit(n + 1, i, i + 1, -1));
      break;
    }
    case Family::D: {
      const auto n = static_cast<std::size_t>(type.parameter);
      if (n < 2) throw InputError("D_n needs n >= 2");
      basis.push_back(unit(n, 0, 1, 1));
      for (std::size_t i = 0; i + 1 < n; ++i) basis.push_back(unit(n, i, i + 1, -1));
      break;
    }
    case Family::E: {
      if (type.parameter != 8) throw InputError("coordinate models exist for A_n, D_n and E8 only");
      basis.push_back(unit(8, 0, 1, 1));
      for (std::size_t i = 0; i < 6; ++i) basis.push_back(unit(8, i + 1, i, -1));
      RatVector h(8, Rational(-1, 2));
      h[0] = h[7] = Rational(1, 2);
      basis.push_back(h);
      break;
    }
    default:
      throw InputError("coordinate models exist for A_n, D_n and E8 only");
  }
  return Lattice(gram_of(basis), basis);
}

/// Gram inverse; the dual basis vᵢ* = Σⱼ (G⁻¹)ᵢⱼ vⱼ when coordinates exist.
inline Lattice dual_lattice(const Lattice& l) {
  const RatMatrix inv = inverse(l.gram());
  if (!l.basis()) return Lattice(inv);
  const auto& b = *l.basis();
  std::vector<RatVector> dual;
  for (std::size_t i = 0; i < b.size(); ++i) {
    RatVector v(b.front().size(), 0);
    for (std::size_t j = 0; j < b.size(); ++j)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += inv(i, j) * b[j][k];
    dual.push_back(std::move(v));
  }
  return Lattice(inv, dual);
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = static_cast<std::size_t>(a.rank()), m = static_cast<std::size_t>(b.rank());
  RatMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  if (!a.basis() || !b.basis()) return Lattice(g);
  const std::size_t da = a.basis()->front().size(), db = b.basis()->front().size();
  std::vector<RatVector> basis;
  for (const auto& v : *a.basis()) {
    RatVector w(v);
    w.resize(da + db, 0);
    basis.push_back(std::move(w));
  }
  for (const auto& v : *b.basis()) {
    RatVector w(da, 0);
    w.insert(w.end(), v.begin(), v.end());
    basis.push_back(std::move(w));
  }
  return Lattice(g, basis);
}

/// New basis: row i of `u` gives the coefficients of new basis vector i.
inline Lattice change_basis(const Lattice& l, const IntMatrix& u) {
  const RatMatrix ur = to_rational(u);
  const RatMatrix g = ur * l.gram() * ur.transposed();
  if (!l.basis()) return Lattice(g);
  std::vector<RatVector> basis;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    IntVector c(u.cols());
    for (std::size_t j = 0; j < u.cols(); ++j) c[j] = u(i, j);
    basis.push_back(l.coordinates(c));
  }
  return Lattice(g, basis);
}

// ---------------------------------------------------------------------------
// Short vectors

struct ShortVectorReport {
  Rational bound;
  std::vector<IntVector> vectors;  // coefficient vectors, lexicographic order
  std::vector<Rational> norms;     // norms[i] = vectors[i]ᵀ G vectors[i]
  Rational min_norm = 0;           // 0 when no vector is within the bound
  std::size_t kissing = 0;         // vectors of norm min_norm
};

/// Every nonzero x ∈ ℤⁿ with xᵀGx ≤ bound. A floating-point triangular
/// decomposition drives the recursive bounded search; every candidate is
/// re-checked in exact integer arithmetic. At most 10⁷ search nodes
/// (ADEKIT_MAX_ENUM overrides).
inline ShortVectorReport short_vectors(const Lattice& l, const Rational& bound) {
  if (bound <= 0) throw InputError("short vector bound must be positive");
  const auto n = static_cast<std::size_t>(l.rank());
  const RatMatrix& g = l.gram();

  const BigInt scale = lcm_of_denominators(g);
  Matrix<long long> gi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gi(i, j) = to_ll(boost::multiprecision::numerator(g(i, j) * Rational(scale)));
  const Rational scaled_bound = bound * Rational(scale);
  const BigInt floor_bound = boost::multiprecision::numerator(scaled_bound) / boost::multiprecision::denominator(scaled_bound);
  const __int128 limit = static_cast<__int128>(to_ll(floor_bound));

  // Q(x) = Σᵢ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)²
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = to_double(g(i, j));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t m = k; m < n; ++m) q[k][m] -= q[k][i] * q[i][m];
  }

  const double b = to_double(bound);
  const double slack = 1e-9 * (1.0 + b);
  const std::size_t cap = enumeration_cap(10000000);
  std::size_t visited = 0;

  ShortVectorReport report;
  report.bound = bound;
  IntVector x(n, 0);
  std::function<void(std::size_t, double)> search = [&](std::size_t level, double remaining) {
    const std::size_t i = level - 1;
    double centre = 0;
    for (std::size_t j = i + 1; j < n; ++j) centre -= q[i][j] * static_cast<double>(x[j]);
    const double radius = std::sqrt(std::max(0.0, remaining + slack) / q[i][i]);
    const auto lo = static_cast<long long>(std::ceil(centre - radius - 1e-9));
    const auto hi = static_cast<long long>(std::floor(centre + radius + 1e-9));
    for (long long v = lo; v <= hi; ++v) {
      if (++visited > cap) throw EnumerationLimit("short vector search exceeded " + std::to_string(cap) + " nodes");
      x[i] = v;
      const double used = q[i][i] * (static_cast<double>(v) - centre) * (static_cast<double>(v) - centre);
      if (used > remaining + slack) continue;
      if (i > 0) {
        search(i, remaining - used);
        continue;
      }
      if (std::all_of(x.begin(), x.end(), [](long long t) { return t == 0; })) continue;
      __int128 norm = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (x[r] == 0) continue;
        __int128 row = 0;
        for (std::size_t c = 0; c < n; ++c) row += static_cast<__int128>(gi(r, c)) * x[c];
        norm += row * x[r];
      }
      if (norm <= limit) {
        report.vectors.push_back(x);
        report.norms.push_back(Rational(BigInt(static_cast<long long>(norm)), scale));
      }
    }
    x[i] = 0;
  };
  if (n > 0) search(n, b);

  std::vector<std::size_t> order(report.vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return report.vectors[a] < report.vectors[c]; });
  ShortVectorReport sorted;
  sorted.bound = bound;
  for (std::size_t k : order) {
    sorted.vectors.push_back(report.vectors[k]);
    sorted.norms.push_back(report.norms[k]);
  }
  if (!sorted.norms.empty()) {
    sorted.min_norm = *std::min_element(sorted.norms.begin(), sorted.norms.end());
    sorted.kissing = static_cast<std::size_t>(std::count(sorted.norms.begin(), sorted.norms.end(), sorted.min_norm));
  }
  return sorted;
}

/// The minimal shell: min norm and all vectors attaining it.
inline ShortVectorReport minimal_vectors(const Lattice& l) {
  Rational bound = l.gram()(0, 0);
  for (int i = 1; i < l.rank(); ++i) bound = std::min(bound, l.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
  ShortVectorReport all = short_vectors(l, bound);
  ShortVectorReport shell;
  shell.bound = all.min_norm;
  shell.min_norm = all.min_norm;
  for (std::size_t k = 0; k < all.vectors.size(); ++k)
    if (all.norms[k] == all.min_norm) {
      shell.vectors.push_back(all.vectors[k]);
      shell.norms.push_back(all.norms[k]);
    }
  shell.kissing = shell.vectors.size();
  return shell;
}

inline Rational minimum(const Lattice& l) { return minimal_vectors(l).min_norm; }
inline std::size_t kissing_number(const Lattice& l) { return minimal_vectors(l).kissing; }

// ---------------------------------------------------------------------------
// Packing density

/// density² = coefficient · π^pi_power, exactly.
struct DensitySquare {
  Rational coefficient;
  int pi_power = 0;

  double value() const {
    return std::sqrt(to_double(coefficient) * std::pow(std::numbers::pi, pi_power));
  }
  bool operator==(const DensitySquare&) const = default;
};

/// Spheres of radius √min/2 at lattice points:
/// density = V_n (√min / 2)ⁿ / √det, V_n the unit-ball volume.
inline DensitySquare packing_density_square(const Lattice& l) {
  const int n = l.rank();
  const Rational min = minimum(l);
  Rational coeff = 1;
  for (int i = 0; i < n; ++i) coeff *= min / 4;
  coeff /= determinant(l);
  // V_n² = π^n / Γ(n/2 + 1)²
  if (n % 2 == 0) {
    const BigInt f = factorial(static_cast<unsigned>(n / 2));
    coeff /= Rational(f * f);
    return {coeff, n};
  }
  // Γ(k + 3/2) = (2k+2)! / (4^{k+1} (k+1)!) · √π
  const unsigned k = static_cast<unsigned>(n / 2);
  BigInt four = 1;
  for (unsigned i = 0; i <= k; ++i) four *= 4;
  const Rational gamma(factorial(2 * k + 2), four * factorial(k + 1));
  coeff /= gamma * gamma;
  return {coeff, n - 1};
}

inline double packing_density(const Lattice& l) { return packing_density_square(l).value(); }

// ---------------------------------------------------------------------------
// Gluing and slicing

/// D_n ∪ (D_n + ½·𝟙). n must be even.
inline Lattice glue(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("gluing D_n with the half-sum vector needs even n >= 2");
  const Lattice d = coordinate_model(DiagramType{Family::D, n});
  std::vector<RatVector> gens = *d.basis();
  gens.push_back(RatVector(static_cast<std::size_t>(n), Rational(1, 2)));
  return lattice_from_generators(gens);
}

/// Sublattice of vectors orthogonal to the given lattice vectors
/// (coefficient vectors over the basis of `l`).
inline Lattice orthogonal_complement(const Lattice& l, const std::vector<IntVector>& vectors) {
  const auto n = static_cast<std::size_t>(l.rank());
  Matrix<BigInt> a(vectors.size(), n);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    RatVector w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += l.gram()(i, j) * vectors[k][j];
    BigInt den = 1;
    for (const auto& x : w) den = boost::multiprecision::lcm(den, BigInt(boost::multiprecision::denominator(x)));
    for (std::size_t i = 0; i < n; ++i) a(k, i) = boost::multiprecision::numerator(w[i] * Rational(den));
  }
  const auto kernel = integer_kernel(a);
  if (kernel.empty()) throw InputError("orthogonal complement is zero");
  IntMatrix u(kernel.size(), n);
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) u(r, c) = to_ll(kernel[r][c]);
  return change_basis(l, u);
}

enum class SliceKind { E7, E6 };

/// E7 = vectors of E8 orthogonal to one root; E6 = vectors orthogonal to an
/// A2 spanned by two roots. `roots` (coefficient vectors over the basis of
/// `e8`) defaults to basis vector 1 (E7) or basis vectors 1, 3 (E6).
inline Lattice orthogonal_slice(const Lattice& e8, SliceKind kind, std::vector<IntVector> roots = {}) {
  if (e8.rank() != 8 || determinant(e8) != 1 || minimum(e8) != 2)
    throw InputError("orthogonal_slice expects the E8 lattice");
  if (roots.empty()) {
    IntVector a(8, 0), b(8, 0);
    a[0] = 1;
    b[2] = 1;
    roots = kind == SliceKind::E7 ? std::vector<IntVector>{a} : std::vector<IntVector>{a, b};
  }
  const std::size_t want = kind == SliceKind::E7 ? 1 : 2;
  if (roots.size() != want) throw InputError("wrong number of roots for this slice");
  for (const auto& r : roots)
    if (bilinear(e8.gram(), r, r) != 2) throw InputError("chosen vector is not a root");
  if (kind == SliceKind::E6) {
    const Rational d = bilinear(e8.gram(), roots[0], roots[1]);
    if (d != 1 && d != -1) throw InputError("chosen roots do not span an A2");
  }
  return orthogonal_complement(e8, roots);
}

// ---------------------------------------------------------------------------
// Witt decomposition

struct WittReport {
  std::vector<DiagramType> components;  // sorted
  int z_rank = 0;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& t : components) out.push_back(t.name());
    return out;
  }
  bool operator==(const WittReport&) const = default;
};

inline long long root_count(const DiagramType& t) {
  const long long n = t.rank();
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C:
    case Family::BC: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    case Family::H: return n == 3 ? 30 : 120;
    case Family::I: return 2LL * t.parameter;
  }
  return 0;
}

namespace detail {

// Simple roots of a set of norm-2 vectors: positive with respect to a
// generic functional and not the sum of two positive roots.
inline std::vector<IntVector> simple_system(const std::vector<IntVector>& roots, std::size_t dim) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    const double base = std::numbers::pi + attempt;
    std::vector<Rational> w;
    double p = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      w.push_back(Rational(static_cast<long long>(std::llround(p * 1e6)), 1000000));
      p *= base;
    }
    std::set<IntVector> positive;
    bool generic = true;
    for (const auto& r : roots) {
      Rational f = 0;
      for (std::size_t i = 0; i < dim; ++i) f += w[i] * r[i];
      if (f == 0) {
        generic = false;
        break;
      }
      if (f > 0) positive.insert(r);
    }
    if (!generic) continue;
    std::set<IntVector> sums;
    for (auto a = positive.begin(); a != positive.end(); ++a)
      for (auto b = std::next(a); b != positive.end(); ++b) {
        IntVector s(dim);
        for (std::size_t i = 0; i < dim; ++i) s[i] = (*a)[i] + (*b)[i];
        if (positive.count(s)) sums.insert(s);
      }
    std::vector<IntVector> simple;
    for (const auto& r : positive)
      if (!sums.count(r)) simple.push_back(r);
    return simple;
  }
  throw VerificationError("no generic functional found");
}

}  // namespace detail

/// Splits an integral lattice with a basis of norm-1 and norm-2 vectors into
/// ℤᵏ ⊕ (ADE root lattices).
inline WittReport witt_decompose(const RatMatrix& gram) {
  if (!is_integral(gram)) throw InputError("Witt decomposition needs an integral Gram matrix");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) != 1 && gram(i, i) != 2) throw InputError("basis vectors must have norm 1 or 2");
  const Lattice l(gram);

  WittReport report;
  std::vector<IntVector> units;
  for (const auto& v : short_vectors(l, 1).vectors)
    if (*std::find_if(v.begin(), v.end(), [](long long t) { return t != 0; }) > 0) units.push_back(v);
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t b = a + 1; b < units.size(); ++b)
      if (bilinear(gram, units[a], units[b]) != 0)
        throw VerificationError("norm-1 vectors are not orthogonal");
  report.z_rank = static_cast<int>(units.size());
  if (report.z_rank == l.rank()) return report;

  const Lattice rest = units.empty() ? l : orthogonal_complement(l, units);
  const auto dim = static_cast<std::size_t>(rest.rank());
  const auto roots = short_vectors(rest, 2);
  std::vector<IntVector> norm2;
  for (std::size_t k = 0; k < roots.vectors.size(); ++k)
    if (roots.norms[k] == 2) norm2.push_back(roots.vectors[k]);
    else throw VerificationError("a norm-1 vector survived the unit split");

  const auto simple = detail::simple_system(norm2, dim);
  if (simple.size() != dim)
    throw VerificationError("roots span rank " + std::to_string(simple.size()) + " but the lattice has rank " +
                            std::to_string(dim) + ": not generated by norm-1 and norm-2 vectors");
  std::map<NodePair, int> labels;
  RatMatrix simple_gram(dim, dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      simple_gram(a, b) = bilinear(rest.gram(), simple[a], simple[b]);
      if (a < b && simple_gram(a, b) != 0) {
        if (simple_gram(a, b) != -1) throw VerificationError("simple roots are not pairwise obtuse");
        labels[{static_cast<int>(a), static_cast<int>(b)}] = 3;
      }
    }
  const auto types = classify(CoxeterDiagram(static_cast<int>(dim), labels));
  if (!types) throw VerificationError("simple roots do not form a finite diagram");
  long long count = 0;
  for (const auto& t : *types) count += root_count(t);
  if (count != static_cast<long long>(norm2.size()))
    throw VerificationError("root count " + std::to_string(norm2.size()) + " does not match " + type_string(*types));
  if (determinant(simple_gram) != determinant(rest))
    throw VerificationError("roots generate a proper sublattice (index " +
                            to_string(determinant(simple_gram) / determinant(rest)) + "^(1/2))");
  report.components = *types;
  std::sort(report.components.begin(), report.components.end());
  return report;
}

// ---------------------------------------------------------------------------
// Similarity

namespace detail {

// A basis of short vectors when the greedy choice happens to be a basis;
// otherwise the given basis.
inline RatMatrix short_basis_gram(const Lattice& l) {
  Rational bound = 0;
  for (int i = 0; i < l.rank(); ++i) bound = std::max(bound, l.gram()(static_cast<std::size_t>(i), static_cast<std::size_t>(i)));
  const auto sv = short_vectors(l, bound);
  std::vector<std::size_t> order(sv.vectors.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sv.norms[a] < sv.norms[b]; });
  std::vector<IntVector> chosen;
  for (std::size_t k : order) {
    chosen.push_back(sv.vectors[k]);
    RatMatrix m(chosen.size(), chosen.size());
    for (std::size_t a = 0; a < chosen.size(); ++a)
      for (std::size_t b = 0; b < chosen.size(); ++b) m(a, b) = bilinear(l.gram(), chosen[a], chosen[b]);
    if (determinant(m) == 0) chosen.pop_back();
    if (chosen.size() == static_cast<std::size_t>(l.rank())) {
      if (determinant(m) == determinant(l)) return m;
      break;
    }
  }
  return l.gram();
}

}  // namespace detail

/// True iff some rescaling of `b` is isometric to `a`: after scaling b by
/// min(a)/min(b), search b for vectors whose Gram matrix equals a short
/// basis Gram of a (at most 10⁶ search nodes).
inline bool lattices_similar(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) throw InputError("lattices_similar needs equal ranks");
  const std::size_t n = static_cast<std::size_t>(a.rank());
  const Lattice bs = b.scaled(minimum(a) / minimum(b));
  if (determinant(a) != determinant(bs)) return false;
  const RatMatrix target = detail::short_basis_gram(a);

  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, target(i, i));
  const auto sv = short_vectors(bs, bound);
  const auto k = sv.vectors.size();
  // Dot products in integers: everything scaled by the common denominator.
  const BigInt scale = boost::multiprecision::lcm(lcm_of_denominators(bs.gram()), lcm_of_denominators(target));
  IntMatrix gi(n, n), ti(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gi(i, j) = to_ll(boost::multiprecision::numerator(bs.gram()(i, j) * Rational(scale)));
      ti(i, j) = to_ll(boost::multiprecision::numerator(target(i, j) * Rational(scale)));
    }
  std::vector<IntVector> images(k, IntVector(n, 0));  // G·v
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) images[c][i] += gi(i, j) * sv.vectors[c][j];
  std::vector<IntVector> dots(k, IntVector(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = a; c < k; ++c) {
      long long d = 0;
      for (std::size_t i = 0; i < n; ++i) d += images[a][i] * sv.vectors[c][i];
      dots[a][c] = dots[c][a] = d;
    }

  const std::size_t cap = enumeration_cap(1000000);
  std::size_t visited = 0;
  std::vector<std::size_t> pick(n);
  std::function<bool(std::size_t)> extend = [&](std::size_t level) -> bool {
    if (level == n) return true;
    for (std::size_t c = 0; c < k; ++c) {
      if (++visited > cap) throw EnumerationLimit("similarity search exceeded " + std::to_string(cap) + " nodes");
      if (dots[c][c] != ti(level, level)) continue;
      // -1 is always an isometry, so the first vector can be taken "positive"
      if (level == 0 && *std::find_if(sv.vectors[c].begin(), sv.vectors[c].end(), [](long long t) { return t != 0; }) < 0)
        continue;
      bool ok = true;
      for (std::size_t p = 0; p < level && ok; ++p) ok = dots[c][pick[p]] == ti(level, p);
      if (!ok) continue;
      pick[level] = c;
      if (extend(level + 1)) return true;
    }
    return false;
  };
  // equal determinants make any vectors with the target Gram a basis
  return extend(0);
}

}  // namespace adekit
