#pragma once

// Bilinear forms of Coxeter diagrams, the positive-definiteness finiteness
// test, Cartan matrices, root systems by reflection closure, highest roots,
// Weyl group orders and the Lie algebra dimension check.
//
// Conventions: simple roots v₁…vₙ, Gram Gᵢⱼ = vᵢ·vⱼ with short roots of
// norm 2, Cartan Cᵢⱼ = 2(vᵢ·vⱼ)/(vᵢ·vᵢ), and sᵢ(vⱼ) = vⱼ − Cᵢⱼ vᵢ. Roots are
// coefficient vectors over the simple roots.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "adekit/diagram.hpp"
#include "adekit/error.hpp"
#include "adekit/exact.hpp"
#include "adekit/quadratic_field.hpp"

namespace adekit {

using RealMatrix = Matrix<double>;
using RealVector = std::vector<double>;

/// Bᵢⱼ = −cos(π/mᵢⱼ), Bᵢᵢ = 1.
inline RealMatrix cosine_gram(const CoxeterDiagram& c) {
  const auto n = static_cast<std::size_t>(c.size());
  RealMatrix b(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) b(i, i) = 1.0;
  for (const auto& [p, m] : c.edges()) {
    const double v = -std::cos(std::numbers::pi / m);
    b(static_cast<std::size_t>(p.first), static_cast<std::size_t>(p.second)) = v;
    b(static_cast<std::size_t>(p.second), static_cast<std::size_t>(p.first)) = v;
  }
  return b;
}

/// The cosine form over ℚ when every label is 2 or 3.
inline std::optional<RatMatrix> exact_cosine_gram(const CoxeterDiagram& c) {
  const auto n = static_cast<std::size_t>(c.size());
  RatMatrix b = RatMatrix::identity(n);
  for (const auto& [p, m] : c.edges()) {
    if (m != 3) return std::nullopt;
    b(static_cast<std::size_t>(p.first), static_cast<std::size_t>(p.second)) = Rational(-1, 2);
    b(static_cast<std::size_t>(p.second), static_cast<std::size_t>(p.first)) = Rational(-1, 2);
  }
  return b;
}

namespace detail {

inline bool positive_definite_exact(const CoxeterDiagram& c) {
  const auto n = static_cast<std::size_t>(c.size());
  Matrix<Sqrt23Field> m(n, n, Sqrt23Field{});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? Sqrt23Field::rational(1) : negative_cosine(c.label(static_cast<int>(i), static_cast<int>(j)));
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).sign() <= 0) return false;
    const Sqrt23Field inv = m(k, k).inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Sqrt23Field f = m(r, k) * inv;
      for (std::size_t j = k; j < n; ++j) m(r, j) = m(r, j) - f * m(k, j);
    }
  }
  return true;
}

enum class Verdict { Positive, NotPositive, Indeterminate };

// Leading-pivot test in 50-digit floating point for one node ordering.
inline Verdict positive_definite_float(const CoxeterDiagram& c, const std::vector<int>& order) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  const auto n = order.size();
  const Float pi = boost::math::constants::pi<Float>();
  Matrix<Float> m(n, n, Float(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int label = c.label(order[i], order[j]);
      m(i, j) = i == j ? Float(1) : label == 2 ? Float(0) : Float(-cos(pi / label));
    }
  const Float eps("1e-30");
  for (std::size_t k = 0; k < n; ++k) {
    if (abs(m(k, k)) < eps) return Verdict::Indeterminate;
    if (m(k, k) < 0) return Verdict::NotPositive;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Float f = m(r, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
    }
  }
  return Verdict::Positive;
}

}  // namespace detail

/// True iff the cosine form is positive definite, i.e. the Coxeter group is
/// finite. Exact for labels in {2,3,4,6}; otherwise every pivot sign must be
/// separated from zero by 1e-30 in 50-digit arithmetic for some node
/// ordering, else NumericIndeterminacy is thrown.
inline bool is_finite(const CoxeterDiagram& c) {
  if (is_crystallographic(c)) return detail::positive_definite_exact(c);
  std::vector<int> order(static_cast<std::size_t>(c.size()));
  std::iota(order.begin(), order.end(), 0);
  for (int attempt = 0; attempt < 720; ++attempt) {
    switch (detail::positive_definite_float(c, order)) {
      case detail::Verdict::Positive: return true;
      case detail::Verdict::NotPositive: return false;
      case detail::Verdict::Indeterminate: break;
    }
    if (!std::next_permutation(order.begin(), order.end())) break;
  }
  throw NumericIndeterminacy("cannot certify the sign of the cosine form of " + render(c));
}

inline bool is_finite(const DynkinDiagram& d) { return is_finite(coxeter_of_dynkin(d)); }

/// Squared lengths of the simple roots with the shortest root of each
/// component at 2.
inline std::vector<Rational> simple_root_norms(const DynkinDiagram& d) {
  const auto n = static_cast<std::size_t>(d.size());
  std::vector<Rational> norm(n, 0);
  for (const auto& comp : connected_components(d)) {
    const int start = comp.nodes.front();
    norm[static_cast<std::size_t>(start)] = 1;
    std::vector<int> queue{start};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int i = queue[q];
      for (int j : comp.nodes) {
        const int mult = d.multiplicity(i, j);
        if (mult == 0) continue;
        Rational want = norm[static_cast<std::size_t>(i)];
        if (mult > 1) want = d.long_end(i, j) == i ? want / mult : want * mult;
        if (norm[static_cast<std::size_t>(j)] == 0) {
          norm[static_cast<std::size_t>(j)] = want;
          queue.push_back(j);
        } else if (norm[static_cast<std::size_t>(j)] != want) {
          throw InputError("inconsistent root lengths around a cycle of " + render(d));
        }
      }
    }
    Rational shortest = norm[static_cast<std::size_t>(start)];
    for (int i : comp.nodes) shortest = std::min(shortest, norm[static_cast<std::size_t>(i)]);
    for (int i : comp.nodes) norm[static_cast<std::size_t>(i)] *= Rational(2) / shortest;
  }
  return norm;
}

/// Gᵢⱼ = vᵢ·vⱼ: norms on the diagonal, −(longer norm)/2 on each bond.
inline RatMatrix simple_root_gram(const DynkinDiagram& d) {
  const auto norm = simple_root_norms(d);
  const auto n = static_cast<std::size_t>(d.size());
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = norm[i];
  for (const auto& [p, b] : d.bonds()) {
    const auto i = static_cast<std::size_t>(p.first), j = static_cast<std::size_t>(p.second);
    const Rational v = -std::max(norm[i], norm[j]) / 2;
    g(i, j) = v;
    g(j, i) = v;
  }
  return g;
}

inline IntMatrix cartan_matrix(const DynkinDiagram& d) {
  const RatMatrix g = simple_root_gram(d);
  const auto n = g.rows();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = 2 * g(i, j) / g(i, i);
      if (boost::multiprecision::denominator(v) != 1) throw VerificationError("non-integral Cartan entry");
      c(i, j) = to_ll(boost::multiprecision::numerator(v));
    }
  return c;
}

/// Matrices of the simple reflections acting on coefficient vectors
/// (column j of sᵢ is eⱼ − Cᵢⱼ eᵢ).
inline std::vector<IntMatrix> reflection_matrices(const DynkinDiagram& d) {
  const IntMatrix c = cartan_matrix(d);
  const auto n = c.rows();
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= c(i, j);
    out.push_back(std::move(s));
  }
  return out;
}

/// Same for an arbitrary Coxeter diagram, with unit-length simple roots
/// (Cᵢⱼ = 2Bᵢⱼ).
inline std::vector<RealMatrix> reflection_matrices(const CoxeterDiagram& c) {
  const RealMatrix b = cosine_gram(c);
  const auto n = b.rows();
  std::vector<RealMatrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    RealMatrix s = RealMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= 2 * b(i, j);
    out.push_back(std::move(s));
  }
  return out;
}

/// Roots as coefficient vectors over the simple roots. `Coefficient` is
/// long long for crystallographic systems (exact) and double otherwise.
template <typename Coefficient, typename GramScalar>
struct BasicRootSystem {
  int rank = 0;
  Matrix<GramScalar> simple_root_gram;
  std::vector<std::vector<Coefficient>> roots;     // sorted lexicographically
  std::vector<std::vector<Coefficient>> positive;  // sorted lexicographically

  std::size_t size() const { return roots.size(); }
};

using RootSystem = BasicRootSystem<long long, Rational>;
using RealRootSystem = BasicRootSystem<double, double>;

inline constexpr std::size_t kClosureRoundCap = 10000;

inline RootSystem generate_roots(const DynkinDiagram& d) {
  if (!is_finite(d)) throw InputError(render(d) + " is not of finite type");
  const IntMatrix c = cartan_matrix(d);
  const auto n = static_cast<std::size_t>(d.size());
  std::set<IntVector> seen;
  std::vector<IntVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  for (std::size_t round = 0; !frontier.empty(); ++round) {
    if (round >= kClosureRoundCap) throw EnumerationLimit("root closure did not terminate");
    std::vector<IntVector> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        long long pairing = 0;  // 2(β·vᵢ)/(vᵢ·vᵢ)
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * c(i, j);
        if (pairing == 0) continue;
        IntVector image = beta;
        image[i] -= pairing;
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  RootSystem rs;
  rs.rank = d.size();
  rs.simple_root_gram = simple_root_gram(d);
  rs.roots.assign(seen.begin(), seen.end());
  for (const auto& r : rs.roots)
    if (std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; })) rs.positive.push_back(r);
  if (rs.roots.size() != 2 * rs.positive.size())
    throw VerificationError("root system is not the union of positive and negative roots");
  return rs;
}

namespace detail {

inline std::vector<long long> rounded_key(const RealVector& v, double scale = 1e6) {
  std::vector<long long> k(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) k[i] = std::llround(v[i] * scale);
  return k;
}

}  // namespace detail

/// Floating-point closure for arbitrary finite Coxeter diagrams; all simple
/// roots have norm 2 (Gram = 2·cosine form). Deduplication key: coordinates
/// rounded to 1e-6.
inline RealRootSystem generate_roots(const CoxeterDiagram& d) {
  if (!is_finite(d)) throw InputError(render(d) + " is not of finite type");
  const RealMatrix b = cosine_gram(d);
  const auto n = static_cast<std::size_t>(d.size());
  std::map<std::vector<long long>, RealVector> seen;
  std::vector<RealVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RealVector e(n, 0.0);
    e[i] = 1.0;
    seen.emplace(detail::rounded_key(e), e);
    frontier.push_back(e);
  }
  for (std::size_t round = 0; !frontier.empty(); ++round) {
    if (round >= kClosureRoundCap) throw EnumerationLimit("root closure did not terminate");
    std::vector<RealVector> next;
    for (const auto& beta : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        double pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += 2 * beta[j] * b(i, j);
        if (std::abs(pairing) < 1e-12) continue;
        RealVector image = beta;
        image[i] -= pairing;
        if (seen.emplace(detail::rounded_key(image), image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  RealRootSystem rs;
  rs.rank = d.size();
  rs.simple_root_gram = b.map<double>([](double x) { return 2 * x; });
  for (const auto& [key, v] : seen) rs.roots.push_back(v);
  for (const auto& r : rs.roots)
    if (std::all_of(r.begin(), r.end(), [](double x) { return x > -1e-9; })) rs.positive.push_back(r);
  if (rs.roots.size() != 2 * rs.positive.size())
    throw VerificationError("root system is not the union of positive and negative roots");
  return rs;
}

inline Rational root_norm(const RootSystem& rs, const IntVector& root) {
  return bilinear(rs.simple_root_gram, root, root);
}

/// The positive root dominating every other root coefficientwise.
inline IntVector highest_root(const RootSystem& rs) {
  if (rs.positive.empty()) throw InputError("empty root system");
  auto height = [](const IntVector& r) { return std::accumulate(r.begin(), r.end(), 0LL); };
  const IntVector best = *std::max_element(rs.positive.begin(), rs.positive.end(),
                                           [&](const auto& a, const auto& b) { return height(a) < height(b); });
  for (const auto& r : rs.positive)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] > best[i]) throw InputError("root system is not irreducible: no unique highest root");
  return best;
}

// ---------------------------------------------------------------------------
// Weyl group orders

namespace detail {

inline BigInt weyl_order_formula_connected(const DynkinDiagram& d) {
  const RootSystem rs = generate_roots(d);
  const IntVector marks = highest_root(rs);
  const Rational det = determinant(to_rational(cartan_matrix(d)));
  BigInt order = factorial(static_cast<unsigned>(d.size()));
  for (long long m : marks) order *= m;
  const Rational total = det * Rational(order);
  if (boost::multiprecision::denominator(total) != 1) throw VerificationError("non-integral Weyl order");
  return boost::multiprecision::numerator(total);
}

}  // namespace detail

/// |W| = det(C)·n!·∏ marks per component, multiplied over components.
inline BigInt weyl_order(const DynkinDiagram& d) {
  BigInt order = 1;
  for (const auto& comp : connected_components(d)) order *= detail::weyl_order_formula_connected(comp.diagram);
  return order;
}

/// Size of the matrix group generated by the simple reflections, by
/// breadth-first closure with exact integer matrices.
inline BigInt weyl_order_enumerated(const DynkinDiagram& d) {
  const auto gens = reflection_matrices(d);
  const auto n = static_cast<std::size_t>(d.size());
  const std::size_t cap = enumeration_cap(1000000);
  auto flat = [&](const IntMatrix& m) {
    std::vector<long long> k;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) k.push_back(m(i, j));
    return k;
  };
  std::set<std::vector<long long>> seen{flat(IntMatrix::identity(n))};
  std::vector<IntMatrix> frontier{IntMatrix::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        IntMatrix h = s * g;
        if (seen.insert(flat(h)).second) {
          if (seen.size() > cap) throw EnumerationLimit("Weyl group enumeration exceeded " + std::to_string(cap) + " elements");
          next.push_back(std::move(h));
        }
      }
    frontier = std::move(next);
  }
  return BigInt(seen.size());
}

/// Floating-point closure for any finite Coxeter diagram (keys rounded to 1e-6).
inline BigInt weyl_order_enumerated(const CoxeterDiagram& d) {
  if (!is_finite(d)) throw InputError(render(d) + " is not of finite type");
  BigInt order = 1;
  const std::size_t cap = enumeration_cap(1000000);
  for (const auto& comp : connected_components(d)) {
    const auto gens = reflection_matrices(comp.diagram);
    const auto n = static_cast<std::size_t>(comp.diagram.size());
    auto key = [&](const RealMatrix& m) {
      RealVector flat;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(m(i, j));
      return detail::rounded_key(flat);
    };
    std::set<std::vector<long long>> seen{key(RealMatrix::identity(n))};
    std::vector<RealMatrix> frontier{RealMatrix::identity(n)};
    while (!frontier.empty()) {
      std::vector<RealMatrix> next;
      for (const auto& g : frontier)
        for (const auto& s : gens) {
          RealMatrix h = s * g;
          if (seen.insert(key(h)).second) {
            if (seen.size() > cap) throw EnumerationLimit("Weyl group enumeration exceeded " + std::to_string(cap) + " elements");
            next.push_back(std::move(h));
          }
        }
      frontier = std::move(next);
    }
    order *= seen.size();
  }
  return order;
}

/// Crystallographic components use the marks formula (through either
/// Dynkin orientation, which have the same Weyl group); H and I components
/// are enumerated.
inline BigInt weyl_order(const CoxeterDiagram& d) {
  if (!is_finite(d)) throw InputError(render(d) + " is not of finite type");
  BigInt order = 1;
  for (const auto& comp : connected_components(d)) {
    if (is_crystallographic(comp.diagram))
      order *= weyl_order(dynkin_orientations(comp.diagram).front());
    else
      order *= weyl_order_enumerated(comp.diagram);
  }
  return order;
}

// ---------------------------------------------------------------------------
// Lie algebras

struct LieAlgebraInfo {
  std::string name;
  long long dimension = 0;
  std::vector<std::string> isomorphic_to;  // classical coincidences
};

/// Compact simple Lie algebra of a connected Dynkin diagram; the dimension
/// is |roots| + rank.
inline LieAlgebraInfo lie_algebra_info(const DynkinDiagram& d) {
  if (!is_connected(d)) throw InputError("Lie algebra info needs a connected diagram");
  const auto type = classify_connected(d);
  if (!type) throw InputError(render(d) + " is not a finite Dynkin diagram");
  const int n = type->rank();
  LieAlgebraInfo info;
  switch (type->family) {
    case Family::A: info.name = "su(" + std::to_string(n + 1) + ")"; break;
    case Family::B: info.name = "so(" + std::to_string(2 * n + 1) + ")"; break;
    case Family::C: info.name = "sp(" + std::to_string(n) + ")"; break;
    case Family::D: info.name = "so(" + std::to_string(2 * n) + ")"; break;
    case Family::E: info.name = "e" + std::to_string(n); break;
    case Family::F: info.name = "f4"; break;
    case Family::G: info.name = "g2"; break;
    default: throw InputError("not crystallographic");
  }
  if (*type == DiagramType{Family::A, 1}) info.isomorphic_to = {"so(3)", "sp(1)"};
  if (*type == DiagramType{Family::B, 2}) info.isomorphic_to = {"sp(2)"};
  if (*type == DiagramType{Family::A, 3}) info.isomorphic_to = {"so(6)"};
  info.dimension = static_cast<long long>(generate_roots(d).size()) + n;
  return info;
}

}  // namespace adekit
