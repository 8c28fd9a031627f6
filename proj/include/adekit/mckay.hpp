#pragma once

// Finite subgroups of the unit quaternions, their character tables and McKay
// graphs.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adekit/diagram.hpp"
#include "adekit/error.hpp"
#include "adekit/quaternion.hpp"

namespace adekit {

enum class GroupKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  int parameter = 1;

  std::string name() const {
    switch (kind) {
      case GroupKind::Cyclic: return "Cyclic(" + std::to_string(parameter) + ")";
      case GroupKind::BinaryDihedral: return "BinaryDihedral(" + std::to_string(parameter) + ")";
      case GroupKind::BinaryTetrahedral: return "2T";
      case GroupKind::BinaryOctahedral: return "2O";
      case GroupKind::BinaryIcosahedral: return "2I";
    }
    return "?";
  }

  std::size_t expected_order() const {
    switch (kind) {
      case GroupKind::Cyclic: return static_cast<std::size_t>(parameter);
      case GroupKind::BinaryDihedral: return 4 * static_cast<std::size_t>(parameter);
      case GroupKind::BinaryTetrahedral: return 24;
      case GroupKind::BinaryOctahedral: return 48;
      case GroupKind::BinaryIcosahedral: return 120;
    }
    return 0;
  }
};

/// "2T", "2O", "2I", "Cyclic(m)", "BinaryDihedral(n)"
inline GroupSpec parse_group(const std::string& text) {
  if (text == "2T") return {GroupKind::BinaryTetrahedral, 0};
  if (text == "2O") return {GroupKind::BinaryOctahedral, 0};
  if (text == "2I") return {GroupKind::BinaryIcosahedral, 0};
  for (const auto& [prefix, kind] : {std::pair<std::string, GroupKind>{"Cyclic(", GroupKind::Cyclic},
                                     std::pair<std::string, GroupKind>{"BinaryDihedral(", GroupKind::BinaryDihedral}}) {
    if (text.rfind(prefix, 0) != 0) continue;
    if (text.back() != ')') throw ParseError("expected ')'", text.size());
    const std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (digits.empty() || digits.size() > 4 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ParseError("expected an integer parameter", prefix.size());
    return {kind, std::stoi(digits)};
  }
  throw InputError("unknown group '" + text + "' (expected 2T, 2O, 2I, Cyclic(m) or BinaryDihedral(n))");
}

struct UnitQuaternionGroup {
  GroupSpec spec;
  std::vector<Quaternion> elements;        // elements[0] is 1
  std::vector<std::vector<int>> mult;      // mult[x][y] = index of x·y
  std::vector<int> inverse;

  std::size_t order() const { return elements.size(); }
};

namespace detail {

inline std::array<long long, 4> quaternion_key(const Quaternion& q) {
  constexpr double scale = 1e8;
  return {std::llround(q.a * scale), std::llround(q.b * scale), std::llround(q.c * scale), std::llround(q.d * scale)};
}

}  // namespace detail

inline UnitQuaternionGroup binary_group(const GroupSpec& spec) {
  const double pi = std::numbers::pi;
  std::vector<Quaternion> gens;
  switch (spec.kind) {
    case GroupKind::Cyclic:
      if (spec.parameter < 1) throw InputError("cyclic group order must be at least 1");
      gens = {{std::cos(2 * pi / spec.parameter), std::sin(2 * pi / spec.parameter), 0, 0}};
      break;
    case GroupKind::BinaryDihedral:
      if (spec.parameter < 2) throw InputError("binary dihedral parameter must be at least 2");
      gens = {{std::cos(pi / spec.parameter), std::sin(pi / spec.parameter), 0, 0}, {0, 0, 1, 0}};
      break;
    case GroupKind::BinaryTetrahedral: gens = {{0, 1, 0, 0}, {0.5, 0.5, 0.5, 0.5}}; break;
    case GroupKind::BinaryOctahedral: gens = {{std::sqrt(0.5), std::sqrt(0.5), 0, 0}, {0.5, 0.5, 0.5, 0.5}}; break;
    case GroupKind::BinaryIcosahedral: {
      const double phi = std::numbers::phi;
      gens = {{0.5, 0.5, 0.5, 0.5}, {phi / 2, 0.5, 1 / (2 * phi), 0}};
      break;
    }
  }

  UnitQuaternionGroup g;
  g.spec = spec;
  std::map<std::array<long long, 4>, int> index;
  auto add = [&](const Quaternion& q) {
    const auto [it, fresh] = index.emplace(detail::quaternion_key(q), static_cast<int>(g.elements.size()));
    if (fresh) g.elements.push_back(q);
    return it->second;
  };
  add({1, 0, 0, 0});
  constexpr std::size_t kCap = 10000;
  for (std::size_t k = 0; k < g.elements.size(); ++k) {
    for (const auto& s : gens) {
      add(g.elements[k] * s);
      if (g.elements.size() > kCap) throw InputError("group closure exceeded 10000 elements");
    }
  }
  if (g.order() != spec.expected_order())
    throw VerificationError(spec.name() + " closed to " + std::to_string(g.order()) + " elements, expected " +
                            std::to_string(spec.expected_order()));

  const std::size_t n = g.order();
  g.mult.assign(n, std::vector<int>(n, -1));
  g.inverse.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (std::abs(quat_norm(g.elements[x]) - 1) > 1e-9) throw VerificationError("group element is not a unit");
    for (std::size_t y = 0; y < n; ++y) {
      const auto it = index.find(detail::quaternion_key(g.elements[x] * g.elements[y]));
      if (it == index.end()) throw VerificationError("group is not closed under multiplication");
      g.mult[x][y] = it->second;
      if (it->second == 0) g.inverse[x] = static_cast<int>(y);
    }
    if (g.inverse[x] < 0) throw VerificationError("group element without inverse");
  }
  return g;
}

struct ConjugacyClass {
  std::vector<int> members;  // element indices, ascending
  int representative = 0;
  int element_order = 1;
};

/// Classes ordered by element order, then size, then first discovery.
inline std::vector<ConjugacyClass> conjugacy_classes(const UnitQuaternionGroup& g) {
  const std::size_t n = g.order();
  std::vector<int> owner(n, -1);
  std::vector<ConjugacyClass> classes;
  for (std::size_t e = 0; e < n; ++e) {
    if (owner[e] >= 0) continue;
    ConjugacyClass c;
    c.representative = static_cast<int>(e);
    for (std::size_t x = 0; x < n; ++x) {
      const int y = g.mult[static_cast<std::size_t>(g.mult[x][e])][static_cast<std::size_t>(g.inverse[x])];
      if (owner[static_cast<std::size_t>(y)] < 0) {
        owner[static_cast<std::size_t>(y)] = static_cast<int>(classes.size());
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    int p = 1;
    for (int power = static_cast<int>(e); power != 0; power = g.mult[static_cast<std::size_t>(power)][e]) ++p;
    c.element_order = e == 0 ? 1 : p;
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    return a.members.size() < b.members.size();
  });
  return classes;
}

using Complex = std::complex<double>;

struct CharacterTable {
  std::size_t group_order = 0;
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<Complex>> table;  // table[i][j] = χᵢ(Cⱼ)
  std::vector<int> dims;

  std::size_t class_size(std::size_t j) const { return classes[j].members.size(); }
};

namespace detail {

inline bool character_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  auto rounded = [](double v) { return std::llround(v * 1e9); };
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (rounded(a[j].real()) != rounded(b[j].real())) return rounded(a[j].real()) < rounded(b[j].real());
    if (rounded(a[j].imag()) != rounded(b[j].imag())) return rounded(a[j].imag()) < rounded(b[j].imag());
  }
  return false;
}

/// Worst deviation from row and column orthogonality, relative to the
/// expected diagonal values.
inline double orthogonality_residual(const CharacterTable& t) {
  const std::size_t k = t.classes.size();
  const double order = static_cast<double>(t.group_order);
  double worst = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Complex row = 0, col = 0;
      for (std::size_t j = 0; j < k; ++j)
        row += static_cast<double>(t.class_size(j)) * t.table[a][j] * std::conj(t.table[b][j]);
      for (std::size_t i = 0; i < k; ++i) col += t.table[i][a] * std::conj(t.table[i][b]);
      worst = std::max(worst, std::abs(row / order - (a == b ? 1.0 : 0.0)));
      const double centraliser = order / static_cast<double>(t.class_size(a));
      worst = std::max(worst, std::abs(col / centraliser - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace detail

/// Irreducible characters by the Burnside class-algebra method: the central
/// characters are the common eigenvectors of the class multiplication
/// matrices, found by diagonalising one random real combination.
inline CharacterTable character_table(const UnitQuaternionGroup& g, unsigned seed = 1) {
  CharacterTable t;
  t.group_order = g.order();
  t.classes = conjugacy_classes(g);
  const std::size_t k = t.classes.size();
  std::vector<int> class_of(g.order());
  for (std::size_t j = 0; j < k; ++j)
    for (int m : t.classes[j].members) class_of[static_cast<std::size_t>(m)] = static_cast<int>(j);

  // coefficient[r](s, t): number of x ∈ C_r with x⁻¹·z ∈ C_s for a fixed z ∈ C_t
  std::vector<Eigen::MatrixXd> coefficient(k, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t tt = 0; tt < k; ++tt) {
      const auto z = static_cast<std::size_t>(t.classes[tt].representative);
      for (int x : t.classes[r].members) {
        const int y = g.mult[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(x)])][z];
        coefficient[r](class_of[static_cast<std::size_t>(y)], static_cast<Eigen::Index>(tt)) += 1;
      }
    }

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const double order = static_cast<double>(g.order());
  constexpr int kAttempts = 10;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t r = 0; r < k; ++r) combo += uniform(rng) * coefficient[r];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<Complex>());
    if (solver.info() != Eigen::Success) continue;
    const auto& values = solver.eigenvalues();
    double gap = INFINITY;
    for (Eigen::Index a = 0; a < values.size(); ++a)
      for (Eigen::Index b = a + 1; b < values.size(); ++b) gap = std::min(gap, std::abs(values[a] - values[b]));
    if (gap < 1e-6) continue;

    std::vector<std::vector<Complex>> rows;
    std::vector<int> dims;
    bool ok = true;
    for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(k) && ok; ++col) {
      Eigen::VectorXcd w = solver.eigenvectors().col(col);
      if (std::abs(w[0]) < 1e-12) {
        ok = false;
        break;
      }
      w /= w[0];  // ω(identity) = 1
      double weight = 0;
      for (std::size_t j = 0; j < k; ++j)
        weight += std::norm(w[static_cast<Eigen::Index>(j)]) / static_cast<double>(t.class_size(j));
      const double degree = std::sqrt(order / weight);
      const double rounded = std::round(degree);
      if (rounded < 1 || std::abs(degree - rounded) > 1e-6) ok = false;
      std::vector<Complex> row(k);
      for (std::size_t j = 0; j < k; ++j)
        row[j] = rounded * w[static_cast<Eigen::Index>(j)] / static_cast<double>(t.class_size(j));
      rows.push_back(std::move(row));
    }
    if (!ok) continue;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      const long long da = std::llround(a[0].real()), db = std::llround(b[0].real());
      if (da != db) return da < db;
      return detail::character_less(a, b);
    });
    for (auto& row : rows) {
      for (auto& v : row) {
        // scrub signed zeros and rounding dust so output is stable
        if (std::abs(v.real()) < 1e-12) v.real(0);
        if (std::abs(v.imag()) < 1e-12) v.imag(0);
      }
      dims.push_back(static_cast<int>(std::llround(row[0].real())));
    }
    t.table = std::move(rows);
    t.dims = std::move(dims);
    long long square_sum = 0;
    for (int d : t.dims) square_sum += static_cast<long long>(d) * d;
    if (square_sum != static_cast<long long>(g.order()))
      throw VerificationError("sum of squared character degrees differs from the group order");
    if (detail::orthogonality_residual(t) > 1e-6) throw VerificationError("character orthogonality residual too large");
    return t;
  }
  throw VerificationError("class algebra eigenvalues stayed degenerate after 10 attempts");
}

struct McKayGraph {
  Multigraph graph;
  std::vector<int> dims;
  int trivial_node = -1;
};

inline McKayGraph mckay_graph(const UnitQuaternionGroup& g, const CharacterTable& t) {
  const std::size_t k = t.classes.size();
  const double order = static_cast<double>(g.order());
  McKayGraph out{Multigraph(static_cast<int>(k)), t.dims, -1};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Complex sum = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const double chi_v = 2 * g.elements[static_cast<std::size_t>(t.classes[c].representative)].a;
        sum += static_cast<double>(t.class_size(c)) * chi_v * t.table[i][c] * std::conj(t.table[j][c]);
      }
      sum /= order;
      const double rounded = std::round(sum.real());
      if (std::abs(sum - Complex(rounded, 0)) > 1e-4) throw VerificationError("non-integral McKay multiplicity");
      out.graph.adjacency(i, j) = static_cast<int>(rounded);
    }
  if (!out.graph.adjacency.is_symmetric()) throw VerificationError("McKay graph is not symmetric");
  for (std::size_t i = 0; i < k; ++i) {
    const bool trivial = std::all_of(t.table[i].begin(), t.table[i].end(),
                                     [](const Complex& v) { return std::abs(v - Complex(1, 0)) < 1e-6; });
    if (trivial) out.trivial_node = static_cast<int>(i);
  }
  if (out.trivial_node < 0) throw VerificationError("no trivial character found");
  return out;
}

inline McKayGraph mckay_graph(const UnitQuaternionGroup& g) { return mckay_graph(g, character_table(g)); }

struct McKayReport {
  GroupSpec spec;
  std::size_t order = 0;
  CharacterTable table;
  McKayGraph mckay;
  AffineRecognition recognition;
};

/// Affine type of the McKay graph and the finite type left after deleting
/// the trivial node.
inline McKayReport mckay_correspondence(const GroupSpec& spec, unsigned seed = 1) {
  const UnitQuaternionGroup g = binary_group(spec);
  McKayReport r;
  r.spec = spec;
  r.order = g.order();
  r.table = character_table(g, seed);
  r.mckay = mckay_graph(g, r.table);
  const auto recognised = recognize_affine_simply_laced(r.mckay.graph, r.mckay.dims);
  if (!recognised) throw VerificationError("McKay graph of " + spec.name() + " is not an affine ADE diagram");
  std::vector<int> keep;
  for (int i = 0; i < r.mckay.graph.size(); ++i)
    if (i != r.mckay.trivial_node) keep.push_back(i);
  const Multigraph rest = induced(r.mckay.graph, keep);
  const auto finite = rest.is_simple() ? classify(coxeter_of_graph(rest)) : std::nullopt;
  if (!finite || finite->size() != 1 || finite->front() != recognised->finite)
    throw VerificationError("deleting the trivial node of " + spec.name() + " does not leave " +
                            recognised->finite.name());
  r.recognition = *recognised;
  r.recognition.extension_node = r.mckay.trivial_node;
  return r;
}

inline DiagramType ade_of_group(const GroupSpec& spec) { return mckay_correspondence(spec).recognition.finite; }

}  // namespace adekit
