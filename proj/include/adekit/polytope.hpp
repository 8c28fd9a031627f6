#pragma once

// Vertex-set models of root polytopes, demihypercubes, the 24-cell, the
// 600-cell and the 120-cell, with their minimal-distance edge graphs.

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "adekit/diagram.hpp"
#include "adekit/error.hpp"
#include "adekit/exact.hpp"
#include "adekit/lattice.hpp"
#include "adekit/mckay.hpp"
#include "adekit/reflection.hpp"

namespace adekit {

using RealVector = std::vector<double>;

struct Polytope {
  std::string name;
  int dim = 0;
  std::vector<RealVector> vertices;
  std::optional<std::vector<RatVector>> exact;  // set when the coordinates are rational

  std::size_t size() const { return vertices.size(); }
};

namespace detail {

inline Polytope polytope_from_exact(std::string name, std::vector<RatVector> points) {
  Polytope p;
  p.name = std::move(name);
  p.dim = points.empty() ? 0 : static_cast<int>(points.front().size());
  for (const auto& v : points) {
    RealVector r;
    for (const auto& x : v) r.push_back(to_double(x));
    p.vertices.push_back(std::move(r));
  }
  p.exact = std::move(points);
  return p;
}

inline std::vector<RatVector> lattice_roots(const Lattice& l) {
  std::vector<RatVector> out;
  for (const auto& c : short_vectors(l, 2).vectors) out.push_back(l.coordinates(c));
  std::sort(out.begin(), out.end());
  return out;
}

/// Embeds coefficient vectors through a Cholesky factor of the Gram matrix.
inline std::vector<RealVector> embed(const Eigen::MatrixXd& gram, const std::vector<RealVector>& coeffs) {
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw VerificationError("Gram matrix has no Cholesky factor");
  const Eigen::MatrixXd upper = llt.matrixU();
  std::vector<RealVector> out;
  for (const auto& c : coeffs) {
    const Eigen::VectorXd x = upper * Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
    out.emplace_back(x.data(), x.data() + x.size());
  }
  return out;
}

inline double distance(const RealVector& a, const RealVector& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(s);
}

}  // namespace detail

/// All roots of a connected finite type. E8 comes from its coordinate model,
/// E7 and E6 from orthogonal slices of it, A and D from their coordinate
/// models; the rest are embedded through the simple-root Gram matrix.
inline Polytope root_polytope(const DiagramType& type) {
  const std::string name = type.name() + " root polytope";
  if (type.family == Family::E) {
    const Lattice e8 = coordinate_model(DiagramType{Family::E, 8});
    if (type.parameter == 8) return detail::polytope_from_exact(name, detail::lattice_roots(e8));
    const auto kind = type.parameter == 7 ? SliceKind::E7 : SliceKind::E6;
    return detail::polytope_from_exact(name, detail::lattice_roots(orthogonal_slice(e8, kind)));
  }
  if (type.family == Family::A || type.family == Family::D)
    return detail::polytope_from_exact(name, detail::lattice_roots(coordinate_model(type)));

  Polytope p;
  p.name = name;
  p.dim = type.rank();
  Eigen::MatrixXd gram(p.dim, p.dim);
  std::vector<RealVector> coeffs;
  if (type.crystallographic() && type.family != Family::BC) {
    const RootSystem rs = generate_roots(dynkin_diagram(type));
    for (int i = 0; i < p.dim; ++i)
      for (int j = 0; j < p.dim; ++j)
        gram(i, j) = to_double(rs.simple_root_gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    for (const auto& r : rs.roots) coeffs.emplace_back(r.begin(), r.end());
  } else {
    const RealRootSystem rs = generate_roots(coxeter_diagram(type));
    for (int i = 0; i < p.dim; ++i)
      for (int j = 0; j < p.dim; ++j)
        gram(i, j) = rs.simple_root_gram(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    coeffs = rs.roots;
  }
  p.vertices = detail::embed(gram, coeffs);
  return p;
}

/// Vertices of {±1}ⁿ with an even number of −1 entries.
inline Polytope demihypercube(int n) {
  if (n < 2 || n > 20) throw InputError("demihypercube dimension must be in 2..20");
  std::vector<RatVector> points;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) % 2 != 0) continue;
    RatVector v(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = (mask >> k) & 1UL ? -1 : 1;
    points.push_back(std::move(v));
  }
  return detail::polytope_from_exact("demihypercube(" + std::to_string(n) + ")", std::move(points));
}

/// Hypercube (±1,±1,±1,±1) together with orthoplex ±2eᵢ; radius 2.
inline Polytope twenty_four_cell() {
  std::vector<RatVector> points;
  for (unsigned mask = 0; mask < 16; ++mask) {
    RatVector v(4);
    for (int k = 0; k < 4; ++k) v[static_cast<std::size_t>(k)] = (mask >> k) & 1U ? -1 : 1;
    points.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < 4; ++k)
    for (int s : {2, -2}) {
      RatVector v(4, 0);
      v[k] = s;
      points.push_back(std::move(v));
    }
  return detail::polytope_from_exact("24-cell", std::move(points));
}

/// The 120 elements of the binary icosahedral group.
inline Polytope six_hundred_cell() {
  Polytope p;
  p.name = "600-cell";
  p.dim = 4;
  for (const auto& q : binary_group({GroupKind::BinaryIcosahedral, 0}).elements) p.vertices.push_back({q.a, q.b, q.c, q.d});
  return p;
}

struct EdgeGraph {
  std::vector<std::vector<int>> neighbours;
  double edge_length = 0;

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& n : neighbours) s += n.size();
    return s / 2;
  }
  /// Common degree, or -1 when the graph is not regular.
  int degree() const {
    if (neighbours.empty()) return 0;
    for (const auto& n : neighbours)
      if (n.size() != neighbours.front().size()) return -1;
    return static_cast<int>(neighbours.front().size());
  }
};

/// Pairs at the minimal inter-vertex distance (tolerance 1e-9).
inline EdgeGraph edge_graph(const Polytope& p) {
  EdgeGraph g;
  const std::size_t n = p.size();
  g.neighbours.assign(n, {});
  if (n < 2) return g;
  double best = INFINITY;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) best = std::min(best, detail::distance(p.vertices[i], p.vertices[j]));
  if (best < 1e-9) throw VerificationError(p.name + " has coincident vertices");
  g.edge_length = best;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(detail::distance(p.vertices[i], p.vertices[j]) - best) < 1e-9) {
        g.neighbours[i].push_back(static_cast<int>(j));
        g.neighbours[j].push_back(static_cast<int>(i));
      }
  return g;
}

/// Squared radii all equal: exactly for rational vertices, within 1e-9 otherwise.
inline bool equal_radius(const Polytope& p) {
  if (p.exact) {
    const auto r0 = dot(p.exact->front(), p.exact->front());
    return std::all_of(p.exact->begin(), p.exact->end(), [&](const RatVector& v) { return dot(v, v) == r0; });
  }
  const RealVector origin(static_cast<std::size_t>(p.dim), 0.0);
  const double r0 = detail::distance(p.vertices.front(), origin);
  return std::all_of(p.vertices.begin(), p.vertices.end(),
                     [&](const RealVector& v) { return std::abs(detail::distance(v, origin) - r0) < 1e-9; });
}

using Cell = std::array<int, 4>;

/// 4-cliques of the 600-cell's edge graph, each checked to be a regular
/// tetrahedron (tolerance 1e-8).
inline std::vector<Cell> cells_600(const Polytope& p) {
  const EdgeGraph g = edge_graph(p);
  if (p.dim != 4 || p.size() != 120 || g.degree() != 12 || !equal_radius(p))
    throw InputError("cells_600 expects the 600-cell");
  const std::size_t n = p.size();
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (int j : g.neighbours[i]) adjacent[i][static_cast<std::size_t>(j)] = 1;
  std::vector<Cell> cells;
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b : g.neighbours[static_cast<std::size_t>(a)]) {
      if (b <= a) continue;
      for (int c : g.neighbours[static_cast<std::size_t>(b)]) {
        if (c <= b || !adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]) continue;
        for (int d : g.neighbours[static_cast<std::size_t>(c)]) {
          if (d <= c || !adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)] ||
              !adjacent[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)])
            continue;
          cells.push_back({a, b, c, d});
        }
      }
    }
  for (const auto& cell : cells)
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = x + 1; y < 4; ++y) {
        const double len = detail::distance(p.vertices[static_cast<std::size_t>(cell[x])],
                                            p.vertices[static_cast<std::size_t>(cell[y])]);
        if (std::abs(len - g.edge_length) > 1e-8) throw VerificationError("600-cell cell is not a regular tetrahedron");
      }
  return cells;
}

/// Cell centroids of the 600-cell scaled to unit radius.
inline Polytope one_twenty_cell() {
  const Polytope cell600 = six_hundred_cell();
  Polytope p;
  p.name = "120-cell";
  p.dim = 4;
  for (const auto& cell : cells_600(cell600)) {
    RealVector c(4, 0.0);
    for (int v : cell)
      for (std::size_t k = 0; k < 4; ++k) c[k] += cell600.vertices[static_cast<std::size_t>(v)][k];
    const double r = detail::distance(c, RealVector(4, 0.0));
    for (auto& x : c) x /= r;
    p.vertices.push_back(std::move(c));
  }
  return p;
}

/// `E8`, `F4`, ... (root polytopes), `demihypercube(n)`, `24-cell`,
/// `600-cell`, `120-cell`.
inline Polytope named_polytope(const std::string& text) {
  if (text == "24-cell") return twenty_four_cell();
  if (text == "600-cell") return six_hundred_cell();
  if (text == "120-cell") return one_twenty_cell();
  const std::string prefix = "demihypercube(";
  if (text.rfind(prefix, 0) == 0) {
    if (text.back() != ')') throw ParseError("expected ')'", text.size());
    const std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ParseError("expected an integer dimension", prefix.size());
    return demihypercube(std::stoi(digits));
  }
  const Diagram d = parse_diagram(text);
  const auto types = std::visit([](const auto& x) { return classify(x); }, d);
  if (!types || types->size() != 1) throw InputError("root polytopes need a connected finite type");
  return root_polytope(types->front());
}

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

/// One vertex per row, comma separated.
inline std::string vertices_csv(const Polytope& p) {
  std::string out;
  for (const auto& v : p.vertices) {
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + format_number(v[k]);
    out += '\n';
  }
  return out;
}

}  // namespace adekit
