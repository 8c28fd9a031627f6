#pragma once

// Coxeter and Dynkin diagrams: representation, the finite catalogue,
// classification by isomorphism against the catalogue, Dynkin orientations,
// the diagram DSL, and recognition of simply-laced affine diagrams.

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "adekit/error.hpp"
#include "adekit/exact.hpp"

namespace adekit {

enum class Family { A, B, C, BC, D, E, F, G, H, I };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::BC: return "BC";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::I: return "I";
  }
  return "?";
}

/// One connected finite type. For Family::I the parameter is the label m and
/// the rank is 2; otherwise the parameter is the rank.
struct DiagramType {
  Family family = Family::A;
  int parameter = 1;

  int rank() const { return family == Family::I ? 2 : parameter; }
  std::string name() const { return family_name(family) + std::to_string(parameter); }
  bool crystallographic() const { return family != Family::H && family != Family::I; }
  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }

  auto operator<=>(const DiagramType&) const = default;
};

/// Validates a (family, parameter) pair and resolves coincidences to the
/// canonical name. D2 splits into two components, hence the vector.
inline std::vector<DiagramType> canonical_types(Family f, int n) {
  auto bad = [&] {
    return InputError("no finite type " + family_name(f) + std::to_string(n));
  };
  switch (f) {
    case Family::A:
      if (n < 1) throw bad();
      return {{Family::A, n}};
    case Family::B:
    case Family::C:
    case Family::BC:
      if (n < 1) throw bad();
      if (n == 1) return {{Family::A, 1}};
      // B2 and C2 are the same Dynkin diagram turned around.
      if (n == 2 && f == Family::C) return {{Family::B, 2}};
      return {{f, n}};
    case Family::D:
      if (n < 2) throw bad();
      if (n == 2) return {{Family::A, 1}, {Family::A, 1}};
      if (n == 3) return {{Family::A, 3}};
      return {{Family::D, n}};
    case Family::E:
      if (n < 6 || n > 8) throw bad();
      return {{Family::E, n}};
    case Family::F:
      if (n != 4) throw bad();
      return {{Family::F, 4}};
    case Family::G:
      if (n != 2) throw bad();
      return {{Family::G, 2}};
    case Family::H:
      if (n != 3 && n != 4) throw bad();
      return {{Family::H, n}};
    case Family::I:
      if (n < 2) throw bad();
      if (n == 2) return {{Family::A, 1}, {Family::A, 1}};
      if (n == 3) return {{Family::A, 2}};
      if (n == 4) return {{Family::BC, 2}};
      if (n == 6) return {{Family::G, 2}};
      return {{Family::I, n}};
  }
  throw bad();
}

using NodePair = std::pair<int, int>;

inline NodePair ordered(int i, int j) { return i < j ? NodePair{i, j} : NodePair{j, i}; }

/// Coxeter diagram on nodes 0..n-1. An absent pair has label 2.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  explicit CoxeterDiagram(int nodes, const std::map<NodePair, int>& labels = {}) : nodes_(nodes) {
    if (nodes < 0) throw InputError("negative node count");
    for (const auto& [pair, m] : labels) {
      const auto [i, j] = pair;
      if (i == j) throw InputError("self-loop on node " + std::to_string(i + 1));
      if (i < 0 || j < 0 || i >= nodes || j >= nodes)
        throw InputError("edge references a node outside 1.." + std::to_string(nodes));
      if (m < 3) throw InputError("edge label " + std::to_string(m) + " < 3");
      if (!labels_.emplace(ordered(i, j), m).second)
        throw InputError("duplicate edge " + std::to_string(i + 1) + "-" + std::to_string(j + 1));
    }
  }

  int size() const noexcept { return nodes_; }
  const std::map<NodePair, int>& edges() const noexcept { return labels_; }

  int label(int i, int j) const {
    if (i == j) return 1;
    auto it = labels_.find(ordered(i, j));
    return it == labels_.end() ? 2 : it->second;
  }

  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    for (const auto& [p, m] : labels_) {
      if (p.first == i) out.push_back(p.second);
      if (p.second == i) out.push_back(p.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const CoxeterDiagram&) const = default;

 private:
  int nodes_ = 0;
  std::map<NodePair, int> labels_;
};

/// A bond of a Dynkin diagram. For multiplicity 2 or 3, `long_node` is the
/// end carrying the longer root (the arrow points away from it).
struct DynkinBond {
  int multiplicity = 1;
  int long_node = -1;
  bool operator==(const DynkinBond&) const = default;
};

class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  explicit DynkinDiagram(int nodes, const std::map<NodePair, DynkinBond>& bonds = {})
      : nodes_(nodes) {
    if (nodes < 0) throw InputError("negative node count");
    for (const auto& [pair, bond] : bonds) {
      const auto [i, j] = pair;
      if (i == j) throw InputError("self-loop on node " + std::to_string(i + 1));
      if (i < 0 || j < 0 || i >= nodes || j >= nodes)
        throw InputError("bond references a node outside 1.." + std::to_string(nodes));
      DynkinBond b = bond;
      if (b.multiplicity == 1) {
        if (b.long_node != -1) throw InputError("orientation on a single bond");
      } else if (b.multiplicity == 2 || b.multiplicity == 3) {
        if (b.long_node != i && b.long_node != j)
          throw InputError("multiple bond without an orientation");
      } else {
        throw InputError("bond multiplicity must be 1, 2 or 3");
      }
      if (!bonds_.emplace(ordered(i, j), b).second)
        throw InputError("duplicate bond " + std::to_string(i + 1) + "-" + std::to_string(j + 1));
    }
  }

  int size() const noexcept { return nodes_; }
  const std::map<NodePair, DynkinBond>& bonds() const noexcept { return bonds_; }

  int multiplicity(int i, int j) const {
    auto it = bonds_.find(ordered(i, j));
    return it == bonds_.end() ? 0 : it->second.multiplicity;
  }

  /// For a multiple bond, the node holding the longer root; -1 otherwise.
  int long_end(int i, int j) const {
    auto it = bonds_.find(ordered(i, j));
    return it == bonds_.end() ? -1 : it->second.long_node;
  }

  bool operator==(const DynkinDiagram&) const = default;

 private:
  int nodes_ = 0;
  std::map<NodePair, DynkinBond> bonds_;
};

using Diagram = std::variant<CoxeterDiagram, DynkinDiagram>;

// ---------------------------------------------------------------------------
// Conversions and simple predicates

inline CoxeterDiagram coxeter_of_dynkin(const DynkinDiagram& d) {
  std::map<NodePair, int> labels;
  for (const auto& [p, b] : d.bonds()) labels[p] = b.multiplicity == 1 ? 3 : b.multiplicity == 2 ? 4 : 6;
  return CoxeterDiagram(d.size(), labels);
}

inline CoxeterDiagram as_coxeter(const Diagram& d) {
  if (const auto* c = std::get_if<CoxeterDiagram>(&d)) return *c;
  return coxeter_of_dynkin(std::get<DynkinDiagram>(d));
}

inline bool is_crystallographic(const CoxeterDiagram& d) {
  return std::all_of(d.edges().begin(), d.edges().end(), [](const auto& e) {
    return e.second == 3 || e.second == 4 || e.second == 6;
  });
}

inline bool is_crystallographic(const DynkinDiagram&) { return true; }

inline bool is_simply_laced(const CoxeterDiagram& d) {
  return std::all_of(d.edges().begin(), d.edges().end(), [](const auto& e) { return e.second == 3; });
}

inline bool is_simply_laced(const DynkinDiagram& d) {
  return std::all_of(d.bonds().begin(), d.bonds().end(),
                     [](const auto& e) { return e.second.multiplicity == 1; });
}

// ---------------------------------------------------------------------------
// Subdiagrams

inline CoxeterDiagram induced(const CoxeterDiagram& d, const std::vector<int>& nodes) {
  std::vector<int> local(static_cast<std::size_t>(d.size()), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  std::map<NodePair, int> labels;
  for (const auto& [p, m] : d.edges()) {
    const int a = local[static_cast<std::size_t>(p.first)], b = local[static_cast<std::size_t>(p.second)];
    if (a >= 0 && b >= 0) labels[ordered(a, b)] = m;
  }
  return CoxeterDiagram(static_cast<int>(nodes.size()), labels);
}

inline DynkinDiagram induced(const DynkinDiagram& d, const std::vector<int>& nodes) {
  std::vector<int> local(static_cast<std::size_t>(d.size()), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[static_cast<std::size_t>(nodes[k])] = static_cast<int>(k);
  std::map<NodePair, DynkinBond> bonds;
  for (const auto& [p, b] : d.bonds()) {
    const int a = local[static_cast<std::size_t>(p.first)], c = local[static_cast<std::size_t>(p.second)];
    if (a < 0 || c < 0) continue;
    DynkinBond nb = b;
    if (b.multiplicity > 1) nb.long_node = local[static_cast<std::size_t>(b.long_node)];
    bonds[ordered(a, c)] = nb;
  }
  return DynkinDiagram(static_cast<int>(nodes.size()), bonds);
}

template <typename D>
D delete_node(const D& d, int node) {
  if (node < 0 || node >= d.size())
    throw InputError("node " + std::to_string(node + 1) + " does not exist");
  std::vector<int> keep;
  for (int i = 0; i < d.size(); ++i)
    if (i != node) keep.push_back(i);
  return induced(d, keep);
}

template <typename D>
struct Component {
  D diagram;
  std::vector<int> nodes;  // local index -> original index
};

namespace detail {

inline std::vector<std::vector<int>> components_of(int n, const std::vector<NodePair>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [a, b] : edges) parent[static_cast<std::size_t>(find(a))] = find(b);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, nodes] : groups) out.push_back(std::move(nodes));
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Map>
std::vector<NodePair> keys_of(const Map& m) {
  std::vector<NodePair> out;
  for (const auto& [p, v] : m) out.push_back(p);
  return out;
}

}  // namespace detail

/// Components ordered by their smallest node.
inline std::vector<Component<CoxeterDiagram>> connected_components(const CoxeterDiagram& d) {
  std::vector<Component<CoxeterDiagram>> out;
  for (auto& nodes : detail::components_of(d.size(), detail::keys_of(d.edges())))
    out.push_back({induced(d, nodes), nodes});
  return out;
}

inline std::vector<Component<DynkinDiagram>> connected_components(const DynkinDiagram& d) {
  std::vector<Component<DynkinDiagram>> out;
  for (auto& nodes : detail::components_of(d.size(), detail::keys_of(d.bonds())))
    out.push_back({induced(d, nodes), nodes});
  return out;
}

template <typename D>
bool is_connected(const D& d) {
  return d.size() > 0 && connected_components(d).size() == 1;
}

template <typename D>
D disjoint_union(const D& a, const D& b);

template <>
inline CoxeterDiagram disjoint_union(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  auto labels = a.edges();
  for (const auto& [p, m] : b.edges()) labels[{p.first + a.size(), p.second + a.size()}] = m;
  return CoxeterDiagram(a.size() + b.size(), labels);
}

template <>
inline DynkinDiagram disjoint_union(const DynkinDiagram& a, const DynkinDiagram& b) {
  auto bonds = a.bonds();
  for (const auto& [p, bond] : b.bonds()) {
    DynkinBond nb = bond;
    if (nb.long_node >= 0) nb.long_node += a.size();
    bonds[{p.first + a.size(), p.second + a.size()}] = nb;
  }
  return DynkinDiagram(a.size() + b.size(), bonds);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

// Ordered-pair edge code: equal codes on (i,j) and (p(i),p(j)) for every
// pair is exactly "p preserves labels and orientations".
inline int pair_code(const CoxeterDiagram& d, int i, int j) { return d.label(i, j); }

inline int pair_code(const DynkinDiagram& d, int i, int j) {
  const int m = d.multiplicity(i, j);
  if (m <= 1) return m;
  return 10 * m + (d.long_end(i, j) == i ? 1 : 2);
}

template <typename D>
std::optional<std::vector<int>> find_isomorphism(const D& a, const D& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const D& d, int i) {
    std::vector<int> s;
    for (int j = 0; j < d.size(); ++j)
      if (j != i) s.push_back(pair_code(d, i, j));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> sa(static_cast<std::size_t>(n)), sb(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    sa[static_cast<std::size_t>(i)] = signature(a, i);
    sb[static_cast<std::size_t>(i)] = signature(b, i);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  // Visit nodes of `a` in BFS order so each new node has assigned neighbours.
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = true;
    std::vector<int> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      order.push_back(queue[q]);
      for (int j = 0; j < n; ++j) {
        if (seen[static_cast<std::size_t>(j)] || j == queue[q]) continue;
        const int code = pair_code(a, queue[q], j);
        // label 2 (Coxeter) or multiplicity 0 (Dynkin) means "no edge"
        const bool edge = std::is_same_v<D, CoxeterDiagram> ? code != 2 : code != 0;
        if (edge) {
          seen[static_cast<std::size_t>(j)] = true;
          queue.push_back(j);
        }
      }
    }
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == order.size()) return true;
    const int u = order[k];
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || sa[static_cast<std::size_t>(u)] != sb[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        const int w = order[t];
        const int mw = map[static_cast<std::size_t>(w)];
        ok = pair_code(a, u, w) == pair_code(b, v, mw) && pair_code(a, w, u) == pair_code(b, mw, v);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(u)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (extend(k + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
      map[static_cast<std::size_t>(u)] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace detail

/// A label- and orientation-preserving bijection from `a` to `b`, if any:
/// witness[i] is the node of `b` matched with node i of `a`.
inline std::optional<std::vector<int>> diagram_isomorphism(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  return detail::find_isomorphism(a, b);
}

inline std::optional<std::vector<int>> diagram_isomorphism(const DynkinDiagram& a, const DynkinDiagram& b) {
  return detail::find_isomorphism(a, b);
}

inline std::optional<std::vector<int>> diagram_isomorphism(const Diagram& a, const Diagram& b) {
  if (a.index() != b.index())
    throw InputError("cannot compare a Coxeter diagram with a Dynkin diagram");
  if (const auto* ca = std::get_if<CoxeterDiagram>(&a)) return detail::find_isomorphism(*ca, std::get<CoxeterDiagram>(b));
  return detail::find_isomorphism(std::get<DynkinDiagram>(a), std::get<DynkinDiagram>(b));
}

template <typename D>
bool diagram_isomorphic(const D& a, const D& b) {
  return diagram_isomorphism(a, b).has_value();
}

// ---------------------------------------------------------------------------
// Catalogue

namespace detail {

// Path 0-1-...-(n-1) plus the branch edges of D and E.
inline std::vector<std::pair<NodePair, int>> shape_edges(const DiagramType& t) {
  const int n = t.rank();
  std::vector<std::pair<NodePair, int>> e;
  auto path = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) e.push_back({{i, i + 1}, 3});
  };
  switch (t.family) {
    case Family::A:
      path(n);
      break;
    case Family::B:
    case Family::C:
    case Family::BC:
      path(n);
      e.back().second = 4;
      break;
    case Family::D:
      path(n - 1);
      e.push_back({{n - 3, n - 1}, 3});
      break;
    case Family::E:
      path(n - 1);
      e.push_back({{2, n - 1}, 3});
      break;
    case Family::F:
      path(4);
      e[1].second = 4;
      break;
    case Family::G:
      e.push_back({{0, 1}, 6});
      break;
    case Family::H:
      path(n);
      e.front().second = 5;
      break;
    case Family::I:
      e.push_back({{0, 1}, t.parameter});
      break;
  }
  return e;
}

}  // namespace detail

/// Catalogue shape with this node numbering:
///   A, B, C, BC, H: path 1-2-…-n (B/C/BC: last bond double; H: first label 5);
///   D: path 1-…-(n-1), node n attached to n-2;
///   E: path 1-…-(n-1), node n attached to 3;
///   F4: 1-2=3-4; G2, I2(m): one edge.
inline CoxeterDiagram coxeter_diagram(const DiagramType& t) {
  std::map<NodePair, int> labels;
  for (const auto& [p, m] : detail::shape_edges(t)) labels[p] = m;
  return CoxeterDiagram(t.rank(), labels);
}

/// Dynkin catalogue shape. B: arrow n-1 → n; C: arrow n → n-1; F4: 2 → 3;
/// G2: 1 → 2 (the first node is long in every case where it matters).
inline DynkinDiagram dynkin_diagram(const DiagramType& t) {
  if (!t.crystallographic()) throw InputError(t.name() + " is not crystallographic");
  if (t.family == Family::BC)
    throw InputError("BC" + std::to_string(t.parameter) + " needs an orientation: use B or C");
  std::map<NodePair, DynkinBond> bonds;
  for (const auto& [p, m] : detail::shape_edges(t)) {
    if (m == 3) {
      bonds[p] = {1, -1};
    } else {
      const int mult = m == 4 ? 2 : 3;
      const int long_node = t.family == Family::C ? p.second : p.first;
      bonds[p] = {mult, long_node};
    }
  }
  return DynkinDiagram(t.rank(), bonds);
}

namespace detail {

inline std::vector<DiagramType> catalogue_candidates(int rank, bool dynkin, int i2_label) {
  std::vector<DiagramType> c;
  auto add = [&](Family f, int n) {
    for (const auto& t : canonical_types(f, n))
      if (t.rank() == rank && std::find(c.begin(), c.end(), t) == c.end()) c.push_back(t);
  };
  add(Family::A, rank);
  if (rank >= 2) {
    if (dynkin) {
      add(Family::B, rank);
      add(Family::C, rank);
    } else {
      add(Family::BC, rank);
    }
  }
  if (rank >= 4) add(Family::D, rank);
  if (rank >= 6 && rank <= 8) add(Family::E, rank);
  if (rank == 4) add(Family::F, 4);
  if (rank == 2) {
    add(Family::G, 2);
    if (!dynkin && i2_label >= 2) add(Family::I, i2_label);
  }
  if (!dynkin && (rank == 3 || rank == 4)) add(Family::H, rank);
  return c;
}

template <typename D>
int max_degree(const D& d) {
  int best = 0;
  for (int i = 0; i < d.size(); ++i) {
    int deg = 0;
    for (int j = 0; j < d.size(); ++j)
      if (j != i && pair_code(d, i, j) != (std::is_same_v<D, CoxeterDiagram> ? 2 : 0)) ++deg;
    best = std::max(best, deg);
  }
  return best;
}

}  // namespace detail

/// Type of a connected Coxeter diagram, or nullopt if it is not in the
/// finite catalogue.
inline std::optional<DiagramType> classify_connected(const CoxeterDiagram& d) {
  if (d.size() == 0) return std::nullopt;
  const int n = d.size();
  if (d.edges().size() != static_cast<std::size_t>(n - 1) || detail::max_degree(d) > 3) return std::nullopt;
  const int i2 = n == 2 ? d.label(0, 1) : 0;
  for (const auto& t : detail::catalogue_candidates(n, false, i2))
    if (diagram_isomorphic(d, coxeter_diagram(t))) return t;
  return std::nullopt;
}

inline std::optional<DiagramType> classify_connected(const DynkinDiagram& d) {
  if (d.size() == 0) return std::nullopt;
  const int n = d.size();
  if (d.bonds().size() != static_cast<std::size_t>(n - 1) || detail::max_degree(d) > 3) return std::nullopt;
  for (const auto& t : detail::catalogue_candidates(n, true, 0))
    if (diagram_isomorphic(d, dynkin_diagram(t))) return t;
  return std::nullopt;
}

/// Multiset of component types in component order, or nullopt
/// (not of finite type) when any component is outside the catalogue.
template <typename D>
std::optional<std::vector<DiagramType>> classify(const D& d) {
  std::vector<DiagramType> out;
  for (const auto& c : connected_components(d)) {
    auto t = classify_connected(c.diagram);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  return out;
}

inline std::string type_string(const std::vector<DiagramType>& types) {
  std::string s;
  for (const auto& t : types) s += (s.empty() ? "" : "+") + t.name();
  return s;
}

/// All Dynkin diagrams over a crystallographic Coxeter diagram, up to
/// isomorphism, in the order of the orientation bitmask that first
/// produced them (bit k set: the higher-numbered node of the k-th multiple
/// edge is long).
inline std::vector<DynkinDiagram> dynkin_orientations(const CoxeterDiagram& c) {
  if (!is_crystallographic(c)) throw InputError("diagram is not crystallographic");
  std::vector<NodePair> multiple;
  for (const auto& [p, m] : c.edges())
    if (m != 3) multiple.push_back(p);
  if (multiple.size() > 20) throw EnumerationLimit("too many multiple edges to orient");
  std::vector<DynkinDiagram> out;
  for (unsigned long mask = 0; mask < (1ul << multiple.size()); ++mask) {
    std::map<NodePair, DynkinBond> bonds;
    std::size_t k = 0;
    for (const auto& [p, m] : c.edges()) {
      if (m == 3) {
        bonds[p] = {1, -1};
      } else {
        bonds[p] = {m == 4 ? 2 : 3, (mask >> k) & 1u ? p.second : p.first};
        ++k;
      }
    }
    DynkinDiagram d(c.size(), bonds);
    if (std::none_of(out.begin(), out.end(), [&](const DynkinDiagram& e) { return diagram_isomorphic(e, d); }))
      out.push_back(std::move(d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// DSL

namespace detail {

class DiagramParser {
 public:
  explicit DiagramParser(const std::string& text) : s_(text) {}

  Diagram parse() {
    Diagram d = parse_sum();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return d;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    if (pos_ - start > 6) throw ParseError("integer too large", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Diagram parse_sum() {
    Diagram d = parse_term();
    while (accept('+')) {
      Diagram rhs = parse_term();
      if (std::holds_alternative<DynkinDiagram>(d) && std::holds_alternative<DynkinDiagram>(rhs))
        d = disjoint_union(std::get<DynkinDiagram>(d), std::get<DynkinDiagram>(rhs));
      else
        d = disjoint_union(as_coxeter(d), as_coxeter(rhs));
    }
    return d;
  }

  Diagram parse_term() {
    skip();
    const std::size_t start = pos_;
    if (accept_word("coxeter")) return parse_coxeter(start);
    if (accept_word("dynkin")) return parse_dynkin(start);
    return parse_named();
  }

  int node(int n) {
    skip();
    const std::size_t at = pos_;
    const int v = integer();
    if (v < 1 || v > n) throw ParseError("node " + std::to_string(v) + " outside 1.." + std::to_string(n), at);
    return v - 1;
  }

  Diagram parse_coxeter(std::size_t start) {
    expect('(');
    const int n = integer();
    expect(';');
    std::map<NodePair, int> labels;
    skip();
    if (!accept(')')) {
      do {
        skip();
        const std::size_t at = pos_;
        const int a = node(n);
        expect('-');
        const int b = node(n);
        expect(':');
        const std::size_t lat = pos_;
        const int m = integer();
        if (a == b) throw ParseError("self-loop", at);
        if (m < 3) throw ParseError("edge label must be at least 3", lat);
        if (!labels.emplace(ordered(a, b), m).second) throw ParseError("duplicate edge", at);
      } while (accept(','));
      expect(')');
    }
    try {
      return CoxeterDiagram(n, labels);
    } catch (const InputError& e) {
      throw ParseError(e.what(), start);
    }
  }

  Diagram parse_dynkin(std::size_t start) {
    expect('(');
    const int n = integer();
    expect(';');
    std::map<NodePair, DynkinBond> bonds;
    skip();
    if (!accept(')')) {
      do {
        skip();
        const std::size_t at = pos_;
        const int a = node(n);
        DynkinBond bond;
        int b = 0;
        if (accept('-')) {
          b = node(n);
        } else if (accept('>')) {
          b = node(n);
          expect(':');
          const std::size_t mat = pos_;
          const int m = integer();
          if (m == 1) throw ParseError("orientation on a single bond", mat);
          if (m == 5 || m >= 7) throw ParseError("label " + std::to_string(m) + " is not allowed in a Dynkin diagram", mat);
          if (m != 2 && m != 3) throw ParseError("bond multiplicity must be 2 or 3", mat);
          bond = {m, a};
        } else {
          throw ParseError("expected '-' or '>'", pos_);
        }
        if (a == b) throw ParseError("self-loop", at);
        if (!bonds.emplace(ordered(a, b), bond).second) throw ParseError("duplicate bond", at);
      } while (accept(','));
      expect(')');
    }
    try {
      return DynkinDiagram(n, bonds);
    } catch (const InputError& e) {
      throw ParseError(e.what(), start);
    }
  }

  Diagram parse_named() {
    skip();
    const std::size_t start = pos_;
    std::string letters;
    while (pos_ < s_.size() && std::isupper(static_cast<unsigned char>(s_[pos_]))) letters += s_[pos_++];
    if (letters.empty()) throw ParseError("expected a diagram", start);
    if (letters == "I") {
      if (!accept_word("2")) throw ParseError("expected I2(m)", pos_);
      expect('(');
      const int m = integer();
      expect(')');
      return build(Family::I, m, start);
    }
    static const std::map<std::string, Family> families = {
        {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"BC", Family::BC}, {"D", Family::D},
        {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"H", Family::H}};
    auto it = families.find(letters);
    if (it == families.end()) throw ParseError("unknown diagram type '" + letters + "'", start);
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a rank after '" + letters + "'", pos_);
    return build(it->second, integer(), start);
  }

  // Crystallographic named forms build Dynkin diagrams; BC, H and I build
  // Coxeter diagrams.
  static Diagram build(Family f, int n, std::size_t at) {
    std::vector<DiagramType> types;
    try {
      types = canonical_types(f, n);
    } catch (const InputError& e) {
      throw ParseError(e.what(), at);
    }
    const bool dynkin = f != Family::BC && f != Family::H && f != Family::I;
    if (dynkin) {
      DynkinDiagram d(0);
      for (const auto& t : types) d = disjoint_union(d, dynkin_diagram(t));
      return d;
    }
    CoxeterDiagram d(0);
    for (const auto& t : types) d = disjoint_union(d, coxeter_diagram(t));
    return d;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Diagram parse_diagram(const std::string& text) { return detail::DiagramParser(text).parse(); }

/// Canonical DSL text; parse_diagram(render(d)) == d.
inline std::string render(const CoxeterDiagram& d) {
  std::string s = "coxeter(" + std::to_string(d.size()) + ";";
  bool first = true;
  for (const auto& [p, m] : d.edges()) {
    s += (first ? " " : ", ") + std::to_string(p.first + 1) + "-" + std::to_string(p.second + 1) + ":" + std::to_string(m);
    first = false;
  }
  return s + ")";
}

inline std::string render(const DynkinDiagram& d) {
  std::string s = "dynkin(" + std::to_string(d.size()) + ";";
  bool first = true;
  for (const auto& [p, b] : d.bonds()) {
    s += first ? " " : ", ";
    first = false;
    if (b.multiplicity == 1) {
      s += std::to_string(p.first + 1) + "-" + std::to_string(p.second + 1);
    } else {
      const int shorter = b.long_node == p.first ? p.second : p.first;
      s += std::to_string(b.long_node + 1) + ">" + std::to_string(shorter + 1) + ":" + std::to_string(b.multiplicity);
    }
  }
  return s + ")";
}

inline std::string render(const Diagram& d) {
  return std::visit([](const auto& x) { return render(x); }, d);
}

// ---------------------------------------------------------------------------
// Multigraphs and affine simply-laced diagrams

/// Unoriented multigraph: adjacency(i,j) counts edges, adjacency(i,i) loops.
struct Multigraph {
  Matrix<int> adjacency;

  explicit Multigraph(int nodes = 0) : adjacency(static_cast<std::size_t>(nodes), static_cast<std::size_t>(nodes), 0) {}
  explicit Multigraph(Matrix<int> adj) : adjacency(std::move(adj)) {
    if (adjacency.rows() != adjacency.cols() || !adjacency.is_symmetric())
      throw InputError("multigraph adjacency must be square and symmetric");
  }

  int size() const { return static_cast<int>(adjacency.rows()); }
  int edges(int i, int j) const { return adjacency(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  void add_edge(int i, int j) {
    adjacency(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += 1;
    if (i != j) adjacency(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) += 1;
  }
  bool has_loops() const {
    for (int i = 0; i < size(); ++i)
      if (edges(i, i) != 0) return true;
    return false;
  }
  bool is_simple() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (edges(i, j) > (i == j ? 0 : 1)) return false;
    return true;
  }
  bool operator==(const Multigraph&) const = default;
};

inline Multigraph induced(const Multigraph& g, const std::vector<int>& nodes) {
  Multigraph out(static_cast<int>(nodes.size()));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b)
      out.adjacency(a, b) = g.edges(nodes[a], nodes[b]);
  return out;
}

/// Simple loop-free graph read as a simply-laced Coxeter diagram.
inline CoxeterDiagram coxeter_of_graph(const Multigraph& g) {
  if (!g.is_simple()) throw InputError("graph has loops or parallel edges");
  std::map<NodePair, int> labels;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.edges(i, j)) labels[{i, j}] = 3;
  return CoxeterDiagram(g.size(), labels);
}

/// Affine simply-laced type Ã_n, D̃_n or Ẽ_n (n = rank of the finite type
/// left after deleting the extension node). Ã1 is two nodes joined by a
/// double bond; Ã_n for n ≥ 2 is a cycle on n+1 nodes.
struct AffineType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return family_name(family) + std::to_string(rank) + "~"; }
  auto operator<=>(const AffineType&) const = default;
};

struct AffineRecognition {
  AffineType type;
  int extension_node = -1;
  DiagramType finite;
};

/// Recognises the simply-laced affine diagrams. `dims` must be the positive
/// null vector of the affine Cartan matrix (Σⱼ aᵢⱼ dⱼ = 2dᵢ); the extension
/// node is the first node with dimension 1 whose deletion leaves the finite
/// diagram. Returns nullopt for anything else.
inline std::optional<AffineRecognition> recognize_affine_simply_laced(const Multigraph& g,
                                                                      const std::vector<int>& dims) {
  const int n = g.size();
  if (n < 2 || static_cast<int>(dims.size()) != n || g.has_loops()) return std::nullopt;
  if (std::any_of(dims.begin(), dims.end(), [](int d) { return d <= 0; })) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<long long>(g.edges(i, j)) * dims[static_cast<std::size_t>(j)];
    if (s != 2LL * dims[static_cast<std::size_t>(i)]) return std::nullopt;
  }

  std::optional<AffineType> type;
  if (n == 2) {
    if (g.edges(0, 1) == 2) type = AffineType{Family::A, 1};
  } else if (g.is_simple()) {
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    int edge_count = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && g.edges(i, j)) {
          ++degree[static_cast<std::size_t>(i)];
          if (i < j) ++edge_count;
        }
    if (!is_connected(coxeter_of_graph(g))) return std::nullopt;
    const auto count_degree = [&](int d) { return std::count(degree.begin(), degree.end(), d); };
    if (edge_count == n && count_degree(2) == n) {
      type = AffineType{Family::A, n - 1};
    } else if (edge_count == n - 1) {
      if (n == 5 && count_degree(4) == 1) {
        type = AffineType{Family::D, 4};
      } else if (count_degree(3) == 2 && count_degree(3) + count_degree(2) + count_degree(1) == n) {
        // D̃: both branch nodes carry two leaves.
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          if (degree[static_cast<std::size_t>(i)] != 3) continue;
          int leaves = 0;
          for (int j = 0; j < n; ++j)
            if (j != i && g.edges(i, j) && degree[static_cast<std::size_t>(j)] == 1) ++leaves;
          ok = ok && leaves == 2;
        }
        if (ok) type = AffineType{Family::D, n - 1};
      } else if (count_degree(3) == 1 && count_degree(3) + count_degree(2) + count_degree(1) == n) {
        const int centre = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
        std::vector<int> arms;
        for (int j = 0; j < n; ++j) {
          if (j == centre || !g.edges(centre, j)) continue;
          int len = 1, prev = centre, cur = j;
          while (degree[static_cast<std::size_t>(cur)] == 2) {
            int next = -1;
            for (int k = 0; k < n; ++k)
              if (k != prev && k != cur && g.edges(cur, k)) next = k;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms == std::vector<int>{2, 2, 2}) type = AffineType{Family::E, 6};
        if (arms == std::vector<int>{1, 3, 3}) type = AffineType{Family::E, 7};
        if (arms == std::vector<int>{1, 2, 5}) type = AffineType{Family::E, 8};
      }
    }
  }
  if (!type) return std::nullopt;

  const DiagramType finite{type->family, type->rank};
  for (int i = 0; i < n; ++i) {
    if (dims[static_cast<std::size_t>(i)] != 1) continue;
    std::vector<int> keep;
    for (int j = 0; j < n; ++j)
      if (j != i) keep.push_back(j);
    const Multigraph rest = induced(g, keep);
    if (!rest.is_simple()) continue;
    const auto t = classify(coxeter_of_graph(rest));
    if (t && t->size() == 1 && t->front() == finite) return AffineRecognition{*type, i, finite};
  }
  return std::nullopt;
}

}  // namespace adekit
