#pragma once

// JSON reports. Keys keep insertion order; rationals and big integers are
// strings, floats carry 12 significant digits.

#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "adekit/diagram.hpp"
#include "adekit/exact.hpp"
#include "adekit/lattice.hpp"
#include "adekit/mckay.hpp"
#include "adekit/polytope.hpp"
#include "adekit/quiver.hpp"
#include "adekit/reflection.hpp"

namespace adekit {

using Json = nlohmann::ordered_json;

inline Json json_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::stod(buf);
  return r == 0 ? 0.0 : r;
}

inline Json json_rational(const Rational& v) { return to_string(v); }

inline Json json_matrix(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json json_matrix(const RealMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_float(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json json_types(const std::vector<DiagramType>& types) {
  Json out = Json::array();
  for (const auto& t : types) out.push_back(t.name());
  return out;
}

/// Node numbers are 1-based, as in the DSL.
inline Json diagram_json(const CoxeterDiagram& d) {
  Json edges = Json::array();
  for (const auto& [p, m] : d.edges()) edges.push_back({{"a", p.first + 1}, {"b", p.second + 1}, {"m", m}});
  return {{"kind", "coxeter"}, {"nodes", d.size()}, {"edges", edges}};
}

inline Json diagram_json(const DynkinDiagram& d) {
  Json edges = Json::array();
  for (const auto& [p, bond] : d.bonds()) {
    if (bond.multiplicity == 1) {
      edges.push_back({{"from", p.first + 1}, {"to", p.second + 1}, {"mult", 1}});
    } else {
      const int from = bond.long_node;
      const int to = from == p.first ? p.second : p.first;
      edges.push_back({{"from", from + 1}, {"to", to + 1}, {"mult", bond.multiplicity}});
    }
  }
  return {{"kind", "dynkin"}, {"nodes", d.size()}, {"edges", edges}};
}

inline Json diagram_json(const Diagram& d) {
  return std::visit([](const auto& x) { return diagram_json(x); }, d);
}

inline Json classify_json(const Diagram& d) {
  const auto types = std::visit([](const auto& x) { return classify(x); }, d);
  const bool crystallographic = std::visit([](const auto& x) { return is_crystallographic(x); }, d);
  return {{"type", types ? json_types(*types) : Json(nullptr)},
          {"finite", types.has_value()},
          {"crystallographic", crystallographic}};
}

inline Json root_report_json(const DynkinDiagram& d) {
  const RootSystem rs = generate_roots(d);
  Json marks = nullptr, lie = nullptr;
  if (is_connected(d)) {
    marks = highest_root(rs);
    const LieAlgebraInfo info = lie_algebra_info(d);
    lie = {{"name", info.name}, {"dim", info.dimension}};
  } else {
    std::string name;
    long long dim = 0;
    for (const auto& c : connected_components(d)) {
      const LieAlgebraInfo info = lie_algebra_info(c.diagram);
      name += (name.empty() ? "" : "+") + info.name;
      dim += info.dimension;
    }
    lie = {{"name", name}, {"dim", dim}};
  }
  return {{"rank", rs.rank},
          {"root_count", rs.size()},
          {"positive", rs.positive.size()},
          {"gram", json_matrix(rs.simple_root_gram)},
          {"marks", marks},
          {"weyl_order", to_string(weyl_order(d))},
          {"lie", lie}};
}

/// Non-crystallographic root systems: unit-free float Gram (2·cosine form),
/// no marks, no Lie algebra.
inline Json root_report_json(const CoxeterDiagram& d) {
  const RealRootSystem rs = generate_roots(d);
  return {{"rank", rs.rank},
          {"root_count", rs.size()},
          {"positive", rs.positive.size()},
          {"gram", json_matrix(rs.simple_root_gram)},
          {"marks", nullptr},
          {"weyl_order", to_string(weyl_order(d))},
          {"lie", nullptr}};
}

inline Json lattice_json(const Lattice& l) {
  const ShortVectorReport shortest = minimal_vectors(l);
  return {{"rank", l.rank()},
          {"gram", json_matrix(l.gram())},
          {"det", json_rational(determinant(l))},
          {"min", json_rational(shortest.min_norm)},
          {"kissing", shortest.kissing},
          {"density", json_float(packing_density(l))}};
}

inline Json kissing_json(const Lattice& l) {
  const ShortVectorReport shortest = minimal_vectors(l);
  return {{"kissing", shortest.kissing}, {"min", json_rational(shortest.min_norm)}, {"det", json_rational(determinant(l))}};
}

/// Vector counts per norm up to `bound`.
inline Json shells_json(const Lattice& l, const Rational& bound) {
  const ShortVectorReport r = short_vectors(l, bound);
  std::map<Rational, std::size_t> counts;
  for (const auto& n : r.norms) ++counts[n];
  Json shells = Json::array();
  for (const auto& [norm, count] : counts) shells.push_back({{"norm", json_rational(norm)}, {"count", count}});
  return {{"bound", json_rational(bound)}, {"count", r.vectors.size()}, {"shells", shells}};
}

inline Json witt_json(const WittReport& w) { return {{"components", w.names()}, {"z_rank", w.z_rank}}; }

inline Json quiver_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back({s + 1, t + 1});
  Json out = {{"nodes", q.size()}, {"arrows", arrows}};
  const bool finite = is_finite_type(q);
  out["finite_type"] = finite;
  if (finite) {
    const auto types = classify(coxeter_of_graph(underlying_graph(q)));
    out["type"] = json_types(*types);
    const auto roots = positive_roots(q);
    out["root_count"] = roots.size();
    out["roots"] = roots;
  } else {
    out["type"] = nullptr;
    out["root_count"] = nullptr;
    out["roots"] = nullptr;
  }
  return out;
}

/// `trivial_node` indexes the adjacency rows (0-based).
inline Json mckay_json(const McKayReport& r) {
  Json adjacency = Json::array();
  for (int i = 0; i < r.mckay.graph.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < r.mckay.graph.size(); ++j) row.push_back(r.mckay.graph.edges(i, j));
    adjacency.push_back(std::move(row));
  }
  return {{"kind", r.spec.name()},
          {"order", r.order},
          {"classes", r.table.classes.size()},
          {"dims", r.mckay.dims},
          {"mckay", {{"adjacency", adjacency}, {"trivial_node", r.mckay.trivial_node}}},
          {"affine", r.recognition.type.name()},
          {"finite", r.recognition.finite.name()}};
}

inline Json polytope_json(const Polytope& p, const EdgeGraph& g, std::optional<std::size_t> cells) {
  return {{"polytope", p.name},
          {"dim", p.dim},
          {"vertices", p.size()},
          {"edge_length", json_float(g.edge_length)},
          {"degree", g.degree()},
          {"cells", cells ? Json(*cells) : Json(nullptr)}};
}

}  // namespace adekit
