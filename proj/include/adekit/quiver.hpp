#pragma once

// Quivers, the Tits form, Gabriel's finite-type criterion and the
// indecomposables' dimension vectors (the positive roots).

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adekit/diagram.hpp"
#include "adekit/error.hpp"
#include "adekit/exact.hpp"

namespace adekit {

using Arrow = std::pair<int, int>;  // (source, target), 0-based
using DimensionVector = std::vector<int>;

class Quiver {
 public:
  Quiver() = default;
  Quiver(int nodes, std::vector<Arrow> arrows) : nodes_(nodes), arrows_(std::move(arrows)) {
    if (nodes < 1) throw InputError("a quiver needs at least one node");
    for (const auto& [s, t] : arrows_)
      if (s < 0 || t < 0 || s >= nodes || t >= nodes)
        throw InputError("arrow references a node outside 1.." + std::to_string(nodes));
  }

  int size() const { return nodes_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_loops() const {
    return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.first == a.second; });
  }

 private:
  int nodes_ = 0;
  std::vector<Arrow> arrows_;
};

/// `quiver(n; 1>2, 3>2, ...)` with 1-based nodes; parallel arrows and loops
/// are accepted.
inline Quiver parse_quiver(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto integer = [&] {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) throw ParseError("expected an integer", start);
    return std::stoi(text.substr(start, pos - start));
  };
  skip();
  if (text.compare(pos, 6, "quiver") != 0) throw ParseError("expected 'quiver'", pos);
  pos += 6;
  expect('(');
  const int n = integer();
  if (n < 1) throw ParseError("a quiver needs at least one node", pos);
  expect(';');
  std::vector<Arrow> arrows;
  skip();
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    while (true) {
      skip();
      const std::size_t at = pos;
      const int s = integer();
      expect('>');
      const int t = integer();
      if (s < 1 || s > n || t < 1 || t > n) throw ParseError("arrow node outside 1.." + std::to_string(n), at);
      arrows.emplace_back(s - 1, t - 1);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      expect(')');
      break;
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return Quiver(n, std::move(arrows));
}

inline std::string render(const Quiver& q) {
  std::string s = "quiver(" + std::to_string(q.size()) + ";";
  for (std::size_t k = 0; k < q.arrows().size(); ++k)
    s += (k ? ", " : " ") + std::to_string(q.arrows()[k].first + 1) + ">" + std::to_string(q.arrows()[k].second + 1);
  return s + ")";
}

inline Multigraph underlying_graph(const Quiver& q) {
  Multigraph g(q.size());
  for (const auto& [s, t] : q.arrows()) g.add_edge(s, t);
  return g;
}

/// q(d) = Σ dᵢ² − Σ_arrows d_src d_tgt
inline long long tits_form(const Quiver& q, const DimensionVector& d) {
  if (q.has_loops()) throw InputError("the Tits form is not defined for quivers with loops");
  if (static_cast<int>(d.size()) != q.size()) throw InputError("dimension vector has the wrong length");
  long long v = 0;
  for (int x : d) v += static_cast<long long>(x) * x;
  for (const auto& [s, t] : q.arrows())
    v -= static_cast<long long>(d[static_cast<std::size_t>(s)]) * d[static_cast<std::size_t>(t)];
  return v;
}

/// Finite representation type: the underlying graph is a disjoint union of
/// A, D, E diagrams. Cross-checked against positive definiteness of the
/// symmetrized Tits form.
inline bool is_finite_type(const Quiver& q) {
  const Multigraph g = underlying_graph(q);
  bool by_shape = false;
  if (g.is_simple()) {
    const auto types = classify(coxeter_of_graph(g));
    by_shape = types && std::all_of(types->begin(), types->end(), [](const DiagramType& t) { return t.simply_laced(); });
  }
  const auto n = static_cast<std::size_t>(q.size());
  RatMatrix form(n, n);  // ½(2I − adjacency), loops counted on the diagonal
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      form(i, j) = (i == j ? Rational(1) : Rational(0)) -
                   (i == j ? Rational(g.edges(static_cast<int>(i), static_cast<int>(i)))
                           : Rational(g.edges(static_cast<int>(i), static_cast<int>(j)), 2));
  if (is_positive_definite(form) != by_shape)
    throw VerificationError("Gabriel shape test disagrees with the Tits form for " + render(q));
  return by_shape;
}

/// All d ≥ 0, d ≠ 0 with q(d) = 1, each coordinate at most 6; sorted
/// lexicographically.
inline std::vector<DimensionVector> positive_roots(const Quiver& q) {
  if (!is_finite_type(q)) throw InputError(render(q) + " is not of finite representation type");
  const auto n = static_cast<std::size_t>(q.size());
  constexpr int kCap = 6;
  std::vector<DimensionVector> roots;
  DimensionVector d(n, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == n) {
      if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; }) && tits_form(q, d) == 1) roots.push_back(d);
      return;
    }
    for (int v = 0; v <= kCap; ++v) {
      d[i] = v;
      fill(i + 1);
    }
    d[i] = 0;
  };
  fill(0);
  return roots;
}

}  // namespace adekit
