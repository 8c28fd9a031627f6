#include <gtest/gtest.h>

#include <set>

#include "adekit/quiver.hpp"
#include "adekit/reflection.hpp"
#include "support.hpp"

using namespace adekit;
using adekit::testing::Rng;
using adekit::testing::uniform;

namespace {

DiagramType T(Family f, int n) { return {f, n}; }

std::vector<NodePair> shape(const DiagramType& t) {
  const CoxeterDiagram d = coxeter_diagram(t);
  std::vector<NodePair> out;
  for (const auto& [p, m] : d.edges()) out.push_back(p);
  return out;
}

Quiver oriented(int n, const std::vector<NodePair>& edges, unsigned long mask) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k)
    arrows.push_back((mask >> k) & 1 ? Arrow{edges[k].second, edges[k].first} : Arrow{edges[k].first, edges[k].second});
  return Quiver(n, arrows);
}

std::vector<DiagramType> ade_types(int max_rank) {
  std::vector<DiagramType> out;
  for (int n = 1; n <= max_rank; ++n) {
    out.push_back(T(Family::A, n));
    if (n >= 4) out.push_back(T(Family::D, n));
    if (n >= 6 && n <= 8) out.push_back(T(Family::E, n));
  }
  return out;
}

}  // namespace

TEST(QuiverParse, Examples) {
  const Quiver q = parse_quiver("quiver(3; 1>2, 3>2)");
  EXPECT_EQ(q.size(), 3);
  EXPECT_EQ(q.arrows(), (std::vector<Arrow>{{0, 1}, {2, 1}}));
  EXPECT_EQ(parse_quiver(" quiver( 2 ; 1 > 2 , 1>2 ) ").arrows().size(), 2u);
  EXPECT_EQ(parse_quiver("quiver(4;)").arrows().size(), 0u);
  EXPECT_TRUE(parse_quiver("quiver(1; 1>1)").has_loops());
  EXPECT_THROW(parse_quiver("quiver(2; 1>3)"), InputError);
  EXPECT_THROW(parse_quiver("quiver(2; 1-2)"), ParseError);
  EXPECT_THROW(parse_quiver("quiver(2; 1>2"), ParseError);
  EXPECT_THROW(parse_quiver("quiver(0;)"), InputError);
  EXPECT_THROW(parse_quiver("quiv(2; 1>2)"), ParseError);
}

TEST(QuiverParse, RenderRoundTrip) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = uniform(rng, 1, 7);
    std::vector<Arrow> arrows;
    for (int k = uniform(rng, 0, 8); k > 0; --k) arrows.push_back({uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)});
    const Quiver q(n, arrows);
    const Quiver back = parse_quiver(render(q));
    EXPECT_EQ(back.size(), q.size());
    EXPECT_EQ(back.arrows(), q.arrows());
  }
}

TEST(TitsForm, Examples) {
  const Quiver a2 = parse_quiver("quiver(2; 1>2)");
  EXPECT_EQ(tits_form(a2, {1, 1}), 1);
  EXPECT_EQ(tits_form(a2, {1, 0}), 1);
  EXPECT_EQ(tits_form(a2, {2, 1}), 3);
  const Quiver kronecker = parse_quiver("quiver(2; 1>2, 1>2)");
  EXPECT_EQ(tits_form(kronecker, {1, 1}), 0);
  EXPECT_THROW(tits_form(parse_quiver("quiver(1; 1>1)"), {1}), InputError);
  EXPECT_THROW(tits_form(a2, {1}), InputError);
}

// q(d) = ½ dᵀ(2I − A)d with A the adjacency of the underlying graph
TEST(TitsForm, SymmetrizationIdentity) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform(rng, 1, 6);
    std::vector<Arrow> arrows;
    for (int k = uniform(rng, 0, 9); k > 0; --k) {
      const int s = uniform(rng, 0, n - 1), t = uniform(rng, 0, n - 1);
      if (s != t) arrows.push_back({s, t});
    }
    const Quiver q(n, arrows);
    std::vector<std::vector<long long>> adj(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (const auto& [s, t] : arrows) {
      ++adj[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      ++adj[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
    }
    DimensionVector d(static_cast<std::size_t>(n));
    for (auto& x : d) x = uniform(rng, -4, 4);
    long long twice = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) twice += d[i] * ((i == j ? 2 : 0) - adj[i][j]) * d[j];
    EXPECT_EQ(2 * tits_form(q, d), twice);
  }
}

TEST(FiniteType, Examples) {
  EXPECT_TRUE(is_finite_type(parse_quiver("quiver(3; 1>2, 3>2)")));
  EXPECT_TRUE(is_finite_type(parse_quiver("quiver(4; 1>2, 3>2, 4>2)")));
  EXPECT_TRUE(is_finite_type(parse_quiver("quiver(3;)")));
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(2; 1>2, 1>2)")));
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(1; 1>1)")));
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(5; 1>2, 1>3, 1>4, 1>5)")));
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(2; 1>2, 2>1)")));
  for (int n = 3; n <= 6; ++n) {
    std::vector<Arrow> cycle;
    for (int i = 0; i < n; ++i) cycle.push_back({i, (i + 1) % n});
    EXPECT_FALSE(is_finite_type(Quiver(n, cycle))) << n;
  }
  // Ẽ6: arms of length 2 on a central node
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(7; 1>2, 2>3, 4>3, 5>4, 6>3, 7>6)")));
  // Ẽ8 and D̃6
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(9; 1>2, 2>3, 3>4, 4>5, 5>6, 6>7, 7>8, 9>3)")));
  EXPECT_FALSE(is_finite_type(parse_quiver("quiver(7; 1>3, 2>3, 3>4, 4>5, 5>6, 5>7)")));
}

TEST(FiniteType, AgreesWithCoxeterFinitenessUpToFiveNodes) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<NodePair> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
      std::vector<NodePair> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1) edges.push_back(pairs[k]);
      const Quiver q = oriented(n, edges, mask * 2654435761ul);
      EXPECT_EQ(is_finite_type(q), is_finite(coxeter_of_graph(underlying_graph(q)))) << render(q);
    }
  }
}

TEST(PositiveRoots, Counts) {
  EXPECT_EQ(positive_roots(parse_quiver("quiver(3; 1>2, 3>2)")),
            (std::vector<DimensionVector>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(positive_roots(oriented(n, shape(T(Family::A, n)), 0)).size(), static_cast<std::size_t>(n * (n + 1) / 2));
  EXPECT_EQ(positive_roots(oriented(4, shape(T(Family::D, 4)), 0)).size(), 12u);
  EXPECT_EQ(positive_roots(oriented(6, shape(T(Family::E, 6)), 0)).size(), 36u);
  EXPECT_EQ(positive_roots(oriented(7, shape(T(Family::E, 7)), 0)).size(), 63u);
  EXPECT_EQ(positive_roots(oriented(8, shape(T(Family::E, 8)), 0)).size(), 120u);
  EXPECT_EQ(positive_roots(parse_quiver("quiver(3;)")).size(), 3u);
  EXPECT_THROW(positive_roots(parse_quiver("quiver(2; 1>2, 1>2)")), InputError);
}

TEST(PositiveRoots, OrientationInvariance) {
  for (const auto& t : ade_types(6)) {
    const auto edges = shape(t);
    const auto reference = positive_roots(oriented(t.rank(), edges, 0));
    for (unsigned long mask = 1; mask < (1ul << edges.size()); ++mask)
      EXPECT_EQ(positive_roots(oriented(t.rank(), edges, mask)), reference) << t.name() << " " << mask;
  }
}

TEST(PositiveRoots, MatchRootSystem) {
  Rng rng(2);
  for (const auto& t : ade_types(8)) {
    const auto edges = shape(t);
    const auto mask = static_cast<unsigned long>(uniform(rng, 0, (1 << edges.size()) - 1));
    const auto roots = positive_roots(oriented(t.rank(), edges, mask));
    std::set<IntVector> from_quiver;
    for (const auto& r : roots) from_quiver.insert(IntVector(r.begin(), r.end()));
    const RootSystem rs = generate_roots(dynkin_diagram(t));
    EXPECT_EQ(from_quiver, std::set<IntVector>(rs.positive.begin(), rs.positive.end())) << t.name();
  }
}

TEST(PositiveRoots, DisjointUnions) {
  // A2 ⊔ A1: 3 + 1 roots, each supported on one component
  const auto roots = positive_roots(parse_quiver("quiver(3; 1>2)"));
  EXPECT_EQ(roots.size(), 4u);
  for (const auto& r : roots) EXPECT_FALSE(r[2] != 0 && (r[0] != 0 || r[1] != 0));
}
