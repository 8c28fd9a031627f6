#include <gtest/gtest.h>

#include <numbers>
#include <set>

#include "adekit/mckay.hpp"
#include "support.hpp"

using namespace adekit;
using adekit::testing::Rng;

namespace {

GroupSpec cyclic(int m) { return {GroupKind::Cyclic, m}; }
GroupSpec dicyclic(int n) { return {GroupKind::BinaryDihedral, n}; }
const GroupSpec kT{GroupKind::BinaryTetrahedral, 0}, kO{GroupKind::BinaryOctahedral, 0}, kI{GroupKind::BinaryIcosahedral, 0};

std::set<std::array<long long, 4>> keys(const std::vector<Quaternion>& qs) {
  std::set<std::array<long long, 4>> out;
  for (const auto& q : qs) out.insert({std::llround(q.a * 1e6), std::llround(q.b * 1e6), std::llround(q.c * 1e6), std::llround(q.d * 1e6)});
  return out;
}

std::vector<Quaternion> hurwitz_units() {
  std::vector<Quaternion> out;
  for (int axis = 0; axis < 4; ++axis)
    for (int s : {-1, 1}) {
      double v[4] = {0, 0, 0, 0};
      v[axis] = s;
      out.push_back({v[0], v[1], v[2], v[3]});
    }
  for (int mask = 0; mask < 16; ++mask)
    out.push_back({mask & 1 ? -0.5 : 0.5, mask & 2 ? -0.5 : 0.5, mask & 4 ? -0.5 : 0.5, mask & 8 ? -0.5 : 0.5});
  return out;
}

/// Hurwitz units plus ½(±φ, ±1, ±φ⁻¹, 0) under even coordinate permutations.
std::vector<Quaternion> icosians() {
  std::vector<Quaternion> out = hurwitz_units();
  const double phi = std::numbers::phi;
  const std::array<double, 4> base{phi / 2, 0.5, 1 / (2 * phi), 0};
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    if (inversions % 2) continue;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<double, 4> v{};
      for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -base[static_cast<std::size_t>(i)] : base[static_cast<std::size_t>(i)];
      std::array<double, 4> w{};
      for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = v[static_cast<std::size_t>(i)];
      out.push_back({w[0], w[1], w[2], w[3]});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<GroupSpec> all_specs() {
  std::vector<GroupSpec> out;
  for (int m = 2; m <= 8; ++m) out.push_back(cyclic(m));
  for (int n = 2; n <= 6; ++n) out.push_back(dicyclic(n));
  out.insert(out.end(), {kT, kO, kI});
  return out;
}

/// χ(g) for every element g, through its class.
std::vector<std::vector<Complex>> element_characters(const UnitQuaternionGroup& g, const CharacterTable& t) {
  std::vector<int> class_of(g.order());
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (int x : t.classes[c].members) class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  std::vector<std::vector<Complex>> out(t.table.size(), std::vector<Complex>(g.order()));
  for (std::size_t i = 0; i < t.table.size(); ++i)
    for (std::size_t x = 0; x < g.order(); ++x) out[i][x] = t.table[i][static_cast<std::size_t>(class_of[x])];
  return out;
}

}  // namespace

TEST(Quaternion, Identities) {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1}, minus_one{-1, 0, 0, 0};
  for (const auto& q : {i * i, j * j, k * k, i * j * k}) EXPECT_LT(quat_distance(q, minus_one), 1e-15);
  EXPECT_LT(quat_distance(i * j, k), 1e-15);
  EXPECT_LT(quat_distance(j * i, -1.0 * k), 1e-15);
  Rng rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion p{u(rng), u(rng), u(rng), u(rng)}, q{u(rng), u(rng), u(rng), u(rng)};
    EXPECT_NEAR(quat_norm(p * q), quat_norm(p) * quat_norm(q), 1e-12);
    EXPECT_LT(quat_distance(quat_conj(p * q), quat_conj(q) * quat_conj(p)), 1e-12);
    EXPECT_NEAR((p * quat_conj(p)).a, quat_norm(p) * quat_norm(p), 1e-12);
  }
}

TEST(Groups, ParseNames) {
  EXPECT_EQ(parse_group("2T").kind, GroupKind::BinaryTetrahedral);
  EXPECT_EQ(parse_group("Cyclic(5)").parameter, 5);
  EXPECT_EQ(parse_group("BinaryDihedral(3)").kind, GroupKind::BinaryDihedral);
  for (const auto& s : all_specs()) EXPECT_EQ(parse_group(s.name()).name(), s.name());
  EXPECT_THROW(parse_group("2X"), InputError);
  EXPECT_THROW(parse_group("Cyclic()"), ParseError);
  EXPECT_THROW(parse_group("Cyclic(3"), ParseError);
  EXPECT_THROW(binary_group(dicyclic(1)), InputError);
  EXPECT_THROW(binary_group(cyclic(0)), InputError);
}

TEST(Groups, OrdersAndClosure) {
  for (const auto& s : all_specs()) {
    const auto g = binary_group(s);
    EXPECT_EQ(g.order(), s.expected_order()) << s.name();
    EXPECT_LT(quat_distance(g.elements[0], {1, 0, 0, 0}), 1e-15);
    for (std::size_t x = 0; x < g.order(); ++x) {
      EXPECT_NEAR(quat_norm(g.elements[x]), 1, 1e-12);
      EXPECT_EQ(g.mult[x][static_cast<std::size_t>(g.inverse[x])], 0);
      for (std::size_t y = 0; y < g.order(); ++y)
        EXPECT_LT(quat_distance(g.elements[x] * g.elements[y], g.elements[static_cast<std::size_t>(g.mult[x][y])]), 1e-9);
    }
  }
}

TEST(Groups, BinaryTetrahedralIsHurwitzUnits) {
  EXPECT_EQ(keys(binary_group(kT).elements), keys(hurwitz_units()));
  EXPECT_EQ(keys(hurwitz_units()).size(), 24u);
}

TEST(Groups, BinaryIcosahedralIsIcosians) {
  const auto expected = keys(icosians());
  EXPECT_EQ(expected.size(), 120u);
  EXPECT_EQ(keys(binary_group(kI).elements), expected);
}

TEST(Classes, Counts) {
  EXPECT_EQ(conjugacy_classes(binary_group(kT)).size(), 7u);
  EXPECT_EQ(conjugacy_classes(binary_group(kO)).size(), 8u);
  EXPECT_EQ(conjugacy_classes(binary_group(kI)).size(), 9u);
  for (int m = 2; m <= 8; ++m) EXPECT_EQ(conjugacy_classes(binary_group(cyclic(m))).size(), static_cast<std::size_t>(m));
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(conjugacy_classes(binary_group(dicyclic(n))).size(), static_cast<std::size_t>(n + 3));
}

TEST(Classes, PartitionAndConjugationClosure) {
  for (const auto& s : all_specs()) {
    const auto g = binary_group(s);
    const auto classes = conjugacy_classes(g);
    std::vector<int> seen(g.order(), 0);
    for (const auto& c : classes) {
      for (int x : c.members) ++seen[static_cast<std::size_t>(x)];
      const int r = c.representative;
      for (std::size_t y = 0; y < g.order(); ++y) {
        const int conj = g.mult[static_cast<std::size_t>(g.mult[y][static_cast<std::size_t>(r)])][static_cast<std::size_t>(g.inverse[y])];
        EXPECT_TRUE(std::binary_search(c.members.begin(), c.members.end(), conj));
      }
      EXPECT_EQ(g.order() % c.members.size(), 0u);
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; })) << s.name();
    EXPECT_EQ(classes.front().members, std::vector<int>{0});
  }
}

TEST(Characters, Orthogonality) {
  for (const auto& s : all_specs()) {
    SCOPED_TRACE(s.name());
    const auto g = binary_group(s);
    const auto t = character_table(g);
    const std::size_t k = t.classes.size();
    ASSERT_EQ(t.table.size(), k);
    const double order = static_cast<double>(g.order());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Complex row = 0, col = 0;
        for (std::size_t c = 0; c < k; ++c) row += static_cast<double>(t.class_size(c)) * t.table[i][c] * std::conj(t.table[j][c]);
        for (std::size_t r = 0; r < k; ++r) col += t.table[r][i] * std::conj(t.table[r][j]);
        EXPECT_LT(std::abs(row / order - (i == j ? 1.0 : 0.0)), 1e-9);
        EXPECT_LT(std::abs(col - (i == j ? order / static_cast<double>(t.class_size(i)) : 0.0)), 1e-9);
      }
    long long squares = 0;
    for (int d : t.dims) squares += static_cast<long long>(d) * d;
    EXPECT_EQ(squares, static_cast<long long>(g.order()));
    EXPECT_TRUE(std::is_sorted(t.dims.begin(), t.dims.end()));
    for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(t.table[i][0].real(), t.dims[i], 1e-9);
  }
}

TEST(Characters, SeedIndependent) {
  for (const auto& s : {kT, kO, kI, dicyclic(5)}) {
    const auto g = binary_group(s);
    const auto a = character_table(g, 1), b = character_table(g, 977);
    ASSERT_EQ(a.table.size(), b.table.size());
    for (std::size_t i = 0; i < a.table.size(); ++i)
      for (std::size_t c = 0; c < a.table[i].size(); ++c) EXPECT_LT(std::abs(a.table[i][c] - b.table[i][c]), 1e-9) << s.name();
  }
}

TEST(Characters, DimensionMultisets) {
  EXPECT_EQ(character_table(binary_group(kT)).dims, (std::vector<int>{1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(character_table(binary_group(kO)).dims, (std::vector<int>{1, 1, 2, 2, 2, 3, 3, 4}));
  EXPECT_EQ(character_table(binary_group(kI)).dims, (std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6}));
  EXPECT_EQ(character_table(binary_group(dicyclic(3))).dims, (std::vector<int>{1, 1, 1, 1, 2, 2}));
}

// aᵢⱼ = ⟨χ_V χᵢ, χⱼ⟩ summed element by element, χ_V(g) = 2·Re g
TEST(McKay, EntriesAgainstElementSums) {
  for (const auto& s : all_specs()) {
    const auto g = binary_group(s);
    const auto t = character_table(g);
    const auto chi = element_characters(g, t);
    const McKayGraph m = mckay_graph(g, t);
    for (std::size_t i = 0; i < chi.size(); ++i)
      for (std::size_t j = 0; j < chi.size(); ++j) {
        Complex sum = 0;
        for (std::size_t x = 0; x < g.order(); ++x) sum += 2 * g.elements[x].a * chi[i][x] * std::conj(chi[j][x]);
        sum /= static_cast<double>(g.order());
        EXPECT_NEAR(sum.real(), m.graph.edges(static_cast<int>(i), static_cast<int>(j)), 1e-9) << s.name();
        EXPECT_NEAR(sum.imag(), 0, 1e-9);
      }
    // χ_V·χᵢ = Σⱼ aᵢⱼ χⱼ pointwise
    for (std::size_t i = 0; i < chi.size(); ++i)
      for (std::size_t x = 0; x < g.order(); ++x) {
        Complex rhs = 0;
        for (std::size_t j = 0; j < chi.size(); ++j) rhs += static_cast<double>(m.graph.edges(static_cast<int>(i), static_cast<int>(j))) * chi[j][x];
        EXPECT_LT(std::abs(2 * g.elements[x].a * chi[i][x] - rhs), 1e-9);
      }
  }
}

TEST(McKay, DimensionsAreTwoEigenvector) {
  for (const auto& s : all_specs()) {
    const McKayGraph m = mckay_graph(binary_group(s));
    for (int i = 0; i < m.graph.size(); ++i) {
      long long sum = 0;
      for (int j = 0; j < m.graph.size(); ++j) sum += static_cast<long long>(m.graph.edges(i, j)) * m.dims[static_cast<std::size_t>(j)];
      EXPECT_EQ(sum, 2LL * m.dims[static_cast<std::size_t>(i)]) << s.name();
    }
    EXPECT_EQ(m.dims[static_cast<std::size_t>(m.trivial_node)], 1);
  }
}

TEST(McKay, EndToEnd) {
  for (int m = 2; m <= 8; ++m) {
    const auto r = mckay_correspondence(cyclic(m));
    EXPECT_EQ(r.recognition.type, (AffineType{Family::A, m - 1}));
    EXPECT_EQ(r.recognition.finite, (DiagramType{Family::A, m - 1}));
  }
  for (int n = 2; n <= 6; ++n) {
    const auto r = mckay_correspondence(dicyclic(n));
    EXPECT_EQ(r.recognition.type, (AffineType{Family::D, n + 2}));
    EXPECT_EQ(r.recognition.finite, (DiagramType{Family::D, n + 2}));
  }
  EXPECT_EQ(mckay_correspondence(kT).recognition.type.name(), "E6~");
  EXPECT_EQ(mckay_correspondence(kO).recognition.type.name(), "E7~");
  EXPECT_EQ(mckay_correspondence(kI).recognition.type.name(), "E8~");
  EXPECT_EQ(ade_of_group(kI), (DiagramType{Family::E, 8}));
  EXPECT_EQ(ade_of_group(kT), (DiagramType{Family::E, 6}));
  EXPECT_EQ(ade_of_group(kO), (DiagramType{Family::E, 7}));
}

TEST(McKay, TrivialGroupHasNoAffineGraph) {
  EXPECT_THROW(mckay_correspondence(cyclic(1)), VerificationError);
}

TEST(McKay, AffineMarksAreDimensions) {
  // the E8~ null vector: 1 2 3 4 5 6 4 2 3
  const auto r = mckay_correspondence(kI);
  std::multiset<int> dims(r.mckay.dims.begin(), r.mckay.dims.end());
  EXPECT_EQ(dims, (std::multiset<int>{1, 2, 3, 4, 5, 6, 4, 2, 3}));
  EXPECT_EQ(std::accumulate(r.mckay.dims.begin(), r.mckay.dims.end(), 0), 30);
}
