#include <gtest/gtest.h>

#include <cstdlib>

#include "affkm/loop.hpp"
#include "affkm/sampling.hpp"
#include "support.hpp"

using namespace affkm;

namespace {

AlgebraPtr build(const std::string& label) { return ChevAlgebra::build(make_datum(label)); }

// Matrix realization of sl(n+1): H_i = E_ii - E_{i+1,i+1}, and for the root
// a_i + ... + a_j a multiple of E_{i,j+1}. Returns n x n integer matrices.
using IntMat = std::vector<std::vector<long>>;

IntMat realize_sl(const ChevAlgebra& g, std::size_t b) {
  const int n = g.rank() + 1;
  IntMat e(n, std::vector<long>(n, 0));
  if (g.is_cartan(b)) {
    e[b][b] = 1;
    e[b + 1][b + 1] = -1;
    return e;
  }
  Root r = g.weight_of(b);
  int first = -1, last = -1;
  bool negative = false;
  for (int i = 0; i < g.rank(); ++i) {
    if (r[i] == 0) continue;
    negative = r[i] < 0;
    if (first < 0) first = i;
    last = i;
  }
  if (negative)
    e[last + 1][first] = 1;
  else
    e[first][last + 1] = 1;
  return e;
}

long trace_of_product(const IntMat& x, const IntMat& y) {
  long t = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) t += x[i][k] * y[k][i];
  return t;
}

// Killing form through traces of products of adjoint matrices built from the table.
long killing_by_trace(const ChevAlgebra& g, std::size_t a, std::size_t b) {
  Matrix ada = g.ad(g.basis_vec(1, a)), adb = g.ad(g.basis_vec(1, b));
  Matrix p = ada * adb;
  CycScalar t(1);
  for (std::size_t i = 0; i < p.rows(); ++i) t += p(i, i);
  return t.rational_part().get_num().get_si();
}

}  // namespace

TEST(Chevalley, RankOneRelations) {
  auto g = build("A1");
  ASSERT_EQ(g->dim(), 3u);
  const int m = 1;
  Vec h = g->basis_vec(m, 0), x = g->basis_vec(m, 1), y = g->basis_vec(m, 2);
  EXPECT_EQ(g->bracket(h, x), scaled(x, CycScalar(m, 2)));
  EXPECT_EQ(g->bracket(h, y), scaled(y, CycScalar(m, -2)));
  EXPECT_EQ(g->bracket(x, y), h);
  EXPECT_EQ(g->basis_label(0), "H_1");
  EXPECT_EQ(g->basis_label(1), "X_a1");
  EXPECT_EQ(g->basis_label(2), "X_-a1");
}

TEST(Chevalley, KillingValuesAgainstTraceOracle) {
  auto g = build("A1");
  EXPECT_EQ(g->killing(1, 2), 4);
  EXPECT_EQ(g->killing(0, 0), 8);
  EXPECT_EQ(g->killing(0, 1), 0);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(g->killing(a, b), killing_by_trace(*g, a, b));
}

TEST(Chevalley, DimensionsAndRootCounts) {
  for (int n = 1; n <= 8; ++n) {
    auto g = build("A" + std::to_string(n));
    EXPECT_EQ(g->roots().size(), static_cast<std::size_t>(n * (n + 1)));
    EXPECT_EQ(g->dim(), static_cast<std::size_t>(n * (n + 2)));
  }
  for (int n = 4; n <= 8; ++n) {
    auto g = build("D" + std::to_string(n));
    EXPECT_EQ(g->roots().size(), static_cast<std::size_t>(2 * n * (n - 1)));
    EXPECT_EQ(g->dim(), static_cast<std::size_t>(n * (2 * n - 1)));
  }
}

TEST(Chevalley, UnsupportedTypes) {
  EXPECT_THROW(make_datum("E6"), Unsupported);
  EXPECT_THROW(make_datum("B2"), Unsupported);
  EXPECT_THROW(make_datum("A9"), Unsupported);
  EXPECT_THROW(make_datum("D3"), Unsupported);
}

// sl(n+1) oracle: the Killing form is 2(n+1) tr(xy) and the table must agree
// with matrix commutators up to the sign freedom of root vectors, which the
// product [X_a, X_-a] = H_a removes for the pairing.
class SlOracle : public ::testing::TestWithParam<int> {};

TEST_P(SlOracle, KillingAndStructure) {
  const int n = GetParam();
  auto g = build("A" + std::to_string(n));
  const std::size_t dim = g->dim();
  std::vector<IntMat> mats;
  for (std::size_t b = 0; b < dim; ++b) mats.push_back(realize_sl(*g, b));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      EXPECT_EQ(g->killing(a, b), 2L * (n + 1) * trace_of_product(mats[a], mats[b])) << a << "," << b;
      // Brackets of root vectors: coefficient +-1 exactly when the matrix commutator is nonzero.
      if (g->is_cartan(a) || g->is_cartan(b)) continue;
      const auto& terms = g->bracket(a, b);
      Root sum = g->weight_of(a);
      Root wb = g->weight_of(b);
      bool zero_sum = true;
      for (int i = 0; i < n; ++i) {
        sum[i] += wb[i];
        zero_sum = zero_sum && sum[i] == 0;
      }
      if (zero_sum) continue;
      auto target = g->basis_of(sum);
      if (!target) {
        EXPECT_TRUE(terms.empty());
        continue;
      }
      ASSERT_EQ(terms.size(), 1u);
      EXPECT_EQ(terms[0].index, *target);
      EXPECT_EQ(std::labs(terms[0].coeff), 1);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Ranks, SlOracle, ::testing::Values(1, 2, 3, 4));

TEST(Chevalley, IdentitiesHoldOnAllSupportedTypes) {
  for (const char* label : {"A1", "A2", "A3", "A4", "D4", "D5"}) {
    auto g = build(label);
    auto j = check_jacobi(*g);
    auto k = check_killing_invariance(*g);
    EXPECT_GT(j.checked, 0u);
    EXPECT_EQ(j.failures, 0u) << label;
    EXPECT_EQ(k.failures, 0u) << label;
  }
}

TEST(Chevalley, KillingOnSimplyLacedCoroots) {
  // For simply-laced types with Coxeter number h: (H_i, H_j) = 2h a_ij and (X_a, X_-a) = 2h.
  for (auto [label, h] : std::vector<std::pair<std::string, long>>{{"D4", 6}, {"D5", 8}, {"A3", 4}}) {
    auto g = build(label);
    for (int i = 0; i < g->rank(); ++i)
      for (int j = 0; j < g->rank(); ++j) EXPECT_EQ(g->killing(i, j), 2 * h * g->cartan()[i][j]);
    for (std::size_t r = 0; r < g->num_positive(); ++r) {
      auto pos = g->basis_of(g->roots()[r]);
      auto neg = g->basis_of(negate(g->roots()[r]));
      EXPECT_EQ(g->killing(*pos, *neg), 2 * h);
    }
  }
}

TEST(Roots, NamesRoundTrip) {
  auto g = build("D5");
  for (const auto& r : g->roots()) {
    auto back = parse_root_name(root_name(r), g->rank());
    ASSERT_TRUE(back.has_value()) << root_name(r);
    EXPECT_EQ(*back, r);
  }
  EXPECT_EQ(root_name({1, 2, 0}), "a122");
  EXPECT_EQ(root_name({-1, -1}), "-a12");
  EXPECT_FALSE(parse_root_name("a4", 3).has_value());
}

TEST(Diagram, IdentityAndFlip) {
  auto g = build("A2");
  auto id = DiagramAuto::identity(g);
  EXPECT_EQ(id->order(), 1);
  for (std::size_t r = 0; r < g->roots().size(); ++r) EXPECT_EQ(id->sign(r), 1);

  auto flip = DiagramAuto::build(g, {1, 0});
  EXPECT_EQ(flip->order(), 2);
  // Automorphism on all 8^3 basis triples: sigma[a,b] = [sigma a, sigma b].
  const int m = 2;
  std::size_t checked = 0;
  for (std::size_t a = 0; a < g->dim(); ++a)
    for (std::size_t b = 0; b < g->dim(); ++b) {
      Vec x = g->basis_vec(m, a), y = g->basis_vec(m, b);
      EXPECT_EQ(flip->apply(g->bracket(x, y)), g->bracket(flip->apply(x), flip->apply(y)));
      EXPECT_EQ(flip->apply(flip->apply(x)), x);
      EXPECT_EQ(flip->apply_inverse(flip->apply(x)), x);
      ++checked;
    }
  EXPECT_EQ(checked, 64u);
}

TEST(Diagram, InvalidPermutationsRejected) {
  auto g = build("A3");
  EXPECT_THROW(DiagramAuto::build(g, {1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(DiagramAuto::build(g, {0, 0, 2}), std::invalid_argument);
}

TEST(Diagram, EigenspaceDimensions) {
  auto flip = affkm::testing::data_algebra("a2_flip.alg");
  auto spaces = sigma_eigenspaces(*flip->sigma());
  ASSERT_EQ(spaces.size(), 2u);
  EXPECT_EQ(spaces[0].size(), 3u);
  EXPECT_EQ(spaces[1].size(), 5u);

  auto tri = affkm::testing::data_algebra("d4_triality.alg");
  EXPECT_EQ(tri->order(), 3);
  auto d4 = sigma_eigenspaces(*tri->sigma());
  EXPECT_EQ(d4[0].size(), 14u);
  EXPECT_EQ(d4[1].size(), 7u);
  EXPECT_EQ(d4[2].size(), 7u);

  auto a1 = affkm::testing::data_algebra("a1.alg");
  auto one = sigma_eigenspaces(*a1->sigma());
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].size(), 3u);
}

TEST(Diagram, FixedCartan) {
  auto flip = affkm::testing::data_algebra("a2_flip.alg");
  const auto& fc = flip->fixed_cartan();
  EXPECT_EQ(fc.h0.size(), 1u);
  EXPECT_EQ(fc.h.size(), 2u);
  EXPECT_EQ(centralizer_in_g(flip->g(), 2, fc.h0).size(), 2u);

  auto a2 = affkm::testing::data_algebra("a2.alg");
  EXPECT_EQ(a2->fixed_cartan().h0.size(), 2u);
  auto tri = affkm::testing::data_algebra("d4_triality.alg");
  EXPECT_EQ(tri->fixed_cartan().h0.size(), 2u);
  EXPECT_EQ(tri->fixed_cartan().h.size(), 4u);
}

TEST(Diagram, SymmetriesEnumerated) {
  EXPECT_EQ(diagram_symmetries(*build("A1")).size(), 1u);
  EXPECT_EQ(diagram_symmetries(*build("A3")).size(), 2u);
  EXPECT_EQ(diagram_symmetries(*build("D4")).size(), 6u);
  EXPECT_EQ(diagram_symmetries(*build("D5")).size(), 2u);
}
