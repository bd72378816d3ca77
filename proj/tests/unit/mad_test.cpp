#include <gtest/gtest.h>

#include "affkm/mad.hpp"
#include "affkm/text.hpp"
#include "support.hpp"

using namespace affkm;
using affkm::testing::data_algebra;

namespace {

AffineElt el(const LoopAlgebra& alg, const std::string& text) { return parse_affine(alg.g_ptr(), alg.order(), text); }

Window hat_window(const LoopAlgebra& alg) {
  const int m = alg.order();
  return Window::make(alg, -3 * m, 3 * m, true, true);
}

}  // namespace

TEST(Mad, StandardDimensions) {
  EXPECT_EQ(affine_span_rank(standard_mad(*data_algebra("a1.alg")).generators), 3u);
  EXPECT_EQ(affine_span_rank(standard_mad(*data_algebra("a2.alg")).generators), 4u);
  EXPECT_EQ(affine_span_rank(standard_mad(*data_algebra("a2_flip.alg")).generators), 3u);
  EXPECT_EQ(affine_span_rank(standard_mad(*data_algebra("d4_triality.alg")).generators), 4u);
}

TEST(Mad, Diagonalizability) {
  auto a1 = data_algebra("a1.alg");
  Window w = hat_window(*a1);
  auto center = is_diagonalizable(*a1, SubalgebraSpec{{el(*a1, "c")}}, w);
  EXPECT_TRUE(center.diagonalizable);
  ASSERT_EQ(center.weights.size(), 1u);
  EXPECT_TRUE(center.weights[0].values[0].is_zero());
  EXPECT_EQ(center.weights[0].dim, w.size());

  auto nil = is_diagonalizable(*a1, SubalgebraSpec{{el(*a1, "X_a")}}, w);
  EXPECT_FALSE(nil.diagonalizable);
  ASSERT_TRUE(nil.witness.has_value());
  EXPECT_EQ(*nil.witness, el(*a1, "X_a"));

  auto std_mad = is_diagonalizable(*a1, standard_mad(*a1), w);
  EXPECT_TRUE(std_mad.diagonalizable);
  std::size_t total = 0;
  for (const auto& jw : std_mad.weights) total += jw.dim;
  EXPECT_EQ(total, std_mad.invariant_dim);

  EXPECT_THROW(is_diagonalizable(*a1, SubalgebraSpec{{el(*a1, "X_a"), el(*a1, "X_-a")}}, w), NotAbelian);
}

TEST(Mad, SanityOnStandardAndTruncated) {
  for (const char* f : {"a1.alg", "a2.alg", "a2_flip.alg"}) {
    auto alg = data_algebra(f);
    Window w = hat_window(*alg);
    Report ok = mad_sanity(*alg, standard_mad(*alg), w);
    EXPECT_TRUE(ok.ok()) << f;
  }
  auto a1 = data_algebra("a1.alg");
  Report r = mad_sanity(*a1, SubalgebraSpec{{el(*a1, "c"), el(*a1, "H + d")}}, hat_window(*a1));
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.extra.contains("probe"));
  EXPECT_EQ(r.extra["probe"].get<std::string>(), "H_1*t^0");
  EXPECT_EQ(r.failures.size(), 2u);  // dimension and maximality

  // Dropping a Cartan direction from the A2 standard subalgebra.
  auto a2 = data_algebra("a2.alg");
  Report r2 = mad_sanity(*a2, SubalgebraSpec{{el(*a2, "H_1"), el(*a2, "c"), el(*a2, "d")}}, hat_window(*a2));
  EXPECT_FALSE(r2.ok());
  ASSERT_TRUE(r2.extra.contains("probe"));

  Report no_d = mad_sanity(*a1, SubalgebraSpec{{el(*a1, "c"), el(*a1, "H")}}, hat_window(*a1));
  EXPECT_FALSE(no_d.ok());
  EXPECT_FALSE(no_d.extra["derivation"].get<bool>());
}

TEST(Mad, Centralizers) {
  auto a1 = data_algebra("a1.alg");
  EXPECT_EQ(centralizer(*a1, {}, -1, 1).size(), 9u);
  auto hc = centralizer(*a1, {el(*a1, "H").loop}, -2, 2);
  EXPECT_EQ(hc.size(), 5u);
  for (const auto& y : hc) EXPECT_TRUE(bracket_loop(y, el(*a1, "H").loop).is_zero());

  auto flip = data_algebra("a2_flip.alg");
  auto h0 = flip->fixed_cartan().h0;
  auto fc = centralizer(*flip, {LoopElt::from_vec(flip->g_ptr(), h0[0], 0)}, -2, 2);
  // h0 in even degrees and the other Cartan direction in odd degrees.
  EXPECT_EQ(fc.size(), 5u);
}

TEST(Mad, ConjugacyVerification) {
  auto a1 = data_algebra("a1.alg");
  SubalgebraSpec h = standard_mad(*a1);
  EXPECT_TRUE(conjugacy_verify(*a1, parse_word(*a1, "id"), h).ok());
  EXPECT_TRUE(conjugacy_verify(*a1, v_auto(CycScalar(1, 3)), h).ok());
  AutoWord w = parse_word(*a1, "rootexp(a1, 2*t^1) . cochar(1) @ hat");
  SubalgebraSpec image;
  for (const auto& x : h.generators) image.generators.push_back(apply_word(w, x));
  EXPECT_FALSE(conjugacy_verify(*a1, parse_word(*a1, "id"), image).ok());
  EXPECT_TRUE(conjugacy_verify(*a1, inverse(w, *a1), image).ok());
  EXPECT_TRUE(is_diagonalizable(*a1, image, hat_window(*a1)).diagonalizable);
}

TEST(Mad, SuiteReport) {
  auto flip = data_algebra("a2_flip.alg");
  Report r = mad_suite(*flip, hat_window(*flip), 5, 3);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.extra["standard"]["dim"].get<int>(), 3);
  EXPECT_FALSE(r.extra["truncated"]["probe"].is_null());
}
