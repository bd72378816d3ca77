#include <gtest/gtest.h>

#include <map>

#include "affkm/sampling.hpp"
#include "affkm/spectral.hpp"
#include "affkm/text.hpp"
#include "support.hpp"

using namespace affkm;
using affkm::testing::data_algebra;

namespace {

AffineElt el(const LoopAlgebra& alg, const std::string& text) { return parse_affine(alg.g_ptr(), alg.order(), text); }

struct OracleWeight {
  std::size_t in_window = 0;
  bool interior = true;
};

// Untwisted x = h (x) 1 + d with h in the Cartan: X_b s^p has weight b(h) + p,
// so the weight space at w is spanned by one monomial per basis element whose
// root value differs from w by an integer.
std::map<CycScalar, OracleWeight, CycLess> closed_form_oracle(const ChevAlgebra& g, const std::vector<Rational>& h,
                                                              int lo, int hi) {
  std::map<CycScalar, OracleWeight, CycLess> out;
  std::vector<Rational> values;
  for (std::size_t b = 0; b < g.dim(); ++b) {
    Rational v = 0;
    Root r = g.weight_of(b);
    for (int i = 0; i < g.rank(); ++i)
      for (int j = 0; j < g.rank(); ++j) v += h[i] * r[j] * g.cartan()[i][j];
    values.push_back(v);
  }
  for (int p = lo; p <= hi; ++p) {
    for (std::size_t b = 0; b < g.dim(); ++b) {
      Rational w = values[b] + p;
      auto& o = out[CycScalar(1, w)];
      if (o.in_window > 0) continue;
      for (std::size_t c = 0; c < g.dim(); ++c) {
        Rational q = w - values[c];
        if (q.get_den() != 1) continue;
        long deg = q.get_num().get_si();
        if (deg >= lo && deg <= hi)
          ++o.in_window;
        else
          o.interior = false;
      }
    }
  }
  return out;
}

void expect_matches_oracle(const LoopAlgebra& alg, const std::vector<Rational>& h, int lo, int hi) {
  const ChevAlgebra& g = alg.g();
  AffineElt x(alg.g_ptr(), 1);
  Vec hv = zero_vec(1, g.dim());
  for (int i = 0; i < g.rank(); ++i) hv[i] = CycScalar(1, h[i]);
  x.loop = LoopElt::from_vec(alg.g_ptr(), hv, 0);
  x.d = CycScalar(1, 1);
  WeightDecomp d = weight_decompose(alg, x, Window::make(alg, lo, hi));
  EXPECT_TRUE(d.closed_form);
  EXPECT_TRUE(d.diagonalizable);
  auto oracle = closed_form_oracle(g, h, lo, hi);
  ASSERT_EQ(d.weights.size(), oracle.size()) << to_text(x);
  for (const auto& s : d.weights) {
    auto it = oracle.find(s.w);
    ASSERT_NE(it, oracle.end()) << s.w.str();
    EXPECT_EQ(s.basis.size(), it->second.in_window) << s.w.str();
    EXPECT_EQ(s.interior, it->second.interior) << s.w.str();
  }
}

bool spans_equal(const std::vector<AffineElt>& a, const std::vector<AffineElt>& b) { return affine_same_span(a, b); }

}  // namespace

TEST(AdMatrix, DerivationIsDiagonal) {
  auto flip = data_algebra("a2_flip.alg");
  Window w = Window::make(*flip, -2, 2);
  AdMatrix ad = ad_matrix(*flip, el(*flip, "d"), w);
  EXPECT_TRUE(ad.square.is_diagonal());
  EXPECT_TRUE(ad.outside.is_zero());
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(ad.square(i, i), CycScalar(2, w.degree[i]));
}

TEST(AdMatrix, FlagsColumnsLeavingTheWindow) {
  auto a1 = data_algebra("a1.alg");
  Window w = Window::make(*a1, -1, 1);
  AdMatrix ad = ad_matrix(*a1, el(*a1, "X_a*t^1"), w);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const bool top = w.degree[j] == 1;
    const bool killed = w.slot[j] >= 0 && to_text(w.basis[j]).rfind("X_a1*", 0) == 0;
    EXPECT_EQ(ad.leaves[j], top && !killed) << to_text(w.basis[j]);
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    auto back = window_coords(*a1, w, w.basis[j]);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(from_window_coords(w, *back), w.basis[j]);
  }
  EXPECT_FALSE(window_coords(*a1, w, el(*a1, "H*t^2")).has_value());
}

TEST(WeightDecomp, ClosedFormOracle) {
  auto a1 = data_algebra("a1.alg");
  expect_matches_oracle(*a1, {Rational(1)}, -3, 3);
  expect_matches_oracle(*a1, {Rational(1, 5)}, -3, 3);
  expect_matches_oracle(*a1, {Rational(2, 3)}, -4, 2);
  auto a2 = data_algebra("a2.alg");
  expect_matches_oracle(*a2, {Rational(1, 7), Rational(2, 7)}, -3, 3);
  expect_matches_oracle(*a2, {Rational(1), Rational(0)}, -2, 4);
}

TEST(WeightDecomp, HPlusDWeightsAndShift) {
  auto a1 = data_algebra("a1.alg");
  WeightDecomp d = weight_decompose(*a1, el(*a1, "H + d"), Window::make(*a1, -6, 6));
  for (int w = -4; w <= 4; ++w) {
    const auto* s = d.find(CycScalar(1, w));
    ASSERT_NE(s, nullptr);
    EXPECT_TRUE(s->interior);
    EXPECT_EQ(s->basis.size(), 3u);
  }
  const auto* a0 = d.find(CycScalar(1, 0));
  EXPECT_TRUE(spans_equal(a0->basis, {el(*a1, "H"), el(*a1, "X_a*t^(-2)"), el(*a1, "X_-a*t^2")}));
  const auto* a2 = d.find(CycScalar(1, 2));
  const auto* a3 = d.find(CycScalar(1, 3));
  std::vector<AffineElt> shifted;
  for (const auto& v : a2->basis) shifted.emplace_back(v.loop.shifted(1));
  EXPECT_TRUE(spans_equal(shifted, a3->basis));
  EXPECT_FALSE(d.is_interior(CycScalar(1, 6)));
}

TEST(WeightDecomp, DerivationAlone) {
  for (const char* f : {"a1.alg", "a2_flip.alg"}) {
    auto alg = data_algebra(f);
    WeightDecomp d = weight_decompose(*alg, el(*alg, "d"), Window::make(*alg, -2, 2));
    const auto* a0 = d.find(CycScalar(alg->order()));
    ASSERT_NE(a0, nullptr);
    EXPECT_TRUE(a0->interior);
    std::vector<AffineElt> slice;
    for (const auto& v : alg->eigenbasis(0)) slice.emplace_back(LoopElt::from_vec(alg->g_ptr(), v, 0));
    EXPECT_TRUE(spans_equal(a0->basis, slice)) << f;
  }
}

TEST(WeightDecomp, HatLevelZeroWeight) {
  auto a1 = data_algebra("a1.alg");
  AffineElt x = el(*a1, "H + d");
  WeightDecomp d = weight_decompose(*a1, x, Window::make(*a1, -3, 3, true, true));
  const auto* a0 = d.find(CycScalar(1));
  ASSERT_NE(a0, nullptr);
  for (const char* y : {"H", "c"}) EXPECT_TRUE(affine_in_span(a0->basis, el(*a1, y))) << y;
  EXPECT_TRUE(affine_in_span(a0->basis, x));
}

TEST(WeightDecomp, RegularElements) {
  auto a1 = data_algebra("a1.alg");
  EXPECT_EQ(regular_element(*a1), el(*a1, "1/5*H + d"));
  WeightDecomp d1 = weight_decompose(*a1, regular_element(*a1), Window::standard(*a1));
  EXPECT_EQ(d1.series_count, 3);
  for (const auto& s : d1.weights)
    if (s.interior) EXPECT_EQ(s.basis.size(), 1u) << s.w.str();

  auto flip = data_algebra("a2_flip.alg");
  WeightDecomp d2 = weight_decompose(*flip, regular_element(*flip), Window::standard(*flip));
  EXPECT_EQ(d2.series_count, 8);
  EXPECT_TRUE(d2.diagonalizable);
  const auto* zero = d2.find(CycScalar(2));
  ASSERT_NE(zero, nullptr);
  EXPECT_EQ(zero->basis.size(), 1u);
}

// H + X_a t + d is conjugate to H + d by exp(ad(-X_a t / 3)), so the interior
// weight spaces must have the same dimensions, found without the closed form.
TEST(WeightDecomp, ConjugateOfClosedForm) {
  auto a1 = data_algebra("a1.alg");
  Window w = Window::make(*a1, -6, 6);
  WeightDecomp base = weight_decompose(*a1, el(*a1, "H + d"), w.enlarged(*a1, 4));
  WeightDecomp twisted = weight_decompose(*a1, el(*a1, "H + X_a*t + d"), w);
  EXPECT_FALSE(twisted.closed_form);
  EXPECT_TRUE(twisted.diagonalizable);
  std::size_t compared = 0;
  for (const auto& s : twisted.weights) {
    if (!s.interior) continue;
    const auto* b = base.find(s.w);
    ASSERT_NE(b, nullptr) << s.w.str();
    EXPECT_EQ(b->basis.size(), s.basis.size()) << s.w.str();
    ++compared;
  }
  EXPECT_GT(compared, 3u);
  EXPECT_TRUE(verify_eigenvectors(twisted).ok());
}

TEST(WeightDecomp, InteriorIsStableUnderEnlargement) {
  auto flip = data_algebra("a2_flip.alg");
  AffineElt x = el(*flip, "H_1 + H_2 + X_a1*t^(1/2) - X_a2*t^(1/2) + 2*d");
  if (!flip->is_in_twisted(x.loop)) x = el(*flip, "H_1 + H_2 + X_a1*t^(1/2) + X_a2*t^(1/2) + 2*d");
  ASSERT_TRUE(flip->is_in_twisted(x.loop));
  WeightDecomp small = weight_decompose(*flip, x, Window::make(*flip, -6, 6));
  WeightDecomp big = weight_decompose(*flip, x, Window::make(*flip, -14, 14));
  std::size_t compared = 0;
  for (const auto& s : small.weights) {
    if (!s.interior) continue;
    const auto* b = big.find(s.w);
    ASSERT_NE(b, nullptr);
    EXPECT_TRUE(b->interior);
    EXPECT_TRUE(spans_equal(s.basis, b->basis)) << s.w.str();
    ++compared;
  }
  EXPECT_GT(compared, 0u);
}

TEST(WeightDecomp, DefectiveElement) {
  auto a1 = data_algebra("a1.alg");
  WeightDecomp d = weight_decompose(*a1, el(*a1, "X_a + d"), Window::make(*a1, -3, 3));
  EXPECT_FALSE(d.diagonalizable);
  EXPECT_TRUE(verify_jordan_blocks(*a1, el(*a1, "X_a + H + d"), Window::make(*a1, -2, 2)).ok());
  EXPECT_TRUE(verify_jordan_blocks(*a1, el(*a1, "X_a + 2*d"), Window::make(*a1, -2, 2)).ok());
}

TEST(WeightDecomp, InvalidInputs) {
  auto a1 = data_algebra("a1.alg");
  EXPECT_THROW(weight_decompose(*a1, el(*a1, "H"), Window::standard(*a1)), std::invalid_argument);
  auto flip = data_algebra("a2_flip.alg");
  EXPECT_THROW(weight_decompose(*flip, el(*flip, "H_1 + d"), Window::standard(*flip)), std::invalid_argument);
}

TEST(WeightDecomp, LemmaChecksOnSeveralAlgebras) {
  for (const char* f : {"a1.alg", "a2.alg", "a2_flip.alg", "d4_triality.alg"}) {
    auto alg = data_algebra(f);
    const int m = alg->order();
    Report r = spectral_suite(*alg, regular_element(*alg), Window::standard(*alg), CycScalar(m, 1));
    EXPECT_TRUE(r.ok()) << f << ": " << (r.ok() ? "" : r.failures.front().lhs + " vs " + r.failures.front().rhs);
  }
}

TEST(WeightDecomp, LemmaChecksUnderRandomConjugation) {
  auto flip = data_algebra("a2_flip.alg");
  Rng rng(8);
  AffineElt x = regular_element(*flip);
  for (int i = 0; i < 5; ++i) {
    AffineElt xt = apply_word(random_word(*flip, rng, Level::Hat, 3), x);
    const int spread = 2 * ((xt.loop.degree_radius() + 1) / 2);
    Window w = Window::make(*flip, -6 - spread, 6 + spread);
    WeightDecomp d = weight_decompose(*flip, xt, w);
    EXPECT_TRUE(verify_eigenvectors(d).ok());
    EXPECT_TRUE(verify_shift(*flip, d).ok());
    EXPECT_TRUE(verify_zero_weight(d).ok());
    EXPECT_TRUE(verify_product_rule(d).ok());
  }
}

TEST(WeightDecomp, Insider) {
  auto a1 = data_algebra("a1.alg");
  EXPECT_TRUE(verify_insider(*a1, regular_element(*a1), Window::make(*a1, -3, 3, true, true)).ok());
  auto flip = data_algebra("a2_flip.alg");
  EXPECT_TRUE(verify_insider(*flip, regular_element(*flip), Window::make(*flip, -6, 6, true, true)).ok());
}

TEST(WeightDecomp, JsonShape) {
  auto a1 = data_algebra("a1.alg");
  WeightDecomp d = weight_decompose(*a1, regular_element(*a1), Window::standard(*a1));
  auto j = to_json(d);
  ASSERT_TRUE(j.contains("weights"));
  EXPECT_EQ(j["weights"].size(), d.weights.size());
}
