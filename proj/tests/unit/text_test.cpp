#include <gtest/gtest.h>

#include <functional>

#include "affkm/sampling.hpp"
#include "affkm/text.hpp"
#include "support.hpp"

using namespace affkm;
using affkm::testing::data_algebra;

TEST(Text, ExponentForms) {
  EXPECT_EQ(exponent_text(3, 1), "t^3");
  EXPECT_EQ(exponent_text(-2, 1), "t^(-2)");
  EXPECT_EQ(exponent_text(3, 2), "t^(3/2)");
  EXPECT_EQ(exponent_text(-1, 3), "t^(-1/3)");
  EXPECT_EQ(exponent_text(4, 2), "t^2");
}

TEST(Text, PrintsElements) {
  auto a1 = data_algebra("a1.alg");
  AffineElt x = parse_affine(a1->g_ptr(), 1, "2*X_a*t - H + 3/2*c + d");
  EXPECT_EQ(x, parse_affine(a1->g_ptr(), 1, to_text(x)));
  EXPECT_EQ(to_text(parse_affine(a1->g_ptr(), 1, "0")), "0");
  EXPECT_EQ(parse_affine(a1->g_ptr(), 1, "H_1"), parse_affine(a1->g_ptr(), 1, "H"));
  EXPECT_EQ(parse_affine(a1->g_ptr(), 1, "X_a1*t^(-1)"), parse_affine(a1->g_ptr(), 1, "X_a*s^(-1)"));
  EXPECT_EQ(parse_affine(a1->g_ptr(), 1, "(H + X_a)*t^2"), parse_affine(a1->g_ptr(), 1, "H*t^2 + X_a*t^2"));
  EXPECT_EQ(parse_affine(a1->g_ptr(), 1, "H/4"), parse_affine(a1->g_ptr(), 1, "1/4*H"));
}

TEST(Text, FractionalExponentsAndZeta) {
  auto tri = data_algebra("d4_triality.alg");
  AffineElt x = parse_affine(tri->g_ptr(), 3, "z*X_a1*t^(1/3) + (1-z)*X_a3*t^(1/3)");
  EXPECT_EQ(x.loop.min_degree(), 1);
  EXPECT_EQ(x, parse_affine(tri->g_ptr(), 3, to_text(x)));
  EXPECT_EQ(parse_laurent(3, "t^(2/3) + 2*t"), Laurent::monomial(2, CycScalar(3, 1)) + Laurent::monomial(3, CycScalar(3, 2)));
  EXPECT_EQ(parse_scalar(3, "z*z"), CycScalar(3, -1, -1));
}

TEST(Text, RandomRoundTrip) {
  for (const char* f : {"a1.alg", "a2_flip.alg", "a3.alg", "d4_triality.alg"}) {
    auto alg = data_algebra(f);
    const int m = alg->order();
    Rng rng(55);
    for (int i = 0; i < 60; ++i) {
      AffineElt x = random_affine(*alg, rng, -3 * m, 3 * m, true, true, 4);
      EXPECT_EQ(parse_affine(alg->g_ptr(), m, to_text(x)), x) << to_text(x);
    }
  }
}

TEST(Text, WordRoundTrip) {
  for (const char* f : {"a1.alg", "a2_flip.alg", "a2.alg"}) {
    auto alg = data_algebra(f);
    const int m = alg->order();
    Rng rng(56);
    for (Level level : {Level::Loop, Level::Tilde, Level::Hat}) {
      for (int i = 0; i < 20; ++i) {
        AutoWord w = random_word(*alg, rng, level, 4);
        AutoWord back = parse_word(*alg, to_text(w));
        EXPECT_EQ(to_text(back), to_text(w));
        AffineElt x = random_affine(*alg, rng, -2 * m, 2 * m, level != Level::Loop, level == Level::Hat);
        EXPECT_EQ(apply_word(back, x), apply_word(w, x));
      }
    }
  }
}

TEST(Text, WordDefaultsAndIdentity) {
  auto a1 = data_algebra("a1.alg");
  EXPECT_EQ(parse_word(*a1, "cochar(1)").level, Level::Hat);
  EXPECT_EQ(parse_word(*a1, "id").gens.size(), 0u);
  EXPECT_EQ(to_text(parse_word(*a1, "id")), "id @ hat");
  AutoWord w = parse_word(*a1, "rootexp(a1, 2*t^1) . ring(1,-1) @ tilde");
  EXPECT_EQ(w.level, Level::Tilde);
  ASSERT_EQ(w.gens.size(), 2u);
  EXPECT_EQ(w.gens[0].kind, GenKind::RootExp);
  EXPECT_EQ(w.gens[1].e, -1);
}

namespace {

void expect_parse_error(const std::function<void()>& f, int line, int column) {
  try {
    f();
    ADD_FAILURE() << "no ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

}  // namespace

TEST(Text, ErrorsCarryPositions) {
  auto a1 = data_algebra("a1.alg");
  auto flip = data_algebra("a2_flip.alg");
  const ChevAlgebra* g = a1->g_ptr();
  expect_parse_error([&] { parse_affine(g, 1, "H + Q"); }, 1, 5);
  expect_parse_error([&] { parse_affine(g, 1, "H $ 2", 4); }, 4, 3);
  expect_parse_error([&] { parse_affine(g, 1, "H*X_a"); }, 1, 3);
  expect_parse_error([&] { parse_affine(g, 1, "X_a*t^(1/2)"); }, 1, 7);
  expect_parse_error([&] { parse_affine(flip->g_ptr(), 2, "H_1*t^(1/3)"); }, 1, 7);
  EXPECT_THROW(parse_affine(g, 1, "c*t^2"), ParseError);
  EXPECT_THROW(parse_affine(g, 1, "H/0"), ParseError);
  EXPECT_THROW(parse_word(*a1, "vshift(1) @ loop"), ParseError);
  EXPECT_THROW(parse_word(*a1, "rootexp(a2, 1)"), ParseError);
  EXPECT_THROW(parse_word(*a1, "cochar(1, 2)"), ParseError);
  EXPECT_THROW(parse_word(*a1, "spin(1)"), ParseError);
  EXPECT_THROW(parse_word(*a1, "id @ top"), ParseError);
}

TEST(Description, ParsesFiles) {
  AlgebraDescription d = parse_description("schema 1\n# comment\ntype D4   # trailing\ndiagram 3 2 4 1\n");
  EXPECT_EQ(d.datum.label, "D4");
  EXPECT_EQ(d.diagram, (std::vector<int>{2, 1, 3, 0}));
  EXPECT_EQ(build_algebra(d)->order(), 3);
  EXPECT_EQ(load_algebra("A3")->g().dim(), 15u);
}

TEST(Description, TableType) {
  AlgebraDescription d = parse_description(
      "schema 1\ntype TABLE\ncartan 2 -1\ncartan -1 2\n"
      "constant a1 a2 1\nconstant a2 -a12 1\nconstant -a12 a1 1\n"
      "constant -a1 -a2 -1\nconstant -a2 a12 -1\nconstant a12 -a1 -1\n");
  auto alg = build_algebra(d);
  EXPECT_EQ(alg->g().dim(), 8u);
  EXPECT_EQ(check_jacobi(alg->g()).failures, 0u);
}

TEST(Description, ErrorsCarryPositions) {
  expect_parse_error([] { parse_description("schema 1\ntype A2\nfoo 3\n"); }, 3, 1);
  expect_parse_error([] { parse_description("type A2\n"); }, 1, 1);
  expect_parse_error([] { parse_description("schema 2\n"); }, 1, 8);
  expect_parse_error([] { parse_description("schema 1\ntype A2\ndiagram 2 x\n"); }, 3, 11);
  expect_parse_error([] { parse_description("schema 1\ntype A2\ndiagram 0 1\n"); }, 3, 9);
  expect_parse_error([] { parse_description("schema 1\n"); }, 2, 1);
  EXPECT_THROW(parse_description("schema 1\ntype E8\n"), Unsupported);
  EXPECT_THROW(load_algebra("/nonexistent/file.alg"), std::runtime_error);
}
