#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vero/invariants.hpp"
#include "vero/toric.hpp"

using namespace vero;

namespace {

using Q = Rationals;

template <Field F>
Ideal<F> I(const std::string& gens, const RingPtr<F>& r) {
  return Ideal<F>(r, make_polynomial_list(gens, r));
}

RingPtr<Q> qq(const std::string& names) { return make_ring(Q{}, split_names(names)); }

}  // namespace

TEST(DimMonomial, Examples) {
  auto r = qq("a,b,c");
  auto d = dim_monomial(I("a*b, b*c", r));
  EXPECT_EQ(d.dim, 2u);
  EXPECT_EQ(d.height, 1u);
  auto x = make_ring(Q{}, "x", 5);
  EXPECT_EQ(dim_monomial(I("x1, x2, x3, x4, x5", x)).dim, 0u);
  EXPECT_EQ(dim_monomial(I("x1, x2, x3, x4, x5", x)).height, 5u);
  EXPECT_EQ(dim_monomial(I("x2^2", x)).dim, 4u);
  EXPECT_THROW(dim_monomial(I("a + b", r)), InvalidArgument);
}

TEST(DimMonomial, AgreesWithSubsetSearch) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 80; ++it) {
    const std::size_t n = 3 + rng() % 4;
    auto r = make_ring(Q{}, "x", n);
    std::vector<std::vector<Exponent>> gens;
    std::vector<Polynomial<Q>> polys;
    for (int j = 0, cnt = 1 + rng() % 4; j < cnt; ++j) {
      std::vector<Exponent> e(n, 0);
      for (auto& x : e) x = rng() % 3 == 0 ? 1 + rng() % 2 : 0;
      if (std::all_of(e.begin(), e.end(), [](Exponent v) { return v == 0; })) e[0] = 1;
      gens.push_back(e);
      polys.push_back(Polynomial<Q>::monomial(r, Q{}.one(), Monomial(std::span<const Exponent>(e))));
    }
    auto d = dim_monomial(Ideal<Q>(r, polys));
    EXPECT_EQ(d.dim, oracle::monomial_dim_ref(n, gens));
    EXPECT_EQ(d.dim + d.height, n);
  }
}

TEST(DimMonomial, ArityCap) {
  auto r = make_ring(Q{}, "x", kMaxMonomialDimArity + 1);
  EXPECT_THROW(dim_monomial(I("x1", r)), ResourceCapError);
}

TEST(KrullDim, Examples) {
  auto t = qq("t1,t2,t3,t4");
  EXPECT_EQ(krull_dim(I("t1*t4 - t2*t3, t2*t4^2 - t3^3, t1*t3^2 - t2^2*t4, t1^2*t3 - t2^3", t)).height, 2u);
  auto v = toric_ideal_elimination(veronese_map(3, 2), Q{});
  EXPECT_EQ(krull_dim(v).height, 3u);
  EXPECT_EQ(krull_dim(v).dim, 3u);
  auto h = qq("u,v,w,x,y,z");
  EXPECT_EQ(krull_dim(I("v*z - w*y, w*x - u*z, u*y - v*x", h)).height, 2u);
  EXPECT_THROW(krull_dim(I("t1, t1 - 1", t)), InvalidArgument);
}

TEST(KrullDim, OrderIndependent) {
  auto t = qq("t1,t2,t3,t4");
  auto h = qq("u,v,w,x,y,z");
  std::vector<Ideal<Q>> fixtures{
      I("t1*t4 - t2*t3, t2*t4^2 - t3^3, t1*t3^2 - t2^2*t4, t1^2*t3 - t2^3", t),
      I("v*z - w*y, w*x - u*z, u*y - v*x", h),
      I("t1^2 - t2*t3, t4^3", t),
      toric_ideal_elimination(veronese_map(2, 3), Q{}),
  };
  for (const auto& f : fixtures) {
    auto a = krull_dim(f, MonomialOrder::lex());
    auto b = krull_dim(f, MonomialOrder::grevlex());
    EXPECT_EQ(a.dim, b.dim);
    EXPECT_EQ(a.height, b.height);
    EXPECT_EQ(a.dim + a.height, f.ring()->arity());
  }
}

TEST(KrullDim, VeroneseHeightLaw) {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::uint32_t n = 1; n <= 4; ++n) {
      auto m = veronese_map(k, n);
      if (m.source_arity > 10) continue;
      auto id = toric_ideal_elimination(m, Q{});
      auto h = id.is_zero() ? 0 : krull_dim(id).height;
      EXPECT_EQ(h, binomial(k + n - 1, n) - k) << k << "," << n;
      if (!id.is_zero()) {
        EXPECT_EQ(krull_dim(id).dim, k);
      }
    }
}

TEST(HilbertPiece, Examples) {
  EXPECT_EQ(hilbert_piece(2, 3), 4u);
  EXPECT_EQ(hilbert_piece(3, 0), 1u);
  EXPECT_EQ(hilbert_piece(2, -1), 0u);
  for (int k = 1; k <= 4; ++k)
    for (int m = -3; m <= 8; ++m) EXPECT_EQ(hilbert_piece(k, m), oracle::monomial_count(k, m));
}

TEST(LcTopPiece, Examples) {
  EXPECT_EQ(lc_top_piece(2, -2).dimension, 1u);
  EXPECT_EQ(lc_top_piece(2, 0).dimension, 0u);
  EXPECT_EQ(lc_top_piece(3, -5).dimension, 6u);
  auto g = lc_top_piece(3, -5);
  EXPECT_EQ(g.index, 3);
  EXPECT_EQ(g.degree, -5);
}

TEST(LcTopPiece, LaurentCountAndDuality) {
  for (int k = 1; k <= 4; ++k)
    for (int j = -20; j <= 5; ++j) {
      EXPECT_EQ(lc_top_piece(k, j).dimension, oracle::negative_laurent_count(k, j));
      EXPECT_EQ(lc_top_piece(k, j).dimension, hilbert_piece(k, -j - k));
    }
}

TEST(VeroneseLcPiece, Examples) {
  EXPECT_EQ(veronese_lc_piece(2, 4, 2, 0).dimension, 0u);
  for (int j = -6; j <= 6; ++j) EXPECT_EQ(veronese_lc_piece(2, 4, 1, j).dimension, 0u);
  EXPECT_EQ(veronese_lc_piece(2, 2, 2, -1).dimension, lc_top_piece(2, -2).dimension);
  EXPECT_EQ(veronese_lc_piece(2, 2, 2, -1).dimension, 1u);
  EXPECT_EQ(veronese_lc_piece(3, 2, 3, -3).dimension, oracle::negative_laurent_count(3, -6));
}

TEST(VeroneseLcPiece, DegreeZeroVanishes) {
  for (int k = 1; k <= 5; ++k)
    for (int n = 1; n <= 6; ++n)
      for (int i = 0; i <= k + 1; ++i) EXPECT_EQ(veronese_lc_piece(k, n, i, 0).dimension, 0u);
}
