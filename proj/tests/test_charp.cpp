#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vero/charp.hpp"
#include "vero/toric.hpp"

using namespace vero;

namespace {

using Fp = PrimeField;
using Vec = ExponentVector;

template <Field F>
Ideal<F> I(const std::string& gens, const RingPtr<F>& r) {
  return Ideal<F>(r, make_polynomial_list(gens, r));
}

const std::vector<Vec> kQuarticTargets{{4, 0}, {3, 1}, {1, 3}, {0, 4}};

// The certificate c of a report must satisfy c·I ⊆ I^[p] and c ∉ m^[p]; both
// are checked from scratch here.
template <Field F>
void expect_valid_certificate(const FpurityReport<F>& rep, const Ideal<F>& ideal, std::uint64_t p) {
  ASSERT_TRUE(rep.certificate.has_value());
  const auto& c = *rep.certificate;
  bool small_term = false;
  for (const auto& t : c.terms()) {
    bool all_below = true;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) all_below = all_below && t.mono[i] < p;
    small_term = small_term || all_below;
  }
  EXPECT_TRUE(small_term);
  std::vector<Polynomial<F>> frob;
  for (const auto& g : ideal.generators()) frob.push_back(g.pow(p));
  auto gb = buchberger(Ideal<F>(ideal.ring(), frob), MonomialOrder::grevlex());
  ASSERT_TRUE(oracle::is_groebner(gb.elements(), MonomialOrder::grevlex()));
  for (const auto& g : ideal.generators())
    EXPECT_TRUE(oracle::reduces_to_zero(c * g, gb.elements(), MonomialOrder::grevlex()));
}

Vec sum_of(const std::vector<Vec>& parts, std::size_t dim) {
  Vec s(dim, 0);
  for (const auto& v : parts)
    for (std::size_t i = 0; i < dim; ++i) s[i] += v[i];
  return s;
}

}  // namespace

TEST(Frobenius, Examples) {
  auto r = make_ring(Fp(2), split_names("x,y"));
  EXPECT_TRUE(ideal_equal(frobenius_power(I("x, y", r), 2), I("x^2, y^2", r)));
  auto f = frobenius_power(I("x + y", r), 2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.generators()[0], make_polynomial("x^2 + y^2", r));
  auto q = make_ring(Rationals{}, split_names("x"));
  EXPECT_THROW(frobenius_power(I("x", q), 2), DomainError);
  EXPECT_THROW(frobenius_power(I("x, y", r), 3), DomainError);
}

TEST(Frobenius, AgreesWithPowerDoubleRaiseAndSum) {
  std::mt19937_64 rng(4);
  for (std::uint64_t p : {2u, 3u}) {
    auto r = make_ring(Fp(p), "x", 3);
    for (int it = 0; it < 8; ++it) {
      Ideal<Fp> a(r, {oracle::random_poly(r, rng, 3, 2), oracle::random_poly(r, rng, 2, 2)});
      Ideal<Fp> b(r, {oracle::random_poly(r, rng, 2, 2)});
      if (a.is_zero() || b.is_zero()) continue;
      auto fa = frobenius_power(a, p);
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(fa.generators()[i], a.generators()[i].pow(p));
      // (I^[p])^[p] = I^[p^2], computed as generator-wise p^2 powers
      std::vector<Polynomial<Fp>> sq;
      for (const auto& g : a.generators()) sq.push_back(g.pow(p * p));
      EXPECT_TRUE(ideal_equal(frobenius_power(fa, p), Ideal<Fp>(r, sq)));
      EXPECT_TRUE(ideal_equal(frobenius_power(ideal_sum(a, b), p), ideal_sum(fa, frobenius_power(b, p))));
      // I^[p] ⊆ I^p: the ordinary power is generated by p-fold products
      std::vector<Polynomial<Fp>> prods{Polynomial<Fp>::one(r)};
      for (std::uint64_t e = 0; e < p; ++e) {
        std::vector<Polynomial<Fp>> next;
        for (const auto& x : prods)
          for (const auto& g : a.generators()) next.push_back(x * g);
        prods = next;
      }
      auto power = buchberger(Ideal<Fp>(r, prods), MonomialOrder::grevlex());
      EXPECT_TRUE(ideal_contained(fa, power));
    }
  }
}

TEST(Fedder, Examples) {
  auto v = veronese_map(2, 2);
  auto vr = source_ring(v, Fp(2));
  auto vi = toric_ideal_elimination(v, Fp(2));
  auto a = fedder_fpure(vi, 2);
  EXPECT_TRUE(a.f_pure);
  expect_valid_certificate(a, vi, 2);

  auto r = make_ring(Fp(2), split_names("x,y"));
  auto b = fedder_fpure(I("x*y", r), 2);
  EXPECT_TRUE(b.f_pure);
  ASSERT_EQ(b.colon_generators.size(), 1u);
  EXPECT_EQ(b.colon_generators[0], make_polynomial("x*y", r));

  for (std::uint64_t p : {2u, 3u}) {
    auto m = monomial_algebra_map(kQuarticTargets);
    auto id = toric_ideal_elimination(m, Fp(p));
    auto rep = fedder_fpure(id, p);
    EXPECT_FALSE(rep.f_pure) << p;
    EXPECT_FALSE(rep.certificate.has_value());
    for (const auto& g : rep.colon_generators) EXPECT_FALSE(outside_frobenius_maximal(g, p));
  }
}

TEST(Fedder, Errors) {
  auto r = make_ring(Fp(3), split_names("x,y"));
  EXPECT_THROW(fedder_fpure(I("x^2 - y", r), 3), InvalidArgument);
  EXPECT_THROW(fedder_fpure(I("x", r), 5), DomainError);
  EXPECT_THROW(fedder_fpure(I("1", r), 3), InvalidArgument);
  auto q = make_ring(Rationals{}, split_names("x"));
  EXPECT_THROW(fedder_fpure(I("x", q), 2), DomainError);
}

TEST(Fedder, CornerPieceAgreesWithColonRoute) {
  std::vector<std::vector<Vec>> maps{
      kQuarticTargets,
      {{2, 0}, {1, 1}, {0, 2}},
      {{3, 0}, {2, 1}, {1, 2}, {0, 3}},
      {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}},
      {{3, 0}, {1, 2}, {0, 3}},
      {{5, 0}, {4, 1}, {1, 4}, {0, 5}},
      {{3, 0}, {2, 1}, {0, 3}},
  };
  for (const auto& targets : maps) {
    auto m = monomial_algebra_map(targets);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      if (m.source_arity > 4 && p > 2) continue;
      auto id = toric_ideal_elimination(m, Fp(p));
      auto general = fedder_fpure(id, p);
      auto toric = fedder_fpure_toric(m, id, p);
      EXPECT_EQ(general.f_pure, toric.f_pure) << "p=" << p << " d=" << m.source_arity;
      EXPECT_EQ(toric.method, "corner_piece");
      EXPECT_EQ(general.method, "colon_ideal");
      if (toric.f_pure) expect_valid_certificate(toric, id, p);
    }
  }
}

TEST(Fedder, VeroneseRingsAreFPure) {
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    auto m = veronese_map(k, n);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      auto id = toric_ideal_elimination(m, Fp(p));
      auto rep = fedder_fpure_toric(m, id, p);
      EXPECT_TRUE(rep.f_pure) << k << "," << n << " p=" << p;
      if (m.source_arity <= 5 && p <= 3) expect_valid_certificate(rep, id, p);
    }
  }
}

TEST(Fedder, ToricRouteRejectsBadInput) {
  auto m = monomial_algebra_map(kQuarticTargets);
  auto r = source_ring(m, Fp(3));
  EXPECT_THROW(fedder_fpure_toric(m, I("t1*t4 - 2*t2*t3", r), 3), InvalidArgument);
  EXPECT_THROW(fedder_fpure_toric(m, I("t1*t4 - t2*t3", r), 5), DomainError);
  auto small = make_ring(Fp(3), "t", 3);
  EXPECT_THROW(fedder_fpure_toric(m, I("t1*t3 - t2^2", small), 3), RingMismatch);
  auto zero = fedder_fpure_toric(m, Ideal<Fp>(r), 3);
  EXPECT_TRUE(zero.f_pure);
}

TEST(Fedder, ToricRouteCaps) {
  auto m = veronese_map(2, 11);
  auto id = toric_ideal_lattice(m, Fp(7));
  EXPECT_THROW(fedder_fpure_toric(m, id, 7), ResourceCapError);
}

TEST(Semigroup, Examples) {
  AffineSemigroup s(kQuarticTargets);
  EXPECT_FALSE(semigroup_member(s, {2, 2}).member);
  auto a = semigroup_member(s, {4, 4});
  ASSERT_TRUE(a.member);
  EXPECT_EQ(sum_of(a.witness, 2), (Vec{4, 4}));
  std::multiset<Vec> wa(a.witness.begin(), a.witness.end());
  EXPECT_EQ(wa, (std::multiset<Vec>{{3, 1}, {1, 3}}));
  auto b = semigroup_member(s, {6, 6});
  ASSERT_TRUE(b.member);
  EXPECT_EQ(sum_of(b.witness, 2), (Vec{6, 6}));
  auto zero = semigroup_member(s, {0, 0});
  EXPECT_TRUE(zero.member);
  EXPECT_TRUE(zero.witness.empty());
  EXPECT_THROW(AffineSemigroup({{0, 0}}), InvalidArgument);
  EXPECT_THROW(AffineSemigroup({}), InvalidArgument);
}

TEST(Semigroup, WitnessesSumToTarget) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 30; ++it) {
    std::vector<Vec> gens;
    for (int j = 0; j < 3; ++j) {
      Vec g{static_cast<Exponent>(rng() % 4), static_cast<Exponent>(rng() % 4)};
      if (g[0] + g[1] == 0) g[0] = 1;
      gens.push_back(g);
    }
    AffineSemigroup s(gens);
    for (Exponent x = 0; x <= 8; ++x)
      for (Exponent y = 0; y <= 8; ++y) {
        auto r = semigroup_member(s, {x, y});
        // reference: dynamic programming over the box
        std::set<Vec> reach{{0, 0}};
        for (bool grew = true; grew;) {
          grew = false;
          for (auto v : std::vector<Vec>(reach.begin(), reach.end()))
            for (const auto& g : gens) {
              Vec w{v[0] + g[0], v[1] + g[1]};
              if (w[0] <= 8 && w[1] <= 8 && reach.insert(w).second) grew = true;
            }
        }
        ASSERT_EQ(r.member, reach.count({x, y}) == 1) << x << "," << y;
        if (r.member) {
          ASSERT_EQ(sum_of(r.witness, 2), (Vec{x, y}));
        }
      }
  }
}

TEST(Semigroup, MonomialIdealMembership) {
  AffineSemigroup s(kQuarticTargets);
  EXPECT_FALSE(monomial_ideal_member_semigroup(s, {6, 2}, {4, 0}));
  EXPECT_TRUE(monomial_ideal_member_semigroup(s, {12, 4}, {8, 0}));
  EXPECT_TRUE(monomial_ideal_member_semigroup(s, {3, 1}, {3, 1}));
  EXPECT_FALSE(monomial_ideal_member_semigroup(s, {3, 1}, {4, 0}));
}

TEST(Semigroup, NonPurityMechanism) {
  AffineSemigroup s(kQuarticTargets);
  for (Exponent p : {2u, 3u, 5u, 7u}) {
    EXPECT_FALSE(monomial_ideal_member_semigroup(s, {6, 2}, {4, 0}));
    EXPECT_TRUE(monomial_ideal_member_semigroup(s, {6 * p, 2 * p}, {4 * p, 0})) << p;
    auto w = find_non_purity_witness(s, p);
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(monomial_ideal_member_semigroup(s, w->numerator, w->generator));
    Vec pa = w->numerator, pb = w->generator;
    for (auto& e : pa) e *= p;
    for (auto& e : pb) e *= p;
    EXPECT_TRUE(monomial_ideal_member_semigroup(s, pa, pb));
  }
  // Veronese semigroups are normal, so no witness exists
  AffineSemigroup v({{2, 0}, {1, 1}, {0, 2}});
  EXPECT_FALSE(find_non_purity_witness(v, 2).has_value());
}
