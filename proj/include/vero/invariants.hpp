#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "vero/error.hpp"
#include "vero/groebner.hpp"

namespace vero {

/// Krull dimension of R/I and height of I in a polynomial ring over a field.
struct DimensionResult {
  std::size_t dim = 0;
  std::size_t height = 0;
  std::string order;
};

/// Largest arity accepted by the subset search in dim_monomial.
inline constexpr std::size_t kMaxMonomialDimArity = 20;

/// Dimension of R/I for a monomial ideal: the largest set of variables that
/// contains the support of no generator. Equivalently arity minus the
/// smallest set of variables meeting every support, which is what is searched.
template <Field F>
DimensionResult dim_monomial(const Ideal<F>& ideal) {
  const std::size_t n = ideal.ring()->arity();
  if (n > kMaxMonomialDimArity)
    throw ResourceCapError("monomial dimension search is capped at " + std::to_string(kMaxMonomialDimArity) +
                           " variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) {
    if (g.size() != 1) throw InvalidArgument("dim_monomial needs monomial generators, got '" + g.to_string() + "'");
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.terms()[0].mono[i]) s |= std::uint32_t{1} << i;
    if (s == 0) throw InvalidArgument("unit ideal has no dimension");
    supports.push_back(s);
  }
  // Only inclusion-minimal supports matter.
  std::sort(supports.begin(), supports.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supports) {
    bool dominated = false;
    for (auto m : minimal)
      if ((m & s) == m) dominated = true;
    if (!dominated) minimal.push_back(s);
  }
  auto hits_all = [&](std::uint32_t cover) {
    for (auto s : minimal)
      if ((s & cover) == 0) return false;
    return true;
  };
  for (std::size_t h = 0; h <= n; ++h) {
    if (h == 0) {
      if (minimal.empty()) return {n, 0, {}};
      continue;
    }
    // Gosper's hack over all h-subsets.
    std::uint64_t c = (std::uint64_t{1} << h) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (c < limit) {
      if (hits_all(static_cast<std::uint32_t>(c))) return {n - h, h, {}};
      std::uint64_t u = c & (~c + 1);
      std::uint64_t v = c + u;
      c = v + (((v ^ c) / u) >> 2);
    }
  }
  return {0, n, {}};
}

/// dim R/I = dim R/in(I). Throws for the unit ideal.
template <Field F>
DimensionResult krull_dim(const Ideal<F>& ideal, const MonomialOrder& order = MonomialOrder::grevlex()) {
  auto gb = buchberger(ideal, order);
  if (gb.is_unit_ideal()) throw InvalidArgument("the unit ideal has no Krull dimension");
  std::vector<Polynomial<F>> gens;
  for (const auto& m : gb.lead_monomials())
    gens.push_back(Polynomial<F>::monomial(ideal.ring(), ideal.ring()->field().one(), m));
  auto r = dim_monomial(Ideal<F>(ideal.ring(), std::move(gens)));
  r.order = order.name();
  return r;
}

/// C(n, r) for n >= 0; zero outside 0 <= r <= n.
inline std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) throw ResourceCapError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// Dimension of the degree-m piece of a polynomial ring in k variables.
inline std::uint64_t hilbert_piece(std::int64_t k, std::int64_t m) {
  if (k < 1) throw InvalidArgument("hilbert_piece needs k >= 1");
  if (m < 0) return 0;
  return binomial(m + k - 1, k - 1);
}

struct GradedPiece {
  std::int64_t index = 0;   // cohomological index i
  std::int64_t degree = 0;  // internal degree j
  std::uint64_t dimension = 0;
};

/// [H^k_m(F[x_1..x_k])]_j. A basis is the Laurent monomials with every
/// exponent <= -1 and total degree j.
inline GradedPiece lc_top_piece(std::int64_t k, std::int64_t j) {
  if (k < 1) throw InvalidArgument("lc_top_piece needs k >= 1");
  GradedPiece g{k, j, 0};
  if (j <= -k) g.dimension = binomial(-j - 1, k - 1);
  return g;
}

/// [H^i_m(S^(n))]_j for the n-th Veronese S^(n) of S = F[x_1..x_k], graded so
/// that degree j sits in ambient degree j·n. S^(n) is a Cohen-Macaulay direct
/// summand of S of dimension k, so only i = k survives.
inline GradedPiece veronese_lc_piece(std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j) {
  if (k < 1 || n < 1) throw InvalidArgument("veronese_lc_piece needs k, n >= 1");
  GradedPiece g{i, j, 0};
  if (i == k) g.dimension = lc_top_piece(k, j * n).dimension;
  return g;
}

}  // namespace vero
