#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vero/error.hpp"
#include "vero/groebner.hpp"
#include "vero/invariants.hpp"

namespace vero {

using ExponentVector = std::vector<Exponent>;

/// t_i ↦ x^{a_i} from F[t_1..t_d] to F[x_1..x_k].
struct MonomialMap {
  std::size_t source_arity = 0;  // d
  std::size_t target_arity = 0;  // k
  std::vector<ExponentVector> targets;
  /// Set for Veronese maps: targets are all degree-n monomials, lex-descending.
  std::optional<std::uint32_t> veronese_degree;

  std::uint64_t target_degree(std::size_t i) const {
    return std::accumulate(targets.at(i).begin(), targets.at(i).end(), std::uint64_t{0});
  }
};

/// All degree-n monomials in k variables in lex-descending order (x_1 > ... > x_k).
inline MonomialMap veronese_map(std::size_t k, std::uint32_t n) {
  if (k < 1 || n < 1) throw InvalidArgument("veronese_map needs k >= 1 and n >= 1");
  MonomialMap m;
  m.target_arity = k;
  m.veronese_degree = n;
  ExponentVector cur(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == k) {
      cur[pos] = left;
      m.targets.push_back(cur);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, n);
  m.source_arity = m.targets.size();
  return m;
}

inline MonomialMap monomial_algebra_map(std::vector<ExponentVector> targets) {
  if (targets.empty()) throw InvalidArgument("monomial map needs at least one target");
  const std::size_t k = targets.front().size();
  if (k == 0) throw InvalidArgument("target vectors must be nonempty");
  for (const auto& t : targets) {
    if (t.size() != k) throw InvalidArgument("target vectors have different lengths");
    if (std::all_of(t.begin(), t.end(), [](Exponent e) { return e == 0; }))
      throw InvalidArgument("target vectors must be nonzero");
  }
  MonomialMap m;
  m.source_arity = targets.size();
  m.target_arity = k;
  m.targets = std::move(targets);
  auto v = veronese_map(k, static_cast<std::uint32_t>(m.target_degree(0)));
  if (v.targets == m.targets) m.veronese_degree = v.veronese_degree;
  return m;
}

/// The t-ring F[t1..td] of a map.
template <Field F>
RingPtr<F> source_ring(const MonomialMap& map, const F& field) {
  return make_ring(field, "t", map.source_arity);
}

/// Image of f under t_i ↦ x^{a_i}, as (coefficient, exponent vector) terms combined.
template <Field F>
bool maps_to_zero(const Polynomial<F>& f, const MonomialMap& map) {
  if (f.ring()->arity() != map.source_arity) throw RingMismatch("polynomial ring does not match map source");
  auto xring = make_ring(f.field(), "x", map.target_arity);
  std::vector<Term<F>> image;
  for (const auto& t : f.terms()) {
    Monomial m(map.target_arity);
    for (std::size_t i = 0; i < map.source_arity; ++i)
      for (std::size_t j = 0; j < map.target_arity; ++j) m.set(j, m[j] + t.mono[i] * map.targets[i][j]);
    image.push_back({t.coeff, std::move(m)});
  }
  return Polynomial<F>::from_terms(xring, std::move(image)).is_zero();
}

/// Kernel of the map: eliminate x from (t_i - x^{a_i}) in F[x_1..x_k, t_1..t_d].
template <Field F>
Ideal<F> toric_ideal_elimination(const MonomialMap& map, const F& field) {
  const std::size_t k = map.target_arity, d = map.source_arity;
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= k; ++j) names.push_back("_x" + std::to_string(j));
  for (std::size_t i = 1; i <= d; ++i) names.push_back("t" + std::to_string(i));
  auto big = make_ring(field, std::move(names));
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < d; ++i) {
    Monomial xm(k + d);
    for (std::size_t j = 0; j < k; ++j) xm.set(j, map.targets[i][j]);
    gens.push_back(Polynomial<F>::variable(big, k + i) - Polynomial<F>::monomial(big, field.one(), xm));
  }
  std::vector<std::size_t> drop(k);
  std::iota(drop.begin(), drop.end(), std::size_t{0});
  return detail::eliminate_into(Ideal<F>(big, std::move(gens)), drop, source_ring(map, field));
}

/// Basis of {u ∈ Z^d : Σ u_i a_i = 0} by unimodular integer row reduction of [A | I].
inline std::vector<std::vector<std::int64_t>> lattice_kernel_basis(const MonomialMap& map) {
  const std::size_t d = map.source_arity, k = map.target_arity;
  std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(k + d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = map.targets[i][j];
    rows[i][k + i] = 1;
  }
  auto axpy = [](std::vector<std::int64_t>& dst, std::int64_t q, const std::vector<std::int64_t>& src) {
    for (std::size_t c = 0; c < dst.size(); ++c) {
      std::int64_t prod, diff;
      if (__builtin_mul_overflow(q, src[c], &prod) || __builtin_sub_overflow(dst[c], prod, &diff))
        throw ResourceCapError("integer overflow in lattice kernel computation");
      dst[c] = diff;
    }
  };
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k && pivot_row < d; ++col) {
    for (;;) {
      // Smallest nonzero entry in this column becomes the pivot.
      std::optional<std::size_t> piv;
      for (std::size_t r = pivot_row; r < d; ++r)
        if (rows[r][col] != 0 && (!piv || std::llabs(rows[r][col]) < std::llabs(rows[*piv][col]))) piv = r;
      if (!piv) break;
      std::swap(rows[pivot_row], rows[*piv]);
      bool clean = true;
      for (std::size_t r = pivot_row + 1; r < d; ++r) {
        if (rows[r][col] == 0) continue;
        axpy(rows[r], rows[r][col] / rows[pivot_row][col], rows[pivot_row]);
        if (rows[r][col] != 0) clean = false;
      }
      if (clean) {
        ++pivot_row;
        break;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t r = pivot_row; r < d; ++r) {
    std::vector<std::int64_t> u(rows[r].begin() + static_cast<std::ptrdiff_t>(k), rows[r].end());
    std::int64_t g = 0;
    for (auto x : u) g = std::gcd(g, x);
    if (g > 1)
      for (auto& x : u) x /= g;
    auto first = std::find_if(u.begin(), u.end(), [](auto x) { return x != 0; });
    if (first != u.end() && *first < 0)
      for (auto& x : u) x = -x;
    basis.push_back(std::move(u));
  }
  return basis;
}

/// Kernel of the map from a lattice basis: binomials t^{u+} - t^{u-},
/// saturated by the product of all t-variables.
template <Field F>
Ideal<F> toric_ideal_lattice(const MonomialMap& map, const F& field) {
  auto ring = source_ring(map, field);
  const std::size_t d = map.source_arity;
  std::vector<Polynomial<F>> gens;
  for (const auto& u : lattice_kernel_basis(map)) {
    Monomial plus(d), minus(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i] > 0) plus.set(i, static_cast<Exponent>(u[i]));
      if (u[i] < 0) minus.set(i, static_cast<Exponent>(-u[i]));
    }
    gens.push_back(Polynomial<F>::monomial(ring, field.one(), plus) -
                   Polynomial<F>::monomial(ring, field.one(), minus));
  }
  Ideal<F> lattice(ring, std::move(gens));
  if (lattice.is_zero()) return lattice;
  Monomial all(d);
  for (std::size_t i = 0; i < d; ++i) all.set(i, 1);
  return saturate(lattice, Polynomial<F>::monomial(ring, field.one(), all));
}

/// Greedy minimal generating subset of a homogeneous ideal: generators are
/// visited by increasing degree and dropped when they lie in the ideal of
/// the others. `weights` sets variable degrees (empty = standard grading).
template <Field F>
std::vector<Polynomial<F>> minimalize_generators(const Ideal<F>& ideal, const std::vector<std::uint64_t>& weights = {}) {
  struct Item {
    Polynomial<F> poly;
    std::uint64_t degree;
  };
  std::vector<Item> items;
  for (const auto& g : ideal.generators()) {
    auto h = homogeneity(g, weights);
    if (!h.homogeneous) throw InvalidArgument("minimalize_generators needs homogeneous generators: " + g.to_string());
    items.push_back({g, *h.degree});
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.degree < b.degree; });
  std::vector<Polynomial<F>> cur;
  for (auto& it : items) cur.push_back(it.poly);
  for (std::size_t i = 0; i < cur.size();) {
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < cur.size(); ++j)
      if (j != i) others.push_back(cur[j]);
    Ideal<F> rest(ideal.ring(), others);
    if (!rest.is_zero() && buchberger(rest, MonomialOrder::grevlex()).contains(cur[i]))
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return cur;
}

/// Degrees of the t-variables induced by the map (deg t_i = |a_i|).
inline std::vector<std::uint64_t> map_weights(const MonomialMap& map) {
  std::vector<std::uint64_t> w;
  for (std::size_t i = 0; i < map.source_arity; ++i) w.push_back(map.target_degree(i));
  return w;
}

/// Candidate complete intersection for I·R_{t_v} together with its verdicts.
template <Field F>
struct CIReport {
  std::size_t inverted = 0;  // 0-based t index
  std::string inverted_name;
  std::vector<Polynomial<F>> candidates;
  /// Power of the inverted variable cleared from each α (the α denominator).
  std::vector<std::uint32_t> alpha_exponents;
  std::size_t claimed_height = 0;
  std::optional<std::size_t> height;
  bool members_in_ideal = false;
  bool generates_after_saturation = false;
  bool count_matches_height = false;
  bool verified = false;
  std::vector<std::string> notes;
};

namespace detail {

inline std::optional<std::size_t> find_target(const MonomialMap& map, const ExponentVector& e) {
  for (std::size_t i = 0; i < map.targets.size(); ++i)
    if (map.targets[i] == e) return i;
  return std::nullopt;
}

}  // namespace detail

/// The explicit localization sequence of a Veronese map at t_i ↦ x_j^n.
///
/// For every t_m whose target has x_j-exponent n - c with c >= 2, the cleared
/// binomial t_i^{c-1}·t_m - Π_l t_{s(l)} is emitted, where l runs over the c
/// non-j letters of the target (with multiplicity) and t_{s(l)} ↦ x_j^{n-1}·x_l.
/// Exactly d - k binomials result. The report is not yet verified.
template <Field F>
CIReport<F> veronese_localization_sequence(const MonomialMap& map, std::size_t letter, const RingPtr<F>& ring) {
  if (!map.veronese_degree) throw InvalidArgument("veronese_localization_sequence needs a Veronese map");
  if (letter >= map.target_arity) throw InvalidArgument("letter index out of range");
  if (ring->arity() != map.source_arity) throw RingMismatch("ring arity does not match the map");
  const std::uint32_t n = *map.veronese_degree;
  const std::size_t k = map.target_arity, d = map.source_arity;
  const F& field = ring->field();

  ExponentVector pure(k, 0);
  pure[letter] = n;
  auto inv = detail::find_target(map, pure);
  if (!inv) throw InvalidArgument("no variable maps to a pure power of the chosen letter");

  CIReport<F> rep;
  rep.inverted = *inv;
  rep.inverted_name = ring->name(*inv);
  rep.claimed_height = d - k;
  if (n < 2) return rep;

  // s(l): the variable mapping to x_j^{n-1} x_l.
  std::vector<std::size_t> near(k);
  for (std::size_t l = 0; l < k; ++l) {
    if (l == letter) continue;
    ExponentVector e(k, 0);
    e[letter] = n - 1;
    e[l] = 1;
    near[l] = *detail::find_target(map, e);
  }
  for (std::size_t m = 0; m < d; ++m) {
    const auto& a = map.targets[m];
    const std::uint32_t c = n - a[letter];
    if (c < 2) continue;
    Monomial lhs(d), rhs(d);
    lhs.set(rep.inverted, c - 1);
    lhs.set(m, lhs[m] + 1);
    for (std::size_t l = 0; l < k; ++l)
      if (l != letter && a[l]) rhs.set(near[l], rhs[near[l]] + a[l]);
    rep.candidates.push_back(Polynomial<F>::monomial(ring, field.one(), lhs) -
                             Polynomial<F>::monomial(ring, field.one(), rhs));
    rep.alpha_exponents.push_back(c - 1);
  }

  if (letter == 0) {
    // Compare with the block layout t_{k+1}.. (denominator t_1), then the next
    // block (t_1^2), and so on, which is how the sequence is usually displayed.
    bool blocks_ok = true;
    std::size_t idx = 0;
    for (std::size_t m = 0; m < d; ++m) {
      const std::uint32_t c = n - map.targets[m][0];
      if (c < 2) continue;
      const auto lo = binomial(static_cast<std::int64_t>(k + c - 2), c - 1);
      const auto hi = binomial(static_cast<std::int64_t>(k + c - 1), c);
      if (!(m + 1 > lo && m + 1 <= hi) || rep.alpha_exponents[idx] != c - 1) blocks_ok = false;
      ++idx;
    }
    rep.notes.push_back(blocks_ok ? "candidate indices follow the degree-block layout"
                                  : "candidate indices deviate from the degree-block layout");
    // The displayed form t_{d-1} - t_{k-1} t_2^{n-1} / t_1^{n-1}.
    if (k >= 2 && d >= 2 && d - 1 > k && map.targets[d - 2][0] == 0) {
      Monomial lhs(d), rhs(d);
      lhs.set(0, n - 1);
      lhs.set(d - 2, 1);
      rhs.set(k - 2, 1);
      rhs.set(1, rhs[1] + n - 1);
      auto shown = Polynomial<F>::monomial(ring, field.one(), lhs) - Polynomial<F>::monomial(ring, field.one(), rhs);
      if (!maps_to_zero(shown, map))
        rep.notes.push_back("displayed entry for t" + std::to_string(d - 1) + " (" + shown.to_string() +
                            ") does not vanish under the map; derived " + rep.candidates[rep.candidates.size() - 2].to_string() +
                            " from exponent vectors instead");
    }
  }
  return rep;
}

/// Verifies that `candidates` generate I after inverting variable v:
/// (a) each candidate lies in I, (b) I ⊆ ((candidates) : v^∞), and (c) the
/// number of candidates equals height I. Failures are verdicts, not errors.
template <Field F>
CIReport<F> ci_check(const Ideal<F>& ideal, std::vector<Polynomial<F>> candidates, std::size_t v,
                     std::optional<std::size_t> known_height = std::nullopt) {
  const auto& ring = ideal.ring();
  if (v >= ring->arity()) throw InvalidArgument("inverted variable out of range");
  CIReport<F> rep;
  rep.inverted = v;
  rep.inverted_name = ring->name(v);
  for (const auto& c : candidates)
    if (c.is_zero()) throw InvalidArgument("CI candidates must be nonzero");
  rep.candidates = std::move(candidates);

  auto gb = buchberger(ideal, MonomialOrder::grevlex());
  rep.members_in_ideal = std::all_of(rep.candidates.begin(), rep.candidates.end(),
                                     [&](const Polynomial<F>& c) { return gb.contains(c); });
  if (rep.candidates.empty()) {
    rep.generates_after_saturation = ideal.is_zero();
  } else {
    auto sat = saturate(Ideal<F>(ring, rep.candidates), Polynomial<F>::variable(ring, v));
    rep.generates_after_saturation = ideal_contained(ideal, buchberger(sat, MonomialOrder::grevlex()));
  }
  rep.height = known_height ? *known_height : krull_dim(ideal).height;
  rep.claimed_height = *rep.height;
  rep.count_matches_height = rep.candidates.size() == *rep.height;
  rep.verified = rep.members_in_ideal && rep.generates_after_saturation && rep.count_matches_height;
  return rep;
}

/// ci_check applied to an unverified report (e.g. from veronese_localization_sequence).
template <Field F>
CIReport<F> ci_check(const Ideal<F>& ideal, CIReport<F> report, std::optional<std::size_t> known_height = std::nullopt) {
  auto checked = ci_check(ideal, report.candidates, report.inverted, known_height);
  checked.alpha_exponents = std::move(report.alpha_exponents);
  checked.notes = std::move(report.notes);
  return checked;
}

namespace detail {

// Solves Σ_b c_b a_b = a over Q for a square-or-tall full-column-rank system;
// returns nullopt when inconsistent.
inline std::optional<std::vector<mpq_class>> solve_rational(const std::vector<ExponentVector>& cols,
                                                            const ExponentVector& rhs) {
  const std::size_t rows = rhs.size(), nc = cols.size();
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(nc + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < nc; ++c) m[r][c] = cols[c][r];
    m[r][nc] = rhs[r];
  }
  std::size_t pr = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < nc && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) return std::nullopt;  // dependent columns
    std::swap(m[pr], m[sel]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[pr][c];
      for (std::size_t q = c; q <= nc; ++q) m[r][q] -= f * m[pr][q];
    }
    pivcol.push_back(c);
    ++pr;
  }
  if (pr < nc) return std::nullopt;
  for (std::size_t r = pr; r < rows; ++r)
    if (m[r][nc] != 0) return std::nullopt;
  std::vector<mpq_class> x(nc);
  for (std::size_t r = 0; r < nc; ++r) x[r] = m[r][nc] / m[r][r];
  return x;
}

inline std::size_t rational_rank(const std::vector<ExponentVector>& vecs) {
  if (vecs.empty()) return 0;
  const std::size_t k = vecs.front().size();
  std::vector<std::vector<mpq_class>> m;
  for (const auto& v : vecs) m.emplace_back(v.begin(), v.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < k && rank < m.size(); ++c) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t q = c; q < k; ++q) m[r][q] -= f * m[rank][q];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Localization candidates for a general monomial map at t_v: finds the first
/// basis B ∋ v (in index order) such that every other target is an integral
/// combination of B with nonnegative coefficients off v, and emits
/// t_v^{max(0,-c_v)}·t_m - t_v^{max(0,c_v)}·Π_{b≠v} t_b^{c_b}. For a Veronese
/// map at a pure power this reproduces veronese_localization_sequence.
template <Field F>
std::optional<CIReport<F>> derive_localization_candidates(const MonomialMap& map, std::size_t v,
                                                          const RingPtr<F>& ring) {
  const std::size_t d = map.source_arity;
  if (v >= d) throw InvalidArgument("inverted variable out of range");
  const std::size_t r = detail::rational_rank(map.targets);
  if (r > d || d > 24) return std::nullopt;
  const F& field = ring->field();

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < d; ++i)
    if (i != v) others.push_back(i);
  // Enumerate (r-1)-subsets of the other variables in lexicographic index order.
  std::vector<std::size_t> pick(r - 1);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  for (;;) {
    if (pick.empty() || pick.back() < others.size()) {
      std::vector<std::size_t> basis{v};
      for (auto p : pick) basis.push_back(others[p]);
      std::vector<ExponentVector> cols;
      for (auto b : basis) cols.push_back(map.targets[b]);
      CIReport<F> rep;
      rep.inverted = v;
      rep.inverted_name = ring->name(v);
      rep.claimed_height = d - r;
      bool ok = true;
      for (std::size_t m = 0; m < d && ok; ++m) {
        if (std::find(basis.begin(), basis.end(), m) != basis.end()) continue;
        auto sol = detail::solve_rational(cols, map.targets[m]);
        if (!sol) {
          ok = false;
          break;
        }
        Monomial lhs(d), rhs(d);
        lhs.set(m, 1);
        for (std::size_t q = 0; q < basis.size(); ++q) {
          const mpq_class& c = (*sol)[q];
          if (c.get_den() != 1 || (q > 0 && c < 0)) {
            ok = false;
            break;
          }
          long e = c.get_num().get_si();
          if (q == 0) {
            if (e < 0) lhs.set(v, static_cast<Exponent>(-e));
            if (e > 0) rhs.set(v, static_cast<Exponent>(e));
            if (e < 0) rep.alpha_exponents.push_back(static_cast<std::uint32_t>(-e));
            else rep.alpha_exponents.push_back(0);
          } else {
            rhs.set(basis[q], static_cast<Exponent>(e));
          }
        }
        if (!ok) break;
        rep.candidates.push_back(Polynomial<F>::monomial(ring, field.one(), lhs) -
                                 Polynomial<F>::monomial(ring, field.one(), rhs));
      }
      if (ok) return rep;
    }
    // Advance combination.
    if (pick.empty()) return std::nullopt;
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == others.size() - pick.size() + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t q = i; q < pick.size(); ++q) pick[q] = pick[q - 1] + 1;
  }
}

/// Ideal of 2x2 minors of the symmetric k x k matrix whose (a,b) entry is the
/// t-variable mapping to x_a·x_b under the degree-2 Veronese map in k letters.
template <Field F>
Ideal<F> symmetric_minor_ideal(std::size_t k, const F& field) {
  auto map = veronese_map(k, 2);
  auto ring = source_ring(map, field);
  auto entry = [&](std::size_t a, std::size_t b) {
    ExponentVector e(k, 0);
    e[a] += 1;
    e[b] += 1;
    return Polynomial<F>::variable(ring, *detail::find_target(map, e));
  };
  std::vector<Polynomial<F>> gens;
  for (std::size_t r1 = 0; r1 < k; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < k; ++r2)
      for (std::size_t c1 = 0; c1 < k; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < k; ++c2)
          gens.push_back(entry(r1, c1) * entry(r2, c2) - entry(r1, c2) * entry(r2, c1));
  return Ideal<F>(ring, std::move(gens));
}

}  // namespace vero
