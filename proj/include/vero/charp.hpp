#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vero/error.hpp"
#include "vero/groebner.hpp"
#include "vero/toric.hpp"

namespace vero {

/// I^[p]: generated by the p-th powers of the generators of I.
template <Field F>
Ideal<F> frobenius_power(const Ideal<F>& ideal, std::uint64_t p) {
  if constexpr (!is_prime_field_v<F>) {
    throw DomainError("Frobenius powers need a prime field coefficient domain");
  } else {
    if (ideal.ring()->field().prime() != p)
      throw DomainError("Frobenius power by " + std::to_string(p) + " over " + ideal.ring()->domain().name());
    std::vector<Polynomial<F>> gens;
    for (const auto& g : ideal.generators()) {
      // (Σ c m)^p = Σ c^p m^p = Σ c m^p over GF(p).
      std::vector<Term<F>> terms;
      for (const auto& t : g.terms()) terms.push_back({t.coeff, t.mono.pow(static_cast<Exponent>(p))});
      gens.push_back(Polynomial<F>::from_sorted_terms(g.ring(), std::move(terms)));
    }
    return Ideal<F>(ideal.ring(), std::move(gens));
  }
}

template <Field F>
struct FpurityReport {
  std::uint32_t prime = 0;
  /// "colon_ideal": reduced grevlex basis of (I^[p] : I).
  /// "corner_piece": a basis, modulo I^[p], of the colon's elements in the
  /// multidegree of t^{(p-1)·1} (toric ideals only).
  std::string method;
  std::vector<Polynomial<F>> colon_generators;
  /// A generator of (I^[p] : I) outside m^[p], when one exists.
  std::optional<Polynomial<F>> certificate;
  bool f_pure = false;
};

namespace detail {

// (0^[p] : 0) is the whole ring; 1 is the certificate.
template <Field F>
FpurityReport<F> whole_ring_colon(const Ideal<F>& ideal, std::uint64_t p) {
  FpurityReport<F> rep;
  rep.prime = static_cast<std::uint32_t>(p);
  rep.method = "colon_ideal";
  rep.certificate = Polynomial<F>::one(ideal.ring());
  rep.colon_generators = {*rep.certificate};
  rep.f_pure = true;
  return rep;
}

}  // namespace detail

/// True when some term of f has every exponent below p, i.e. f ∉ m^[p].
template <Field F>
bool outside_frobenius_maximal(const Polynomial<F>& f, std::uint64_t p) {
  for (const auto& t : f.terms()) {
    bool small = true;
    for (std::size_t i = 0; i < t.mono.arity(); ++i)
      if (t.mono[i] >= p) small = false;
    if (small) return true;
  }
  return false;
}

/// Fedder's criterion at the homogeneous maximal ideal m: R/I is F-pure iff
/// (I^[p] : I) ⊄ m^[p].
template <Field F>
FpurityReport<F> fedder_fpure(const Ideal<F>& ideal, std::uint64_t p) {
  for (const auto& g : ideal.generators())
    if (!homogeneity(g).homogeneous) throw InvalidArgument("fedder_fpure needs a homogeneous ideal: " + g.to_string());
  for (const auto& g : ideal.generators())
    if (g.is_constant()) throw InvalidArgument("fedder_fpure needs a proper ideal");
  auto frob = frobenius_power(ideal, p);
  if (ideal.is_zero()) return detail::whole_ring_colon(ideal, p);
  auto col = colon_ideal(frob, ideal);
  // Reduced generators make the m^[p] test a term inspection.
  auto gb = buchberger(col, MonomialOrder::grevlex());
  FpurityReport<F> rep;
  rep.prime = static_cast<std::uint32_t>(p);
  rep.method = "colon_ideal";
  rep.colon_generators = gb.elements();
  for (const auto& g : rep.colon_generators)
    if (outside_frobenius_maximal(g, p)) {
      rep.certificate = g;
      break;
    }
  rep.f_pure = rep.certificate.has_value();
  return rep;
}

/// Affine semigroup generated by nonzero exponent vectors.
class AffineSemigroup {
 public:
  explicit AffineSemigroup(std::vector<ExponentVector> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw InvalidArgument("semigroup needs generators");
    for (const auto& g : gens_) {
      if (g.size() != gens_.front().size()) throw InvalidArgument("semigroup generators have different lengths");
      if (std::all_of(g.begin(), g.end(), [](Exponent e) { return e == 0; }))
        throw InvalidArgument("semigroup generators must be nonzero");
    }
  }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t dimension() const { return gens_.front().size(); }

 private:
  std::vector<ExponentVector> gens_;
};

struct SemigroupMembership {
  bool member = false;
  /// Generators (with repetition) summing to the target.
  std::vector<ExponentVector> witness;
};

/// Membership by depth-first search over multisets of generators. Generators
/// with more nonzero coordinates are tried first (stable otherwise); failed
/// (residual, start) states are memoized. Each step lowers the total degree,
/// so the depth is at most deg(target) / min generator degree.
inline SemigroupMembership semigroup_member(const AffineSemigroup& s, const ExponentVector& target) {
  if (target.size() != s.dimension()) throw InvalidArgument("target length does not match semigroup");
  std::vector<ExponentVector> order = s.generators();
  auto support = [](const ExponentVector& v) { return std::count_if(v.begin(), v.end(), [](Exponent e) { return e; }); };
  std::stable_sort(order.begin(), order.end(),
                   [&](const ExponentVector& a, const ExponentVector& b) { return support(a) > support(b); });

  std::set<std::pair<ExponentVector, std::size_t>> failed;
  std::vector<ExponentVector> path;
  auto dfs = [&](auto&& self, const ExponentVector& rest, std::size_t start) -> bool {
    if (std::all_of(rest.begin(), rest.end(), [](Exponent e) { return e == 0; })) return true;
    if (failed.count({rest, start})) return false;
    for (std::size_t g = start; g < order.size(); ++g) {
      bool fits = true;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (order[g][i] > rest[i]) fits = false;
      if (!fits) continue;
      ExponentVector next = rest;
      for (std::size_t i = 0; i < rest.size(); ++i) next[i] -= order[g][i];
      path.push_back(order[g]);
      if (self(self, next, g)) return true;
      path.pop_back();
    }
    failed.insert({rest, start});
    return false;
  };
  SemigroupMembership out;
  out.member = dfs(dfs, target, 0);
  if (out.member) {
    out.witness = path;
    ExponentVector sum(target.size(), 0);
    for (const auto& w : out.witness)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += w[i];
    if (sum != target) throw Error("semigroup witness does not sum to the target");
  }
  return out;
}

/// x^a ∈ x^b·K[S]  iff  a - b ≥ 0 componentwise and a - b ∈ S.
inline bool monomial_ideal_member_semigroup(const AffineSemigroup& s, const ExponentVector& numerator,
                                            const ExponentVector& generator) {
  if (numerator.size() != generator.size() || numerator.size() != s.dimension())
    throw InvalidArgument("vector lengths do not match the semigroup");
  ExponentVector diff(numerator.size());
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (numerator[i] < generator[i]) return false;
    diff[i] = numerator[i] - generator[i];
  }
  return semigroup_member(s, diff).member;
}

/// A pair (a, b) of semigroup elements with x^a ∉ (x^b) but x^{pa} ∈ (x^{pb}),
/// which shows Frobenius is not pure on K[S] in characteristic p.
struct NonPurityWitness {
  ExponentVector numerator;
  ExponentVector generator;
  ExponentVector difference;
};

/// Searches numerators m·g_s (1 <= m <= max_multiple) against generators g_t.
inline std::optional<NonPurityWitness> find_non_purity_witness(const AffineSemigroup& s, std::uint64_t p,
                                                               std::uint32_t max_multiple = 3) {
  const auto& gens = s.generators();
  for (std::uint32_t mult = 1; mult <= max_multiple; ++mult)
    for (const auto& a0 : gens)
      for (const auto& b : gens) {
        ExponentVector a = a0;
        for (auto& e : a) e *= mult;
        if (monomial_ideal_member_semigroup(s, a, b)) continue;
        ExponentVector pa = a, pb = b;
        for (auto& e : pa) e *= static_cast<Exponent>(p);
        for (auto& e : pb) e *= static_cast<Exponent>(p);
        if (!monomial_ideal_member_semigroup(s, pa, pb)) continue;
        ExponentVector diff(a.size(), 0);
        bool nonneg = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] < b[i]) nonneg = false;
          else diff[i] = a[i] - b[i];
        }
        if (!nonneg) continue;
        return NonPurityWitness{a, b, diff};
      }
  return std::nullopt;
}

/// Largest box p^d scanned by fedder_fpure_toric.
inline constexpr std::uint64_t kMaxFrobeniusBox = std::uint64_t{1} << 28;
/// Largest corner piece (basis size of (S/I^[p]) in the corner degree) it materializes.
inline constexpr std::size_t kMaxCornerPiece = std::size_t{1} << 19;

namespace detail {

// Memoized membership in a semigroup, remembering one generator to peel off
// so a decomposition can be rebuilt.
class SemigroupOracle {
 public:
  explicit SemigroupOracle(const std::vector<ExponentVector>& gens) : gens_(gens) {}

  bool member(const ExponentVector& v) { return step(v) != kNo; }

  /// Multiplicities of the generators in one decomposition of v (v must be a member).
  std::vector<Exponent> decompose(ExponentVector v) {
    std::vector<Exponent> mult(gens_.size(), 0);
    for (;;) {
      auto g = step(v);
      if (g == kNo) throw Error("decompose called on a non-member");
      if (g == kZero) return mult;
      ++mult[g];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= gens_[g][i];
    }
  }

 private:
  static constexpr std::size_t kNo = static_cast<std::size_t>(-1);
  static constexpr std::size_t kZero = static_cast<std::size_t>(-2);

  std::size_t step(const ExponentVector& v) {
    if (std::all_of(v.begin(), v.end(), [](Exponent e) { return e == 0; })) return kZero;
    if (auto it = memo_.find(v); it != memo_.end()) return it->second;
    std::size_t found = kNo;
    for (std::size_t g = 0; g < gens_.size() && found == kNo; ++g) {
      bool fits = true;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (gens_[g][i] > v[i]) fits = false;
      if (!fits) continue;
      ExponentVector rest = v;
      for (std::size_t i = 0; i < v.size(); ++i) rest[i] -= gens_[g][i];
      if (step(rest) != kNo) found = g;
    }
    memo_.emplace(v, found);
    return found;
  }

  const std::vector<ExponentVector>& gens_;
  std::map<ExponentVector, std::size_t> memo_;
};

}  // namespace detail

/// Fedder's criterion for the toric ideal I of a monomial map, with p prime.
///
/// S = F[t] is free over S^p on the box monomials t^u, 0 <= u_i < p, so
/// S/I^[p] = ⊕_u t^u·(S^p/I^[p]) and each graded piece of S^p/I^[p] has
/// dimension at most one. (I^[p] : I) ⊄ m^[p] iff the colon contains an element
/// with a nonzero t^{(p-1)·1} coefficient, and that question lives in one
/// multidegree β. There a binomial t^a - t^b only translates box indices
/// (u ↦ u + a - b mod p), so the colon's piece is spanned by indicator vectors
/// of the translation classes that never leave the piece.
///
/// The caller guarantees that `ideal` is the toric ideal of `map` and is
/// generated by binomials t^a - t^b.
template <Field F>
FpurityReport<F> fedder_fpure_toric(const MonomialMap& map, const Ideal<F>& ideal, std::uint64_t p) {
  if constexpr (!is_prime_field_v<F>) {
    throw DomainError("Fedder's criterion needs a prime field coefficient domain");
  } else {
    const auto& ring = ideal.ring();
    const auto& field = ring->field();
    if (field.prime() != p)
      throw DomainError("Fedder's criterion at " + std::to_string(p) + " over " + ring->domain().name());
    const std::size_t d = map.source_arity, k = map.target_arity;
    if (ring->arity() != d) throw RingMismatch("ideal ring does not match the map source");
    if (ideal.is_zero()) return detail::whole_ring_colon(ideal, p);
    std::uint64_t box = 1;
    for (std::size_t i = 0; i < d; ++i) {
      box *= p;
      if (box > kMaxFrobeniusBox)
        throw ResourceCapError("Frobenius box p^d exceeds " + std::to_string(kMaxFrobeniusBox));
    }
    // Each generator as the translation a - b.
    std::vector<std::vector<std::int64_t>> shifts;
    for (const auto& g : ideal.generators()) {
      const auto& ts = g.terms();
      bool binomial = ts.size() == 2 && field.is_one(ts[0].coeff) && field.is_one(field.neg(ts[1].coeff));
      if (!binomial) throw InvalidArgument("toric generators must be binomials t^a - t^b: " + g.to_string());
      std::vector<std::int64_t> s(d);
      for (std::size_t i = 0; i < d; ++i)
        s[i] = static_cast<std::int64_t>(ts[0].mono[i]) - static_cast<std::int64_t>(ts[1].mono[i]);
      shifts.push_back(std::move(s));
    }

    const Exponent top = static_cast<Exponent>(p - 1);
    ExponentVector beta(k, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < k; ++j) beta[j] += top * map.targets[i][j];

    // U_β: box points u with (β - A·u)/p in the semigroup, in increasing base-p code.
    detail::SemigroupOracle oracle(map.targets);
    std::vector<std::uint64_t> codes;
    std::vector<ExponentVector> rests;
    ExponentVector u(d, 0), image(k, 0);
    auto scan = [&](auto&& self, std::size_t i, std::uint64_t code) -> void {
      if (i == d) {
        for (std::size_t j = 0; j < k; ++j)
          if ((beta[j] - image[j]) % p) return;
        ExponentVector rest(k);
        for (std::size_t j = 0; j < k; ++j) rest[j] = static_cast<Exponent>((beta[j] - image[j]) / p);
        if (!oracle.member(rest)) return;
        if (codes.size() == kMaxCornerPiece)
          throw ResourceCapError("Fedder corner piece exceeds " + std::to_string(kMaxCornerPiece) + " monomials");
        codes.push_back(code);
        rests.push_back(std::move(rest));
        return;
      }
      for (Exponent e = 0; e <= top; ++e) {
        u[i] = e;
        self(self, i + 1, code * p + e);
        for (std::size_t j = 0; j < k; ++j) image[j] += map.targets[i][j];
      }
      for (std::size_t j = 0; j < k; ++j) image[j] -= (top + 1) * map.targets[i][j];
      u[i] = 0;
    };
    scan(scan, 0, 0);

    const std::size_t size = codes.size();
    // Open-addressing table from base-p code to position in `codes`.
    std::size_t slots = 16;
    while (slots < 2 * size) slots <<= 1;
    constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    std::vector<std::uint64_t> keys(slots, kEmpty);
    std::vector<std::uint32_t> vals(slots, 0);
    auto slot_of = [&](std::uint64_t code) {
      std::size_t h = static_cast<std::size_t>((code * 0x9E3779B97F4A7C15ull) >> 20) & (slots - 1);
      while (keys[h] != kEmpty && keys[h] != code) h = (h + 1) & (slots - 1);
      return h;
    };
    for (std::size_t x = 0; x < size; ++x) {
      auto h = slot_of(codes[x]);
      keys[h] = codes[x];
      vals[h] = static_cast<std::uint32_t>(x);
    }
    std::vector<std::uint64_t> place(d);  // p^(d-1-i)
    for (std::size_t i = d; i-- > 0;) place[i] = (i + 1 == d) ? 1 : place[i + 1] * p;

    std::vector<std::size_t> parent(size);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<char> leaks(size, 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto digits = [&](std::uint64_t code) {
      std::vector<std::int64_t> out(d);
      for (std::size_t i = d; i-- > 0;) {
        out[i] = static_cast<std::int64_t>(code % p);
        code /= p;
      }
      return out;
    };
    const auto P = static_cast<std::int64_t>(p);
    for (std::size_t x = 0; x < size; ++x) {
      auto ux = digits(codes[x]);
      for (const auto& s : shifts)
        for (int sign : {1, -1}) {
          std::uint64_t code = 0;
          for (std::size_t i = 0; i < d; ++i)
            code += static_cast<std::uint64_t>(((ux[i] + sign * s[i]) % P + P) % P) * place[i];
          auto h = slot_of(code);
          if (keys[h] == code)
            parent[find(x)] = find(vals[h]);
          else
            leaks[x] = 1;
        }
    }
    std::vector<char> dirty(size, 0);
    for (std::size_t x = 0; x < size; ++x)
      if (leaks[x]) dirty[find(x)] = 1;

    // One polynomial per clean class: Σ t^u · t^{p·w_u} with A·w_u = (β - A·u)/p.
    std::map<std::size_t, std::vector<Term<F>>> classes;
    for (std::size_t x = 0; x < size; ++x) {
      auto root = find(x);
      if (dirty[root]) continue;
      auto ux = digits(codes[x]);
      auto w = oracle.decompose(rests[x]);
      Monomial m(d);
      for (std::size_t i = 0; i < d; ++i) m.set(i, static_cast<Exponent>(ux[i] + p * w[i]));
      classes[root].push_back({field.one(), std::move(m)});
    }
    FpurityReport<F> rep;
    rep.prime = static_cast<std::uint32_t>(p);
    rep.method = "corner_piece";
    const std::size_t corner = size - 1;  // u = (p-1,...,p-1) has the largest code
    for (auto& [root, terms] : classes) {
      auto poly = Polynomial<F>::from_terms(ring, std::move(terms));
      if (root == find(corner)) rep.certificate = poly;
      rep.colon_generators.push_back(std::move(poly));
    }
    rep.f_pure = rep.certificate.has_value();
    return rep;
  }
}

}  // namespace vero
