#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "vero/error.hpp"
#include "vero/polynomial.hpp"

namespace vero {

/// Ideal given by generators. Zero generators are dropped; an empty list is the zero ideal.
template <Field F>
class Ideal {
 public:
  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring(), ring_)) throw RingMismatch("generator does not belong to the ideal's ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }

  std::vector<std::string> generator_strings() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.to_string());
    return out;
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
};

template <Field F>
Ideal<F> ideal_sum(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideals belong to different rings");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.ring(), std::move(gens));
}

/// Ideal generated by the listed variables.
template <Field F>
Ideal<F> variable_ideal(const RingPtr<F>& ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial<F>> gens;
  for (auto v : vars) gens.push_back(Polynomial<F>::variable(ring, v));
  return Ideal<F>(ring, std::move(gens));
}

/// S-pair selection. Normal picks the pair of smallest lcm degree (weighted
/// when weights are given), then smallest lcm in the order; under pure lex it
/// takes the smallest lcm in lex directly. Fifo processes pairs in creation
/// order; it is a plain reference strategy and can swell badly under lex.
enum class PairStrategy { Normal, Fifo };

namespace detail {

// Terms sorted descending in the active order.
template <Field F>
struct WorkPoly {
  std::vector<Term<F>> terms;
  std::uint64_t lead_mask = 0;

  const Monomial& lead() const { return terms.front().mono; }
  bool empty() const { return terms.empty(); }
};

using Weights = std::vector<std::uint64_t>;

inline std::uint64_t weighted_degree(const Monomial& m, const Weights& w) {
  if (w.empty()) return m.degree();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) d += w[i] * m[i];
  return d;
}

template <Field F>
WorkPoly<F> to_work(const Polynomial<F>& p, const MonomialOrder& order) {
  WorkPoly<F> w{p.terms(), 0};
  if (!(order == canonical_order()))
    std::sort(w.terms.begin(), w.terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order.cmp(a.mono, b.mono) > 0; });
  if (!w.terms.empty()) w.lead_mask = w.lead().support_mask();
  return w;
}

template <Field F>
Polynomial<F> from_work(const WorkPoly<F>& w, const RingPtr<F>& ring, const MonomialOrder& order) {
  auto terms = w.terms;
  if (!(order == canonical_order()))
    std::sort(terms.begin(), terms.end(),
              [](const Term<F>& a, const Term<F>& b) { return canonical_order().cmp(a.mono, b.mono) > 0; });
  return Polynomial<F>::from_sorted_terms(ring, std::move(terms));
}

// p[from..] - c * m * g, both sorted descending.
template <Field F>
std::vector<Term<F>> sub_scaled(const F& k, const std::vector<Term<F>>& p, std::size_t from,
                                const typename F::value_type& c, const Monomial& m, const WorkPoly<F>& g,
                                const MonomialOrder& order) {
  std::vector<Term<F>> out;
  out.reserve(p.size() - from + g.terms.size());
  std::size_t i = from, j = 0;
  Monomial gm;
  bool have = false;
  while (i < p.size() || j < g.terms.size()) {
    if (j < g.terms.size() && !have) {
      gm = g.terms[j].mono * m;
      have = true;
    }
    int s = i == p.size() ? -1 : j == g.terms.size() ? 1 : order.cmp(p[i].mono, gm);
    if (s > 0) {
      out.push_back(p[i++]);
    } else if (s < 0) {
      out.push_back({k.neg(k.mul(c, g.terms[j].coeff)), std::move(gm)});
      ++j;
      have = false;
    } else {
      auto v = k.sub_mul(p[i].coeff, c, g.terms[j].coeff);
      if (!k.is_zero(v)) out.push_back({std::move(v), std::move(gm)});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

template <Field F>
void make_monic(const F& k, WorkPoly<F>& w) {
  if (w.empty() || k.is_one(w.terms.front().coeff)) return;
  auto inv = k.inv(w.terms.front().coeff);
  for (auto& t : w.terms) t.coeff = k.mul(t.coeff, inv);
}

// Full normal form of `p` modulo the monic polynomials basis[idx] for idx in `active`.
// When `skip` is set that element is not used as a reducer.
template <Field F>
WorkPoly<F> reduce(const F& k, WorkPoly<F> p, const std::vector<WorkPoly<F>>& basis,
                   const std::vector<std::size_t>& active, const MonomialOrder& order,
                   std::optional<std::size_t> skip = std::nullopt) {
  std::vector<Term<F>> rem;
  std::vector<Term<F>>& cur = p.terms;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term<F>& lt = cur[pos];
    const std::uint64_t mask = lt.mono.support_mask();
    const WorkPoly<F>* reducer = nullptr;
    for (auto idx : active) {
      if (skip && idx == *skip) continue;
      const auto& g = basis[idx];
      if ((g.lead_mask & ~mask) == 0 && g.lead().divides(lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (!reducer) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    auto c = lt.coeff;  // reducers are monic
    auto m = lt.mono / reducer->lead();
    cur = sub_scaled(k, cur, pos, c, m, *reducer, order);
    pos = 0;
  }
  WorkPoly<F> out{std::move(rem), 0};
  if (!out.empty()) out.lead_mask = out.lead().support_mask();
  return out;
}

template <Field F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const F& field, const MonomialOrder& order, PairStrategy strategy, Weights weights)
      : k_(field), order_(order), strategy_(strategy), weights_(std::move(weights)) {}

  void add_generator(WorkPoly<F> f) {
    f = reduce(k_, std::move(f), polys_, active_, order_);
    if (f.empty()) return;
    make_monic(k_, f);
    insert(std::move(f));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = select_pair();
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      auto s = spoly(pr);
      s = reduce(k_, std::move(s), polys_, active_, order_);
      if (s.empty()) continue;
      make_monic(k_, s);
      insert(std::move(s));
      if (is_unit()) {
        pairs_.clear();
        break;
      }
    }
  }

  // Reduced basis, sorted by increasing leading monomial.
  std::vector<WorkPoly<F>> reduced_basis() {
    std::vector<std::size_t> act = active_;
    // Drop elements whose leading monomial is divisible by another's.
    std::vector<std::size_t> minimal;
    for (auto i : act) {
      bool redundant = false;
      for (auto j : act) {
        if (i == j) continue;
        if (polys_[j].lead().divides(polys_[i].lead()) &&
            (!(polys_[j].lead() == polys_[i].lead()) || j < i)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(i);
    }
    std::vector<WorkPoly<F>> out;
    for (auto i : minimal) {
      WorkPoly<F> head{{polys_[i].terms.front()}, polys_[i].lead_mask};
      WorkPoly<F> tail{std::vector<Term<F>>(polys_[i].terms.begin() + 1, polys_[i].terms.end()), 0};
      auto red = reduce(k_, std::move(tail), polys_, minimal, order_, i);
      head.terms.insert(head.terms.end(), red.terms.begin(), red.terms.end());
      out.push_back(std::move(head));
    }
    std::sort(out.begin(), out.end(),
              [&](const WorkPoly<F>& a, const WorkPoly<F>& b) { return order_.cmp(a.lead(), b.lead()) < 0; });
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t degree;
    std::uint64_t serial;
  };

  bool is_unit() const {
    for (auto i : active_)
      if (polys_[i].lead().is_one()) return true;
    return false;
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t q = 1; q < pairs_.size(); ++q) {
      const auto& a = pairs_[q];
      const auto& b = pairs_[best];
      bool better;
      if (strategy_ == PairStrategy::Fifo) {
        better = a.serial < b.serial;
      } else {
        int c = a.degree != b.degree && order_.kind() != OrderKind::Lex ? (a.degree < b.degree ? -1 : 1)
                                                                        : order_.cmp(a.lcm, b.lcm);
        better = c < 0 || (c == 0 && a.serial < b.serial);
      }
      if (better) best = q;
    }
    return best;
  }

  WorkPoly<F> spoly(const Pair& pr) const {
    const auto& f = polys_[pr.i];
    const auto& g = polys_[pr.j];
    auto mf = pr.lcm / f.lead();
    auto mg = pr.lcm / g.lead();
    std::vector<Term<F>> ft;
    ft.reserve(f.terms.size());
    for (const auto& t : f.terms) ft.push_back({t.coeff, t.mono * mf});
    // Both monic: leading terms cancel.
    auto out = sub_scaled(k_, ft, 0, k_.one(), mg, g, order_);
    WorkPoly<F> w{std::move(out), 0};
    if (!w.empty()) w.lead_mask = w.lead().support_mask();
    return w;
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(WorkPoly<F> h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].lead();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (auto g : active_) c.push_back({g, lcm(lh, polys_[g].lead()), lh.coprime(polys_[g].lead())});

    std::vector<Cand> d;
    for (std::size_t q = 0; q < c.size(); ++q) {
      bool keep = c[q].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t r = q + 1; r < c.size() && keep; ++r)
          if (c[r].lcm.divides(c[q].lcm)) keep = false;
        for (std::size_t r = 0; r < d.size() && keep; ++r)
          if (d[r].lcm.divides(c[q].lcm)) keep = false;
      }
      if (keep) d.push_back(c[q]);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        auto l1 = lcm(polys_[p.i].lead(), lh);
        auto l2 = lcm(polys_[p.j].lead(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& cd : d) {
      if (cd.coprime) continue;
      const auto deg = weighted_degree(cd.lcm, weights_);
      kept.push_back({cd.g, hi, std::move(cd.lcm), deg, serial_++});
    }
    pairs_ = std::move(kept);

    std::vector<std::size_t> act;
    for (auto g : active_)
      if (!lh.divides(polys_[g].lead())) act.push_back(g);
    act.push_back(hi);
    active_ = std::move(act);

    // keep the basis tail-reduced against the new element; stale reducers
    // with swollen coefficients otherwise leak into every later reduction
    for (auto g : active_) {
      if (g == hi) continue;
      auto& pg = polys_[g];
      bool hit = false;
      for (std::size_t t = 1; t < pg.terms.size() && !hit; ++t) hit = lh.divides(pg.terms[t].mono);
      if (!hit) continue;
      WorkPoly<F> tail{std::vector<Term<F>>(pg.terms.begin() + 1, pg.terms.end()), 0};
      auto red = reduce(k_, std::move(tail), polys_, active_, order_, g);
      pg.terms.resize(1);
      pg.terms.insert(pg.terms.end(), red.terms.begin(), red.terms.end());
    }
  }

  const F& k_;
  MonomialOrder order_;
  PairStrategy strategy_;
  Weights weights_;
  std::vector<WorkPoly<F>> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::uint64_t serial_ = 0;
};

}  // namespace detail

/// Reduced, monic Groebner basis under a fixed order. Elements are sorted by
/// increasing leading monomial, so two bases of the same ideal and order are
/// structurally equal.
template <Field F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<detail::WorkPoly<F>> work)
      : ring_(std::move(ring)), order_(std::move(order)), work_(std::move(work)) {
    for (std::size_t i = 0; i < work_.size(); ++i) {
      elements_.push_back(detail::from_work(work_[i], ring_, order_));
      all_.push_back(i);
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit_ideal() const { return work_.size() == 1 && work_.front().lead().is_one(); }

  std::vector<Monomial> lead_monomials() const {
    std::vector<Monomial> out;
    for (const auto& w : work_) out.push_back(w.lead());
    return out;
  }

  Polynomial<F> normal_form(const Polynomial<F>& f) const {
    if (!same_ring(f.ring(), ring_)) throw RingMismatch("polynomial is not in the basis ring");
    auto r = detail::reduce(ring_->field(), detail::to_work(f, order_), work_, all_, order_);
    return detail::from_work(r, ring_, order_);
  }

  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }

  Ideal<F> ideal() const { return Ideal<F>(ring_, elements_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  RingPtr<F> ring_;
  MonomialOrder order_;
  std::vector<detail::WorkPoly<F>> work_;
  std::vector<Polynomial<F>> elements_;
  std::vector<std::size_t> all_;
};

/// Reduced Groebner basis by Buchberger's algorithm with the Gebauer-Moeller
/// pair criteria (coprime leading monomials and the chain criterion).
/// `weights` only steers the lcm degrees used for pair selection; the result
/// does not depend on it.
template <Field F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, const MonomialOrder& order,
                            PairStrategy strategy = PairStrategy::Normal, const detail::Weights& weights = {}) {
  const F& k = ideal.ring()->field();
  detail::BuchbergerEngine<F> engine(k, order, strategy, weights);
  for (const auto& g : ideal.generators()) engine.add_generator(detail::to_work(g, order));
  engine.run();
  return GroebnerBasis<F>(ideal.ring(), order, engine.reduced_basis());
}

template <Field F>
bool ideal_member(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return gb.contains(f);
}

/// I ⊆ J, with J given by a Groebner basis.
template <Field F>
bool ideal_contained(const Ideal<F>& i, const GroebnerBasis<F>& j) {
  for (const auto& g : i.generators())
    if (!j.contains(g)) return false;
  return true;
}

namespace detail {

// Eliminates `drop` from `ideal` and maps survivors into `target`, whose
// variables are those of ideal.ring() with `drop` removed, in order.
template <Field F>
Ideal<F> eliminate_into(const Ideal<F>& ideal, const std::vector<std::size_t>& drop, const RingPtr<F>& target,
                        const Weights& weights = {}) {
  const std::size_t n = ideal.ring()->arity();
  std::vector<std::optional<std::size_t>> map(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) map[v] = next++;
  if (next != target->arity()) throw RingMismatch("target ring arity does not match elimination");
  auto gb = buchberger(ideal, MonomialOrder::block(drop), PairStrategy::Normal, weights);
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gb.elements())
    if (g.free_of(drop)) kept.push_back(embed(g, target, map));
  return Ideal<F>(target, std::move(kept));
}

}  // namespace detail

/// Generators of I ∩ F[remaining variables], returned in the smaller ring.
template <Field F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::vector<std::size_t> drop) {
  const auto& ring = *ideal.ring();
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (auto v : drop)
    if (v >= ring.arity()) throw InvalidArgument("variable index out of range");
  if (drop.size() >= ring.arity()) throw InvalidArgument("cannot eliminate every variable");
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ring.arity(); ++v)
    if (!std::binary_search(drop.begin(), drop.end(), v)) names.push_back(ring.name(v));
  return detail::eliminate_into(ideal, drop, make_ring(ring.field(), std::move(names)));
}

/// I ∩ K via w·I + (1 - w)·K with w eliminated.
template <Field F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideals belong to different rings");
  if (a.is_zero() || b.is_zero()) return Ideal<F>(a.ring());
  const auto& ring = a.ring();
  const std::size_t n = ring->arity();
  auto ext = extend_ring(ring, {fresh_name(*ring, "w")});
  auto map = identity_map(n);
  auto w = Polynomial<F>::variable(ext, n);
  auto one_minus_w = Polynomial<F>::one(ext) - w;
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) gens.push_back(w * embed(f, ext, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_w * embed(g, ext, map));
  // With deg w = 0 the system is homogeneous whenever both inputs are.
  detail::Weights weights;
  auto homogeneous = [](const Ideal<F>& i) {
    return std::all_of(i.generators().begin(), i.generators().end(),
                       [](const Polynomial<F>& g) { return homogeneity(g).homogeneous; });
  };
  if (homogeneous(a) && homogeneous(b)) {
    weights.assign(n + 1, 1);
    weights[n] = 0;
  }
  return detail::eliminate_into(Ideal<F>(ext, std::move(gens)), {n}, ring, weights);
}

/// (I : f) = {g : g·f ∈ I}, from I ∩ (f) divided by f.
template <Field F>
Ideal<F> colon(const Ideal<F>& ideal, const Polynomial<F>& f) {
  if (f.is_zero()) throw InvalidArgument("colon by the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring())) throw RingMismatch("polynomial is not in the ideal's ring");
  if (f.is_constant() || ideal.is_zero()) return ideal;
  auto both = intersect(ideal, Ideal<F>(ideal.ring(), {f}));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : both.generators()) gens.push_back(exact_quotient(g, f));
  return Ideal<F>(ideal.ring(), std::move(gens));
}

/// (I : K) as the intersection of (I : f) over the generators f of K. The
/// colons are intersected pairwise in a balanced tree; an operand contained
/// in the other is returned directly.
template <Field F>
Ideal<F> colon_ideal(const Ideal<F>& ideal, const Ideal<F>& k) {
  if (k.is_zero()) throw InvalidArgument("colon by the zero ideal");
  if (!same_ring(ideal.ring(), k.ring())) throw RingMismatch("ideals belong to different rings");
  std::vector<Ideal<F>> parts;
  for (const auto& f : k.generators()) parts.push_back(colon(ideal, f));
  auto meet = [](const Ideal<F>& a, const Ideal<F>& b) {
    if (ideal_contained(a, buchberger(b, MonomialOrder::grevlex()))) return a;
    if (ideal_contained(b, buchberger(a, MonomialOrder::grevlex()))) return b;
    return intersect(a, b);
  };
  while (parts.size() > 1) {
    std::vector<Ideal<F>> next;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(meet(parts[i], parts[i + 1]));
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

/// (I : f^∞), eliminating w from I + (1 - w·f).
template <Field F>
Ideal<F> saturate(const Ideal<F>& ideal, const Polynomial<F>& f) {
  if (f.is_zero()) throw InvalidArgument("saturation by the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring())) throw RingMismatch("polynomial is not in the ideal's ring");
  if (f.is_constant() || ideal.is_zero()) return ideal;
  const auto& ring = ideal.ring();
  const std::size_t n = ring->arity();
  auto ext = extend_ring(ring, {fresh_name(*ring, "w")});
  auto map = identity_map(n);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext, map));
  gens.push_back(Polynomial<F>::one(ext) - Polynomial<F>::variable(ext, n) * embed(f, ext, map));
  return detail::eliminate_into(Ideal<F>(ext, std::move(gens)), {n}, ring);
}

struct RadicalMembership {
  bool member = false;
  /// Least e with f^e ∈ I, present when member.
  std::optional<std::uint64_t> exponent;
};

namespace detail {

template <Field F>
bool rabinowitsch_unit(const Polynomial<F>& f, const Ideal<F>& ideal) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->arity();
  auto ext = extend_ring(ring, {fresh_name(*ring, "w")});
  auto map = identity_map(n);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext, map));
  gens.push_back(Polynomial<F>::one(ext) - Polynomial<F>::variable(ext, n) * embed(f, ext, map));
  return buchberger(Ideal<F>(ext, std::move(gens)), MonomialOrder::grevlex()).is_unit_ideal();
}

constexpr std::uint64_t kMaxRadicalExponent = std::uint64_t{1} << 16;

// Least e > lo with f^e in the ideal, given f^lo is not (lo = 0 allowed).
// Doubles until a member power is found, then bisects.
template <Field F>
std::uint64_t least_power(const Polynomial<F>& f, const GroebnerBasis<F>& gb, std::uint64_t lo = 0) {
  std::uint64_t hi = std::max<std::uint64_t>(1, 2 * lo);
  while (!gb.contains(f.pow(hi))) {
    lo = hi;
    hi *= 2;
    if (hi > kMaxRadicalExponent)
      throw ResourceCapError("radical witness exponent exceeds " + std::to_string(kMaxRadicalExponent));
  }
  while (hi - lo > 1) {
    auto mid = lo + (hi - lo) / 2;
    if (gb.contains(f.pow(mid)))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

// Image of a rational polynomial modulo p; empty when p divides a denominator.
inline std::optional<Polynomial<PrimeField>> reduce_mod(const Polynomial<Rationals>& f,
                                                        const RingPtr<PrimeField>& ring) {
  const auto& k = ring->field();
  std::vector<Term<PrimeField>> ts;
  for (const auto& t : f.terms()) {
    auto den = k.from_integer(t.coeff.get_den());
    if (den == 0) return std::nullopt;
    ts.push_back({k.mul(k.from_integer(t.coeff.get_num()), k.inv(den)), t.mono});
  }
  return Polynomial<PrimeField>::from_terms(ring, std::move(ts));
}

// Least radical exponent of f modulo a large prime, or empty if f is not in
// the radical there. Only a guess for the rational computation: it is
// confirmed or discarded by exact membership tests.
inline std::optional<std::uint64_t> modular_exponent_guess(const Polynomial<Rationals>& f,
                                                           const Ideal<Rationals>& ideal) {
  for (std::uint64_t p : {2147483647u, 2147483629u, 2147483587u}) {
    auto ring = make_ring(PrimeField(p), ideal.ring()->names());
    auto fp = reduce_mod(f, ring);
    if (!fp || fp->is_zero()) continue;
    std::vector<Polynomial<PrimeField>> gens;
    bool ok = true;
    for (const auto& g : ideal.generators()) {
      auto gp = reduce_mod(g, ring);
      if (!gp) {
        ok = false;
        break;
      }
      gens.push_back(std::move(*gp));
    }
    if (!ok) continue;
    Ideal<PrimeField> ip(ring, std::move(gens));
    if (!rabinowitsch_unit(*fp, ip)) return std::nullopt;
    try {
      return least_power(*fp, buchberger(ip, MonomialOrder::grevlex()));
    } catch (const ResourceCapError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// f ∈ √I by the auxiliary-variable test 1 ∈ I + (1 - w·f). On success the
/// least e with f^e ∈ I is found by doubling and bisecting. Over QQ the auxiliary basis can swell
/// badly, so a modular run first proposes e and exact membership of f^e
/// (with f^(e-1) outside I) settles the member case without it.
template <Field F>
RadicalMembership radical_member(const Polynomial<F>& f, const Ideal<F>& ideal) {
  if (f.is_zero()) throw InvalidArgument("radical membership of the zero polynomial");
  if (!same_ring(ideal.ring(), f.ring())) throw RingMismatch("polynomial is not in the ideal's ring");
  if constexpr (std::is_same_v<F, Rationals>) {
    if (auto guess = detail::modular_exponent_guess(f, ideal)) {
      auto gb = buchberger(ideal, MonomialOrder::grevlex());
      if (gb.contains(f.pow(*guess))) {
        if (*guess == 1 || !gb.contains(f.pow(*guess - 1))) return {true, *guess};
        // the guess overshoots: search below it
        std::uint64_t lo = 0, hi = *guess - 1;
        while (hi - lo > 1) {
          auto mid = lo + (hi - lo) / 2;
          if (gb.contains(f.pow(mid)))
            hi = mid;
          else
            lo = mid;
        }
        return {true, hi};
      }
    }
  }
  if (!detail::rabinowitsch_unit(f, ideal)) return {};
  return {true, detail::least_power(f, buchberger(ideal, MonomialOrder::grevlex()))};
}

/// Equality of ideals by comparing reduced grevlex bases.
template <Field F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideals belong to different rings");
  auto o = MonomialOrder::grevlex();
  return buchberger(a, o).elements() == buchberger(b, o).elements();
}

/// Ideal of leading monomials of the reduced basis under `order`.
template <Field F>
Ideal<F> initial_ideal(const Ideal<F>& ideal, const MonomialOrder& order) {
  auto gb = buchberger(ideal, order);
  std::vector<Polynomial<F>> gens;
  for (const auto& m : gb.lead_monomials())
    gens.push_back(Polynomial<F>::monomial(ideal.ring(), ideal.ring()->field().one(), m));
  return Ideal<F>(ideal.ring(), std::move(gens));
}

}  // namespace vero
