#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vero/error.hpp"
#include "vero/field.hpp"
#include "vero/monomial.hpp"

namespace vero {

/// Standard-graded polynomial ring F[v_0, ..., v_{d-1}]; v_0 is the largest variable.
template <Field F>
class PolyRing {
 public:
  PolyRing(F field, std::vector<std::string> names) : field_(std::move(field)), names_(std::move(names)) {
    if (names_.empty()) throw InvalidArgument("a polynomial ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw InvalidArgument("empty variable name");
      if (!seen.insert(n).second) throw InvalidArgument("duplicate variable name '" + n + "'");
    }
  }

  std::size_t arity() const { return names_.size(); }
  const F& field() const { return field_; }
  CoeffDomain domain() const { return field_.domain(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
};

template <Field F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <Field F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(names));
}

/// Ring with variables prefix1, ..., prefixN.
template <Field F>
RingPtr<F> make_ring(F field, const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(field), std::move(names));
}

template <Field F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

template <Field F>
struct Term {
  typename F::value_type coeff;
  Monomial mono;
};

inline const MonomialOrder& canonical_order() {
  static const MonomialOrder o = MonomialOrder::grevlex();
  return o;
}

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms sorted grevlex-descending. Equality is structural.
template <Field F>
class Polynomial {
 public:
  using value_type = typename F::value_type;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidArgument("null ring");
  }

  /// Builds from arbitrary terms: combines duplicates, drops zeros, sorts.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    const F& k = p.field();
    for (const auto& t : terms)
      if (t.mono.arity() != p.ring_->arity()) throw RingMismatch("term arity does not match ring");
    std::sort(terms.begin(), terms.end(),
              [](const Term<F>& a, const Term<F>& b) { return canonical_order().cmp(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
        if (k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      } else if (!k.is_zero(t.coeff)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Terms must already be canonical; skips normalization.
  static Polynomial from_sorted_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, value_type c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({std::move(c), Monomial(p.ring_->arity())});
    return p;
  }

  static Polynomial one(RingPtr<F> ring) {
    auto c = ring->field().one();
    return constant(std::move(ring), c);
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t index) {
    if (index >= ring->arity()) throw InvalidArgument("variable index out of range");
    return monomial(ring, ring->field().one(), Monomial::variable(ring->arity(), index));
  }

  static Polynomial monomial(RingPtr<F> ring, value_type c, Monomial m) {
    if (m.arity() != ring->arity()) throw RingMismatch("monomial arity does not match ring");
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Maximum total degree; zero polynomial reports nullopt.
  std::optional<std::uint64_t> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();  // grevlex is degree-compatible
  }

  /// Leading term under `order` (nonzero polynomial required).
  const Term<F>& lead_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    const Term<F>* best = &terms_.front();
    if (order == canonical_order()) return *best;
    for (const auto& t : terms_)
      if (order.cmp(t.mono, best->mono) > 0) best = &t;
    return *best;
  }

  /// True when no term involves a variable in `vars`.
  bool free_of(const std::vector<std::size_t>& vars) const {
    for (const auto& t : terms_)
      for (auto v : vars)
        if (t.mono[v] != 0) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    const F& k = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::unordered_map<Monomial, value_type, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto m = s.mono * t.mono;
        auto c = k.mul(s.coeff, t.coeff);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second = k.add(it->second, c);
      }
    std::vector<Term<F>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!k.is_zero(c)) terms.push_back({std::move(c), m});
    std::sort(terms.begin(), terms.end(),
              [](const Term<F>& x, const Term<F>& y) { return canonical_order().cmp(x.mono, y.mono) > 0; });
    return from_sorted_terms(a.ring_, std::move(terms));
  }

  Polynomial scaled(const value_type& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
  }

  Polynomial times_monomial(const value_type& c, const Monomial& m) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    Polynomial r = *this;
    // Multiplying by a monomial preserves the grevlex order of terms.
    for (auto& t : r.terms_) {
      t.coeff = field().mul(t.coeff, c);
      t.mono = t.mono * m;
    }
    return r;
  }

  Polynomial pow(std::uint64_t e) const {
    Polynomial result = one(ring_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(field().inv(lead_term(order).coeff));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const F& k = field();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      std::string c = k.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      std::string m = monomial_string(t.mono);
      if (m.empty())
        out += c;
      else if (c == "1")
        out += m;
      else
        out += c + "*" + m;
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }

  void require_same_ring(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) throw RingMismatch("polynomials belong to different rings");
  }

 private:
  Polynomial combine(const Polynomial& b, bool subtract) const {
    require_same_ring(b);
    const F& k = field();
    std::vector<Term<F>> out;
    out.reserve(terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      int c = i == terms_.size()     ? -1
              : j == b.terms_.size() ? 1
                                     : canonical_order().cmp(terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        out.push_back(terms_[i++]);
      } else if (c < 0) {
        auto t = b.terms_[j++];
        if (subtract) t.coeff = k.neg(t.coeff);
        out.push_back(std::move(t));
      } else {
        auto s = subtract ? k.sub(terms_[i].coeff, b.terms_[j].coeff) : k.add(terms_[i].coeff, b.terms_[j].coeff);
        if (!k.is_zero(s)) out.push_back({std::move(s), terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return from_sorted_terms(ring_, std::move(out));
  }

  RingPtr<F> ring_;
  std::vector<Term<F>> terms_;
};

/// Result of a homogeneity test. The zero polynomial is homogeneous with no degree.
struct Homogeneity {
  bool homogeneous = true;
  std::optional<std::uint64_t> degree;
};

/// Homogeneity with respect to integer variable weights (all ones = standard grading).
template <Field F>
Homogeneity homogeneity(const Polynomial<F>& f, const std::vector<std::uint64_t>& weights = {}) {
  Homogeneity h;
  for (const auto& t : f.terms()) {
    std::uint64_t d = 0;
    if (weights.empty()) {
      d = t.mono.degree();
    } else {
      for (std::size_t i = 0; i < t.mono.arity(); ++i) d += weights.at(i) * t.mono[i];
    }
    if (!h.degree) {
      h.degree = d;
    } else if (*h.degree != d) {
      return {false, std::nullopt};
    }
  }
  return h;
}

template <Field F>
struct DivisionResult {
  std::vector<Polynomial<F>> quotients;
  Polynomial<F> remainder;
};

/// Multivariate division. At each step the leading term of the running
/// dividend goes to the first divisor (in list order) whose leading monomial
/// divides it, otherwise to the remainder.
template <Field F>
DivisionResult<F> divide_multivariate(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors,
                                      const MonomialOrder& order) {
  const F& k = f.field();
  for (const auto& g : divisors) {
    f.require_same_ring(g);
    if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  }
  std::vector<const Term<F>*> leads;
  for (const auto& g : divisors) leads.push_back(&g.lead_term(order));

  std::vector<std::vector<Term<F>>> qterms(divisors.size());
  std::vector<Term<F>> rterms;
  Polynomial<F> p = f;
  while (!p.is_zero()) {
    const Term<F> lt = p.lead_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i]->mono.divides(lt.mono)) continue;
      auto c = k.mul(lt.coeff, k.inv(leads[i]->coeff));
      auto m = lt.mono / leads[i]->mono;
      qterms[i].push_back({c, m});
      p = p - divisors[i].times_monomial(c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      rterms.push_back(lt);
      p = p - Polynomial<F>::monomial(f.ring(), lt.coeff, lt.mono);
    }
  }
  DivisionResult<F> out{{}, Polynomial<F>::from_terms(f.ring(), std::move(rterms))};
  for (auto& q : qterms) out.quotients.push_back(Polynomial<F>::from_terms(f.ring(), std::move(q)));
  return out;
}

/// Exact quotient f / g; throws when g does not divide f.
template <Field F>
Polynomial<F> exact_quotient(const Polynomial<F>& f, const Polynomial<F>& g) {
  auto r = divide_multivariate(f, {g}, canonical_order());
  if (!r.remainder.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return r.quotients.front();
}

/// Re-expresses f in `target`, sending variable i of f's ring to variable map[i].
/// Variables whose image is nullopt must not occur in f.
template <Field F>
Polynomial<F> embed(const Polynomial<F>& f, const RingPtr<F>& target,
                    const std::vector<std::optional<std::size_t>>& map) {
  std::vector<Term<F>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!map.at(i)) throw InvalidArgument("variable '" + f.ring()->name(i) + "' has no image in target ring");
      m.set(*map[i], m[*map[i]] + t.mono[i]);
    }
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial<F>::from_terms(target, std::move(terms));
}

/// Ring with extra variables appended after the existing ones.
template <Field F>
RingPtr<F> extend_ring(const RingPtr<F>& ring, const std::vector<std::string>& extra) {
  auto names = ring->names();
  for (const auto& e : extra) names.push_back(e);
  return make_ring(ring->field(), std::move(names));
}

/// A variable name not used by `ring`, of the form `_<stem><n>`.
template <Field F>
std::string fresh_name(const PolyRing<F>& ring, const std::string& stem) {
  for (std::size_t i = 0;; ++i) {
    std::string n = "_" + stem + std::to_string(i);
    if (!ring.index_of(n)) return n;
  }
}

/// Embedding map sending each variable of an arity-n ring to itself.
inline std::vector<std::optional<std::size_t>> identity_map(std::size_t n) {
  std::vector<std::optional<std::size_t>> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

}  // namespace vero
