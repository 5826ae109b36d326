#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "vero/error.hpp"

namespace vero {

using Exponent = std::uint32_t;

/// Exponent vector x^e of fixed arity. The total degree is cached.
class Monomial {
 public:
  using storage_type = boost::container::small_vector<Exponent, 16>;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<Exponent> e) : exps_(e), degree_(sum(exps_)) {}
  explicit Monomial(std::span<const Exponent> e) : exps_(e.begin(), e.end()), degree_(sum(exps_)) {}

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1) {
    Monomial m(arity);
    m.set(index, power);
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  std::uint64_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  void set(std::size_t i, Exponent e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  /// Bit i%64 set when variable i occurs. Used to reject divisibility tests early.
  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i]) m |= std::uint64_t{1} << (i & 63);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
    r.degree_ -= b.degree_;
    return r;
  }

  Monomial pow(Exponent e) const {
    Monomial r = *this;
    for (auto& x : r.exps_) x *= e;
    r.degree_ *= e;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ = sum(r.exps_);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ = sum(r.exps_);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  static std::uint64_t sum(const storage_type& v) {
    std::uint64_t s = 0;
    for (auto e : v) s += e;
    return s;
  }

  storage_type exps_;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, GrevLex, Block };

/// Monomial order on a ring with variables x_0 > x_1 > ... > x_{n-1}.
///
/// Block orders compare the eliminated variables first (graded reverse
/// lexicographic on that block) and break ties with the inner order restricted
/// to the remaining variables, so any monomial involving an eliminated variable
/// is larger than every monomial free of them.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
  static MonomialOrder block(std::vector<std::size_t> eliminated, OrderKind inner = OrderKind::GrevLex) {
    if (inner == OrderKind::Block) throw InvalidArgument("block order inner order must be Lex or GrevLex");
    std::sort(eliminated.begin(), eliminated.end());
    eliminated.erase(std::unique(eliminated.begin(), eliminated.end()), eliminated.end());
    MonomialOrder o(OrderKind::Block);
    o.inner_ = inner;
    o.eliminated_ = std::move(eliminated);
    return o;
  }

  OrderKind kind() const { return kind_; }
  OrderKind inner() const { return inner_; }
  const std::vector<std::size_t>& eliminated() const { return eliminated_; }

  bool eliminates(std::size_t var) const {
    return std::binary_search(eliminated_.begin(), eliminated_.end(), var);
  }

  /// Sign of a - b in this order. Arities must agree (unchecked).
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::Lex:
        return cmp_lex(a, b);
      case OrderKind::GrevLex:
        return cmp_grevlex(a, b);
      case OrderKind::Block:
        return cmp_block(a, b);
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case OrderKind::Lex:
        return "lex";
      case OrderKind::GrevLex:
        return "grevlex";
      case OrderKind::Block:
        return std::string("block(") + (inner_ == OrderKind::Lex ? "lex" : "grevlex") + ")";
    }
    return {};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k) {}

  static int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }

  static int cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.arity(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int cmp_block(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto v : eliminated_) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = eliminated_.size(); k-- > 0;) {
      auto v = eliminated_[k];
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    if (inner_ == OrderKind::Lex) {
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (!eliminates(i) && a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    // Remaining-degree difference equals total-degree difference here.
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.arity(); i-- > 0;)
      if (!eliminates(i) && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  OrderKind kind_;
  OrderKind inner_ = OrderKind::GrevLex;
  std::vector<std::size_t> eliminated_;
};

inline std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw RingMismatch("monomial arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  int c = order.cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace vero
