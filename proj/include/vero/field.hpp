#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "vero/error.hpp"

namespace vero {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

enum class CoeffKind { Rationals, PrimeField };

/// Runtime description of a coefficient field: QQ or GF(p).
struct CoeffDomain {
  CoeffKind kind = CoeffKind::Rationals;
  std::uint32_t prime = 0;

  static CoeffDomain rationals() { return {}; }

  static CoeffDomain prime_field(std::uint64_t p) {
    // Products of two residues must fit in 64 bits.
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("prime " + std::to_string(p) + " is too large");
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    return {CoeffKind::PrimeField, static_cast<std::uint32_t>(p)};
  }

  std::uint32_t characteristic() const { return kind == CoeffKind::Rationals ? 0 : prime; }

  std::string name() const {
    return kind == CoeffKind::Rationals ? std::string("QQ") : "GF(" + std::to_string(prime) + ")";
  }

  friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;
};

/// The rational numbers, backed by GMP.
class Rationals {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_integer(const mpz_class& z) const { return value_type(z); }
  value_type from_int(long v) const { return value_type(v); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) throw DomainError("division by zero");
    return 1 / a;
  }
  /// a - c*b
  value_type sub_mul(const value_type& a, const value_type& c, const value_type& b) const { return a - c * b; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }

  CoeffDomain domain() const { return CoeffDomain::rationals(); }
  std::uint32_t characteristic() const { return 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// GF(p) with residues stored in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint64_t p) : p_(CoeffDomain::prime_field(p).prime) {}

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_integer(const mpz_class& z) const {
    mpz_class r = z % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r.get_ui());
  }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(a + (p_ - b)); }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t{a} * b % p_); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  value_type inv(value_type a) const {
    if (a == 0) throw DomainError("division by zero");
    return pow(a, p_ - 2);
  }
  value_type sub_mul(value_type a, value_type c, value_type b) const { return sub(a, mul(c, b)); }

  std::string to_string(value_type a) const { return std::to_string(a); }
  bool is_negative(value_type) const { return false; }

  CoeffDomain domain() const { return {CoeffKind::PrimeField, p_}; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t prime() const { return p_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a, const mpz_class& z) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.from_integer(z) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.sub_mul(a, a, a) } -> std::convertible_to<typename F::value_type>;
  { f.domain() } -> std::same_as<CoeffDomain>;
};

template <class F>
inline constexpr bool is_prime_field_v = std::same_as<F, PrimeField>;

/// Calls `fn` with the concrete field object described by `d`.
template <class Fn>
decltype(auto) with_field(const CoeffDomain& d, Fn&& fn) {
  if (d.kind == CoeffKind::Rationals) return std::forward<Fn>(fn)(Rationals{});
  return std::forward<Fn>(fn)(PrimeField{d.prime});
}

}  // namespace vero
