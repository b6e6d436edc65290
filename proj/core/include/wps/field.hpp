#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>

#include <gmpxx.h>

namespace wps {

__extension__ typedef unsigned __int128 uint128;

/// Deterministic random stream. Built on mt19937_64 and std::seed_seq, both
/// of which the standard specifies bit-exactly, and on our own bounded
/// sampling (std::uniform_int_distribution is implementation defined).
class Rng {
 public:
  /// Stream keyed by a seed and any number of tags (degree, trial, ...).
  Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {});

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// A random prime in [lo, hi] that is not in `excluded`.
std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi,
                           std::span<const std::uint64_t> excluded = {});

/// Arithmetic in F_p for primes p < 2^63.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element x) const noexcept { return x == 0; }

  Element from_int(std::int64_t v) const noexcept;
  Element from_mpz(const mpz_class& v) const;
  /// Throws FieldError when the denominator vanishes mod p.
  Element from_mpq(const mpq_class& v) const;

  Element add(Element x, Element y) const noexcept {
    Element s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element x, Element y) const noexcept { return x >= y ? x - y : x + p_ - y; }
  Element neg(Element x) const noexcept { return x == 0 ? 0 : p_ - x; }
  Element mul(Element x, Element y) const noexcept {
    return static_cast<Element>(static_cast<uint128>(x) * y % p_);
  }
  Element pow(Element x, std::uint64_t e) const noexcept;
  /// Throws DomainError on zero.
  Element inv(Element x) const;

  /// Uniform non-zero element.
  Element random_nonzero(Rng& rng) const { return 1 + rng.below(p_ - 1); }

  std::string to_string(Element x) const { return std::to_string(x); }

 private:
  std::uint64_t p_;
};

/// Exact arithmetic over ℚ with the same interface as PrimeField.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint64_t characteristic() const noexcept { return 0; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& x) const { return sgn(x) == 0; }

  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  Element from_mpz(const mpz_class& v) const { return mpq_class(v); }
  Element from_mpq(const mpq_class& v) const { return v; }

  Element add(const Element& x, const Element& y) const { return x + y; }
  Element sub(const Element& x, const Element& y) const { return x - y; }
  Element neg(const Element& x) const { return -x; }
  Element mul(const Element& x, const Element& y) const { return x * y; }
  Element pow(const Element& x, std::uint64_t e) const;
  Element inv(const Element& x) const;

  /// Sampled integers lie in [1, sample_bound]; over ℚ "uniform" has to be
  /// truncated somewhere.
  static constexpr std::int64_t sample_bound = std::int64_t{1} << 20;
  Element random_nonzero(Rng& rng) const { return from_int(rng.between(1, sample_bound)); }

  std::string to_string(const Element& x) const { return x.get_str(); }
};

}  // namespace wps
