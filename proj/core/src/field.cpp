#include "wps/field.hpp"

#include <algorithm>
#include <vector>

#include "wps/error.hpp"

namespace wps {

Rng::Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::vector<std::uint32_t> material;
  material.reserve(2 * (tags.size() + 1));
  auto push = [&](std::uint64_t v) {
    material.push_back(static_cast<std::uint32_t>(v));
    material.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (auto t : tags) push(t);
  std::seed_seq seq(material.begin(), material.end());
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  // Rejection sampling against the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(Rng& rng, std::uint64_t lo, std::uint64_t hi,
                           std::span<const std::uint64_t> excluded) {
  if (lo > hi) throw FieldError("empty prime range");
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::uint64_t candidate = lo + rng.below(hi - lo + 1);
    candidate |= 1;
    if (candidate > hi) continue;
    if (!is_prime(candidate)) continue;
    if (std::find(excluded.begin(), excluded.end(), candidate) != excluded.end()) continue;
    return candidate;
  }
  throw FieldError("no prime found in range");
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63)) throw FieldError("modulus must be below 2^63");
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
  if (v >= 0) return static_cast<Element>(v) % p_;
  const auto m = static_cast<Element>(-(v + 1)) % p_;  // avoids overflow at INT64_MIN
  return p_ - 1 - m;
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r = v % mpz_class(std::to_string(p_));
  if (r < 0) r += mpz_class(std::to_string(p_));
  return std::stoull(r.get_str());
}

PrimeField::Element PrimeField::from_mpq(const mpq_class& v) const {
  const Element den = from_mpz(v.get_den());
  if (den == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p_));
  return mul(from_mpz(v.get_num()), inv(den));
}

PrimeField::Element PrimeField::pow(Element x, std::uint64_t e) const noexcept {
  return powmod(x, e, p_);
}

PrimeField::Element PrimeField::inv(Element x) const {
  if (x == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  return powmod(x, p_ - 2, p_);
}

RationalField::Element RationalField::pow(const Element& x, std::uint64_t e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

RationalField::Element RationalField::inv(const Element& x) const {
  if (sgn(x) == 0) throw DomainError("inverse of zero in Q");
  return 1 / x;
}

}  // namespace wps
