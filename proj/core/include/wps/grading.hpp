#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wps {

using Degree = std::int64_t;

/// Positive-integer grading vector (a_0, ..., a_n) of a weighted polynomial
/// ring. Entries are stored in non-decreasing order; the permutation applied
/// at construction is kept so callers can map coordinates back.
class Weights {
 public:
  explicit Weights(std::vector<std::int64_t> entries);
  Weights(std::initializer_list<std::int64_t> entries)
      : Weights(std::vector<std::int64_t>(entries)) {}

  std::size_t size() const noexcept { return a_.size(); }
  /// n, the dimension of the weighted projective space.
  std::size_t dimension() const noexcept { return a_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return a_; }
  std::int64_t max() const noexcept { return a_.back(); }

  /// permutation()[i] is the input position of sorted entry i.
  std::span<const std::size_t> permutation() const noexcept { return perm_; }

  /// The gcd of every n-element sub-multiset of the weights is 1.
  bool well_formed() const noexcept { return well_formed_; }

  /// Weights with entry i removed: the grading of the hyperplane V(x_i).
  Weights without(std::size_t i) const;

  Degree degree(std::span<const int> exponents) const;

  /// Comma-separated rendering, e.g. "1,2,3".
  std::string to_string() const;

  friend bool operator==(const Weights& x, const Weights& y) noexcept {
    return x.a_ == y.a_;
  }

 private:
  std::vector<std::int64_t> a_;
  std::vector<std::size_t> perm_;
  bool well_formed_ = false;
};

struct Monomial {
  std::vector<int> exponents;
  Degree degree = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Memoized s_d = dim_k S_d for 0 <= d <= max_degree, filled once at
/// construction by coin-counting DP. Immutable afterwards, so concurrent
/// readers are safe.
class HilbertTable {
 public:
  HilbertTable(Weights w, Degree max_degree);

  /// s_d; zero for d < 0. Throws std::out_of_range past max_degree().
  std::uint64_t operator()(Degree d) const;

  Degree max_degree() const noexcept { return static_cast<Degree>(s_.size()) - 1; }
  const Weights& weights() const noexcept { return w_; }

 private:
  Weights w_;
  std::vector<std::uint64_t> s_;
};

/// Number of exponent vectors e >= 0 with sum a_i e_i = d. Throws
/// std::overflow_error if the count does not fit in 64 bits.
std::uint64_t count_monomials(const Weights& w, Degree d);

/// Arbitrary-precision variant of count_monomials.
mpz_class count_monomials_exact(const Weights& w, Degree d);

/// All monomials of weighted degree d, exponent vectors in descending
/// lexicographic order (x_0 heaviest). E.g. (1,2,3), d=3 -> z^3, zu, v.
std::vector<Monomial> enumerate_monomials(const Weights& w, Degree d);

/// Closed-form s_d for ℙ(1,b), coprime ℙ(a,b) and ℙ(1,2,3); std::nullopt
/// for any other weights. Throws UnsupportedWeights for two weights that
/// are not coprime.
std::optional<std::uint64_t> hilbert_closed_form(const Weights& w, Degree d);

/// d lies in the numerical semigroup generated by the weights.
bool semigroup_member(const Weights& w, Degree d);

enum class CountSource { closed_form, dynamic_programming };

struct HilbertValue {
  std::uint64_t value = 0;
  CountSource source = CountSource::dynamic_programming;
};

/// s_d from the closed form when one exists, DP otherwise.
HilbertValue hilbert_value(const Weights& w, Degree d);

const char* to_string(CountSource source) noexcept;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace wps
