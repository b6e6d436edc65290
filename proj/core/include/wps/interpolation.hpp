#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "wps/error.hpp"
#include "wps/field.hpp"
#include "wps/grading.hpp"
#include "wps/ideals.hpp"
#include "wps/matrix.hpp"

namespace wps {

struct FieldSpec {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  /// Modulus for Kind::prime; 0 means "derive one from the seed".
  std::uint64_t prime = 0;

  static FieldSpec modular(std::uint64_t p = 0) { return {Kind::prime, p}; }
  static FieldSpec exact() { return {Kind::rational, 0}; }
};

struct Sampling {
  FieldSpec field;
  std::uint64_t seed = 1;
  int trials = 3;
};

/// Lower end of the range default primes are drawn from.
inline constexpr std::uint64_t kPrimeLow = std::uint64_t{1} << 50;
inline constexpr std::uint64_t kPrimeHigh = std::uint64_t{1} << 62;

/// The prime used when FieldSpec::prime is 0: random in [2^50, 2^62],
/// determined by the seed, avoiding 2, 3, 5, the weights and a_1 + a_2.
std::uint64_t default_prime(const Weights& w, std::uint64_t seed);

/// A fat-point scheme: one multiplicity per point, plus either explicit
/// coordinates or the policy for sampling general ones.
struct FatPointConfig {
  Weights weights;
  std::vector<int> multiplicities;
  /// Explicit points; empty means "sample general points".
  std::vector<WeightedPoint> points;
  Sampling sampling;

  FatPointConfig(Weights w, std::vector<int> mults, Sampling s = {});

  static FatPointConfig uniform(Weights w, std::size_t count, int multiplicity, Sampling s = {});
  static FatPointConfig double_points(Weights w, std::size_t count, Sampling s = {}) {
    return uniform(std::move(w), count, 2, s);
  }
  static FatPointConfig simple_points(Weights w, std::size_t count, Sampling s = {}) {
    return uniform(std::move(w), count, 1, s);
  }

  std::size_t point_count() const noexcept { return multiplicities.size(); }
  /// sum over points of binom(n + m_i - 1, n).
  std::uint64_t condition_count() const;
  /// Modulus actually used (0 in rational mode).
  std::uint64_t modulus() const;
};

/// Derivative multi-indices u with |u| = order, in descending lex order.
std::vector<std::vector<int>> derivative_operators(std::size_t nvars, int order);

/// General points: non-zero coordinates, pairwise distinct within each slot,
/// the first weight-1 coordinate pinned to 1.
template <class Field>
std::vector<std::vector<typename Field::Element>> sample_points(const Field& f, const Weights& w,
                                                                std::size_t count, Rng& rng) {
  using E = typename Field::Element;
  int pinned = -1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 1) {
      pinned = static_cast<int>(j);
      break;
    }
  }
  std::vector<std::vector<E>> pts(count, std::vector<E>(w.size()));
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (static_cast<int>(j) == pinned) {
      for (auto& p : pts) p[j] = f.one();
      continue;
    }
    std::set<E> used;
    for (auto& p : pts) {
      E x;
      do {
        x = f.random_nonzero(rng);
      } while (!used.insert(x).second);
      p[j] = x;
    }
  }
  return pts;
}

/// Rows: for each point, one row per operator of order m_i - 1 and one per
/// lower-order operator of weighted degree d; columns:
/// `basis` (default: enumerate_monomials(w, d)). Entry is the derivative of
/// the monomial evaluated at the point.
template <class Field>
Matrix<typename Field::Element> evaluation_matrix(
    const Field& f, const Weights& w, std::span<const int> mults,
    const std::vector<std::vector<typename Field::Element>>& points, Degree d,
    const std::vector<Monomial>* basis = nullptr) {
  using E = typename Field::Element;
  if constexpr (std::is_same_v<Field, PrimeField>) {
    if (d >= 0 && f.modulus() <= static_cast<std::uint64_t>(d)) {
      throw FieldError("prime " + std::to_string(f.modulus()) +
                       " does not exceed the degree " + std::to_string(d));
    }
  }
  if (points.size() != mults.size()) throw std::invalid_argument("points/multiplicities mismatch");
  std::vector<Monomial> own;
  if (!basis) {
    own = enumerate_monomials(w, d);
    basis = &own;
  }
  const std::size_t nv = w.size();
  // Order m-1 operators, plus lower-order ones whose weight is exactly d.
  // Below that order the weighted Euler relation e*g = sum a_i x_i dg/dx_i
  // recovers each derivative g of degree e > 0 from the next order; a
  // derivative of degree 0 is a constant it cannot see.
  auto operators = [&](int m) {
    std::vector<std::vector<int>> ops;
    for (int k = 0; k < m; ++k) {
      for (auto& u : derivative_operators(nv, k)) {
        if (k == m - 1 || w.degree(u) == d) ops.push_back(std::move(u));
      }
    }
    return ops;
  };
  std::vector<std::vector<std::vector<int>>> ops;
  std::size_t rows = 0;
  for (int m : mults) {
    ops.push_back(operators(m));
    rows += ops.back().size();
  }
  Matrix<E> M(rows, basis->size(), f.zero());

  int max_exp = 0;
  for (const auto& mono : *basis)
    for (int e : mono.exponents) max_exp = std::max(max_exp, e);
  std::size_t row = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    std::vector<std::vector<E>> pw(nv, std::vector<E>(static_cast<std::size_t>(max_exp) + 1));
    for (std::size_t j = 0; j < nv; ++j) {
      pw[j][0] = f.one();
      for (int k = 1; k <= max_exp; ++k) pw[j][k] = f.mul(pw[j][k - 1], p[j]);
    }
    for (const auto& u : ops[i]) {
      for (std::size_t c = 0; c < basis->size(); ++c) {
        const auto& e = (*basis)[c].exponents;
        E v = f.one();
        for (std::size_t j = 0; j < nv && !f.is_zero(v); ++j) {
          if (e[j] < u[j]) {
            v = f.zero();
            break;
          }
          std::int64_t fall = 1;
          for (int t = 0; t < u[j]; ++t) fall *= e[j] - t;
          if (fall != 1) v = f.mul(v, f.from_int(fall));
          v = f.mul(v, pw[j][e[j] - u[j]]);
        }
        M(row, c) = v;
      }
      ++row;
    }
  }
  return M;
}

/// Exact rational evaluation matrix of the configuration. Uses the explicit
/// points if present, otherwise the first integer sample for degree d.
Matrix<mpq_class> build_evaluation_matrix(const FatPointConfig& cfg, Degree d,
                                          const std::vector<Monomial>* basis = nullptr);

struct RankProfile {
  Degree d = 0;
  std::uint64_t s_d = 0;
  std::uint64_t conditions = 0;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  std::uint64_t deficiency = 0;
  bool is_ah = false;
  int trials_used = 0;
};

/// H_d(S/I_X) as the rank of the evaluation map, maximized over the
/// configured number of independent samples (stopping early at full rank).
RankProfile hilbert_fat_points(const FatPointConfig& cfg, Degree d);

/// Profiles for every d in [lo, hi], computed in parallel and returned in
/// degree order. threads = 0 picks the hardware concurrency.
std::vector<RankProfile> deficiency_table(const FatPointConfig& cfg, Degree lo, Degree hi,
                                          unsigned threads = 0);

/// Hilbert function of fat points on P(a,b): s_d if d < b(a r - 1), else r,
/// where r is the sum of the multiplicities.
std::uint64_t line_interpolation_formula(std::int64_t a, std::int64_t b,
                                         std::span<const int> mults, Degree d);

/// min{s_d, r}
std::uint64_t simple_points_expected(const Weights& w, std::uint64_t r, Degree d);

struct CrossCheck {
  std::uint64_t prime1 = 0, prime2 = 0;
  std::size_t rank1 = 0, rank2 = 0;
  bool agreed = true;
  /// Exact rank over ℚ, only computed on disagreement.
  std::optional<std::size_t> exact;
  std::size_t rank() const { return exact ? *exact : rank1; }
};

/// Rank of one integer-coordinate sample (entries in [1, 2^16]) modulo two
/// distinct primes; recomputed exactly over ℚ if they disagree.
CrossCheck cross_check_rank(const FatPointConfig& cfg, Degree d, std::uint64_t trial = 0);

}  // namespace wps
