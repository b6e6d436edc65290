#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

#include "wps/grading.hpp"

namespace wps {

/// A point of weighted projective space, stored by an arbitrary rational
/// representative. Coordinates follow the sorted order of the weights.
class WeightedPoint {
 public:
  /// `coords` are given in the caller's (unsorted) weight order and are
  /// permuted along with the weights. Throws DomainError for the zero vector.
  WeightedPoint(Weights w, std::vector<mpq_class> coords);
  WeightedPoint(Weights w, std::initializer_list<long> coords);

  const Weights& weights() const noexcept { return w_; }
  const std::vector<mpq_class>& coords() const noexcept { return c_; }
  const mpq_class& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const noexcept { return c_.size(); }

  /// Index of the first non-zero coordinate of weight 1, or -1.
  int unit_chart() const;

  /// Representative with the first non-zero weight-1 coordinate scaled to 1;
  /// unchanged if there is none.
  WeightedPoint canonical() const;

  /// Representative lambda . p = (lambda^{a_i} p_i).
  WeightedPoint scaled(const mpq_class& lambda) const;

  /// Same point up to the lambda-action, lambda over the algebraic closure.
  bool equivalent(const WeightedPoint& other) const;

  std::string to_string() const;

 private:
  Weights w_;
  std::vector<mpq_class> c_;
};

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// descending lexicographic order of exponent vectors; zero coefficients are
/// never stored.
class SparsePoly {
 public:
  using Terms = std::map<std::vector<int>, mpq_class, std::greater<>>;

  explicit SparsePoly(Weights w) : w_(std::move(w)) {}

  static SparsePoly variable(const Weights& w, std::size_t i);

  /// Adds c * x^e (merging with an existing term).
  SparsePoly& add_term(std::vector<int> exponents, const mpq_class& c);

  const Weights& weights() const noexcept { return w_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const;
  /// Weighted degree of the leading term; -1 for the zero polynomial.
  Degree degree() const;

  mpq_class evaluate(const std::vector<mpq_class>& x) const;
  mpq_class evaluate(const WeightedPoint& p) const { return evaluate(p.coords()); }

  SparsePoly derivative(std::size_t i) const;
  SparsePoly scaled(const mpq_class& c) const;
  /// Divide by the leading coefficient.
  SparsePoly monic() const;

  /// p(t^{a_0}, ..., t^{a_n}) as a map exponent -> coefficient.
  std::map<std::int64_t, mpq_class> monomial_curve_image() const;

  /// Human-readable form, e.g. "4*z^2 - u". Variables are z,u for two
  /// weights, z,u,v for three, x0..xn otherwise.
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const SparsePoly& x, const SparsePoly& y) {
    return x.w_ == y.w_ && x.terms_ == y.terms_;
  }
  friend SparsePoly operator+(const SparsePoly& x, const SparsePoly& y);
  friend SparsePoly operator-(const SparsePoly& x, const SparsePoly& y);

 private:
  Weights w_;
  Terms terms_;
};

std::string variable_name(std::size_t nvars, std::size_t i);

/// Exponents of the monomial-curve relations
///   r1 a = k1 b + g1 c,  r2 b = k2 a + g2 c,  r3 c = k3 a + g3 b,
/// each r minimal positive, ties broken by lexicographically smallest (k, g).
struct HerzogRelation {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t g = 0;
  friend bool operator==(const HerzogRelation&, const HerzogRelation&) = default;
};

struct HerzogData {
  std::int64_t a = 0, b = 0, c = 0;
  HerzogRelation rel[3];
  /// Some k_i or g_i vanishes.
  bool hc = false;
};

/// Throws InvalidWeights if gcd(a,b,c) != 1 or an entry is non-positive.
HerzogData herzog_data(std::int64_t a, std::int64_t b, std::int64_t c);

/// The three binomials attached to the Herzog relations at a point with all
/// coordinates non-zero (for the point [1:1:1] these generate the toric ideal
/// of the monomial curve).
std::vector<SparsePoly> herzog_binomials(const HerzogData& h, const WeightedPoint& p);

/// Ideal of a point of P(a,b), gcd(a,b)=1.
std::vector<SparsePoly> point_ideal_line(const WeightedPoint& p);

/// Ideal of a point of a well-formed P(a,b,c).
std::vector<SparsePoly> point_ideal_plane(const WeightedPoint& p);

/// Ideal of a point with a non-zero weight-1 coordinate x_t: the binomials
/// p_j x_t^{a_j} - p_t^{a_j} x_j for j != t. Throws UnsupportedConfiguration
/// when no weight-1 coordinate is non-zero.
std::vector<SparsePoly> point_ideal_hyperplane_case(const WeightedPoint& p);

/// Dispatch on the number of variables; n >= 3 without a weight-1 chart is
/// refused with UnsupportedConfiguration.
std::vector<SparsePoly> point_ideal(const WeightedPoint& p);

}  // namespace wps
