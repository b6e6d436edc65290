#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "wps/grading.hpp"
#include "wps/interpolation.hpp"
#include "wps/matrix.hpp"

namespace wps {

/// The degree-d monomial map of P(1,a_1,...,a_n) on the chart x_0 != 0.
class VeroneseChart {
 public:
  /// Requires a_0 = 1 and d >= a_n.
  VeroneseChart(Weights w, Degree d);

  const Weights& weights() const noexcept { return w_; }
  Degree degree() const noexcept { return d_; }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  /// N + 1 = s_d
  std::size_t size() const noexcept { return basis_.size(); }

 private:
  Weights w_;
  Degree d_;
  std::vector<Monomial> basis_;
};

/// [m_0(p) : ... : m_N(p)]. Throws DomainError when every monomial vanishes.
std::vector<mpq_class> veronese_image(const VeroneseChart& chart, const WeightedPoint& p);

/// Row j holds the partial derivatives d m_k / d x_j at p. Requires p_0 != 0.
Matrix<mpq_class> tangent_jacobian(const VeroneseChart& chart, const WeightedPoint& p);

/// Same Jacobian over any field, for sampled points given in sorted weight order.
template <class Field>
Matrix<typename Field::Element> tangent_jacobian(const Field& f, const VeroneseChart& chart,
                                                 const std::vector<typename Field::Element>& p) {
  const auto& basis = chart.basis();
  const std::size_t nv = chart.weights().size();
  Matrix<typename Field::Element> J(nv, basis.size(), f.zero());
  for (std::size_t j = 0; j < nv; ++j) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& e = basis[k].exponents;
      if (e[j] == 0) continue;
      auto v = f.from_int(e[j]);
      for (std::size_t l = 0; l < nv; ++l) {
        const int power = l == j ? e[l] - 1 : e[l];
        for (int t = 0; t < power; ++t) v = f.mul(v, p[l]);
      }
      J(j, k) = v;
    }
  }
  return J;
}

struct SecantReport {
  std::int64_t r = 0;
  std::int64_t expected_dim = 0;  ///< min{s_d - 1, r(n+1) - 1}
  std::int64_t computed_dim = 0;  ///< max over trials of rank - 1
  std::int64_t defect = 0;
  int trials = 0;
  /// Every trial came out below the expected dimension.
  bool defective_in_all_trials = false;
};

/// Projective dimension of the r-th secant variety from the rank of the
/// stacked Jacobians at r sampled general points. Uses the same sample
/// streams as hilbert_fat_points for r double points.
SecantReport secant_dimension(const VeroneseChart& chart, std::int64_t r, const Sampling& sampling);

/// Dimension of the span of the tangent spaces at the given points, minus 1.
std::int64_t secant_dimension_at(const VeroneseChart& chart, const std::vector<WeightedPoint>& pts);

}  // namespace wps
