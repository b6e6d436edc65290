#include "wps/veronese.hpp"

#include <algorithm>
#include <optional>

#include "wps/error.hpp"

namespace wps {

namespace {

std::vector<mpq_class> coords_of(const VeroneseChart& chart, const WeightedPoint& p) {
  if (p.weights() != chart.weights()) {
    throw std::invalid_argument("point weights " + p.weights().to_string() +
                                " do not match chart weights " + chart.weights().to_string());
  }
  if (p.coords()[0] == 0) throw DomainError("point " + p.to_string() + " is outside the chart x_0 != 0");
  return p.coords();
}

}  // namespace

VeroneseChart::VeroneseChart(Weights w, Degree d) : w_(std::move(w)), d_(d) {
  if (w_[0] != 1) throw UnsupportedWeights("the Veronese chart needs a_0 = 1, got " + w_.to_string());
  if (d_ < w_[w_.size() - 1]) {
    throw DomainError("degree " + std::to_string(d_) + " is below the largest weight " +
                      std::to_string(w_[w_.size() - 1]));
  }
  basis_ = enumerate_monomials(w_, d_);
}

std::vector<mpq_class> veronese_image(const VeroneseChart& chart, const WeightedPoint& p) {
  const auto x = coords_of(chart, p);
  std::vector<mpq_class> out;
  out.reserve(chart.size());
  bool any = false;
  for (const auto& m : chart.basis()) {
    mpq_class v = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      for (int k = 0; k < m.exponents[j]; ++k) v *= x[j];
    }
    any = any || v != 0;
    out.push_back(v);
  }
  // Unreachable while x_0 != 0 since x_0^d is in the basis, kept for safety.
  if (!any) throw DomainError("every monomial vanishes at " + p.to_string());
  return out;
}

Matrix<mpq_class> tangent_jacobian(const VeroneseChart& chart, const WeightedPoint& p) {
  return tangent_jacobian(RationalField{}, chart, coords_of(chart, p));
}

namespace {

template <class Field>
std::size_t stacked_rank(const Field& f, const VeroneseChart& chart, std::int64_t r,
                         std::uint64_t seed, std::uint64_t trial) {
  // Same stream as the double-point evaluation matrix for this degree and trial.
  Rng rng(seed, {static_cast<std::uint64_t>(chart.degree()), trial});
  const auto pts = sample_points(f, chart.weights(), static_cast<std::size_t>(r), rng);
  Matrix<typename Field::Element> stacked;
  for (const auto& p : pts) stacked.append_rows(tangent_jacobian(f, chart, p));
  return rank(f, stacked);
}

}  // namespace

SecantReport secant_dimension(const VeroneseChart& chart, std::int64_t r, const Sampling& sampling) {
  if (r < 1) throw std::invalid_argument("need r >= 1");
  if (sampling.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const auto n1 = static_cast<std::int64_t>(chart.weights().size());
  SecantReport rep;
  rep.r = r;
  rep.expected_dim = std::min(static_cast<std::int64_t>(chart.size()), r * n1) - 1;
  rep.computed_dim = -1;
  const bool exact = sampling.field.kind == FieldSpec::Kind::rational;
  std::optional<PrimeField> pf;
  if (!exact) {
    pf.emplace(sampling.field.prime ? sampling.field.prime
                                    : default_prime(chart.weights(), sampling.seed));
  }
  for (int t = 0; t < sampling.trials; ++t) {
    const auto trial = static_cast<std::uint64_t>(t);
    const auto rk = exact ? stacked_rank(RationalField{}, chart, r, sampling.seed, trial)
                          : stacked_rank(*pf, chart, r, sampling.seed, trial);
    rep.computed_dim = std::max(rep.computed_dim, static_cast<std::int64_t>(rk) - 1);
    rep.trials = t + 1;
    if (rep.computed_dim == rep.expected_dim) break;
  }
  rep.defect = rep.expected_dim - rep.computed_dim;
  // Trials stop at the first full-rank sample, so a defect means all of them fell short.
  rep.defective_in_all_trials = rep.defect > 0;
  return rep;
}

std::int64_t secant_dimension_at(const VeroneseChart& chart, const std::vector<WeightedPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("need at least one point");
  Matrix<mpq_class> stacked(0, chart.size());
  for (const auto& p : pts) stacked.append_rows(tangent_jacobian(chart, p));
  return static_cast<std::int64_t>(rank(RationalField{}, stacked)) - 1;
}

}  // namespace wps
