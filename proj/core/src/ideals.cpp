#include "wps/ideals.hpp"

#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wps/error.hpp"

namespace wps {

namespace {

mpq_class qpow(const mpq_class& x, std::int64_t e) {
  if (e < 0) {
    if (sgn(x) == 0) throw DomainError("negative power of zero");
    return qpow(1 / x, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// x*a + y*b = gcd(a,b)
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  std::int64_t x1, y1;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::vector<int> unit_vector(std::size_t n, std::size_t i, int e = 1) {
  std::vector<int> v(n, 0);
  v[i] = e;
  return v;
}

// c1 * x_i^{e_i} x_j^{e_j} ... as a single term helper
SparsePoly binomial(const Weights& w, const mpq_class& c1, std::vector<int> m1, const mpq_class& c2,
                    std::vector<int> m2) {
  SparsePoly f(w);
  f.add_term(std::move(m1), c1);
  f.add_term(std::move(m2), -c2);
  return f;
}

// Single-term generators are reported as the bare monomial.
SparsePoly normalize_monomial(SparsePoly f) {
  if (f.terms().size() == 1) return f.monic();
  return f;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(a, b), c);
}

HerzogRelation minimal_relation(std::int64_t lhs, std::int64_t x, std::int64_t y) {
  // smallest r >= 1 with r*lhs = k*x + g*y, k,g >= 0; r <= x works (k=... )
  for (std::int64_t r = 1;; ++r) {
    const std::int64_t target = r * lhs;
    for (std::int64_t k = 0; k * x <= target; ++k) {
      const std::int64_t rest = target - k * x;
      if (rest % y == 0) return {r, k, rest / y};
    }
  }
}

}  // namespace

WeightedPoint::WeightedPoint(Weights w, std::vector<mpq_class> coords) : w_(std::move(w)) {
  if (coords.size() != w_.size()) {
    throw std::invalid_argument("point has " + std::to_string(coords.size()) +
                                " coordinates for " + std::to_string(w_.size()) + " weights");
  }
  bool any = false;
  c_.reserve(coords.size());
  for (auto idx : w_.permutation()) {
    c_.push_back(coords[idx]);
    any = any || sgn(coords[idx]) != 0;
  }
  if (!any) throw DomainError("the zero vector is not a point of weighted projective space");
}

WeightedPoint::WeightedPoint(Weights w, std::initializer_list<long> coords)
    : WeightedPoint(std::move(w), [&] {
        std::vector<mpq_class> v;
        for (long c : coords) v.emplace_back(c);
        return v;
      }()) {}

int WeightedPoint::unit_chart() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (w_[i] == 1 && sgn(c_[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

WeightedPoint WeightedPoint::scaled(const mpq_class& lambda) const {
  if (sgn(lambda) == 0) throw DomainError("scaling by zero");
  WeightedPoint out = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * qpow(lambda, w_[i]);
  return out;
}

WeightedPoint WeightedPoint::canonical() const {
  const int t = unit_chart();
  if (t < 0) return *this;
  return scaled(1 / c_[static_cast<std::size_t>(t)]);
}

bool WeightedPoint::equivalent(const WeightedPoint& other) const {
  if (!(w_ == other.w_)) return false;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if ((sgn(c_[i]) == 0) != (sgn(other.c_[i]) == 0)) return false;
    if (sgn(c_[i]) != 0) support.push_back(i);
  }
  // lambda^{a_i} = ratio_i on the support. With g = gcd of the supported
  // weights, mu = lambda^g must equal prod ratio_i^{beta_i} where
  // sum beta_i a_i / g = 1; then check mu^{a_i/g} = ratio_i.
  std::int64_t g = 0;
  for (auto i : support) g = std::gcd(g, w_[i]);
  std::vector<std::int64_t> beta(support.size(), 0);
  std::int64_t acc = w_[support[0]] / g;
  beta[0] = 1;
  for (std::size_t k = 1; k < support.size(); ++k) {
    std::int64_t x, y;
    acc = ext_gcd(acc, w_[support[k]] / g, x, y);
    for (std::size_t j = 0; j < k; ++j) beta[j] *= x;
    beta[k] = y;
  }
  mpq_class mu = 1;
  std::vector<mpq_class> ratio;
  for (std::size_t k = 0; k < support.size(); ++k) {
    ratio.push_back(other.c_[support[k]] / c_[support[k]]);
    mu *= qpow(ratio.back(), beta[k]);
  }
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (qpow(mu, w_[support[k]] / g) != ratio[k]) return false;
  }
  return true;
}

std::string WeightedPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ':';
    out += c_[i].get_str();
  }
  return out + "]";
}

std::string variable_name(std::size_t nvars, std::size_t i) {
  static const char* const two[] = {"z", "u"};
  static const char* const three[] = {"z", "u", "v"};
  if (nvars == 2) return two[i];
  if (nvars == 3) return three[i];
  return "x" + std::to_string(i);
}

SparsePoly SparsePoly::variable(const Weights& w, std::size_t i) {
  SparsePoly f(w);
  f.add_term(unit_vector(w.size(), i), 1);
  return f;
}

SparsePoly& SparsePoly::add_term(std::vector<int> exponents, const mpq_class& c) {
  if (exponents.size() != w_.size()) throw std::invalid_argument("exponent length mismatch");
  if (sgn(c) == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const Degree d = w_.degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (w_.degree(e) != d) return false;
  }
  return true;
}

Degree SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return w_.degree(terms_.begin()->first);
}

mpq_class SparsePoly::evaluate(const std::vector<mpq_class>& x) const {
  if (x.size() != w_.size()) throw std::invalid_argument("point dimension mismatch");
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= qpow(x[i], e[i]);
    }
    total += term;
  }
  return total;
}

SparsePoly SparsePoly::derivative(std::size_t i) const {
  SparsePoly out(w_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    auto de = e;
    --de[i];
    out.add_term(std::move(de), c * e[i]);
  }
  return out;
}

SparsePoly SparsePoly::scaled(const mpq_class& s) const {
  SparsePoly out(w_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

SparsePoly SparsePoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(1 / terms_.begin()->second);
}

std::map<std::int64_t, mpq_class> SparsePoly::monomial_curve_image() const {
  std::map<std::int64_t, mpq_class> out;
  for (const auto& [e, c] : terms_) {
    auto& slot = out[w_.degree(e)];
    slot += c;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += variable_name(e.size(), i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

nlohmann::json SparsePoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  }
  return {{"text", to_string()}, {"terms", terms}};
}

SparsePoly operator+(const SparsePoly& x, const SparsePoly& y) {
  SparsePoly out = x;
  for (const auto& [e, c] : y.terms_) out.add_term(e, c);
  return out;
}

SparsePoly operator-(const SparsePoly& x, const SparsePoly& y) {
  SparsePoly out = x;
  for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
  return out;
}

HerzogData herzog_data(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a < 1 || b < 1 || c < 1) throw InvalidWeights("Herzog data needs positive weights");
  if (gcd3(a, b, c) != 1) {
    throw InvalidWeights("Herzog data needs gcd(a,b,c) = 1, got " + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c));
  }
  HerzogData h;
  h.a = a;
  h.b = b;
  h.c = c;
  h.rel[0] = minimal_relation(a, b, c);
  h.rel[1] = minimal_relation(b, a, c);
  h.rel[2] = minimal_relation(c, a, b);
  for (const auto& r : h.rel) h.hc = h.hc || r.k == 0 || r.g == 0;
  return h;
}

std::vector<SparsePoly> herzog_binomials(const HerzogData& h, const WeightedPoint& p) {
  const Weights& w = p.weights();
  if (w.size() != 3) throw std::invalid_argument("Herzog binomials live in a weighted plane");
  const auto& x = p.coords();
  const auto& [r1, k1, g1] = h.rel[0];
  const auto& [r2, k2, g2] = h.rel[1];
  const auto& [r3, k3, g3] = h.rel[2];
  auto e = [](std::int64_t i, std::int64_t j, std::int64_t k) {
    return std::vector<int>{static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
  };
  return {
      binomial(w, qpow(x[1], k1) * qpow(x[2], g1), e(r1, 0, 0), qpow(x[0], r1), e(0, k1, g1)),
      binomial(w, qpow(x[0], k2) * qpow(x[2], g2), e(0, r2, 0), qpow(x[1], r2), e(k2, 0, g2)),
      binomial(w, qpow(x[0], k3) * qpow(x[1], g3), e(0, 0, r3), qpow(x[2], r3), e(k3, g3, 0)),
  };
}

std::vector<SparsePoly> point_ideal_line(const WeightedPoint& p) {
  const Weights& w = p.weights();
  if (w.size() != 2) throw std::invalid_argument("point_ideal_line needs two weights");
  const std::int64_t a = w[0], b = w[1];
  if (std::gcd(a, b) != 1) throw UnsupportedWeights("weighted line needs coprime weights");
  if (sgn(p[0]) == 0) return {SparsePoly::variable(w, 0)};
  if (sgn(p[1]) == 0) return {SparsePoly::variable(w, 1)};
  return {binomial(w, qpow(p[1], a), {static_cast<int>(b), 0}, qpow(p[0], b),
                   {0, static_cast<int>(a)})};
}

std::vector<SparsePoly> point_ideal_plane(const WeightedPoint& p) {
  const Weights& w = p.weights();
  if (w.size() != 3) throw std::invalid_argument("point_ideal_plane needs three weights");
  if (!w.well_formed()) {
    throw UnsupportedWeights("point_ideal_plane needs well-formed weights, got " + w.to_string());
  }
  std::vector<std::size_t> zeros, nonzero;
  for (std::size_t i = 0; i < 3; ++i) (sgn(p[i]) == 0 ? zeros : nonzero).push_back(i);

  if (zeros.size() == 2) {
    return {SparsePoly::variable(w, zeros[0]), SparsePoly::variable(w, zeros[1])};
  }
  if (zeros.size() == 1) {
    // (x_i, p_k^{a_j} x_j^{a_k} - p_j^{a_k} x_k^{a_j}) with {j,k} the other two
    const std::size_t j = nonzero[0], k = nonzero[1];
    std::vector<int> mj(3, 0), mk(3, 0);
    mj[j] = static_cast<int>(w[k]);
    mk[k] = static_cast<int>(w[j]);
    return {SparsePoly::variable(w, zeros[0]),
            binomial(w, qpow(p[k], w[j]), mj, qpow(p[j], w[k]), mk)};
  }
  return herzog_binomials(herzog_data(w[0], w[1], w[2]), p);
}

std::vector<SparsePoly> point_ideal_hyperplane_case(const WeightedPoint& p) {
  const int chart = p.unit_chart();
  if (chart < 0) {
    throw UnsupportedConfiguration("point " + p.to_string() +
                                   " has no non-zero coordinate of weight 1");
  }
  const auto t = static_cast<std::size_t>(chart);
  const Weights& w = p.weights();
  std::vector<SparsePoly> gens;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j == t) continue;
    SparsePoly f(w);
    f.add_term(unit_vector(w.size(), t, static_cast<int>(w[j])), p[j]);
    f.add_term(unit_vector(w.size(), j), -qpow(p[t], w[j]));
    gens.push_back(normalize_monomial(std::move(f)));
  }
  return gens;
}

std::vector<SparsePoly> point_ideal(const WeightedPoint& p) {
  switch (p.size()) {
    case 2:
      return point_ideal_line(p);
    case 3:
      return point_ideal_plane(p);
    default:
      if (p.unit_chart() >= 0) return point_ideal_hyperplane_case(p);
      throw UnsupportedConfiguration(
          "explicit point ideals in dimension >= 3 are only available when a weight-1 "
          "coordinate is non-zero");
  }
}

}  // namespace wps
