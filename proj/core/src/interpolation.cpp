#include "wps/interpolation.hpp"

#include <algorithm>
#include <numeric>

#include "wps/parallel.hpp"

namespace wps {

namespace {

constexpr std::uint64_t kPrimeTag = 0x7072696d65ULL;
constexpr std::uint64_t kCrossTag = 0x63726f7373ULL;

// Integers in [1, 2^16] for the dual-prime cross check.
struct SmallIntegers : RationalField {
  Element random_nonzero(Rng& rng) const { return from_int(rng.between(1, 1 << 16)); }
};

template <class Field>
std::vector<std::vector<typename Field::Element>> convert(const Field& f,
                                                          const std::vector<WeightedPoint>& pts) {
  std::vector<std::vector<typename Field::Element>> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    std::vector<typename Field::Element> row;
    for (const auto& c : p.coords()) row.push_back(f.from_mpq(c));
    out.push_back(std::move(row));
  }
  return out;
}

template <class Field>
std::size_t sample_rank(const Field& f, const FatPointConfig& cfg, Degree d, std::uint64_t trial) {
  Rng rng(cfg.sampling.seed, {static_cast<std::uint64_t>(d), trial});
  const auto pts = sample_points(f, cfg.weights, cfg.point_count(), rng);
  return rank(f, evaluation_matrix(f, cfg.weights, cfg.multiplicities, pts, d));
}

template <class Field>
std::size_t explicit_rank(const Field& f, const FatPointConfig& cfg, Degree d) {
  return rank(f, evaluation_matrix(f, cfg.weights, cfg.multiplicities, convert(f, cfg.points), d));
}

}  // namespace

std::uint64_t default_prime(const Weights& w, std::uint64_t seed) {
  std::vector<std::uint64_t> excluded{2, 3, 5};
  for (auto a : w.entries()) excluded.push_back(static_cast<std::uint64_t>(a));
  if (w.size() >= 3) excluded.push_back(static_cast<std::uint64_t>(w[1] + w[2]));
  Rng rng(seed, {kPrimeTag});
  return random_prime(rng, kPrimeLow, kPrimeHigh, excluded);
}

FatPointConfig::FatPointConfig(Weights w, std::vector<int> mults, Sampling s)
    : weights(std::move(w)), multiplicities(std::move(mults)), sampling(s) {
  for (int m : multiplicities) {
    if (m < 1) throw std::invalid_argument("multiplicities must be at least 1");
  }
  if (sampling.trials < 1) throw std::invalid_argument("trials must be at least 1");
}

FatPointConfig FatPointConfig::uniform(Weights w, std::size_t count, int multiplicity, Sampling s) {
  return FatPointConfig(std::move(w), std::vector<int>(count, multiplicity), s);
}

std::uint64_t FatPointConfig::condition_count() const {
  const std::size_t n = weights.dimension();
  std::uint64_t total = 0;
  for (int m : multiplicities) total += binomial(n + static_cast<std::uint64_t>(m) - 1, n);
  return total;
}

std::uint64_t FatPointConfig::modulus() const {
  if (sampling.field.kind == FieldSpec::Kind::rational) return 0;
  if (sampling.field.prime != 0) return sampling.field.prime;
  return default_prime(weights, sampling.seed);
}

std::vector<std::vector<int>> derivative_operators(std::size_t nvars, int order) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == nvars) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, remaining - e);
    }
    cur[i] = 0;
  };
  if (nvars > 0 && order >= 0) rec(rec, 0, order);
  return out;
}

Matrix<mpq_class> build_evaluation_matrix(const FatPointConfig& cfg, Degree d,
                                          const std::vector<Monomial>* basis) {
  RationalField q;
  if (!cfg.points.empty()) {
    if (cfg.points.size() != cfg.point_count()) {
      throw std::invalid_argument("explicit points do not match the multiplicity list");
    }
    return evaluation_matrix(q, cfg.weights, cfg.multiplicities, convert(q, cfg.points), d, basis);
  }
  Rng rng(cfg.sampling.seed, {static_cast<std::uint64_t>(d), 0});
  const auto pts = sample_points(q, cfg.weights, cfg.point_count(), rng);
  return evaluation_matrix(q, cfg.weights, cfg.multiplicities, pts, d, basis);
}

RankProfile hilbert_fat_points(const FatPointConfig& cfg, Degree d) {
  RankProfile prof;
  prof.d = d;
  prof.s_d = count_monomials(cfg.weights, d);
  prof.conditions = cfg.condition_count();
  prof.expected = std::min(prof.s_d, prof.conditions);

  const bool rational = cfg.sampling.field.kind == FieldSpec::Kind::rational;
  if (!cfg.points.empty()) {
    if (cfg.points.size() != cfg.point_count()) {
      throw std::invalid_argument("explicit points do not match the multiplicity list");
    }
    prof.actual = rational ? explicit_rank(RationalField{}, cfg, d)
                           : explicit_rank(PrimeField(cfg.modulus()), cfg, d);
    prof.trials_used = 1;
  } else if (prof.s_d == 0 || cfg.point_count() == 0) {
    prof.actual = 0;
    prof.trials_used = 0;
  } else {
    std::optional<PrimeField> pf;
    if (!rational) pf.emplace(cfg.modulus());
    for (int t = 0; t < cfg.sampling.trials; ++t) {
      const auto r = rational ? sample_rank(RationalField{}, cfg, d, static_cast<std::uint64_t>(t))
                              : sample_rank(*pf, cfg, d, static_cast<std::uint64_t>(t));
      prof.actual = std::max<std::uint64_t>(prof.actual, r);
      prof.trials_used = t + 1;
      if (prof.actual == prof.expected) break;
    }
  }
  prof.deficiency = prof.expected >= prof.actual ? prof.expected - prof.actual : 0;
  prof.is_ah = prof.actual == prof.expected;
  return prof;
}

std::vector<RankProfile> deficiency_table(const FatPointConfig& cfg, Degree lo, Degree hi,
                                          unsigned threads) {
  if (hi < lo) return {};
  std::vector<RankProfile> out(static_cast<std::size_t>(hi - lo + 1));
  parallel_for(out.size(), threads, [&](std::size_t i) {
    out[i] = hilbert_fat_points(cfg, lo + static_cast<Degree>(i));
  });
  return out;
}

std::uint64_t line_interpolation_formula(std::int64_t a, std::int64_t b,
                                         std::span<const int> mults, Degree d) {
  if (std::gcd(a, b) != 1) throw UnsupportedWeights("weighted line needs coprime weights");
  const std::int64_t r = std::accumulate(mults.begin(), mults.end(), std::int64_t{0});
  if (d < b * (a * r - 1)) return count_monomials(Weights{a, b}, d);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t simple_points_expected(const Weights& w, std::uint64_t r, Degree d) {
  return std::min(count_monomials(w, d), r);
}

CrossCheck cross_check_rank(const FatPointConfig& cfg, Degree d, std::uint64_t trial) {
  CrossCheck out;
  SmallIntegers z;
  Rng rng(cfg.sampling.seed, {static_cast<std::uint64_t>(d), trial, kCrossTag});
  const auto pts = sample_points(z, cfg.weights, cfg.point_count(), rng);
  const auto M = evaluation_matrix(static_cast<const RationalField&>(z), cfg.weights,
                                   cfg.multiplicities, pts, d);
  out.prime1 = default_prime(cfg.weights, cfg.sampling.seed);
  Rng prng(cfg.sampling.seed, {kPrimeTag, 2});
  const std::uint64_t excluded[] = {out.prime1};
  out.prime2 = random_prime(prng, kPrimeLow, kPrimeHigh, excluded);
  const PrimeField f1(out.prime1), f2(out.prime2);
  out.rank1 = rank(f1, reduce(f1, M));
  out.rank2 = rank(f2, reduce(f2, M));
  out.agreed = out.rank1 == out.rank2;
  if (!out.agreed) out.exact = rank(RationalField{}, M);
  return out;
}

}  // namespace wps
