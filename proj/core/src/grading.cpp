#include "wps/grading.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wps/error.hpp"
#include "wps/field.hpp"

namespace wps {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// Smallest positive p with a*q - b*p = 1 for some positive q.
std::pair<std::int64_t, std::int64_t> bezout_positive(std::int64_t a, std::int64_t b) {
  for (std::int64_t p = 1; p <= a; ++p) {
    if ((1 + b * p) % a == 0) return {p, (1 + b * p) / a};
  }
  throw UnsupportedWeights("no Bezout pair for weights " + std::to_string(a) + "," +
                           std::to_string(b));
}

void enumerate_rec(const Weights& w, std::size_t i, Degree remaining, std::vector<int>& cur,
                   Degree d, std::vector<Monomial>& out) {
  if (i + 1 == w.size()) {
    if (remaining % w[i] == 0) {
      cur[i] = static_cast<int>(remaining / w[i]);
      out.push_back(Monomial{cur, d});
    }
    return;
  }
  for (Degree e = remaining / w[i]; e >= 0; --e) {
    cur[i] = static_cast<int>(e);
    enumerate_rec(w, i + 1, remaining - e * w[i], cur, d, out);
  }
  cur[i] = 0;
}

}  // namespace

Weights::Weights(std::vector<std::int64_t> entries) {
  if (entries.empty()) throw InvalidWeights("weights must be non-empty");
  for (auto a : entries) {
    if (a < 1) throw InvalidWeights("weights must be positive, got " + std::to_string(a));
  }
  perm_.resize(entries.size());
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  std::stable_sort(perm_.begin(), perm_.end(),
                   [&](std::size_t x, std::size_t y) { return entries[x] < entries[y]; });
  a_.reserve(entries.size());
  for (auto i : perm_) a_.push_back(entries[i]);

  // Leave-one-out gcds must all be 1. A single weight has nothing to leave
  // out against and is well formed only when it is 1.
  if (a_.size() == 1) {
    well_formed_ = a_[0] == 1;
  } else {
    well_formed_ = true;
    for (std::size_t skip = 0; skip < a_.size() && well_formed_; ++skip) {
      std::int64_t g = 0;
      for (std::size_t j = 0; j < a_.size(); ++j) {
        if (j != skip) g = std::gcd(g, a_[j]);
      }
      well_formed_ = g == 1;
    }
  }
}

Weights Weights::without(std::size_t i) const {
  if (a_.size() < 2) throw InvalidWeights("cannot remove the only weight");
  std::vector<std::int64_t> rest;
  rest.reserve(a_.size() - 1);
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (j != i) rest.push_back(a_[j]);
  }
  return Weights(std::move(rest));
}

Degree Weights::degree(std::span<const int> exponents) const {
  if (exponents.size() != a_.size()) {
    throw std::invalid_argument("exponent vector length does not match weights");
  }
  Degree deg = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) deg += a_[i] * exponents[i];
  return deg;
}

std::string Weights::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a_[i]);
  }
  return out;
}

HilbertTable::HilbertTable(Weights w, Degree max_degree) : w_(std::move(w)) {
  if (max_degree < 0) max_degree = 0;
  s_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
  s_[0] = 1;
  for (auto a : w_.entries()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t t = step; t < s_.size(); ++t) {
      if (__builtin_add_overflow(s_[t], s_[t - step], &s_[t])) {
        throw std::overflow_error("monomial count exceeds 64 bits at degree " +
                                  std::to_string(t) + "; use count_monomials_exact");
      }
    }
  }
}

std::uint64_t HilbertTable::operator()(Degree d) const {
  if (d < 0) return 0;
  if (d > max_degree()) {
    throw std::out_of_range("degree " + std::to_string(d) + " beyond table bound " +
                            std::to_string(max_degree()));
  }
  return s_[static_cast<std::size_t>(d)];
}

std::uint64_t count_monomials(const Weights& w, Degree d) {
  if (d < 0) return 0;
  return HilbertTable(w, d)(d);
}

mpz_class count_monomials_exact(const Weights& w, Degree d) {
  if (d < 0) return 0;
  std::vector<mpz_class> s(static_cast<std::size_t>(d) + 1, 0);
  s[0] = 1;
  for (auto a : w.entries()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t t = step; t < s.size(); ++t) s[t] += s[t - step];
  }
  return s.back();
}

std::vector<Monomial> enumerate_monomials(const Weights& w, Degree d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> cur(w.size(), 0);
  enumerate_rec(w, 0, d, cur, d, out);
  return out;
}

std::optional<std::uint64_t> hilbert_closed_form(const Weights& w, Degree d) {
  if (d < 0) return 0;
  if (w.size() == 2) {
    const std::int64_t a = w[0];
    const std::int64_t b = w[1];
    if (a == 1) return static_cast<std::uint64_t>(d / b + 1);
    if (std::gcd(a, b) != 1) {
      throw UnsupportedWeights("two-variable formula needs coprime weights, got " +
                               w.to_string());
    }
    const auto [p, q] = bezout_positive(a, b);
    const std::int64_t first = floor_div(q * d, b);
    if (d % a != 0) return static_cast<std::uint64_t>(first - floor_div(p * d, a));
    return static_cast<std::uint64_t>(first - (p * d) / a + 1);
  }
  if (w.size() == 3 && w[0] == 1 && w[1] == 2 && w[2] == 3) {
    // floor(d^2/12 + d/2 + 1) = floor((d^2 + 6d + 12) / 12)
    return static_cast<std::uint64_t>((d * d + 6 * d + 12) / 12);
  }
  return std::nullopt;
}

bool semigroup_member(const Weights& w, Degree d) {
  if (d < 0) return false;
  // Reachability DP; avoids overflow of the full count for large d.
  std::vector<char> reach(static_cast<std::size_t>(d) + 1, 0);
  reach[0] = 1;
  for (auto a : w.entries()) {
    const auto step = static_cast<std::size_t>(a);
    for (std::size_t t = step; t < reach.size(); ++t) reach[t] |= reach[t - step];
  }
  return reach.back() != 0;
}

HilbertValue hilbert_value(const Weights& w, Degree d) {
  std::optional<std::uint64_t> closed;
  try {
    closed = hilbert_closed_form(w, d);
  } catch (const UnsupportedWeights&) {
    closed.reset();
  }
  if (closed) return {*closed, CountSource::closed_form};
  return {count_monomials(w, d), CountSource::dynamic_programming};
}

const char* to_string(CountSource source) noexcept {
  return source == CountSource::closed_form ? "closed-form" : "dp";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  uint128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) throw std::overflow_error("binomial coefficient overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace wps
