#include "wps/bounds.hpp"

#include <numeric>

#include "wps/error.hpp"

namespace wps {

namespace {

void require_plane_1bc(const Weights& w) {
  if (w.size() != 3 || w[0] != 1) {
    throw UnsupportedWeights("expected weights of the form 1,b,c, got " + w.to_string());
  }
}

void require_bc(std::int64_t b, std::int64_t c) {
  if (b < 1 || c < b) throw std::invalid_argument("need 1 <= b <= c");
}

std::int64_t s(const Weights& w, Degree d) { return static_cast<std::int64_t>(count_monomials(w, d)); }

}  // namespace

bool exception_sufficient(const Weights& w, std::int64_t r, Degree d) {
  if (w[0] != 1) throw UnsupportedWeights("exception_sufficient needs a_0 = 1");
  const auto n = static_cast<std::int64_t>(w.dimension());
  return r < s(w, d / 2) && (n + 1) * r >= s(w, d);
}

bool exception_classifier_div3(const Weights& w, Degree d) {
  require_plane_1bc(w);
  const std::int64_t sd = s(w, d);
  if (sd % 3 != 0) {
    throw DomainError("s_" + std::to_string(d) + " = " + std::to_string(sd) +
                      " is not divisible by 3");
  }
  return sd / 3 < s(w, d / 2);
}

bool neck_condition(const Weights& w, std::int64_t r) {
  require_plane_1bc(w);
  const std::int64_t b = w[1], c = w[2];
  return b == 1 ? c <= r + 1 : c < (r + 1) * b;
}

BoundReport interpolation_bound_check(std::int64_t b, std::int64_t c, Degree lo, Degree hi) {
  require_bc(b, c);
  const Weights w{1, b, c};
  BoundReport rep;
  rep.b = b;
  rep.c = c;
  rep.lo = lo;
  rep.hi = hi;
  rep.threshold10 = 10 * c;
  rep.threshold6 = 6 * c;
  rep.wide = (2 * c) / b >= 5;
  if (hi < lo) return rep;
  const HilbertTable table(w, hi);
  for (Degree d = std::max<Degree>(lo, 0); d <= hi; ++d) {
    BoundRecord rec;
    rec.d = d;
    rec.lhs = table(d) / 3;
    rec.rhs = table(d / 2);
    rec.holds = rec.lhs >= rec.rhs;
    rec.asserted = d >= rep.threshold10 || (rep.wide && d >= rep.threshold6);
    if (rec.asserted && !rec.holds) rep.violations.push_back(d);
    rep.records.push_back(rec);
  }
  return rep;
}

TriangleReport triangle_lattice_check(std::int64_t b, std::int64_t c, Degree d) {
  require_bc(b, c);
  if (d < 2 * c) throw std::invalid_argument("triangle check needs d >= 2c");
  TriangleReport rep;
  rep.b = b;
  rep.c = c;
  rep.d = d;
  rep.e = d / 2;
  rep.x0 = d / (2 * b);
  rep.y0 = d / (2 * c);
  const std::int64_t e = rep.e, x0 = rep.x0, y0 = rep.y0;

  auto in_t1 = [&](std::int64_t x, std::int64_t y) { return x >= 0 && y >= 0 && b * x + c * y <= e; };
  auto in_t2 = [&](std::int64_t x, std::int64_t y) { return in_t1(x - x0, y); };
  auto in_t3 = [&](std::int64_t x, std::int64_t y) { return in_t1(x, y - y0); };
  // T4 interior: q < i < y0 and (e - i c)/b < t < x0, where q is the height
  // of the T1 hypotenuse above x = x0. Compared over the integers.
  auto in_t4 = [&](std::int64_t t, std::int64_t i) {
    return c * i > e - b * x0 && i < y0 && b * t > e - i * c && t < x0;
  };

  // T2 and T3 sit inside T, so counting them here also checks containment.
  bool t12_ok = true, t23_ok = true, t13_ok = true, t4_apart = true;
  for (std::int64_t x = 0; b * x <= d; ++x) {
    for (std::int64_t y = 0; b * x + c * y <= d; ++y) {
      ++rep.t;
      const bool a1 = in_t1(x, y), a2 = in_t2(x, y), a3 = in_t3(x, y);
      rep.t1 += a1;
      rep.t2 += a2;
      rep.t3 += a3;
      if (a1 && a2) {
        ++rep.t12;
        t12_ok = t12_ok && x == x0 && y == 0;
      }
      if (a2 && a3) {
        ++rep.t23;
        t23_ok = t23_ok && x == x0 && y == y0;
      }
      if (a1 && a3) {
        ++rep.t13;
        t13_ok = t13_ok && y == y0 && b * x < c;
      }
      if (a1 && a2 && a3) ++rep.t123;
      if (in_t4(x, y)) {
        ++rep.t4_interior;
        t4_apart = t4_apart && !(a1 || a2 || a3);
      }
    }
  }

  const Weights w{1, b, c};
  rep.s_d = count_monomials(w, d);
  rep.s_e = count_monomials(w, e);
  rep.t_matches_dp = rep.t == rep.s_d;
  rep.t1_matches_dp = rep.t1 == rep.s_e;
  rep.translates_equal = rep.t2 == rep.t1 && rep.t3 == rep.t1;
  rep.fact3 = t13_ok;
  rep.t4_disjoint = t4_apart;
  rep.fact1 = rep.t12 == 1 && t12_ok;
  rep.fact2 = rep.t23 == 1 && t23_ok;
  rep.fact4 = rep.t123 == 0;
  rep.inclusion_exclusion = static_cast<std::int64_t>(rep.t1 + rep.t2 + rep.t3) -
                            static_cast<std::int64_t>(rep.t12 + rep.t23 + rep.t13) +
                            static_cast<std::int64_t>(rep.t4_interior);
  rep.estimate = 3 * static_cast<std::int64_t>(rep.s_e) - 3 - c / b +
                 static_cast<std::int64_t>(rep.t4_interior);
  rep.chain_holds = static_cast<std::int64_t>(rep.s_d) >= rep.inclusion_exclusion &&
                    rep.inclusion_exclusion >= rep.estimate;
  return rep;
}

namespace {

std::optional<PlaneWitness> confirm(const Weights& w, std::int64_t r, Degree d, const char* rule,
                                    const Sampling& sampling) {
  if (r < 1 || d < 0) return std::nullopt;
  const auto prof =
      hilbert_fat_points(FatPointConfig::double_points(w, static_cast<std::size_t>(r), sampling), d);
  if (prof.deficiency == 0) return std::nullopt;
  return PlaneWitness{r, d, prof.deficiency, rule};
}

}  // namespace

PlaneClassification classify_plane(std::int64_t b, std::int64_t c, const ClassifyLimits& limits) {
  require_bc(b, c);
  const Weights w{1, b, c};
  PlaneClassification out{b, c, std::nullopt};
  const auto& smp = limits.sampling;

  // One point: the neck obstruction in degree 2b.
  if (!neck_condition(w, 1)) {
    if ((out.witness = confirm(w, 1, 2 * b, "neck", smp))) return out;
  }
  // Three points in degree 4 on P(1,1,2), and in degree 4b when 3b/2 < c < 2b.
  if (b == 1 && c == 2) {
    if ((out.witness = confirm(w, 3, 4, "three-points", smp))) return out;
  }
  if (b >= 3 && 2 * c > 3 * b && c < 2 * b) {
    if ((out.witness = confirm(w, 3, 4 * b, "three-points", smp))) return out;
  }
  // Degrees where 3 | s_d and s_d / 3 < s_{floor(d/2)}.
  const Degree div3_limit = std::max<Degree>(limits.max_degree, 10 * c);
  const HilbertTable table(w, div3_limit);
  for (Degree d = 1; d <= div3_limit; ++d) {
    const auto sd = table(d);
    if (sd % 3 == 0 && sd / 3 < table(d / 2)) {
      if ((out.witness = confirm(w, static_cast<std::int64_t>(sd / 3), d, "div3", smp))) return out;
    }
  }
  // Exhaustive fallback.
  for (Degree d = 1; d <= limits.max_degree; ++d) {
    const auto rmax = std::min<std::int64_t>(limits.max_points,
                                             static_cast<std::int64_t>((table(d) + 2) / 3));
    for (std::int64_t r = 1; r <= rmax; ++r) {
      if ((out.witness = confirm(w, r, d, "scan", smp))) return out;
    }
  }
  return out;
}

std::vector<PlaneClassification> classify_plane_uniqueness(const ClassifyLimits& limits) {
  std::vector<PlaneClassification> out;
  for (std::int64_t c = 1; c <= limits.max_c; ++c) {
    for (std::int64_t b = 1; b <= c; ++b) {
      if (std::gcd(b, c) != 1) continue;  // well-formed P(1,b,c)
      out.push_back(classify_plane(b, c, limits));
    }
  }
  return out;
}

}  // namespace wps
