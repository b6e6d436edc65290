#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wps/grading.hpp"
#include "wps/interpolation.hpp"

namespace wps {

/// r < s_{floor(d/2)} and (n+1) r >= s_d: the square of a degree floor(d/2)
/// form through the points is an unexpected element of I_X. Requires a_0 = 1.
bool exception_sufficient(const Weights& w, std::int64_t r, Degree d);

/// For P(1,b,c) and s_d divisible by 3, with r = s_d / 3: r double points are
/// exceptional iff r < s_{floor(d/2)}. Throws DomainError if 3 does not
/// divide s_d.
bool exception_classifier_div3(const Weights& w, Degree d);

/// Necessary condition for r general double points of P(1,b,c) to be AH in
/// every degree: c <= r + 1 when b = 1, c < (r+1) b otherwise.
bool neck_condition(const Weights& w, std::int64_t r);

struct BoundRecord {
  Degree d = 0;
  std::uint64_t lhs = 0;  ///< floor(s_d / 3)
  std::uint64_t rhs = 0;  ///< s_{floor(d/2)}
  bool holds = false;     ///< lhs >= rhs
  bool asserted = false;  ///< inside a range where the bound must hold
};

struct BoundReport {
  std::int64_t b = 0, c = 0;
  Degree lo = 0, hi = 0;
  std::int64_t threshold10 = 0;  ///< 10c
  std::int64_t threshold6 = 0;   ///< 6c
  bool wide = false;             ///< floor(2c/b) >= 5
  std::vector<BoundRecord> records;
  /// Asserted degrees where the inequality fails.
  std::vector<Degree> violations;
  bool passed() const { return violations.empty(); }
};

/// floor(s_d/3) >= s_{floor(d/2)} on P(1,b,c) for d in [lo, hi], asserted for
/// d >= 10c, and for d >= 6c when floor(2c/b) >= 5. Requires 1 <= b <= c.
BoundReport interpolation_bound_check(std::int64_t b, std::int64_t c, Degree lo, Degree hi);

struct TriangleReport {
  std::int64_t b = 0, c = 0;
  Degree d = 0;
  Degree e = 0;            ///< floor(d/2)
  std::int64_t x0 = 0;     ///< floor(d/(2b))
  std::int64_t y0 = 0;     ///< floor(d/(2c))
  std::uint64_t t = 0;     ///< lattice points of T: b x + c y <= d
  std::uint64_t t1 = 0, t2 = 0, t3 = 0;
  std::uint64_t t12 = 0, t23 = 0, t13 = 0, t123 = 0;
  std::uint64_t t4_interior = 0;
  std::uint64_t s_d = 0;   ///< DP count
  std::uint64_t s_e = 0;   ///< DP count
  bool t_matches_dp = false;
  bool t1_matches_dp = false;
  bool translates_equal = false;  ///< #T2 = #T3 = #T1
  bool fact1 = false;  ///< T1 ∩ T2 = {(x0, 0)}
  bool fact2 = false;  ///< T2 ∩ T3 = {(x0, y0)}
  bool fact3 = false;  ///< T1 ∩ T3 ⊆ {(t, y0) : 0 <= t < c/b}
  bool fact4 = false;  ///< T1 ∩ T2 ∩ T3 = ∅
  bool t4_disjoint = false;  ///< interior of T4 meets none of T1, T2, T3
  std::int64_t inclusion_exclusion = 0;  ///< #T1+#T2+#T3-pairs+#T4°
  std::int64_t estimate = 0;             ///< 3 s_e - 3 - floor(c/b) + #T4°
  bool chain_holds = false;              ///< s_d >= inclusion_exclusion >= estimate
  bool ok() const {
    return t_matches_dp && t1_matches_dp && translates_equal && fact1 && fact2 && fact3 &&
           fact4 && t4_disjoint && chain_holds;
  }
};

/// Direct 2-D enumeration of the lattice-point decomposition behind the
/// bound. Requires d >= 2c and 1 <= b <= c.
TriangleReport triangle_lattice_check(std::int64_t b, std::int64_t c, Degree d);

struct PlaneWitness {
  std::int64_t r = 0;
  Degree d = 0;
  std::uint64_t deficiency = 0;
  std::string rule;
};

struct PlaneClassification {
  std::int64_t b = 0, c = 0;
  std::optional<PlaneWitness> witness;
};

struct ClassifyLimits {
  std::int64_t max_c = 12;
  /// Brute-force fallback bounds.
  Degree max_degree = 30;
  std::int64_t max_points = 12;
  Sampling sampling{};
};

/// For every well-formed (1,b,c), b <= c <= max_c: a configuration of r
/// general double points and a degree d where AH fails, confirmed by rank,
/// or no witness within the limits.
std::vector<PlaneClassification> classify_plane_uniqueness(const ClassifyLimits& limits);

/// Single-plane variant of the classification above.
PlaneClassification classify_plane(std::int64_t b, std::int64_t c, const ClassifyLimits& limits);

}  // namespace wps
