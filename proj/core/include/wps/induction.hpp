#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wps/grading.hpp"
#include "wps/interpolation.hpp"

namespace wps {

/// Hilbert functions of P(1,2,3) and of its coordinate lines, in closed form:
/// s = S, s1 = S/(z) = P(2,3), s2 = S/(u) = P(1,3), s3 = S/(v) = P(1,2).
namespace plane123 {
std::int64_t s(std::int64_t d);
std::int64_t s1(std::int64_t d);
std::int64_t s2(std::int64_t d);
std::int64_t s3(std::int64_t d);
/// Line Hilbert function for the hyperplane of weight a in {1,2,3}.
std::int64_t line(std::int64_t a, std::int64_t d);
}  // namespace plane123

enum class Direction {
  /// (n+1) r - s_{d-a_i} <= n q <= sbar_d
  first,
  /// sbar_d <= n q <= (n+1) r - s_{d-a_i}
  second,
};
const char* to_string(Direction d) noexcept;

struct TerraciniChoice {
  std::size_t i = 0;       ///< index of the removed variable (sorted order)
  std::int64_t weight = 0; ///< a_i
  std::int64_t q = 0;
  Direction direction = Direction::first;
  std::int64_t lower = 0;  ///< (n+1) r - s_{d-a_i}
  std::int64_t sbar = 0;   ///< Hilbert function of S/(x_i) in degree d
  friend bool operator==(const TerraciniChoice&, const TerraciniChoice&) = default;
};

/// Every (i, q) with 1 <= q <= r satisfying one of the two inequalities,
/// ordered by decreasing a_i, then increasing q. When both inequalities hold
/// the entry records Direction::first. Requires a_0 = 1, d >= 1, r >= 1.
std::vector<TerraciniChoice> terracini_candidates(const Weights& w, Degree d, std::int64_t r);

/// Check one choice against exact DP counts.
bool terracini_choice_holds(const Weights& w, Degree d, std::int64_t r, const TerraciniChoice& c);

struct ChandlerResult {
  bool holds = false;
  int case_used = 1;          ///< 1 or 2, following the direction of the choice
  bool trivial = false;       ///< case 2 with H_{d-a} already equal to s_{d-a}
  std::int64_t degree = 0;    ///< d - a
  std::int64_t h1 = 0;        ///< min{s_{d-a}, (n+1)(r-q)}
  std::int64_t h2 = 0;        ///< min{s_{d-2a}, (n+1)(r-q)}
  std::int64_t sbar = 0;      ///< sbar_{d-a}
  std::int64_t m = 0;         ///< s_{d-a} - (n+1)(r-q) in case 2
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// Arithmetic of adding q simple points on the hyperplane x_i = 0 to r - q
/// general double points while keeping the AH property in degree d - a_i.
/// `direction` selects the case; by default it is the one the numerical
/// condition satisfies (case 1 if neither does). q = 0 holds vacuously.
ChandlerResult chandler_inequality(const Weights& w, Degree d, std::size_t i, std::int64_t q,
                                   std::int64_t r, std::optional<Direction> direction = {});

struct ScanFailure {
  std::int64_t d = 0;
  std::int64_t r = 0;
  std::string what;
};

struct ScanReport {
  std::int64_t lo = 0, hi = 0;
  std::uint64_t checks = 0;
  std::vector<ScanFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// For every d in [lo, hi] (lo >= 6) and both r = floor(s_d/3), ceil(s_d/3):
/// some hyperplane admits q in [1, r] with 2q in the required interval, and
/// the three "odd" equalities never hold at once.
ScanReport teranum_verify(std::int64_t lo, std::int64_t hi);

/// s'''_d < 2 s_{d-3}, s'_d <= 2 s'_{d-1}, s''_d <= 2 s''_{d-2}, s'''_d <= 2 s'''_{d-3}.
ScanReport numeric_facts_verify(std::int64_t lo, std::int64_t hi);

struct Certificate {
  enum class Kind { base, terracini, chandler_leaf };
  Kind kind = Kind::base;
  Weights weights{1};
  Degree d = 0;
  std::int64_t r = 0;
  std::optional<TerraciniChoice> choice;
  std::map<std::string, std::int64_t> witnesses;
  std::vector<Certificate> children;

  std::size_t node_count() const;
};

const char* to_string(Certificate::Kind k) noexcept;

/// r' = floor(s/3) if 3r <= s else ceil(s/3): the count whose AH property
/// implies the one for r.
std::int64_t bracket_points(Degree d, std::int64_t r);

/// Inductive AH certificate for r general double points of P(1,2,3) in
/// degree d. Base nodes (d <= 5) are verified by rank with `sampling`.
/// Throws CertificateFailure naming the node when no choice exists, and
/// UnsupportedWeights for other weights.
Certificate build_certificate(const Weights& w, Degree d, std::int64_t r, Sampling sampling = {});

struct CheckResult {
  bool ok = true;
  std::string path;
  std::string reason;
};

/// Re-derives every count from the DP counter, every inequality, the line
/// premise, the children's shape, and re-samples every base rank with a
/// seed independent of the one used to build.
CheckResult check_certificate(const Certificate& c, Sampling sampling = Sampling{FieldSpec{}, 0x5eed, 3});

nlohmann::json to_json(const Certificate& c);
/// Throws VerificationFailure on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

/// Human-readable indented tree.
std::string render_tree(const Certificate& c);

/// Root-level report for weights without a complete base-case theory:
/// candidates, the preferred choice and the obligations it leaves.
struct TraceReport {
  Weights weights{1};
  Degree d = 0;
  std::int64_t r = 0;
  std::vector<TerraciniChoice> candidates;
  std::vector<std::string> obligations;
  bool ok() const { return !candidates.empty(); }
};
TraceReport terracini_trace(const Weights& w, Degree d, std::int64_t r);

}  // namespace wps
