#include "wps/induction.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wps/error.hpp"

namespace wps {

namespace plane123 {

std::int64_t s(std::int64_t d) { return d < 0 ? 0 : (d * d + 6 * d + 12) / 12; }
std::int64_t s1(std::int64_t d) {
  if (d < 0) return 0;
  return d % 6 == 1 ? d / 6 : d / 6 + 1;
}
std::int64_t s2(std::int64_t d) { return d < 0 ? 0 : d / 3 + 1; }
std::int64_t s3(std::int64_t d) { return d < 0 ? 0 : d / 2 + 1; }

std::int64_t line(std::int64_t a, std::int64_t d) {
  switch (a) {
    case 1:
      return s1(d);
    case 2:
      return s2(d);
    case 3:
      return s3(d);
    default:
      throw std::invalid_argument("P(1,2,3) has no hyperplane of weight " + std::to_string(a));
  }
}

}  // namespace plane123

namespace {

const Weights kPlane123{1, 2, 3};

std::int64_t fast_count(const Weights& w, Degree d) {
  return static_cast<std::int64_t>(hilbert_value(w, d).value);
}

std::int64_t dp_count(const Weights& w, Degree d) {
  return static_cast<std::int64_t>(count_monomials(w, d));
}

bool direction_holds(Direction dir, std::int64_t lower, std::int64_t nq, std::int64_t sbar) {
  return dir == Direction::first ? (lower <= nq && nq <= sbar) : (sbar <= nq && nq <= lower);
}

void require_unit_weight(const Weights& w) {
  if (w[0] != 1) {
    throw UnsupportedWeights("the Terracini engine needs a weight equal to 1, got " + w.to_string());
  }
}

}  // namespace

const char* to_string(Direction d) noexcept { return d == Direction::first ? "first" : "second"; }

std::vector<TerraciniChoice> terracini_candidates(const Weights& w, Degree d, std::int64_t r) {
  require_unit_weight(w);
  std::vector<TerraciniChoice> out;
  if (d < 1 || r < 1 || w.size() < 2) return out;
  const auto n = static_cast<std::int64_t>(w.dimension());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::int64_t lower = (n + 1) * r - fast_count(w, d - w[i]);
    const std::int64_t sbar = fast_count(w.without(i), d);
    for (std::int64_t q = 1; q <= r; ++q) {
      const std::int64_t nq = n * q;
      for (Direction dir : {Direction::first, Direction::second}) {
        if (direction_holds(dir, lower, nq, sbar)) {
          out.push_back({i, w[i], q, dir, lower, sbar});
          break;
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const TerraciniChoice& x, const TerraciniChoice& y) {
    if (x.weight != y.weight) return x.weight > y.weight;
    if (x.q != y.q) return x.q < y.q;
    return x.i < y.i;
  });
  return out;
}

bool terracini_choice_holds(const Weights& w, Degree d, std::int64_t r, const TerraciniChoice& c) {
  if (c.i >= w.size() || w[c.i] != c.weight) return false;
  if (c.q < 1 || c.q > r) return false;
  const auto n = static_cast<std::int64_t>(w.dimension());
  const std::int64_t lower = (n + 1) * r - dp_count(w, d - w[c.i]);
  const std::int64_t sbar = dp_count(w.without(c.i), d);
  if (lower != c.lower || sbar != c.sbar) return false;
  return direction_holds(c.direction, lower, n * c.q, sbar);
}

ChandlerResult chandler_inequality(const Weights& w, Degree d, std::size_t i, std::int64_t q,
                                   std::int64_t r, std::optional<Direction> direction) {
  ChandlerResult res;
  const std::int64_t a = w[i];
  const auto n = static_cast<std::int64_t>(w.dimension());
  res.degree = d - a;
  if (q == 0) {
    res.holds = true;
    res.trivial = true;
    return res;
  }
  const Weights bar = w.without(i);
  if (!direction) {
    const std::int64_t lower = (n + 1) * r - fast_count(w, d - a);
    const std::int64_t sbar_d = fast_count(bar, d);
    direction = direction_holds(Direction::second, lower, n * q, sbar_d) &&
                        !direction_holds(Direction::first, lower, n * q, sbar_d)
                    ? Direction::second
                    : Direction::first;
  }
  const std::int64_t rest = (n + 1) * (r - q);
  const std::int64_t s1 = fast_count(w, res.degree);
  res.h1 = std::min(s1, rest);
  res.h2 = std::min(fast_count(w, res.degree - a), rest);
  res.sbar = fast_count(bar, res.degree);

  if (*direction == Direction::first) {
    // H_{d-a}(S/I) + q <= H_{d-2a}(S/I) + sbar_{d-a}
    res.case_used = 1;
    res.lhs = res.h1 + q;
    res.rhs = res.h2 + res.sbar;
    res.holds = res.lhs <= res.rhs;
    return res;
  }
  res.case_used = 2;
  if (res.h1 == s1) {
    // the double points alone already fill degree d - a
    res.trivial = true;
    res.lhs = s1;
    res.rhs = s1;
    res.holds = true;
    return res;
  }
  res.m = s1 - rest;
  res.lhs = s1;
  res.rhs = res.h2 + res.sbar;
  res.holds = res.m <= q && res.lhs <= res.rhs;
  return res;
}

ScanReport teranum_verify(std::int64_t lo, std::int64_t hi) {
  using namespace plane123;
  ScanReport rep;
  rep.lo = lo;
  rep.hi = hi;
  if (lo < 6) throw std::invalid_argument("teranum_verify needs d >= 6");
  for (std::int64_t d = lo; d <= hi; ++d) {
    const std::int64_t sd = s(d);
    for (std::int64_t r : {sd / 3, (sd + 2) / 3}) {
      ++rep.checks;
      bool found = false;
      int odd = 0;
      for (std::int64_t a = 1; a <= 3; ++a) {
        const std::int64_t lower = 3 * r - s(d - a);
        const std::int64_t upper = line(a, d);
        if (lower == upper && upper > 0 && upper % 2 == 1) ++odd;
        // first: lower <= 2q <= upper; second: upper <= 2q <= lower; 1 <= q <= r
        for (auto [from, to] : {std::pair{lower, upper}, std::pair{upper, lower}}) {
          const std::int64_t lo2 = std::max<std::int64_t>(from, 2);
          const std::int64_t hi2 = std::min(to, 2 * r);
          const std::int64_t q = (lo2 + 1) / 2;
          if (2 * q <= hi2) found = true;
        }
      }
      if (odd == 3) rep.failures.push_back({d, r, "all three odd equalities hold"});
      if (!found) rep.failures.push_back({d, r, "no q with 1 <= q <= r"});
    }
  }
  return rep;
}

ScanReport numeric_facts_verify(std::int64_t lo, std::int64_t hi) {
  using namespace plane123;
  ScanReport rep;
  rep.lo = lo;
  rep.hi = hi;
  if (lo < 6) throw std::invalid_argument("numeric_facts_verify needs d >= 6");
  for (std::int64_t d = lo; d <= hi; ++d) {
    rep.checks += 4;
    if (!(s3(d) < 2 * s(d - 3))) rep.failures.push_back({d, 0, "s'''_d < 2 s_{d-3}"});
    if (!(s1(d) <= 2 * s1(d - 1))) rep.failures.push_back({d, 0, "s'_d <= 2 s'_{d-1}"});
    if (!(s2(d) <= 2 * s2(d - 2))) rep.failures.push_back({d, 0, "s''_d <= 2 s''_{d-2}"});
    if (!(s3(d) <= 2 * s3(d - 3))) rep.failures.push_back({d, 0, "s'''_d <= 2 s'''_{d-3}"});
  }
  return rep;
}

std::size_t Certificate::node_count() const {
  std::size_t total = 1;
  for (const auto& c : children) total += c.node_count();
  return total;
}

const char* to_string(Certificate::Kind k) noexcept {
  switch (k) {
    case Certificate::Kind::base:
      return "base";
    case Certificate::Kind::terracini:
      return "terracini";
    case Certificate::Kind::chandler_leaf:
      return "chandler-leaf";
  }
  return "?";
}

std::int64_t bracket_points(Degree d, std::int64_t r) {
  if (r <= 0 || d < 0) return 0;
  const std::int64_t sd = plane123::s(d);
  return 3 * r <= sd ? sd / 3 : (sd + 2) / 3;
}

namespace {

std::uint64_t line_hilbert(const Weights& line_weights, std::int64_t q, Degree d) {
  const std::vector<int> mults(static_cast<std::size_t>(q), 2);
  return line_interpolation_formula(line_weights[0], line_weights[1], mults, d);
}

class Builder {
 public:
  explicit Builder(Sampling s) : sampling_(s) {}

  Certificate node(Degree d, std::int64_t r_in, const std::string& path) {
    const std::int64_t r = bracket_points(d, r_in);
    Certificate c;
    c.weights = kPlane123;
    c.d = d;
    c.r = r;
    if (r != r_in) c.witnesses["reduced_from"] = r_in;
    c.witnesses["s_d"] = plane123::s(d);

    if (r == 0 || d <= 5) {
      c.kind = Certificate::Kind::base;
      if (r > 0) {
        const auto prof = hilbert_fat_points(
            FatPointConfig::double_points(kPlane123, static_cast<std::size_t>(r), sampling_), d);
        c.witnesses["expected"] = static_cast<std::int64_t>(prof.expected);
        c.witnesses["actual"] = static_cast<std::int64_t>(prof.actual);
        if (!prof.is_ah) {
          throw CertificateFailure("base case at " + path + " (d=" + std::to_string(d) +
                                   ", r=" + std::to_string(r) + ") is not AH by rank");
        }
      }
      return c;
    }

    const auto cands = terracini_candidates(kPlane123, d, r);
    if (cands.empty()) {
      throw CertificateFailure("no Terracini choice at " + path + " (d=" + std::to_string(d) +
                               ", r=" + std::to_string(r) + ")");
    }
    const TerraciniChoice ch = cands.front();
    c.kind = Certificate::Kind::terracini;
    c.choice = ch;
    const std::int64_t a = ch.weight;
    const Weights line = kPlane123.without(ch.i);
    c.witnesses["s_d_minus_a"] = plane123::s(d - a);
    c.witnesses["lower"] = ch.lower;
    c.witnesses["sbar_d"] = ch.sbar;
    c.witnesses["nq"] = 2 * ch.q;
    c.witnesses["line_hilbert"] = static_cast<std::int64_t>(line_hilbert(line, ch.q, d));
    c.witnesses["line_expected"] = std::min(ch.sbar, 2 * ch.q);
    if (c.witnesses["line_hilbert"] != c.witnesses["line_expected"]) {
      throw CertificateFailure("line premise fails at " + path);
    }

    const auto chand = chandler_inequality(kPlane123, d, ch.i, ch.q, r, ch.direction);
    if (!chand.holds) {
      throw CertificateFailure("Chandler inequality fails at " + path);
    }
    Certificate leaf;
    leaf.kind = Certificate::Kind::chandler_leaf;
    leaf.weights = kPlane123;
    leaf.d = d - a;
    leaf.r = r - ch.q;
    leaf.witnesses = {{"q", ch.q},         {"weight", a},        {"case", chand.case_used},
                      {"trivial", chand.trivial}, {"h1", chand.h1}, {"h2", chand.h2},
                      {"sbar", chand.sbar}, {"m", chand.m},        {"lhs", chand.lhs},
                      {"rhs", chand.rhs}};
    c.children.push_back(std::move(leaf));
    c.children.push_back(node(d - a, r - ch.q, path + "/1"));
    c.children.push_back(node(d - 2 * a, r - ch.q, path + "/2"));
    return c;
  }

 private:
  Sampling sampling_;
};

class Checker {
 public:
  explicit Checker(Sampling s) : sampling_(s) {}

  CheckResult check(const Certificate& c, const std::string& path) {
    if (!(c.weights == kPlane123)) return fail(path, "weights are not 1,2,3");
    if (c.r < 0) return fail(path, "negative point count");
    const std::int64_t sd = dp_count(kPlane123, c.d);
    if (!expect(c, "s_d", sd)) return fail(path, "s_d witness disagrees with the DP count");
    if (c.r != bracket_points(c.d, c.r)) return fail(path, "r is not a bracket value for d");
    if (auto it = c.witnesses.find("reduced_from"); it != c.witnesses.end()) {
      if (bracket_points(c.d, it->second) != c.r) return fail(path, "reduction does not match");
    }

    switch (c.kind) {
      case Certificate::Kind::base:
        return check_base(c, path);
      case Certificate::Kind::terracini:
        return check_terracini(c, path);
      case Certificate::Kind::chandler_leaf:
        return fail(path, "chandler-leaf outside a terracini node");
    }
    return fail(path, "unknown node kind");
  }

 private:
  static bool expect(const Certificate& c, const char* key, std::int64_t value) {
    auto it = c.witnesses.find(key);
    return it != c.witnesses.end() && it->second == value;
  }

  static CheckResult fail(const std::string& path, std::string reason) {
    return {false, path, std::move(reason)};
  }

  CheckResult check_base(const Certificate& c, const std::string& path) {
    if (!c.children.empty()) return fail(path, "base node has children");
    if (c.r == 0) return {};
    if (c.d > 5) return fail(path, "base node above degree 5");
    const auto prof = hilbert_fat_points(
        FatPointConfig::double_points(kPlane123, static_cast<std::size_t>(c.r), sampling_), c.d);
    if (!prof.is_ah) return fail(path, "base case is not AH on re-sampling");
    if (!expect(c, "expected", static_cast<std::int64_t>(prof.expected)) ||
        !expect(c, "actual", static_cast<std::int64_t>(prof.actual))) {
      return fail(path, "base rank witnesses disagree");
    }
    return {};
  }

  CheckResult check_terracini(const Certificate& c, const std::string& path) {
    if (!c.choice) return fail(path, "terracini node without a choice");
    const auto& ch = *c.choice;
    if (c.d < 6) return fail(path, "terracini node below degree 6");
    if (!terracini_choice_holds(kPlane123, c.d, c.r, ch)) {
      return fail(path, "numerical condition fails for q=" + std::to_string(ch.q));
    }
    const std::int64_t a = ch.weight;
    const Weights line = kPlane123.without(ch.i);
    if (!expect(c, "s_d_minus_a", dp_count(kPlane123, c.d - a)) ||
        !expect(c, "lower", ch.lower) || !expect(c, "sbar_d", ch.sbar) ||
        !expect(c, "nq", 2 * ch.q)) {
      return fail(path, "terracini witnesses disagree");
    }
    const auto lh = static_cast<std::int64_t>(line_hilbert(line, ch.q, c.d));
    if (lh != std::min(ch.sbar, 2 * ch.q) || !expect(c, "line_hilbert", lh)) {
      return fail(path, "line premise fails");
    }
    if (c.children.size() != 3) return fail(path, "terracini node needs three children");

    const auto& leaf = c.children[0];
    const std::string leaf_path = path + "/0";
    if (leaf.kind != Certificate::Kind::chandler_leaf) return fail(leaf_path, "expected chandler-leaf");
    if (leaf.d != c.d - a || leaf.r != c.r - ch.q) return fail(leaf_path, "chandler-leaf shape");
    const auto chand = chandler_inequality(kPlane123, c.d, ch.i, ch.q, c.r, ch.direction);
    if (!chand.holds) return fail(leaf_path, "Chandler inequality fails");
    if (!expect(leaf, "q", ch.q) || !expect(leaf, "case", chand.case_used) ||
        !expect(leaf, "h1", chand.h1) || !expect(leaf, "h2", chand.h2) ||
        !expect(leaf, "sbar", chand.sbar) || !expect(leaf, "lhs", chand.lhs) ||
        !expect(leaf, "rhs", chand.rhs)) {
      return fail(leaf_path, "Chandler witnesses disagree");
    }
    if (dp_count(kPlane123, chand.degree) != plane123::s(chand.degree) ||
        dp_count(line, chand.degree) != chand.sbar) {
      return fail(leaf_path, "Chandler counts disagree with the DP counter");
    }

    const Degree child_d[2] = {c.d - a, c.d - 2 * a};
    for (int k = 0; k < 2; ++k) {
      const auto& child = c.children[1 + k];
      const std::string child_path = path + "/" + std::to_string(1 + k);
      if (child.kind == Certificate::Kind::chandler_leaf) {
        return fail(child_path, "unexpected chandler-leaf");
      }
      if (child.d != child_d[k] || child.r != bracket_points(child_d[k], c.r - ch.q)) {
        return fail(child_path, "premise node has the wrong degree or point count");
      }
      auto res = check(child, child_path);
      if (!res.ok) return res;
    }
    return {};
  }

  Sampling sampling_;
};

void render(const Certificate& c, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(c.kind) << " d=" << c.d
     << " r=" << c.r;
  if (c.choice) {
    os << " [x" << c.choice->i << " weight " << c.choice->weight << ", q=" << c.choice->q << ", "
       << to_string(c.choice->direction) << ": ";
    if (c.choice->direction == Direction::first) {
      os << c.choice->lower << " <= " << 2 * c.choice->q << " <= " << c.choice->sbar;
    } else {
      os << c.choice->sbar << " <= " << 2 * c.choice->q << " <= " << c.choice->lower;
    }
    os << "]";
  }
  if (c.kind == Certificate::Kind::chandler_leaf) {
    const auto& w = c.witnesses;
    auto get = [&](const char* k) {
      auto it = w.find(k);
      return it == w.end() ? 0 : it->second;
    };
    os << " case " << get("case") << ": " << get("lhs") << " <= " << get("rhs");
    if (get("trivial")) os << " (trivial)";
  } else if (c.kind == Certificate::Kind::base && c.r > 0) {
    os << " rank " << c.witnesses.at("actual") << "/" << c.witnesses.at("expected");
  }
  os << '\n';
  for (const auto& ch : c.children) render(ch, depth + 1, os);
}

}  // namespace

Certificate build_certificate(const Weights& w, Degree d, std::int64_t r, Sampling sampling) {
  if (!(w == kPlane123)) {
    throw UnsupportedWeights("complete certificates are only built for P(1,2,3), got " +
                             w.to_string());
  }
  if (d < 0) throw std::invalid_argument("degree must be non-negative");
  if (r < 0) throw std::invalid_argument("point count must be non-negative");
  return Builder(sampling).node(d, r, "root");
}

CheckResult check_certificate(const Certificate& c, Sampling sampling) {
  return Checker(sampling).check(c, "root");
}

std::string render_tree(const Certificate& c) {
  std::ostringstream os;
  render(c, 0, os);
  return os.str();
}

TraceReport terracini_trace(const Weights& w, Degree d, std::int64_t r) {
  TraceReport rep;
  rep.weights = w;
  rep.d = d;
  rep.r = r;
  rep.candidates = terracini_candidates(w, d, r);
  if (rep.candidates.empty()) return rep;
  const auto& ch = rep.candidates.front();
  const Weights bar = w.without(ch.i);
  rep.obligations.push_back(std::to_string(ch.q) + " general double points of P(" +
                            bar.to_string() + ") impose independent conditions in degree " +
                            std::to_string(d));
  rep.obligations.push_back(std::to_string(r - ch.q) + " general double points plus " +
                            std::to_string(ch.q) + " general simple points on x" +
                            std::to_string(ch.i) + " = 0 are AH in degree " +
                            std::to_string(d - ch.weight));
  return rep;
}

}  // namespace wps
