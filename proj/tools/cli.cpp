#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wps/bounds.hpp"
#include "wps/error.hpp"
#include "wps/grading.hpp"
#include "wps/ideals.hpp"
#include "wps/induction.hpp"
#include "wps/interpolation.hpp"
#include "wps/version.hpp"
#include "wps/veronese.hpp"

namespace wps::cli {

namespace {

using nlohmann::json;

struct Range {
  Degree lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) -> Degree {
    std::size_t used = 0;
    Degree v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw CLI::ValidationError("degree", "bad degree '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(s);
  } else {
    r.lo = to_int(s.substr(0, dots));
    r.hi = to_int(s.substr(dots + 2));
  }
  if (r.lo < 0 || r.hi < r.lo) throw CLI::ValidationError("degree", "bad degree range '" + s + "'");
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Weights parse_weights(const std::string& s) {
  if (s.empty()) throw CLI::ValidationError("--weights", "weights are required");
  std::vector<std::int64_t> v;
  for (const auto& t : split(s, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) {
      throw CLI::ValidationError("--weights", "malformed weights '" + s + "'");
    }
    v.push_back(x);
  }
  try {
    return Weights(v);
  } catch (const InvalidWeights& e) {
    throw CLI::ValidationError("--weights", e.what());
  }
}

std::vector<mpq_class> parse_point(const std::string& s) {
  std::vector<mpq_class> out;
  for (const auto& t : split(s, ',')) {
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0) {
      throw CLI::ValidationError("--point", "malformed coordinate '" + t + "'");
    }
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

struct Common {
  std::string weights;
  std::uint64_t seed = 1;
  int trials = 3;
  std::string field = "prime";
  std::uint64_t prime = 0;
  std::string format = "text";
  std::string output;
};

void add_common(CLI::App* sub, Common& c, bool weights_required = true) {
  auto* w = sub->add_option("--weights,-w", c.weights, "comma-separated weights, e.g. 1,2,3");
  if (weights_required) w->required();
  sub->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
  sub->add_option("--trials", c.trials, "independent samples per rank")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--field", c.field, "prime or rational")
      ->check(CLI::IsMember({"prime", "rational"}))
      ->capture_default_str();
  sub->add_option("--prime", c.prime, "modulus for the prime field (default: derived from the seed)");
  sub->add_option("--format", c.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--output,-o", c.output, "write the artifact to this file");
}

Sampling sampling_of(const Common& c) {
  Sampling s;
  s.seed = c.seed;
  s.trials = c.trials;
  s.field = c.field == "rational" ? FieldSpec::exact() : FieldSpec::modular(c.prime);
  if (c.field == "prime" && c.prime != 0 && !is_prime(c.prime)) {
    throw CLI::ValidationError("--prime", std::to_string(c.prime) + " is not prime");
  }
  return s;
}

std::uint64_t prime_of(const Common& c, const Weights& w) {
  if (c.field == "rational") return 0;
  return c.prime ? c.prime : default_prime(w, c.seed);
}

std::vector<std::int64_t> entries(const Weights& w) { return {w.entries().begin(), w.entries().end()}; }

// Metadata carried by every artifact.
struct Meta {
  std::string command;
  std::optional<Weights> weights;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;  // empty: no sampling; 0: rational
  int trials = 0;

  json to_json() const {
    json j;
    j["tool"] = "wps";
    j["version"] = kVersion;
    j["command"] = command;
    j["weights"] = weights ? json(entries(*weights)) : json(nullptr);
    j["seed"] = seed;
    if (!prime) {
      j["field"] = nullptr;
      j["prime"] = nullptr;
    } else if (*prime == 0) {
      j["field"] = "rational";
      j["prime"] = nullptr;
    } else {
      j["field"] = "prime";
      j["prime"] = *prime;
    }
    j["trials"] = trials;
    return j;
  }

  std::string comment() const {
    std::ostringstream os;
    os << "# wps " << kVersion << ' ' << command;
    if (weights) os << " weights=" << weights->to_string();
    os << " seed=" << seed;
    if (prime) {
      if (*prime == 0) {
        os << " field=rational";
      } else {
        os << " prime=" << *prime;
      }
    }
    os << " trials=" << trials << '\n';
    return os.str();
  }
};

Meta meta_of(const std::string& command, const Common& c, std::optional<Weights> w, bool sampled) {
  Meta m;
  m.command = command;
  m.weights = w;
  m.seed = c.seed;
  m.trials = c.trials;
  if (sampled && w) m.prime = prime_of(c, *w);
  return m;
}

json artifact(const std::string& schema, const Meta& m) {
  json j;
  j["schema"] = schema;
  j["meta"] = m.to_json();
  return j;
}

// Output of one subcommand: the artifact text and an exit code.
struct Result {
  std::string text;
  int code = kSuccess;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// hilbert ------------------------------------------------------------------

struct HilbertArgs {
  Common c;
  std::string deg;
};

Result cmd_hilbert(const HilbertArgs& a) {
  const Weights w = parse_weights(a.c.weights);
  const Range r = parse_range(a.deg);
  const Meta m = meta_of("hilbert", a.c, w, false);
  std::ostringstream os;
  json rows = json::array();
  if (a.c.format == "csv") os << m.comment() << "weights,d,s_d,source\n";
  if (a.c.format == "text") os << m.comment() << "d\ts_d\tsource\n";
  for (Degree d = r.lo; d <= r.hi; ++d) {
    const auto v = hilbert_value(w, d);
    if (a.c.format == "csv") {
      os << '"' << w.to_string() << "\"," << d << ',' << v.value << ',' << to_string(v.source) << '\n';
    } else if (a.c.format == "text") {
      os << d << '\t' << v.value << '\t' << to_string(v.source) << '\n';
    } else {
      rows.push_back({{"d", d}, {"s_d", v.value}, {"source", to_string(v.source)}});
    }
  }
  if (a.c.format == "json") {
    auto j = artifact("wps.hilbert/1", m);
    j["values"] = rows;
    return {dump(j)};
  }
  return {os.str()};
}

// ah-check -----------------------------------------------------------------

struct AhArgs {
  Common c;
  std::size_t points = 0;
  int mult = 2;
  std::string deg;
  unsigned threads = 0;
};

Result cmd_ah_check(const AhArgs& a) {
  const Weights w = parse_weights(a.c.weights);
  const Range r = parse_range(a.deg);
  const auto cfg = FatPointConfig::uniform(w, a.points, a.mult, sampling_of(a.c));
  const auto table = deficiency_table(cfg, r.lo, r.hi, a.threads);
  const Meta m = meta_of("ah-check", a.c, w, true);
  std::ostringstream os;
  if (a.c.format == "json") {
    auto j = artifact("wps.ah-check/1", m);
    j["points"] = a.points;
    j["multiplicity"] = a.mult;
    j["rows"] = json::array();
    for (const auto& p : table) {
      j["rows"].push_back({{"d", p.d},
                           {"s_d", p.s_d},
                           {"expected", p.expected},
                           {"actual", p.actual},
                           {"deficiency", p.deficiency},
                           {"is_AH", p.is_ah},
                           {"trials", p.trials_used}});
    }
    return {dump(j)};
  }
  os << m.comment();
  if (a.c.format == "csv") {
    os << "weights,r,d,s_d,expected,actual,deficiency,is_AH,trials\n";
    for (const auto& p : table) {
      os << '"' << w.to_string() << "\"," << a.points << ',' << p.d << ',' << p.s_d << ','
         << p.expected << ',' << p.actual << ',' << p.deficiency << ',' << yes_no(p.is_ah) << ','
         << p.trials_used << '\n';
    }
    return {os.str()};
  }
  os << "# " << a.points << " points of multiplicity " << a.mult << '\n';
  os << std::left << std::setw(6) << "d" << std::setw(10) << "s_d" << std::setw(10) << "expected"
     << std::setw(10) << "actual" << std::setw(12) << "deficiency" << std::setw(7) << "AH"
     << "trials\n";
  std::size_t defective = 0;
  for (const auto& p : table) {
    defective += !p.is_ah;
    os << std::setw(6) << p.d << std::setw(10) << p.s_d << std::setw(10) << p.expected
       << std::setw(10) << p.actual << std::setw(12) << p.deficiency << std::setw(7)
       << (p.is_ah ? "yes" : "no") << p.trials_used << '\n';
  }
  os << (defective == 0 ? "AH in every degree\n"
                        : std::to_string(defective) + " degree(s) with positive deficiency\n");
  return {os.str()};
}

// terracini-trace / check-cert ---------------------------------------------

struct TraceArgs {
  Common c;
  Degree deg = 0;
  std::int64_t points = 0;
  std::string cert_out;
};

json choice_json(const TerraciniChoice& ch) {
  return {{"i", ch.i},         {"weight", ch.weight}, {"q", ch.q}, {"direction", to_string(ch.direction)},
          {"lower", ch.lower}, {"sbar", ch.sbar}};
}

Result cmd_trace(const TraceArgs& a) {
  const Weights w = parse_weights(a.c.weights);
  if (a.deg < 0 || a.points < 1) throw CLI::ValidationError("trace", "need d >= 0 and r >= 1");
  const Meta m = meta_of("terracini-trace", a.c, w, true);
  const bool complete = w == Weights{1, 2, 3};
  std::ostringstream os;

  if (complete) {
    std::optional<Certificate> cert;
    std::string failure;
    try {
      cert = build_certificate(w, a.deg, a.points, sampling_of(a.c));
    } catch (const CertificateFailure& e) {
      failure = e.what();
    }
    CheckResult check;
    if (cert) check = check_certificate(*cert);
    const bool ok = cert && check.ok;
    json j = artifact("wps.certificate/1", m);
    j["d"] = a.deg;
    j["r"] = a.points;
    j["status"] = ok ? "accepted" : "failed";
    if (cert) {
      j["certificate"] = to_json(*cert);
      j["check"] = {{"ok", check.ok}, {"path", check.path}, {"reason", check.reason}};
    } else {
      j["failure"] = failure;
    }
    if (!a.cert_out.empty()) {
      std::ofstream f(a.cert_out);
      if (!f) throw std::runtime_error("cannot write " + a.cert_out);
      f << dump(j);
    }
    if (a.c.format == "json") return {dump(j), ok ? kSuccess : kVerificationFailure};
    os << m.comment();
    if (!cert) {
      os << "certificate failure: " << failure << '\n';
      return {os.str(), kVerificationFailure};
    }
    os << render_tree(*cert);
    os << "nodes: " << cert->node_count() << '\n';
    if (check.ok) {
      os << "checker: accepted\n";
    } else {
      os << "checker: rejected at " << check.path << ": " << check.reason << '\n';
    }
    return {os.str(), ok ? kSuccess : kVerificationFailure};
  }

  // No base-case theory for these weights: report the first inductive step.
  const auto rep = terracini_trace(w, a.deg, a.points);
  if (a.c.format == "json") {
    json j = artifact("wps.trace/1", m);
    j["d"] = a.deg;
    j["r"] = a.points;
    j["status"] = rep.ok() ? "partial" : "failed";
    j["candidates"] = json::array();
    for (const auto& ch : rep.candidates) j["candidates"].push_back(choice_json(ch));
    j["obligations"] = rep.obligations;
    return {dump(j), rep.ok() ? kSuccess : kVerificationFailure};
  }
  os << m.comment();
  if (!rep.ok()) {
    os << "failure: no hyperplane and q satisfy the numerical condition for d=" << a.deg
       << ", r=" << a.points << '\n';
    return {os.str(), kVerificationFailure};
  }
  os << "candidates:\n";
  for (const auto& ch : rep.candidates) {
    os << "  x" << ch.i << " (weight " << ch.weight << "), q=" << ch.q << ", "
       << to_string(ch.direction) << '\n';
  }
  os << "open obligations for the preferred choice:\n";
  for (const auto& o : rep.obligations) os << "  " << o << '\n';
  return {os.str()};
}

struct CheckArgs {
  Common c;
  std::string input;
};

Result cmd_check_cert(const CheckArgs& a) {
  std::ifstream f(a.input);
  if (!f) throw CLI::ValidationError("--input", "cannot read " + a.input);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw VerificationFailure(std::string("certificate is not valid JSON: ") + e.what());
  }
  const json& body = j.contains("certificate") ? j.at("certificate") : j;
  const Certificate cert = certificate_from_json(body);
  Common c = a.c;
  c.weights = cert.weights.to_string();
  const auto res = check_certificate(cert, sampling_of(c));
  const Meta m = meta_of("check-cert", c, cert.weights, true);
  if (a.c.format == "json") {
    auto out = artifact("wps.check/1", m);
    out["ok"] = res.ok;
    out["path"] = res.path;
    out["reason"] = res.reason;
    out["nodes"] = cert.node_count();
    return {dump(out), res.ok ? kSuccess : kVerificationFailure};
  }
  std::ostringstream os;
  os << m.comment();
  if (res.ok) {
    os << "accepted (" << cert.node_count() << " nodes)\n";
  } else {
    os << "rejected at " << res.path << ": " << res.reason << '\n';
  }
  return {os.str(), res.ok ? kSuccess : kVerificationFailure};
}

// point-ideal / herzog -----------------------------------------------------

struct PointArgs {
  Common c;
  std::string point;
};

Result cmd_point_ideal(const PointArgs& a) {
  const Weights w = parse_weights(a.c.weights);
  const auto coords = parse_point(a.point);
  if (coords.size() != w.size()) {
    throw CLI::ValidationError("--point", "expected " + std::to_string(w.size()) + " coordinates");
  }
  const WeightedPoint p(w, coords);
  const auto gens = point_ideal(p);
  const Meta m = meta_of("point-ideal", a.c, w, false);
  if (a.c.format == "json") {
    auto j = artifact("wps.point-ideal/1", m);
    j["point"] = p.to_string();
    j["generators"] = json::array();
    for (const auto& g : gens) j["generators"].push_back(g.to_json());
    return {dump(j)};
  }
  std::ostringstream os;
  os << m.comment();
  if (a.c.format == "csv") {
    os << "generator,degree\n";
    for (const auto& g : gens) os << '"' << g.to_string() << "\"," << g.degree() << '\n';
    return {os.str()};
  }
  os << "point " << p.to_string() << '\n';
  for (const auto& g : gens) os << "  " << g.to_string() << "    (degree " << g.degree() << ")\n";
  return {os.str()};
}

Result cmd_herzog(const Common& c) {
  const Weights w = parse_weights(c.weights);
  if (w.size() != 3) throw CLI::ValidationError("--weights", "herzog needs exactly three weights");
  // Relations are reported in the order the weights were given.
  std::vector<std::int64_t> in(3);
  for (std::size_t i = 0; i < 3; ++i) in[w.permutation()[i]] = w[i];
  HerzogData h;
  try {
    h = herzog_data(in[0], in[1], in[2]);
  } catch (const InvalidWeights& e) {
    throw CLI::ValidationError("--weights", e.what());
  }
  const Meta m = meta_of("herzog", c, w, false);
  const auto bins = herzog_binomials(h, WeightedPoint(Weights(in), std::initializer_list<long>{1, 1, 1}));
  if (c.format == "json") {
    auto j = artifact("wps.herzog/1", m);
    j["a"] = h.a;
    j["b"] = h.b;
    j["c"] = h.c;
    j["relations"] = json::array();
    for (const auto& rel : h.rel) j["relations"].push_back({{"r", rel.r}, {"k", rel.k}, {"g", rel.g}});
    j["hc"] = h.hc;
    j["binomials"] = json::array();
    for (const auto& b : bins) j["binomials"].push_back(b.to_string());
    return {dump(j)};
  }
  std::ostringstream os;
  os << m.comment();
  if (c.format == "csv") {
    os << "i,r,k,g\n";
    for (int i = 0; i < 3; ++i) os << i + 1 << ',' << h.rel[i].r << ',' << h.rel[i].k << ',' << h.rel[i].g << '\n';
    return {os.str()};
  }
  os << "r=(" << h.rel[0].r << ',' << h.rel[1].r << ',' << h.rel[2].r << ")\n";
  os << "k=(" << h.rel[0].k << ',' << h.rel[1].k << ',' << h.rel[2].k << ")\n";
  os << "g=(" << h.rel[0].g << ',' << h.rel[1].g << ',' << h.rel[2].g << ")\n";
  os << "hc=" << yes_no(h.hc) << '\n';
  for (const auto& b : bins) os << "  " << b.to_string() << '\n';
  return {os.str()};
}

// secant-dim ---------------------------------------------------------------

struct SecantArgs {
  Common c;
  Degree deg = 0;
  std::int64_t rank = 0;
};

Result cmd_secant(const SecantArgs& a) {
  const Weights w = parse_weights(a.c.weights);
  if (a.rank < 1) throw CLI::ValidationError("--rank", "need r >= 1");
  const VeroneseChart chart(w, a.deg);
  const auto rep = secant_dimension(chart, a.rank, sampling_of(a.c));
  const Meta m = meta_of("secant-dim", a.c, w, true);
  if (a.c.format == "json") {
    auto j = artifact("wps.secant/1", m);
    j["weights"] = entries(w);
    j["d"] = a.deg;
    j["r"] = a.rank;
    j["expected_dim"] = rep.expected_dim;
    j["computed_dim"] = rep.computed_dim;
    j["defect"] = rep.defect;
    j["trials_used"] = rep.trials;
    j["defective_in_all_trials"] = rep.defective_in_all_trials;
    return {dump(j)};
  }
  std::ostringstream os;
  os << m.comment();
  if (a.c.format == "csv") {
    os << "weights,d,r,expected_dim,computed_dim,defect,trials\n"
       << '"' << w.to_string() << "\"," << a.deg << ',' << a.rank << ',' << rep.expected_dim << ','
       << rep.computed_dim << ',' << rep.defect << ',' << rep.trials << '\n';
    return {os.str()};
  }
  os << rep.computed_dim << '\n';
  os << "# expected " << rep.expected_dim << ", defect " << rep.defect << ", trials used "
     << rep.trials << '\n';
  return {os.str()};
}

// bound-check / verify-suite / classify ------------------------------------

struct BoundArgs {
  Common c;
  std::string deg;
  bool triangle = false;
};

Result cmd_bound_check(const BoundArgs& a) {
  const Weights w = parse_weights(a.c.weights);
  if (w.size() != 3 || w[0] != 1) throw CLI::ValidationError("--weights", "expected weights 1,b,c");
  const std::int64_t b = w[1], c = w[2];
  const Range r = a.deg.empty() ? Range{10 * c, 14 * c} : parse_range(a.deg);
  const auto rep = interpolation_bound_check(b, c, r.lo, r.hi);
  std::vector<Degree> tri_fail;
  if (a.triangle) {
    for (Degree d = std::max(r.lo, 2 * c); d <= r.hi; ++d) {
      if (!triangle_lattice_check(b, c, d).ok()) tri_fail.push_back(d);
    }
  }
  const bool ok = rep.passed() && tri_fail.empty();
  const Meta m = meta_of("bound-check", a.c, w, false);
  if (a.c.format == "json") {
    auto j = artifact("wps.bound/1", m);
    j["b"] = b;
    j["c"] = c;
    j["threshold10"] = rep.threshold10;
    j["threshold6"] = rep.wide ? json(rep.threshold6) : json(nullptr);
    j["rows"] = json::array();
    for (const auto& x : rep.records) {
      j["rows"].push_back({{"d", x.d}, {"lhs", x.lhs}, {"rhs", x.rhs}, {"holds", x.holds}, {"asserted", x.asserted}});
    }
    j["violations"] = rep.violations;
    if (a.triangle) j["triangle_failures"] = tri_fail;
    j["passed"] = ok;
    return {dump(j), ok ? kSuccess : kVerificationFailure};
  }
  std::ostringstream os;
  os << m.comment();
  if (a.c.format == "csv") {
    os << "d,lhs,rhs,holds\n";
    for (const auto& x : rep.records) os << x.d << ',' << x.lhs << ',' << x.rhs << ',' << yes_no(x.holds) << '\n';
    return {os.str(), ok ? kSuccess : kVerificationFailure};
  }
  os << "floor(s_d/3) >= s_floor(d/2) on P(" << w.to_string() << "), d in " << r.lo << ".." << r.hi
     << "; asserted from d=" << (rep.wide ? rep.threshold6 : rep.threshold10) << '\n';
  std::size_t holds = 0;
  for (const auto& x : rep.records) holds += x.holds;
  os << "holds in " << holds << " of " << rep.records.size() << " degrees\n";
  for (Degree d : rep.violations) os << "violation at d=" << d << '\n';
  if (a.triangle) {
    os << "lattice decomposition: " << (tri_fail.empty() ? "consistent" : "inconsistent") << '\n';
    for (Degree d : tri_fail) os << "  fails at d=" << d << '\n';
  }
  os << (ok ? "PASS\n" : "FAIL\n");
  return {os.str(), ok ? kSuccess : kVerificationFailure};
}

struct SuiteArgs {
  Common c;
  std::int64_t max_deg = 100000;
  std::int64_t max_c = 12;
};

Result cmd_verify_suite(const SuiteArgs& a) {
  if (a.max_deg < 6) throw CLI::ValidationError("--max-deg", "need at least 6");
  const auto tn = teranum_verify(6, a.max_deg);
  const auto nf = numeric_facts_verify(6, a.max_deg);
  std::vector<std::string> bound_failures;
  std::size_t bound_checks = 0;
  for (std::int64_t c = 1; c <= a.max_c; ++c) {
    for (std::int64_t b = 1; b <= c; ++b) {
      const auto rep = interpolation_bound_check(b, c, 0, 14 * c);
      ++bound_checks;
      for (Degree d : rep.violations) {
        bound_failures.push_back("(" + std::to_string(b) + "," + std::to_string(c) + ") d=" + std::to_string(d));
      }
    }
  }
  const bool ok = tn.passed() && nf.passed() && bound_failures.empty();
  const Meta m = meta_of("verify-suite", a.c, std::nullopt, false);
  auto failures_json = [](const ScanReport& r) {
    json arr = json::array();
    for (const auto& f : r.failures) arr.push_back({{"d", f.d}, {"r", f.r}, {"what", f.what}});
    return arr;
  };
  if (a.c.format == "json") {
    auto j = artifact("wps.verify-suite/1", m);
    j["max_deg"] = a.max_deg;
    j["teranum"] = {{"checks", tn.checks}, {"failures", failures_json(tn)}};
    j["numeric_facts"] = {{"checks", nf.checks}, {"failures", failures_json(nf)}};
    j["bound"] = {{"planes", bound_checks}, {"failures", bound_failures}};
    j["passed"] = ok;
    return {dump(j), ok ? kSuccess : kVerificationFailure};
  }
  std::ostringstream os;
  os << m.comment();
  auto line = [&](const std::string& name, const ScanReport& r) {
    os << name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks << " checks)\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) {
      os << "  d=" << r.failures[i].d << " r=" << r.failures[i].r << ": " << r.failures[i].what << '\n';
    }
  };
  line("teranum 6.." + std::to_string(a.max_deg), tn);
  line("numeric facts 6.." + std::to_string(a.max_deg), nf);
  os << "interpolation bound, b <= c <= " << a.max_c << ": " << (bound_failures.empty() ? "pass" : "FAIL")
     << " (" << bound_checks << " planes)\n";
  for (const auto& f : bound_failures) os << "  " << f << '\n';
  os << (ok ? "PASS\n" : "FAIL\n");
  return {os.str(), ok ? kSuccess : kVerificationFailure};
}

struct ClassifyArgs {
  Common c;
  ClassifyLimits limits;
};

Result cmd_classify(const ClassifyArgs& a) {
  ClassifyLimits lim = a.limits;
  lim.sampling = sampling_of(a.c);
  const auto all = classify_plane_uniqueness(lim);
  bool ok = true;
  for (const auto& p : all) ok = ok && (p.b == 2 && p.c == 3) != p.witness.has_value();
  const Meta m = meta_of("classify", a.c, std::nullopt, false);
  if (a.c.format == "json") {
    auto j = artifact("wps.classify/1", m);
    j["limits"] = {{"max_c", lim.max_c}, {"max_degree", lim.max_degree}, {"max_points", lim.max_points}};
    j["planes"] = json::array();
    for (const auto& p : all) {
      json e = {{"b", p.b}, {"c", p.c}};
      if (p.witness) {
        e["witness"] = {{"r", p.witness->r}, {"d", p.witness->d}, {"deficiency", p.witness->deficiency}, {"rule", p.witness->rule}};
      } else {
        e["witness"] = nullptr;
      }
      j["planes"].push_back(e);
    }
    j["passed"] = ok;
    return {dump(j), ok ? kSuccess : kVerificationFailure};
  }
  std::ostringstream os;
  os << m.comment();
  if (a.c.format == "csv") {
    os << "b,c,r,d,deficiency,rule\n";
    for (const auto& p : all) {
      os << p.b << ',' << p.c << ',';
      if (p.witness) {
        os << p.witness->r << ',' << p.witness->d << ',' << p.witness->deficiency << ',' << p.witness->rule << '\n';
      } else {
        os << ",,,none\n";
      }
    }
    return {os.str(), ok ? kSuccess : kVerificationFailure};
  }
  for (const auto& p : all) {
    os << "P(1," << p.b << ',' << p.c << "): ";
    if (p.witness) {
      os << p.witness->r << " double points fail in degree " << p.witness->d << " (deficiency "
         << p.witness->deficiency << ", " << p.witness->rule << ")\n";
    } else {
      os << "no failure found\n";
    }
  }
  os << (ok ? "PASS\n" : "FAIL\n");
  return {os.str(), ok ? kSuccess : kVerificationFailure};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fat points and interpolation in weighted projective space", "wps"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::function<Result()> action;
  std::string output;
  auto bind = [&](CLI::App* sub, Common& c, auto fn) {
    sub->callback([&action, &output, &c, fn] {
      output = c.output;
      action = fn;
    });
  };

  HilbertArgs hil;
  auto* s_hil = app.add_subcommand("hilbert", "dimension s_d of the degree-d part");
  add_common(s_hil, hil.c);
  s_hil->add_option("--deg,-d", hil.deg, "degree or range lo..hi")->required();
  bind(s_hil, hil.c, [&hil] { return cmd_hilbert(hil); });

  AhArgs ah;
  auto* s_ah = app.add_subcommand("ah-check", "Hilbert function of general fat points by rank");
  add_common(s_ah, ah.c);
  s_ah->add_option("--points,-r", ah.points, "number of points")->required();
  s_ah->add_option("--mult,-m", ah.mult, "multiplicity of every point")->check(CLI::PositiveNumber)->capture_default_str();
  s_ah->add_option("--deg,-d", ah.deg, "degree or range lo..hi")->required();
  s_ah->add_option("--threads", ah.threads, "worker threads (0 = all cores)");
  bind(s_ah, ah.c, [&ah] { return cmd_ah_check(ah); });

  TraceArgs tr;
  auto* s_tr = app.add_subcommand("terracini-trace", "inductive certificate for r double points");
  add_common(s_tr, tr.c);
  s_tr->add_option("--deg,-d", tr.deg, "degree")->required();
  s_tr->add_option("--points,-r", tr.points, "number of double points")->required();
  s_tr->add_option("--cert-out", tr.cert_out, "also write the certificate JSON here");
  bind(s_tr, tr.c, [&tr] { return cmd_trace(tr); });

  CheckArgs ck;
  ck.c.seed = 0x5eed;
  auto* s_ck = app.add_subcommand("check-cert", "re-verify a certificate JSON file");
  add_common(s_ck, ck.c, false);
  s_ck->add_option("--input,-i", ck.input, "certificate file")->required();
  bind(s_ck, ck.c, [&ck] { return cmd_check_cert(ck); });

  PointArgs pt;
  auto* s_pt = app.add_subcommand("point-ideal", "generators of the ideal of a point");
  add_common(s_pt, pt.c);
  s_pt->add_option("--point,-p", pt.point, "coordinates, e.g. 1,2,1/3")->required();
  bind(s_pt, pt.c, [&pt] { return cmd_point_ideal(pt); });

  Common hz;
  auto* s_hz = app.add_subcommand("herzog", "monomial curve relations of three weights");
  add_common(s_hz, hz);
  bind(s_hz, hz, [&hz] { return cmd_herzog(hz); });

  SecantArgs sc;
  auto* s_sc = app.add_subcommand("secant-dim", "dimension of a secant variety of the weighted Veronese");
  add_common(s_sc, sc.c);
  s_sc->add_option("--deg,-d", sc.deg, "degree (at least the largest weight)")->required();
  s_sc->add_option("--rank,-r", sc.rank, "number of points")->required();
  bind(s_sc, sc.c, [&sc] { return cmd_secant(sc); });

  BoundArgs bd;
  auto* s_bd = app.add_subcommand("bound-check", "floor(s_d/3) >= s_floor(d/2) on P(1,b,c)");
  add_common(s_bd, bd.c);
  s_bd->add_option("--deg,-d", bd.deg, "degree range (default 10c..14c)");
  s_bd->add_flag("--triangle", bd.triangle, "also run the lattice-point decomposition check");
  bind(s_bd, bd.c, [&bd] { return cmd_bound_check(bd); });

  SuiteArgs su;
  auto* s_su = app.add_subcommand("verify-suite", "numeric scans behind the P(1,2,3) induction");
  add_common(s_su, su.c, false);
  s_su->add_option("--max-deg", su.max_deg, "scan degrees 6..max")->capture_default_str();
  s_su->add_option("--max-c", su.max_c, "bound check for b <= c <= max")->capture_default_str();
  bind(s_su, su.c, [&su] { return cmd_verify_suite(su); });

  ClassifyArgs cl;
  auto* s_cl = app.add_subcommand("classify", "failure witnesses for every well-formed P(1,b,c)");
  add_common(s_cl, cl.c, false);
  s_cl->add_option("--max-c", cl.limits.max_c, "largest c")->capture_default_str();
  s_cl->add_option("--max-deg", cl.limits.max_degree, "exhaustive scan degree bound")->capture_default_str();
  s_cl->add_option("--max-points", cl.limits.max_points, "exhaustive scan point bound")->capture_default_str();
  bind(s_cl, cl.c, [&cl] { return cmd_classify(cl); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    const Result r = action();
    if (output.empty()) {
      out << r.text;
    } else {
      std::ofstream f(output, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << output << '\n';
        return kUsageError;
      }
      f << r.text;
    }
    return r.code;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidWeights& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedWeights& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace wps::cli
