#include <nlohmann/json.hpp>

#include "wps/error.hpp"
#include "wps/induction.hpp"

namespace wps {

namespace {

Certificate::Kind kind_from_string(const std::string& s) {
  if (s == "base") return Certificate::Kind::base;
  if (s == "terracini") return Certificate::Kind::terracini;
  if (s == "chandler-leaf") return Certificate::Kind::chandler_leaf;
  throw VerificationFailure("unknown certificate node kind '" + s + "'");
}

Direction direction_from_string(const std::string& s) {
  if (s == "first") return Direction::first;
  if (s == "second") return Direction::second;
  throw VerificationFailure("unknown direction '" + s + "'");
}

Certificate parse(const nlohmann::json& j, const std::string& path) {
  try {
    Certificate c;
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    c.weights = Weights(j.at("weights").get<std::vector<std::int64_t>>());
    c.d = j.at("d").get<Degree>();
    c.r = j.at("r").get<std::int64_t>();
    if (j.contains("choice")) {
      const auto& ch = j.at("choice");
      TerraciniChoice t;
      t.i = ch.at("i").get<std::size_t>();
      t.weight = ch.at("weight").get<std::int64_t>();
      t.q = ch.at("q").get<std::int64_t>();
      t.direction = direction_from_string(ch.at("direction").get<std::string>());
      t.lower = ch.at("lower").get<std::int64_t>();
      t.sbar = ch.at("sbar").get<std::int64_t>();
      c.choice = t;
    }
    for (const auto& [k, v] : j.at("witnesses").items()) c.witnesses[k] = v.get<std::int64_t>();
    const auto& kids = j.at("children");
    for (std::size_t n = 0; n < kids.size(); ++n) {
      c.children.push_back(parse(kids[n], path + "/" + std::to_string(n)));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw VerificationFailure("malformed certificate at " + path + ": " + e.what());
  } catch (const InvalidWeights& e) {
    throw VerificationFailure("malformed certificate at " + path + ": " + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["kind"] = to_string(c.kind);
  j["weights"] = std::vector<std::int64_t>(c.weights.entries().begin(), c.weights.entries().end());
  j["d"] = c.d;
  j["r"] = c.r;
  if (c.choice) {
    j["choice"] = {{"i", c.choice->i},         {"weight", c.choice->weight},
                   {"q", c.choice->q},         {"direction", to_string(c.choice->direction)},
                   {"lower", c.choice->lower}, {"sbar", c.choice->sbar}};
  }
  j["witnesses"] = c.witnesses;
  j["children"] = nlohmann::json::array();
  for (const auto& child : c.children) j["children"].push_back(to_json(child));
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) { return parse(j, "root"); }

}  // namespace wps
