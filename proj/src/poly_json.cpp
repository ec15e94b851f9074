#include "skeinlab/poly_json.hpp"

#include <stdexcept>

namespace skeinlab {

using nlohmann::json;

json to_json(SubsetVar v) { return json(v.indices()); }

json to_json(const TracePoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json monomial = json::array();
    for (const auto& f : it->first.factors())
      monomial.push_back({{"subset", to_json(f.var)}, {"power", f.power}});
    terms.push_back({{"coeff", to_string(it->second)}, {"monomial", std::move(monomial)}});
  }
  return {{"terms", std::move(terms)}};
}

TracePoly trace_poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
  TracePoly p;
  for (const auto& t : j.at("terms")) {
    std::vector<Factor> fs;
    for (const auto& f : t.at("monomial")) {
      const auto power = f.at("power").get<int>();
      if (power < 1) throw std::invalid_argument("monomial powers must be positive");
      fs.push_back({SubsetVar::of(f.at("subset").get<std::vector<int>>()),
                    static_cast<unsigned>(power)});
    }
    p.add_term(parse_rational(t.at("coeff").get<std::string>()), Monomial(std::move(fs)));
  }
  return p;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"coeff", to_string(it->second)}, {"exponents", it->first}});
  return {{"rank", p.rank()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("Laurent JSON needs a \"terms\" array");
  int rank = j.contains("rank") ? j.at("rank").get<int>() : -1;
  if (rank < 0) {
    if (j.at("terms").empty()) throw std::invalid_argument("Laurent JSON without rank or terms");
    rank = static_cast<int>(j.at("terms").front().at("exponents").size());
  }
  LaurentPoly p(rank);
  for (const auto& t : j.at("terms"))
    p.add_term(parse_rational(t.at("coeff").get<std::string>()),
               t.at("exponents").get<std::vector<int>>());
  return p;
}

}  // namespace skeinlab
