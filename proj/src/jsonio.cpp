#include "jsonio.hpp"

namespace biham {

nlohmann::json laurent_to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("laurent: expected an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items())
    p += LaurentPoly::q_power(std::stoi(key), Rational::parse(value.get<std::string>()));
  return p;
}

namespace {

template <class C>
nlohmann::json series_json(const Series<C>& f, const char* kind,
                           nlohmann::json (*coeff_json)(const C&)) {
  nlohmann::json j;
  j["truncation"] = f.truncation();
  j["kind"] = kind;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [v, c] : f.terms()) {
    nlohmann::json t;
    t["exponents"] = v;
    t["coeff"] = coeff_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::json rational_json(const Rational& r) { return r.str(); }

}  // namespace

nlohmann::json series_to_json(const SymQ& f) {
  return series_json<Rational>(f, "rational", rational_json);
}

nlohmann::json series_to_json(const SymL& f) {
  return series_json<LaurentPoly>(f, "laurent", laurent_to_json);
}

SymQ symq_from_json(const nlohmann::json& j) {
  if (j.at("kind").get<std::string>() != "rational")
    throw std::invalid_argument("series: expected rational coefficients");
  SymQ f(j.at("truncation").get<int>());
  for (const auto& t : j.at("terms"))
    f.set(t.at("exponents").get<Exponents>(),
          Rational::parse(t.at("coeff").get<std::string>()));
  return f;
}

SymL syml_from_json(const nlohmann::json& j) {
  if (j.at("kind").get<std::string>() != "laurent")
    throw std::invalid_argument("series: expected laurent coefficients");
  SymL f(j.at("truncation").get<int>());
  for (const auto& t : j.at("terms"))
    f.set(t.at("exponents").get<Exponents>(), laurent_from_json(t.at("coeff")));
  return f;
}

}  // namespace biham
