#pragma once

#include <string>

#include "json.hpp"
#include "khoskein/laurent.hpp"

namespace khoskein {

// Polynomial wire format: sorted term list [[t, q, d, "p/r"], ...].
inline nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({m.t, m.q, m.d, rat_to_string(c)});
  return out;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 4)
      throw MalformedToken("polynomial term must be [t, q, d, coeff]");
    p.add_term(Monomial{term[0].get<int>(), term[1].get<int>(), term[2].get<int>()},
               rat_from_string(term[3].get<std::string>()));
  }
  return p;
}

}  // namespace khoskein
