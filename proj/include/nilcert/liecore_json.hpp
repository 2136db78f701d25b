#pragma once

// JSON form of a Lie algebra:
//
//   {
//     "dim": 3,
//     "labels": ["x", "y", "z"],              // optional
//     "brackets": [[0, 1, [0, 0, 1]], ...]    // (i, j, coordinates of [b_i, b_j])
//   }
//
// Indices are zero-based. Coordinates are JSON integers or strings such as
// "-3/4". Omitted pairs bracket to zero and antisymmetry is completed on load.
// Loading rejects any tensor that violates the Jacobi identity.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "nilcert/liecore.hpp"

namespace nilcert {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError("expected an integer or a rational string, got " + j.dump());
}

inline nlohmann::json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

inline LieAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("dim")) throw DomainError("algebra JSON needs an object with \"dim\"");
  const auto dim = doc.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
  std::vector<LieAlgebra::Bracket> brackets;
  if (doc.contains("brackets")) {
    for (const auto& entry : doc.at("brackets")) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) {
        throw DomainError("bracket entry must be [i, j, [coords]]: " + entry.dump());
      }
      Vector value;
      for (const auto& c : entry[2]) value.push_back(rational_from_json(c));
      brackets.push_back({entry[0].get<std::size_t>(), entry[1].get<std::size_t>(), std::move(value)});
    }
  }
  LieAlgebra L(dim, std::move(labels), brackets);
  require_jacobi(L);
  return L;
}

inline nlohmann::json algebra_to_json(const LieAlgebra& L) {
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& b : L.nonzero_brackets()) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : b.value) coords.push_back(rational_to_json(c));
    brackets.push_back({b.i, b.j, coords});
  }
  return {{"dim", L.dim()}, {"labels", L.labels()}, {"brackets", brackets}};
}

}  // namespace nilcert
