#include "toric/json_io.hpp"

#include <algorithm>
#include <limits>

namespace toric {

Json int_to_json(const Int& v) {
  if (v > Int(std::numeric_limits<std::int64_t>::max()) ||
      v < Int(std::numeric_limits<std::int64_t>::min()))
    throw InvalidInputError("integer too large for JSON output: " + v.str());
  return Json(v.convert_to<std::int64_t>());
}

Int int_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw InvalidInputError(what + " must be an integer, got " + j.dump());
  return Int(j.get<std::int64_t>());
}

Json intvec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

IntVec intvec_from_json(const Json& j, const std::string& what) {
  if (!j.is_array())
    throw InvalidInputError(what + " must be an array of integers, got " + j.dump());
  IntVec out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(int_from_json(j[k], what + "[" + std::to_string(k) + "]"));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows; ++r) out.push_back(intvec_to_json(m.row(r)));
  return out;
}

IntMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError(what + " must be a non-empty array of integer rows");
  std::vector<IntVec> rows;
  rows.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r)
    rows.push_back(intvec_from_json(j[r], what + "[" + std::to_string(r) + "]"));
  for (const IntVec& row : rows)
    if (row.size() != rows[0].size())
      throw InvalidInputError(what + " rows have inconsistent lengths");
  return IntMatrix::from_rows(rows);
}

Json fan_to_json(const Fan& fan) {
  Json out;
  out["n"] = fan.n;
  Json rays = Json::array();
  for (const IntVec& r : fan.rays) rays.push_back(intvec_to_json(r));
  out["rays"] = rays;
  Json cones = Json::array();
  for (const Cone& c : fan.max_cones) {
    Json cone = Json::array();
    for (int idx : c) cone.push_back(idx);
    cones.push_back(cone);
  }
  out["max_cones"] = cones;
  return out;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("fan must be a JSON object");
  for (const char* key : {"n", "rays", "max_cones"})
    if (!j.contains(key))
      throw InvalidInputError(std::string("fan is missing required field \"") + key + "\"");
  Fan fan;
  const Json& n = j.at("n");
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
    throw InvalidInputError("fan field \"n\" must be a positive integer");
  fan.n = static_cast<int>(n.get<std::int64_t>());
  const Json& rays = j.at("rays");
  if (!rays.is_array()) throw InvalidInputError("fan field \"rays\" must be an array");
  for (std::size_t k = 0; k < rays.size(); ++k) {
    IntVec ray = intvec_from_json(rays[k], "rays[" + std::to_string(k) + "]");
    if (static_cast<int>(ray.size()) != fan.n)
      throw InvalidInputError("rays[" + std::to_string(k) + "] has length " +
                              std::to_string(ray.size()) + ", expected n = " +
                              std::to_string(fan.n));
    fan.rays.push_back(std::move(ray));
  }
  const Json& cones = j.at("max_cones");
  if (!cones.is_array()) throw InvalidInputError("fan field \"max_cones\" must be an array");
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const Json& cj = cones[k];
    if (!cj.is_array())
      throw InvalidInputError("max_cones[" + std::to_string(k) + "] must be an array");
    Cone cone;
    for (const Json& e : cj) {
      if (!e.is_number_integer())
        throw InvalidInputError("max_cones[" + std::to_string(k) + "] has a non-integer entry");
      std::int64_t idx = e.get<std::int64_t>();
      if (idx < 0 || idx >= static_cast<std::int64_t>(fan.rays.size()))
        throw InvalidInputError("max_cones[" + std::to_string(k) + "] references ray " +
                                std::to_string(idx) + ", but there are only " +
                                std::to_string(fan.rays.size()) + " rays");
      cone.push_back(static_cast<int>(idx));
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw InvalidInputError("max_cones[" + std::to_string(k) + "] repeats a ray index");
    fan.max_cones.push_back(std::move(cone));
  }
  return fan;
}

Json morphism_to_json(const ToricMorphism& phi) {
  Json out;
  out["source"] = fan_to_json(phi.source);
  out["target"] = fan_to_json(phi.target);
  out["matrix"] = matrix_to_json(phi.map);
  return out;
}

ToricMorphism morphism_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("morphism must be a JSON object");
  for (const char* key : {"source", "target", "matrix"})
    if (!j.contains(key))
      throw InvalidInputError(std::string("morphism is missing required field \"") + key + "\"");
  ToricMorphism phi;
  phi.source = fan_from_json(j.at("source"));
  phi.target = fan_from_json(j.at("target"));
  phi.map = matrix_from_json(j.at("matrix"), "matrix");
  if (phi.map.rows != phi.target.n || phi.map.cols != phi.source.n)
    throw InvalidInputError("matrix is " + std::to_string(phi.map.rows) + "x" +
                            std::to_string(phi.map.cols) + ", expected target.n x source.n = " +
                            std::to_string(phi.target.n) + "x" + std::to_string(phi.source.n));
  return phi;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInputError(what + ": " + e.what());
  }
}

}  // namespace toric
