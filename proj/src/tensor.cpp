#include "pmv/tensor.hpp"

#include <json.hpp>

namespace pmv {

std::string HyperTensor::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  auto coords = nlohmann::ordered_json::object();
  for (const auto& [idx, v] : coords_)
    coords[mi_to_string(idx, n_)] = rat_str(v);
  j["coords"] = coords;
  return j.dump();
}

HyperTensor HyperTensor::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("tensor JSON needs integer \"n\"");
  int n = j["n"].get<int>();
  HyperTensor z(n);
  if (!j.contains("coords") || !j["coords"].is_object())
    throw std::invalid_argument("tensor JSON needs object \"coords\"");
  for (auto& [key, val] : j["coords"].items()) {
    uint32_t idx = mi_from_string(key, n);
    if (!val.is_string())
      throw std::invalid_argument("coordinate " + key + " must be a string");
    z.set(idx, rat_parse(val.get<std::string>()));
  }
  return z;
}

}  // namespace pmv
