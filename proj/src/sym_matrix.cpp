#include "pmv/sym_matrix.hpp"

#include <json.hpp>
#include <stdexcept>

namespace pmv {

std::string HomogenizedMatrix::to_json() const {
  nlohmann::ordered_json j;
  int n = A.n();
  j["n"] = n;
  j["t"] = rat_str(t);
  auto rows = nlohmann::ordered_json::array();
  for (int i = 1; i <= n; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 1; k <= n; ++k) row.push_back(rat_str(A.at(i, k)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump();
}

HomogenizedMatrix HomogenizedMatrix::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("matrix JSON needs integer \"n\"");
  int n = j["n"].get<int>();
  HomogenizedMatrix M;
  M.A = SymMatrix(n);
  M.t = j.contains("t") ? rat_parse(j["t"].get<std::string>()) : Rat(1);
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != n)
    throw std::invalid_argument("matrix JSON needs n x n array \"entries\"");
  std::vector<std::vector<Rat>> full(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    const auto& row = j["entries"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix JSON needs n x n array \"entries\"");
    for (int k = 0; k < n; ++k) full[i][k] = rat_parse(row[k].get<std::string>());
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      if (full[i][k] != full[k][i])
        throw std::invalid_argument(
            "matrix is not symmetric: entries (" + std::to_string(i + 1) + "," +
            std::to_string(k + 1) + ") and (" + std::to_string(k + 1) + "," +
            std::to_string(i + 1) + ") differ");
  for (int i = 1; i <= n; ++i)
    for (int k = i; k <= n; ++k) M.A.set(i, k, full[i - 1][k - 1]);
  return M;
}

}  // namespace pmv
