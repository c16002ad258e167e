#include "pmv/group.hpp"

#include <json.hpp>
#include <stdexcept>

#include "pmv/multi_index.hpp"

namespace pmv {

Mat2 Mat2::inverse() const {
  Rat dd = det();
  if (rat_is_zero(dd)) throw std::invalid_argument("singular 2x2 factor");
  return {d / dd, -b / dd, -c / dd, a / dd};
}

static void check_perm(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length != n");
  std::vector<char> seen(n + 1, 0);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

GroupElement::GroupElement(int n, std::vector<Mat2> factors,
                           std::vector<int> perm)
    : n_(n), factors_(std::move(factors)), perm_(std::move(perm)) {
  if (n < 1 || n > max_arity())
    throw std::invalid_argument("group arity out of range");
  if (static_cast<int>(factors_.size()) != n)
    throw std::invalid_argument("factor count != n");
  for (const auto& m : factors_)
    if (m.det() != Rat(1))
      throw std::invalid_argument("factor determinant must be 1");
  check_perm(n, perm_);
}

GroupElement GroupElement::identity(int n) {
  std::vector<Mat2> fs(n, Mat2{Rat(1), Rat(0), Rat(0), Rat(1)});
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  return GroupElement(n, std::move(fs), std::move(perm));
}

GroupElement GroupElement::operator*(const GroupElement& h) const {
  if (n_ != h.n_) throw std::invalid_argument("group arity mismatch");
  // Composite permutation sigma_{gh}(i) = sigma_g(sigma_h(i)); the factor
  // landing at slot k is f_{g,k} * f_{h, sigma_g^{-1}(k)}.
  std::vector<int> perm(n_);
  for (int i = 1; i <= n_; ++i) perm[i - 1] = perm_[h.perm_[i - 1] - 1];
  std::vector<int> ginv(n_ + 1);
  for (int i = 1; i <= n_; ++i) ginv[perm_[i - 1]] = i;
  std::vector<Mat2> fs(n_);
  for (int k = 1; k <= n_; ++k) fs[k - 1] = factors_[k - 1] * h.factors_[ginv[k] - 1];
  return GroupElement(n_, std::move(fs), std::move(perm));
}

GroupElement GroupElement::inverse() const {
  std::vector<int> perm(n_);
  for (int i = 1; i <= n_; ++i) perm[perm_[i - 1] - 1] = i;
  // With f_{gh,k} = f_{g,k} f_{h,sigma_g^{-1}(k)}, the inverse needs the
  // factor at slot k to be the inverse of the one sigma sends there.
  std::vector<Mat2> fs(n_);
  for (int k = 1; k <= n_; ++k) fs[k - 1] = factors_[perm_[k - 1] - 1].inverse();
  return GroupElement(n_, std::move(fs), std::move(perm));
}

std::string GroupElement::to_json() const {
  nlohmann::ordered_json j;
  j["perm"] = perm_;
  auto fs = nlohmann::ordered_json::array();
  for (const auto& m : factors_) {
    auto row1 = nlohmann::ordered_json::array({rat_str(m.a), rat_str(m.b)});
    auto row2 = nlohmann::ordered_json::array({rat_str(m.c), rat_str(m.d)});
    fs.push_back(nlohmann::ordered_json::array({row1, row2}));
  }
  j["factors"] = fs;
  return j.dump();
}

GroupElement GroupElement::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("perm") || !j["perm"].is_array())
    throw std::invalid_argument("group JSON needs array \"perm\"");
  std::vector<int> perm = j["perm"].get<std::vector<int>>();
  int n = static_cast<int>(perm.size());
  if (!j.contains("factors") || !j["factors"].is_array())
    throw std::invalid_argument("group JSON needs array \"factors\"");
  std::vector<Mat2> fs;
  for (const auto& f : j["factors"]) {
    if (!f.is_array() || f.size() != 2 || !f[0].is_array() || f[0].size() != 2 ||
        !f[1].is_array() || f[1].size() != 2)
      throw std::invalid_argument("each factor must be a 2x2 array of strings");
    fs.push_back(Mat2{rat_parse(f[0][0].get<std::string>()),
                      rat_parse(f[0][1].get<std::string>()),
                      rat_parse(f[1][0].get<std::string>()),
                      rat_parse(f[1][1].get<std::string>())});
  }
  return GroupElement(n, std::move(fs), std::move(perm));
}

}  // namespace pmv
