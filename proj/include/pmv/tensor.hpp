#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pmv/multi_index.hpp"
#include "pmv/rational.hpp"

namespace pmv {

// Point of (C^2)^{x n}: sparse map from packed multi-index to coefficient.
// Zero coefficients are never stored; the map is ordered by index value so
// iteration (and hence serialization) is deterministic.
class HyperTensor {
 public:
  HyperTensor() : n_(0) {}
  explicit HyperTensor(int n) : n_(n) {
    if (n < 1 || n > max_arity())
      throw std::invalid_argument("tensor arity out of range");
  }

  int n() const { return n_; }

  const Rat& coeff(uint32_t idx) const {
    auto it = coords_.find(idx);
    return it == coords_.end() ? zero_ : it->second;
  }

  void set(uint32_t idx, const Rat& v) {
    if (rat_is_zero(v))
      coords_.erase(idx);
    else
      coords_[idx] = v;
  }

  void add(uint32_t idx, const Rat& v) {
    if (rat_is_zero(v)) return;
    auto [it, fresh] = coords_.emplace(idx, v);
    if (!fresh) {
      it->second += v;
      if (rat_is_zero(it->second)) coords_.erase(it);
    }
  }

  bool is_zero() const { return coords_.empty(); }

  const std::map<uint32_t, Rat>& coords() const { return coords_; }

  bool operator==(const HyperTensor& o) const {
    return n_ == o.n_ && coords_ == o.coords_;
  }

  HyperTensor operator+(const HyperTensor& o) const {
    HyperTensor r(*this);
    for (const auto& [idx, v] : o.coords_) r.add(idx, v);
    return r;
  }

  HyperTensor operator-(const HyperTensor& o) const {
    HyperTensor r(*this);
    for (const auto& [idx, v] : o.coords_) r.add(idx, -v);
    return r;
  }

  HyperTensor operator*(const Rat& s) const {
    HyperTensor r(n_);
    if (rat_is_zero(s)) return r;
    for (const auto& [idx, v] : coords_) r.coords_[idx] = v * s;
    return r;
  }

  std::string to_json() const;
  static HyperTensor from_json(const std::string& text);

 private:
  int n_;
  std::map<uint32_t, Rat> coords_;
  inline static const Rat zero_ = Rat(0);
};

}  // namespace pmv
