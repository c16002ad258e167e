#pragma once

#include <string>
#include <vector>

#include "pmv/rational.hpp"

namespace pmv {

// 2x2 matrix over Q, row-major: [[a,b],[c,d]].
struct Mat2 {
  Rat a, b, c, d;

  Rat det() const { return a * d - b * c; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }

  // Only valid when det != 0; callers keep det == 1 so this is just the
  // adjugate.
  Mat2 inverse() const;

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

// Element of SL(2)^n x S_n acting on (C^2)^{x n}. perm is 1-based images:
// perm[i-1] = sigma(i). Factor matrices must have determinant 1; the
// constructor and from_json enforce it.
class GroupElement {
 public:
  GroupElement() : n_(0) {}
  GroupElement(int n, std::vector<Mat2> factors, std::vector<int> perm);

  static GroupElement identity(int n);

  int n() const { return n_; }
  const std::vector<Mat2>& factors() const { return factors_; }
  const std::vector<int>& perm() const { return perm_; }

  // Group law matching action composition: (g*h) acting = g acting after h.
  GroupElement operator*(const GroupElement& h) const;
  GroupElement inverse() const;

  bool operator==(const GroupElement& o) const {
    return n_ == o.n_ && factors_ == o.factors_ && perm_ == o.perm_;
  }

  std::string to_json() const;
  static GroupElement from_json(const std::string& text);

 private:
  int n_;
  std::vector<Mat2> factors_;  // factors_[k-1] acts on tensor factor k
  std::vector<int> perm_;      // 1-based
};

}  // namespace pmv
