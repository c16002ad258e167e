#pragma once

#include <string>
#include <vector>

#include "pmv/multi_index.hpp"
#include "pmv/rational.hpp"

namespace pmv {

// Symmetric n x n matrix over Q, upper triangle stored. 1-based accessors to
// match the a_{i,j} naming used throughout.
class SymMatrix {
 public:
  SymMatrix() : n_(0) {}
  explicit SymMatrix(int n) : n_(n), data_(n * (n + 1) / 2, Rat(0)) {
    if (n < 1 || n > max_arity())
      throw std::invalid_argument("matrix size out of range");
  }

  int n() const { return n_; }

  const Rat& at(int i, int j) const { return data_[slot(i, j)]; }
  void set(int i, int j, const Rat& v) { data_[slot(i, j)] = v; }

  bool operator==(const SymMatrix& o) const {
    return n_ == o.n_ && data_ == o.data_;
  }

 private:
  size_t slot(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row i (1-based) starts after (i-1) rows of lengths n, n-1, ...
    return static_cast<size_t>((i - 1) * n_ - (i - 1) * i / 2 + (j - 1));
  }

  int n_;
  std::vector<Rat> data_;
};

// Input to the homogenized minor maps: a symmetric matrix plus the scalar t.
struct HomogenizedMatrix {
  SymMatrix A;
  Rat t = Rat(1);

  std::string to_json() const;
  // Rejects asymmetric input, naming the first offending entry pair.
  static HomogenizedMatrix from_json(const std::string& text);
};

}  // namespace pmv
