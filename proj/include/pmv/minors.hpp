#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmv/rng.hpp"
#include "pmv/sym_matrix.hpp"
#include "pmv/tensor.hpp"

namespace pmv {

// det A[rows, cols] (1-based index lists, strictly increasing). Empty lists
// give 1.
Rat minor_det(const SymMatrix& A, const std::vector<int>& rows,
              const std::vector<int>& cols);

// Subset-coded variant: bit k of rows/cols selects index k.
Rat minor_det_bits(const SymMatrix& A, uint32_t rows, uint32_t cols);

enum class Backend { naive, schur };

// The principal-minor map: coordinate I gets t^{n-|I|} * det A[I,I]. With
// Backend::schur the 2^n values share pivot work across nested index sets;
// jobs > 1 splits the recursion tree into disjoint output slices.
HyperTensor principal_minor_map(const HomogenizedMatrix& M,
                                Backend backend = Backend::schur,
                                int jobs = 1);

// Off-diagonal ("exclusive") minors: row set and column set disjoint, both
// nonempty, same size.
struct EMinor {
  uint32_t rows, cols;
  Rat value;
};
std::vector<EMinor> e_minors(const SymMatrix& A, int size);

// Smallest k such that every (k+1) x (k+1) exclusive minor vanishes; sizes
// with 2(k+1) > n have no disjoint pairs and are vacuous. Zero matrix gives
// 0. certificate holds a largest non-vanishing exclusive minor when k > 0.
struct ERankCertificate {
  int erank;
  std::optional<EMinor> witness;
};
ERankCertificate erank(const SymMatrix& A);

// y y^T for a length-n vector: the generic erank-1 symmetric matrix shape.
SymMatrix veronese(const std::vector<Rat>& y);

// Matrix with diagonal w_i^2 and off-diagonal y_i y_j, paired with t^2.
// Every output has erank <= 1; this parametrizes the erank <= 1 locus.
HomogenizedMatrix sample_erank_le1(const std::vector<Rat>& w,
                                   const std::vector<Rat>& y, const Rat& t);

// Reads off the rank-one parameters from the off-diagonal part. Products
// y_i y_j are direct; squares y_i^2 come out as a_{ij} a_{ik} / a_{jk}
// whenever some pair j < k avoiding i has a_{jk} != 0, and every choice of
// pair must agree. degenerate = no square was determined anywhere (too many
// off-diagonal zeros).
struct ERank1Completion {
  bool ok;                                   // false: erank >= 2
  std::optional<EMinor> obstruction;         // violated 2x2 when !ok
  std::map<std::pair<int, int>, Rat> products;  // (i<j) -> y_i y_j
  std::vector<std::optional<Rat>> squares;   // [i-1] -> y_i^2 when determined
  bool degenerate = false;
};
ERank1Completion complete_erank1_params(const SymMatrix& A);

// All minors of [t Id | A] with unified weighting t^{n-|R|} det A[R,S],
// keyed by the (row set, column set) pair. Principal slice R == S recovers
// the principal-minor map; disjoint slices are the exclusive minors.
class PluckerVector {
 public:
  PluckerVector() : n_(0) {}
  explicit PluckerVector(int n) : n_(n) {}

  int n() const { return n_; }
  const Rat& at(uint32_t r, uint32_t s) const;
  void set(uint32_t r, uint32_t s, const Rat& v);
  const std::map<std::pair<uint32_t, uint32_t>, Rat>& entries() const {
    return entries_;
  }

  std::string to_json() const;

 private:
  int n_;
  std::map<std::pair<uint32_t, uint32_t>, Rat> entries_;
  inline static const Rat zero_ = Rat(0);
};

PluckerVector all_minors_vector(const HomogenizedMatrix& M);

// Transporting the graph row space of [t Id | A] by the block-diagonal
// 2n x 2n image of g (factor i acting on the coordinate pair (e_i, f_i);
// the permutation part must be trivial) and renormalizing back to graph
// form fails exactly when the new E block is singular.
struct graph_form_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Result of the transport: the renormalized (A', t') plus the projective
// scale relating minor vectors, psi(A', t') = scale * (g . psi(A, t)).
struct LagrangianActionResult {
  HomogenizedMatrix image;
  Rat scale;
};

class GroupElement;
LagrangianActionResult act_on_lagrangian_plane(const GroupElement& g,
                                               const HomogenizedMatrix& M);

}  // namespace pmv
