#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pmv/poly.hpp"

namespace pmv {

// A filling of a Young diagram with at most 2 rows: rows of slot labels,
// together covering {1..d} exactly once. Row lengths must be weakly
// decreasing. Example for d=3, shape (2,1): {{1,2},{3}}.
using Filling = std::vector<std::vector<int>>;

// Young symmetrizer applied per tensor factor on the two-letter alphabet
// {bit 0, bit 1}: the base tensor puts bit 0 in row-1 cells and bit 1 in
// row-2 cells, then the symmetrizer (row-symmetrize, then signed sum over
// column permutations) is applied; the factor results are multiplied out as
// commuting slot variables, giving a polynomial in the X^I of degree d.
// Returns the zero polynomial when the chosen fillings annihilate the
// projection.
//
// fillings[k] is the filling used in factor k+1; all must cover {1..d}.
SparsePoly hwv_from_fillings(int n, int d,
                             const std::vector<Filling>& fillings);

// sl(2) ladder operators acting factor-wise by derivations on X-variables:
// lower(f, k) maps each variable X^I with bit k = 0 to X^{I with bit k set}
// (zero when bit k is already 1), extended by the product rule; raise_op
// the reverse. The factor-k weight of each monomial shifts by -2 / +2.
SparsePoly lower(const SparsePoly& f, int factor);
SparsePoly raise_op(const SparsePoly& f, int factor);

enum class Family { hd, cubic, wedge };

struct ModuleSpec {
  int n;
  Family family;
};

// One basis element with its generation bookkeeping: which factor positions
// carry the non-trivial partition, which highest weight vector copy, and
// how many lowering steps were applied per position (carrier positions
// first, then the remaining factors in ascending order).
struct ModuleElement {
  int id = 0;
  std::vector<int> positions;  // 1-based, ascending
  int copy = 0;                // 0 for hd/wedge; 0,1,2 for the cubic copies
  std::vector<int> lowering;
  SparsePoly poly;             // content-normalized
};

struct ModuleBasis {
  ModuleSpec spec;
  int dimension = 0;
  std::vector<ModuleElement> elements;

  std::string to_json() const;
  static ModuleBasis from_json(const std::string& text);
};

// Closed-form dimensions: binom(n,3)*5^{n-3} and 3*binom(n,4)*16*4^{n-4}.
long hd_dimension(int n);
long cubic_dimension(int n);

// Degree-4 module induced from the 3-factor hyperdeterminant (n >= 3) and
// degree-3 module induced from the four-factor S_{2,1} highest weight
// vectors (n >= 4; empty basis at n = 3). Elements are enumerated
// deterministically (carrier subset lex-ascending, then copy, then
// lowering exponents lex); the generated count must equal the closed-form
// dimension and is certified by an exact rank computation blocked by
// multiweight — a mismatch throws.
ModuleBasis hd_module(int n, int jobs = 1);
ModuleBasis cubic_module(int n, int jobs = 1);

// The single degree-2 alternating invariant; only n = 4 is in scope.
// Returns the 8-term +-1 polynomial (the symmetrizer's raw content 2 from
// the wedge-into-tensor-square embedding is divided out).
SparsePoly wedge_quadric(int n);
ModuleBasis wedge_module(int n);  // dimension-1 wrapper around the above

// The three degree-3 highest weight vectors at n = 4 with their natural
// symmetrizer constants kept (the first equals 2*X^{0000}*wedge_quadric(4)).
std::array<SparsePoly, 3> cubic_hwvs();

// 3-factor hyperdeterminant highest weight vector (degree 4, n = 3),
// content-normalized; found by a deterministic search over the standard
// two-row filling combinations (the all-equal choice annihilates).
SparsePoly hd_hwv3();

}  // namespace pmv
