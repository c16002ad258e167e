#pragma once

#include "pmv/poly.hpp"

namespace pmv {

// Substitutes X^I -> t^{n-|I|} * det A[I,I] (symbolic principal minors),
// landing in the a_{i,j}, t variables. n must match f's variable universe.
SparsePoly pullback(const SparsePoly& f, int n);

// Symbolic principal minor det A[I,I] as a polynomial in the A variables.
// Cached per (n, I) internally.
const SparsePoly& symbolic_principal_minor(int n, uint32_t idx);

// For polynomials supported on products of the three off-diagonal orbit
// monomials u = a_{1,2}a_{3,4}, v = a_{1,3}a_{2,4}, w = a_{1,4}a_{2,3}
// (n = 4): the u,v,w form plus its image under u -> w, v -> w. A vanishing
// normal form certifies membership in the ideal of the u=v=w locus.
// Throws (naming the offending monomial) if any monomial fails to factor.
struct UvwRewrite {
  SparsePoly in_uvw;       // over {u,v,w}
  SparsePoly normal_form;  // over {u,v,w}, supported on w only
};
UvwRewrite rewrite_uvw(const SparsePoly& f);

}  // namespace pmv
