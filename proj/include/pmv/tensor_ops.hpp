#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pmv/group.hpp"
#include "pmv/rng.hpp"
#include "pmv/tensor.hpp"

namespace pmv {

// One C^2 vector per tensor factor.
using Vec2 = std::array<Rat, 2>;

// v_1 (x) ... (x) v_n. Rejects any zero factor vector (the result would be
// the zero tensor, which is not a projective point).
HyperTensor segre_point(const std::vector<Vec2>& vecs);

// r_0 * q_1 (x) ... (x) q_n  +  sum_i r_i * q_1 (x) ... (x) q_i' (x) ... (x) q_n.
// A general point on the tangent line variety, by construction. Rejects a
// dependent pair (q_i, q_i') and the all-zero coefficient vector.
// r has length n+1: r[0] = r_0, r[i] = coefficient of the i-th direction.
HyperTensor tangent_point(const std::vector<Vec2>& base,
                          const std::vector<Vec2>& dirs,
                          const std::vector<Rat>& r);

// Factor matrices act entry-wise per factor (basis vector of bit 0 maps to
// a*(bit 0) + c*(bit 1)), the permutation shuffles factors first.
HyperTensor apply_group(const GroupElement& g, const HyperTensor& z);

// Rank <= 1 test: every 2x2 minor of every one-factor flattening (a
// 2 x 2^{n-1} matrix) must vanish. Rejects the zero tensor. On failure the
// witness names one nonzero flattening minor: rows = factor's {0,1}, the
// two columns given by indices col_a, col_b (both with the factor's bit
// cleared); the minor is z[col_a]z[col_b^bit] - z[col_b]z[col_a^bit].
struct FlatteningWitness {
  int factor;       // 1-based
  uint32_t col_a, col_b;
};
struct DecomposabilityResult {
  bool decomposable;
  std::optional<FlatteningWitness> witness;
};
DecomposabilityResult is_decomposable(const HyperTensor& z);

// Random dense tensor, all 2^n coefficients drawn from s.rational().
HyperTensor sample_tensor(Sampler& s, int n);

// Random vectors and group elements built from the sampler.
Vec2 sample_vec2(Sampler& s);
Vec2 sample_vec2_nonzero(Sampler& s);
Mat2 sample_sl2(Sampler& s);
GroupElement sample_group_element(Sampler& s, int n, bool with_perm = true);

// Generic points of the two varieties: a product of nonzero vectors, and a
// tangent-line combination with independent directions and all coefficients
// nonzero.
HyperTensor sample_segre_point(Sampler& s, int n);
HyperTensor sample_tangent_point(Sampler& s, int n);

}  // namespace pmv
