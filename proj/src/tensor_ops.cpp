#include "pmv/tensor_ops.hpp"

#include <stdexcept>

namespace pmv {

HyperTensor segre_point(const std::vector<Vec2>& vecs) {
  int n = static_cast<int>(vecs.size());
  HyperTensor z(n);
  for (const auto& v : vecs)
    if (rat_is_zero(v[0]) && rat_is_zero(v[1]))
      throw std::invalid_argument("zero factor vector");
  uint32_t top = 1u << n;
  for (uint32_t idx = 0; idx < top; ++idx) {
    Rat c(1);
    for (int k = 1; k <= n; ++k) c *= vecs[k - 1][mi_bit(idx, n, k)];
    z.set(idx, c);
  }
  return z;
}

HyperTensor tangent_point(const std::vector<Vec2>& base,
                          const std::vector<Vec2>& dirs,
                          const std::vector<Rat>& r) {
  int n = static_cast<int>(base.size());
  if (static_cast<int>(dirs.size()) != n)
    throw std::invalid_argument("direction count != n");
  if (static_cast<int>(r.size()) != n + 1)
    throw std::invalid_argument("coefficient vector must have length n+1");
  for (int k = 0; k < n; ++k) {
    Rat det = base[k][0] * dirs[k][1] - base[k][1] * dirs[k][0];
    if (rat_is_zero(det))
      throw std::invalid_argument("direction " + std::to_string(k + 1) +
                                  " is dependent on its base vector");
  }
  bool all_zero = true;
  for (const auto& c : r)
    if (!rat_is_zero(c)) all_zero = false;
  if (all_zero) throw std::invalid_argument("all coefficients zero");

  HyperTensor z(n);
  uint32_t top = 1u << n;
  // term 0: the base point, terms i>=1: direction substituted in factor i
  for (int term = 0; term <= n; ++term) {
    if (rat_is_zero(r[term])) continue;
    for (uint32_t idx = 0; idx < top; ++idx) {
      Rat c = r[term];
      for (int k = 1; k <= n; ++k) {
        const Vec2& v = (k == term) ? dirs[k - 1] : base[k - 1];
        c *= v[mi_bit(idx, n, k)];
        if (rat_is_zero(c)) break;
      }
      z.add(idx, c);
    }
  }
  return z;
}

HyperTensor apply_group(const GroupElement& g, const HyperTensor& z) {
  int n = z.n();
  if (g.n() != n) throw std::invalid_argument("group/tensor arity mismatch");
  uint32_t top = 1u << n;
  std::vector<Rat> dense(top, Rat(0));

  // permutation first: output J picks up input sigma*J, i.e. entry I of the
  // input lands at J = sigma^{-1}*I
  std::vector<int> sigma_inv(n);
  const auto& perm = g.perm();
  for (int i = 0; i < n; ++i) sigma_inv[perm[i] - 1] = i;
  for (const auto& [idx, v] : z.coords())
    dense[mi_permute(idx, n, sigma_inv.data())] = v;

  // then the factor matrices, one sweep per factor
  for (int k = 1; k <= n; ++k) {
    const Mat2& m = g.factors()[k - 1];
    uint32_t bit = 1u << (n - k);
    for (uint32_t idx = 0; idx < top; ++idx) {
      if (idx & bit) continue;
      Rat c0 = dense[idx], c1 = dense[idx | bit];
      dense[idx] = m.a * c0 + m.b * c1;
      dense[idx | bit] = m.c * c0 + m.d * c1;
    }
  }

  HyperTensor out(n);
  for (uint32_t idx = 0; idx < top; ++idx) out.set(idx, dense[idx]);
  return out;
}

DecomposabilityResult is_decomposable(const HyperTensor& z) {
  int n = z.n();
  if (z.is_zero()) throw std::invalid_argument("zero tensor");
  uint32_t top = 1u << n;
  for (int k = 1; k <= n; ++k) {
    uint32_t bit = 1u << (n - k);
    // first nonzero column of the factor-k flattening is the pivot
    uint32_t pivot = top;
    for (uint32_t col = 0; col < top; ++col) {
      if (col & bit) continue;
      if (pivot == top) {
        if (!rat_is_zero(z.coeff(col)) || !rat_is_zero(z.coeff(col | bit)))
          pivot = col;
        continue;
      }
      Rat minor = z.coeff(pivot) * z.coeff(col | bit) -
                  z.coeff(col) * z.coeff(pivot | bit);
      if (!rat_is_zero(minor))
        return {false, FlatteningWitness{k, pivot, col}};
    }
  }
  return {true, std::nullopt};
}

HyperTensor sample_tensor(Sampler& s, int n) {
  HyperTensor z(n);
  uint32_t top = 1u << n;
  for (uint32_t idx = 0; idx < top; ++idx) z.set(idx, s.rational());
  return z;
}

Vec2 sample_vec2(Sampler& s) {
  Rat a = s.rational();
  Rat b = s.rational();
  return {a, b};
}

Vec2 sample_vec2_nonzero(Sampler& s) {
  for (;;) {
    Vec2 v = sample_vec2(s);
    if (!rat_is_zero(v[0]) || !rat_is_zero(v[1])) return v;
  }
}

Mat2 sample_sl2(Sampler& s) {
  // lower shear * torus * upper shear, always determinant 1
  Rat x = s.rational();
  Rat y = s.nonzero_rational();
  Rat zz = s.rational();
  Mat2 lower{Rat(1), Rat(0), x, Rat(1)};
  Mat2 torus{y, Rat(0), Rat(0), Rat(1) / y};
  Mat2 upper{Rat(1), zz, Rat(0), Rat(1)};
  return lower * torus * upper;
}

HyperTensor sample_segre_point(Sampler& s, int n) {
  std::vector<Vec2> vecs;
  vecs.reserve(n);
  for (int k = 0; k < n; ++k) vecs.push_back(sample_vec2_nonzero(s));
  return segre_point(vecs);
}

HyperTensor sample_tangent_point(Sampler& s, int n) {
  std::vector<Vec2> base, dirs;
  base.reserve(n);
  dirs.reserve(n);
  for (int k = 0; k < n; ++k) {
    Vec2 q = sample_vec2_nonzero(s);
    Vec2 d;
    for (;;) {
      d = sample_vec2(s);
      if (!rat_is_zero(q[0] * d[1] - q[1] * d[0])) break;
    }
    base.push_back(q);
    dirs.push_back(d);
  }
  std::vector<Rat> r;
  r.reserve(n + 1);
  for (int k = 0; k <= n; ++k) r.push_back(s.nonzero_rational());
  return tangent_point(base, dirs, r);
}

GroupElement sample_group_element(Sampler& s, int n, bool with_perm) {
  std::vector<Mat2> fs;
  fs.reserve(n);
  for (int k = 0; k < n; ++k) fs.push_back(sample_sl2(s));
  std::vector<int> perm(n);
  if (with_perm) {
    std::vector<int> p = s.permutation(n);
    for (int i = 0; i < n; ++i) perm[i] = p[i] + 1;
  } else {
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
  }
  return GroupElement(n, std::move(fs), std::move(perm));
}

}  // namespace pmv
