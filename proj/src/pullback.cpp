#include "pmv/pullback.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pmv/multi_index.hpp"

namespace pmv {

namespace {

// determinant of the symbolic symmetric submatrix on idx x idx, by first-row
// expansion with memoization over column subsets
SparsePoly symbolic_det(int n, const std::vector<int>& idx) {
  VarSet vars = VarSet::A(n);
  auto entry = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    int var = (i - 1) * n - (i - 1) * i / 2 + (j - 1);
    return SparsePoly::variable(vars, var);
  };
  int k = static_cast<int>(idx.size());
  if (k == 0) return SparsePoly::constant(vars, Rat(1));
  // memo[mask] = det over rows idx[k-|mask|..], cols = subset mask of idx
  std::map<uint32_t, SparsePoly> memo;
  std::function<const SparsePoly&(uint32_t)> det = [&](uint32_t mask) -> const SparsePoly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int size = mi_popcount(mask);
    SparsePoly result(vars);
    if (size == 0) {
      result = SparsePoly::constant(vars, Rat(1));
    } else {
      int row = idx[k - size];
      int sign = 1;
      for (int pos = 0; pos < k; ++pos) {
        if (!(mask & (1u << pos))) continue;
        SparsePoly sub = det(mask & ~(1u << pos));
        SparsePoly piece = entry(row, idx[pos]) * sub;
        result = (sign > 0) ? result + piece : result - piece;
        sign = -sign;
      }
    }
    return memo.emplace(mask, std::move(result)).first->second;
  };
  return det((1u << k) - 1);
}

}  // namespace

const SparsePoly& symbolic_principal_minor(int n, uint32_t idx) {
  static std::map<std::pair<int, uint32_t>, SparsePoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, idx});
  if (it != cache.end()) return it->second;
  std::vector<int> list;
  for (int k = 1; k <= n; ++k)
    if (mi_bit(idx, n, k)) list.push_back(k);
  return cache.emplace(std::make_pair(n, idx), symbolic_det(n, list))
      .first->second;
}

SparsePoly pullback(const SparsePoly& f, int n) {
  if (f.vars().kind != VarSet::Kind::X || f.vars().n != n)
    throw std::invalid_argument("pullback needs a polynomial in the 2^n tensor coordinates");
  VarSet target = VarSet::A(n);
  int t_var = target.count() - 1;
  std::vector<SparsePoly> images;
  images.reserve(1u << n);
  for (uint32_t idx = 0; idx < (1u << n); ++idx) {
    SparsePoly img = symbolic_principal_minor(n, idx);
    int t_exp = n - mi_popcount(idx);
    if (t_exp > 0) {
      Monomial tm;
      tm.exps.emplace_back(t_var, t_exp);
      SparsePoly tp(target);
      tp.add_term(tm, Rat(1));
      img = img * tp;
    }
    images.push_back(std::move(img));
  }
  return f.substitute(target, images);
}

UvwRewrite rewrite_uvw(const SparsePoly& f) {
  if (f.vars().kind != VarSet::Kind::A || f.vars().n != 4)
    throw std::invalid_argument("u,v,w rewrite needs a polynomial in the 4x4 matrix entries");
  const VarSet& av = f.vars();
  int v12 = av.var_from_name("a_1_2"), v34 = av.var_from_name("a_3_4");
  int v13 = av.var_from_name("a_1_3"), v24 = av.var_from_name("a_2_4");
  int v14 = av.var_from_name("a_1_4"), v23 = av.var_from_name("a_2_3");
  VarSet uvw = VarSet::UVW();
  SparsePoly out(uvw);
  for (const auto& [m, c] : f.terms()) {
    int e12 = 0, e34 = 0, e13 = 0, e24 = 0, e14 = 0, e23 = 0;
    for (const auto& [var, e] : m.exps) {
      if (var == v12)
        e12 = e;
      else if (var == v34)
        e34 = e;
      else if (var == v13)
        e13 = e;
      else if (var == v24)
        e24 = e;
      else if (var == v14)
        e14 = e;
      else if (var == v23)
        e23 = e;
      else {
        SparsePoly bad(av);
        bad.add_term(m, Rat(1));
        throw std::invalid_argument("monomial " + bad.to_text() +
                                    " uses a variable outside the three off-diagonal products");
      }
    }
    if (e12 != e34 || e13 != e24 || e14 != e23) {
      SparsePoly bad(av);
      bad.add_term(m, Rat(1));
      throw std::invalid_argument("monomial " + bad.to_text() +
                                  " does not factor through u, v, w");
    }
    Monomial um;
    if (e12) um.exps.emplace_back(0, e12);
    if (e13) um.exps.emplace_back(1, e13);
    if (e14) um.exps.emplace_back(2, e14);
    out.add_term(um, c);
  }
  // normal form: kill u - w and v - w, i.e. send u and v to w
  SparsePoly wpoly = SparsePoly::variable(uvw, 2);
  UvwRewrite r;
  r.in_uvw = out;
  r.normal_form = out.substitute(uvw, {wpoly, wpoly, wpoly});
  return r;
}

}  // namespace pmv
