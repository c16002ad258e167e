#include "pmv/linalg.hpp"

#include <stdexcept>

namespace pmv {

int exact_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  size_t m = rows.size(), w = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != w) throw std::invalid_argument("ragged matrix");

  // scale rows to integers, then Bareiss fraction-free elimination
  std::vector<std::vector<mpz_class>> z(m, std::vector<mpz_class>(w));
  for (size_t i = 0; i < m; ++i) {
    mpz_class l(1);
    for (size_t j = 0; j < w; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rows[i][j].get_den().get_mpz_t());
    for (size_t j = 0; j < w; ++j)
      z[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
  }

  mpz_class prev(1);
  size_t rank = 0;
  for (size_t col = 0; col < w && rank < m; ++col) {
    size_t piv = m;
    for (size_t r = rank; r < m; ++r)
      if (z[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == m) continue;
    std::swap(z[piv], z[rank]);
    for (size_t r = rank + 1; r < m; ++r) {
      for (size_t c = col + 1; c < w; ++c) {
        mpz_class num = z[rank][col] * z[r][c] - z[r][col] * z[rank][c];
        mpz_divexact(z[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      z[r][col] = 0;
    }
    prev = z[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int exact_rank(const std::vector<SparsePoly>& polys) {
  if (polys.empty()) return 0;
  const VarSet& vs = polys.front().vars();
  std::map<Monomial, size_t, MonomialOrder> cols;
  for (const auto& f : polys) {
    if (!(f.vars() == vs))
      throw std::invalid_argument("polynomials over mixed variable sets");
    for (const auto& [mono, c] : f.terms()) {
      (void)c;
      cols.emplace(mono, 0);
    }
  }
  size_t id = 0;
  for (auto& [mono, slot] : cols) slot = id++;
  std::vector<std::vector<Rat>> rows(polys.size(),
                                     std::vector<Rat>(cols.size(), Rat(0)));
  for (size_t i = 0; i < polys.size(); ++i)
    for (const auto& [mono, c] : polys[i].terms()) rows[i][cols.at(mono)] = c;
  return exact_rank(std::move(rows));
}

std::vector<std::vector<Rat>> jacobian_at(const std::vector<SparsePoly>& fs,
                                          const std::vector<Rat>& point) {
  std::vector<std::vector<Rat>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    int w = f.vars().count();
    std::vector<Rat> row(w);
    for (int j = 0; j < w; ++j) row[j] = f.derivative(j).eval(point);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace pmv
