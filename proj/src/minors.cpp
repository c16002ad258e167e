#include "pmv/minors.hpp"

#include <json.hpp>

#include "pmv/group.hpp"

namespace pmv {

namespace {

using Mat = std::vector<std::vector<Rat>>;

// plain fraction-exact elimination, first nonzero pivot
Rat gauss_det(Mat m) {
  int k = static_cast<int>(m.size());
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (!rat_is_zero(m[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (rat_is_zero(m[r][col])) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col + 1; c < k; ++c) m[r][c] -= f * m[col][c];
      m[r][col] = 0;
    }
  }
  return det;
}

// solves E X = B, E square nonsingular
Mat solve_linear(Mat e, Mat b) {
  int k = static_cast<int>(e.size());
  int w = k ? static_cast<int>(b[0].size()) : 0;
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (!rat_is_zero(e[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular system");
    if (piv != col) {
      std::swap(e[piv], e[col]);
      std::swap(b[piv], b[col]);
    }
    for (int r = 0; r < k; ++r) {
      if (r == col || rat_is_zero(e[r][col])) continue;
      Rat f = e[r][col] / e[col][col];
      for (int c = col; c < k; ++c) e[r][c] -= f * e[col][c];
      for (int c = 0; c < w; ++c) b[r][c] -= f * b[col][c];
    }
  }
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < w; ++c) b[r][c] /= e[r][r];
  return b;
}

Mat submatrix(const SymMatrix& A, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  Mat m(rows.size(), std::vector<Rat>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) m[i][j] = A.at(rows[i], cols[j]);
  return m;
}

std::vector<int> bits_to_list(uint32_t bits, int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (mi_bit(bits, n, k)) out.push_back(k);
  return out;
}

void check_index_list(const std::vector<int>& idx, int n) {
  int prev = 0;
  for (int v : idx) {
    if (v <= prev || v > n)
      throw std::invalid_argument("index list must be strictly increasing in 1..n");
    prev = v;
  }
}

// Shared-pivot recursion node. Invariant: for every T subseteq indices,
// out[p_bits | bits(T)] = mult * det m[T].
struct SchurNode {
  std::vector<int> indices;  // remaining original indices, ascending
  Mat m;
  Rat mult;
  uint32_t p_bits;
};

void schur_leaves(const SchurNode& node, int n, std::vector<Rat>& out);

void schur_children(const SchurNode& node, int n, std::vector<Rat>& out,
                    SchurNode& exclude, SchurNode& include, bool& include_ok) {
  int k = static_cast<int>(node.indices.size());
  int s = node.indices[0];
  std::vector<int> rest(node.indices.begin() + 1, node.indices.end());

  exclude.indices = rest;
  exclude.mult = node.mult;
  exclude.p_bits = node.p_bits;
  exclude.m = Mat(k - 1, std::vector<Rat>(k - 1));
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) exclude.m[i - 1][j - 1] = node.m[i][j];

  const Rat& pivot = node.m[0][0];
  if (rat_is_zero(pivot)) {
    // no Schur complement here: finish every subset through s directly
    include_ok = false;
    uint32_t base = node.p_bits | (1u << (n - s));
    int r = k - 1;
    for (uint32_t mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> picks{0};
      uint32_t bits = base;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) {
          picks.push_back(i + 1);
          bits |= 1u << (n - rest[i]);
        }
      Mat sub(picks.size(), std::vector<Rat>(picks.size()));
      for (size_t i = 0; i < picks.size(); ++i)
        for (size_t j = 0; j < picks.size(); ++j)
          sub[i][j] = node.m[picks[i]][picks[j]];
      out[bits] = node.mult * gauss_det(std::move(sub));
    }
    return;
  }

  include_ok = true;
  include.indices = rest;
  include.mult = node.mult * pivot;
  include.p_bits = node.p_bits | (1u << (n - s));
  include.m = Mat(k - 1, std::vector<Rat>(k - 1));
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j)
      include.m[i - 1][j - 1] = node.m[i][j] - node.m[i][0] * node.m[0][j] / pivot;
}

void schur_leaves(const SchurNode& node, int n, std::vector<Rat>& out) {
  if (node.indices.empty()) {
    out[node.p_bits] = node.mult;
    return;
  }
  SchurNode ex, inc;
  bool inc_ok;
  schur_children(node, n, out, ex, inc, inc_ok);
  schur_leaves(ex, n, out);
  if (inc_ok) schur_leaves(inc, n, out);
}

}  // namespace

Rat minor_det(const SymMatrix& A, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  check_index_list(rows, A.n());
  check_index_list(cols, A.n());
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor needs equally many rows and columns");
  if (rows.empty()) return Rat(1);
  return gauss_det(submatrix(A, rows, cols));
}

Rat minor_det_bits(const SymMatrix& A, uint32_t rows, uint32_t cols) {
  return minor_det(A, bits_to_list(rows, A.n()), bits_to_list(cols, A.n()));
}

HyperTensor principal_minor_map(const HomogenizedMatrix& M, Backend backend,
                                int jobs) {
  int n = M.A.n();
  uint32_t top = 1u << n;
  std::vector<Rat> minors(top);

  if (backend == Backend::naive) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs > 1 ? jobs : 1)
#endif
    for (uint32_t bits = 0; bits < top; ++bits) {
      auto list = bits_to_list(bits, n);
      minors[bits] = list.empty() ? Rat(1) : gauss_det(submatrix(M.A, list, list));
    }
  } else {
    SchurNode root;
    root.indices = bits_to_list(top - 1, n);
    root.m = submatrix(M.A, root.indices, root.indices);
    root.mult = Rat(1);
    root.p_bits = 0;

    if (jobs <= 1) {
      schur_leaves(root, n, minors);
    } else {
      // breadth-first split into independent nodes, then fan out; every
      // node owns a disjoint slice of the output
      std::vector<SchurNode> frontier{std::move(root)};
      while (static_cast<int>(frontier.size()) < 4 * jobs) {
        // split the widest node
        size_t widest = 0;
        for (size_t i = 1; i < frontier.size(); ++i)
          if (frontier[i].indices.size() > frontier[widest].indices.size())
            widest = i;
        if (frontier[widest].indices.empty()) break;
        SchurNode node = std::move(frontier[widest]);
        frontier.erase(frontier.begin() + widest);
        SchurNode ex, inc;
        bool inc_ok;
        schur_children(node, n, minors, ex, inc, inc_ok);
        frontier.push_back(std::move(ex));
        if (inc_ok) frontier.push_back(std::move(inc));
      }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
      for (size_t i = 0; i < frontier.size(); ++i)
        schur_leaves(frontier[i], n, minors);
    }
  }

  std::vector<Rat> t_pow(n + 1, Rat(1));
  for (int i = 1; i <= n; ++i) t_pow[i] = t_pow[i - 1] * M.t;
  HyperTensor z(n);
  for (uint32_t bits = 0; bits < top; ++bits)
    z.set(bits, t_pow[n - mi_popcount(bits)] * minors[bits]);
  return z;
}

std::vector<EMinor> e_minors(const SymMatrix& A, int size) {
  int n = A.n();
  if (size < 1 || 2 * size > n) return {};
  std::vector<EMinor> out;
  // ascending packed subset codes; each unordered disjoint pair once
  for (uint32_t r = 0; r < (1u << n); ++r) {
    if (mi_popcount(r) != size) continue;
    for (uint32_t s = r + 1; s < (1u << n); ++s) {
      if (mi_popcount(s) != size || (r & s)) continue;
      out.push_back(EMinor{r, s, minor_det_bits(A, r, s)});
    }
  }
  return out;
}

ERankCertificate erank(const SymMatrix& A) {
  int n = A.n();
  std::optional<EMinor> witness;
  for (int size = 1; 2 * size <= n; ++size) {
    std::optional<EMinor> nonzero;
    for (const auto& em : e_minors(A, size)) {
      if (!rat_is_zero(em.value)) {
        nonzero = em;
        break;
      }
    }
    if (!nonzero) return {size - 1, witness};
    witness = nonzero;
  }
  return {n / 2, witness};
}

SymMatrix veronese(const std::vector<Rat>& y) {
  int n = static_cast<int>(y.size());
  SymMatrix A(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) A.set(i, j, y[i - 1] * y[j - 1]);
  return A;
}

HomogenizedMatrix sample_erank_le1(const std::vector<Rat>& w,
                                   const std::vector<Rat>& y, const Rat& t) {
  int n = static_cast<int>(w.size());
  if (static_cast<int>(y.size()) != n)
    throw std::invalid_argument("diagonal and off-diagonal parameter counts differ");
  HomogenizedMatrix M;
  M.A = SymMatrix(n);
  for (int i = 1; i <= n; ++i) {
    M.A.set(i, i, w[i - 1] * w[i - 1]);
    for (int j = i + 1; j <= n; ++j) M.A.set(i, j, y[i - 1] * y[j - 1]);
  }
  M.t = t * t;
  return M;
}

ERank1Completion complete_erank1_params(const SymMatrix& A) {
  int n = A.n();
  ERank1Completion out;
  for (const auto& em : e_minors(A, 2)) {
    if (!rat_is_zero(em.value)) {
      out.ok = false;
      out.obstruction = em;
      return out;
    }
  }
  out.ok = true;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.products[{i, j}] = A.at(i, j);
  out.squares.assign(n, std::nullopt);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (k == i) continue;
        if (rat_is_zero(A.at(j, k))) continue;
        Rat candidate = A.at(i, j) * A.at(i, k) / A.at(j, k);
        if (out.squares[i - 1] && *out.squares[i - 1] != candidate)
          throw std::logic_error("inconsistent square determinations");
        out.squares[i - 1] = candidate;
      }
    }
  }
  out.degenerate = true;
  for (const auto& s : out.squares)
    if (s) out.degenerate = false;
  return out;
}

const Rat& PluckerVector::at(uint32_t r, uint32_t s) const {
  if (r > s) std::swap(r, s);
  auto it = entries_.find({r, s});
  return it == entries_.end() ? zero_ : it->second;
}

void PluckerVector::set(uint32_t r, uint32_t s, const Rat& v) {
  if (r > s) std::swap(r, s);
  entries_[{r, s}] = v;
}

std::string PluckerVector::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  auto obj = nlohmann::ordered_json::object();
  for (const auto& [key, v] : entries_)
    obj[mi_to_string(key.first, n_) + "|" + mi_to_string(key.second, n_)] =
        rat_str(v);
  j["minors"] = obj;
  return j.dump();
}

PluckerVector all_minors_vector(const HomogenizedMatrix& M) {
  int n = M.A.n();
  std::vector<Rat> t_pow(n + 1, Rat(1));
  for (int i = 1; i <= n; ++i) t_pow[i] = t_pow[i - 1] * M.t;
  PluckerVector psi(n);
  // symmetric matrix: det A[R,S] = det A[S,R], so only R <= S is stored
  for (uint32_t r = 0; r < (1u << n); ++r) {
    int size = mi_popcount(r);
    for (uint32_t s = r; s < (1u << n); ++s) {
      if (mi_popcount(s) != size) continue;
      psi.set(r, s, t_pow[n - size] * minor_det_bits(M.A, r, s));
    }
  }
  return psi;
}

LagrangianActionResult act_on_lagrangian_plane(const GroupElement& g,
                                               const HomogenizedMatrix& M) {
  int n = M.A.n();
  if (g.n() != n) throw std::invalid_argument("group/matrix size mismatch");
  for (int i = 0; i < n; ++i)
    if (g.perm()[i] != i + 1)
      throw std::invalid_argument("transport requires the trivial permutation part");

  // new frame [E' | F'] = [t Id | A] transported factor-wise:
  // E' = t D_a + A D_b, F' = t D_c + A D_d
  Mat eprime(n, std::vector<Rat>(n, Rat(0))), fprime(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 1; i <= n; ++i) {
    const Mat2& m_i = g.factors()[i - 1];
    eprime[i - 1][i - 1] += M.t * m_i.a;
    fprime[i - 1][i - 1] += M.t * m_i.c;
    for (int j = 1; j <= n; ++j) {
      const Mat2& m_j = g.factors()[j - 1];
      eprime[i - 1][j - 1] += M.A.at(i, j) * m_j.b;
      fprime[i - 1][j - 1] += M.A.at(i, j) * m_j.d;
    }
  }

  Rat det_e = gauss_det(eprime);
  if (rat_is_zero(det_e))
    throw graph_form_error("transported plane has no graph form (E block singular)");

  // A' = t E'^{-1} F'
  Mat rhs = fprime;
  for (auto& row : rhs)
    for (auto& v : row) v *= M.t;
  Mat aprime = solve_linear(std::move(eprime), std::move(rhs));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (aprime[i][j] != aprime[j][i])
        throw std::logic_error("transported graph matrix lost symmetry");

  LagrangianActionResult res;
  res.image.A = SymMatrix(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) res.image.A.set(i, j, aprime[i - 1][j - 1]);
  res.image.t = M.t;
  Rat t_n(1);
  for (int i = 0; i < n; ++i) t_n *= M.t;
  res.scale = t_n / det_e;
  return res;
}

}  // namespace pmv
