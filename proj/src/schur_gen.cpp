#include "pmv/schur_gen.hpp"

#include <json.hpp>
#include <stdexcept>

#include "pmv/linalg.hpp"
#include "pmv/multi_index.hpp"

namespace pmv {

namespace {

// one symmetrizer term: a sign and a letter (0/1) per slot
struct FactorTerm {
  int sign;
  std::vector<int> letters;
};

std::vector<FactorTerm> expand_filling(int d, const Filling& f) {
  if (f.empty() || f.size() > 2)
    throw std::invalid_argument("filling must have one or two rows");
  std::vector<int> base(d + 1, -1);
  size_t prev_len = SIZE_MAX;
  for (size_t row = 0; row < f.size(); ++row) {
    if (f[row].empty() || f[row].size() > prev_len)
      throw std::invalid_argument("row lengths must be positive and weakly decreasing");
    prev_len = f[row].size();
    for (int slot : f[row]) {
      if (slot < 1 || slot > d || base[slot] != -1)
        throw std::invalid_argument("filling must cover each slot 1..d exactly once");
      base[slot] = static_cast<int>(row);
    }
  }
  for (int s = 1; s <= d; ++s)
    if (base[s] == -1)
      throw std::invalid_argument("filling must cover each slot 1..d exactly once");

  // row symmetrization is the identity on this row-constant base; the
  // column alternation is a signed sum over swapping each 2-cell column
  std::vector<std::pair<int, int>> columns;
  if (f.size() == 2)
    for (size_t i = 0; i < f[1].size(); ++i) columns.emplace_back(f[0][i], f[1][i]);

  std::vector<FactorTerm> out;
  uint32_t combos = 1u << columns.size();
  for (uint32_t mask = 0; mask < combos; ++mask) {
    FactorTerm t;
    t.letters.assign(base.begin() + 1, base.end());
    t.sign = 1;
    for (size_t c = 0; c < columns.size(); ++c) {
      if (!(mask & (1u << c))) continue;
      std::swap(t.letters[columns[c].first - 1], t.letters[columns[c].second - 1]);
      t.sign = -t.sign;
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

SparsePoly hwv_from_fillings(int n, int d,
                             const std::vector<Filling>& fillings) {
  if (static_cast<int>(fillings.size()) != n)
    throw std::invalid_argument("need one filling per factor");
  std::vector<std::vector<FactorTerm>> factor_terms;
  factor_terms.reserve(n);
  for (const auto& f : fillings) factor_terms.push_back(expand_filling(d, f));

  VarSet vars = VarSet::X(n);
  SparsePoly result(vars);
  std::vector<size_t> pick(n, 0);
  for (;;) {
    int sign = 1;
    for (int k = 0; k < n; ++k) sign *= factor_terms[k][pick[k]].sign;
    // slot s of the d-fold product receives the multi-index assembled from
    // the per-factor letters; the commutative product collapses to a
    // monomial in the X^I
    Monomial m;
    {
      std::vector<uint32_t> slot_idx(d, 0);
      for (int k = 1; k <= n; ++k) {
        const auto& letters = factor_terms[k - 1][pick[k - 1]].letters;
        for (int s = 0; s < d; ++s)
          if (letters[s]) slot_idx[s] |= 1u << (n - k);
      }
      std::sort(slot_idx.begin(), slot_idx.end());
      for (int s = 0; s < d;) {
        int e = 1;
        while (s + e < d && slot_idx[s + e] == slot_idx[s]) ++e;
        m.exps.emplace_back(static_cast<int>(slot_idx[s]), e);
        s += e;
      }
    }
    result.add_term(m, Rat(sign));

    int k = n - 1;
    while (k >= 0 && ++pick[k] == factor_terms[k].size()) pick[k--] = 0;
    if (k < 0) break;
  }
  return result;
}

SparsePoly lower(const SparsePoly& f, int factor) {
  const VarSet& vars = f.vars();
  if (vars.kind != VarSet::Kind::X)
    throw std::invalid_argument("ladder operators act on tensor-coordinate polynomials");
  int n = vars.n;
  if (factor < 1 || factor > n) throw std::invalid_argument("factor out of range");
  SparsePoly out(vars);
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.exps.size(); ++i) {
      auto [var, e] = m.exps[i];
      if (mi_bit(static_cast<uint32_t>(var), n, factor)) continue;
      int flipped = static_cast<int>(mi_flip_bit(static_cast<uint32_t>(var), n, factor));
      Monomial d;
      for (size_t j = 0; j < m.exps.size(); ++j) {
        if (j == i) {
          if (e > 1) d.exps.emplace_back(var, e - 1);
        } else {
          d.exps.emplace_back(m.exps[j]);
        }
      }
      // multiply by the flipped variable, keeping exps sorted
      bool merged = false;
      for (auto& [v2, e2] : d.exps)
        if (v2 == flipped) {
          ++e2;
          merged = true;
          break;
        }
      if (!merged) {
        d.exps.emplace_back(flipped, 1);
        std::sort(d.exps.begin(), d.exps.end());
      }
      out.add_term(d, c * e);
    }
  }
  return out;
}

SparsePoly raise_op(const SparsePoly& f, int factor) {
  const VarSet& vars = f.vars();
  if (vars.kind != VarSet::Kind::X)
    throw std::invalid_argument("ladder operators act on tensor-coordinate polynomials");
  int n = vars.n;
  if (factor < 1 || factor > n) throw std::invalid_argument("factor out of range");
  SparsePoly out(vars);
  for (const auto& [m, c] : f.terms()) {
    for (size_t i = 0; i < m.exps.size(); ++i) {
      auto [var, e] = m.exps[i];
      if (!mi_bit(static_cast<uint32_t>(var), n, factor)) continue;
      int flipped = static_cast<int>(mi_flip_bit(static_cast<uint32_t>(var), n, factor));
      Monomial d;
      for (size_t j = 0; j < m.exps.size(); ++j) {
        if (j == i) {
          if (e > 1) d.exps.emplace_back(var, e - 1);
        } else {
          d.exps.emplace_back(m.exps[j]);
        }
      }
      bool merged = false;
      for (auto& [v2, e2] : d.exps)
        if (v2 == flipped) {
          ++e2;
          merged = true;
          break;
        }
      if (!merged) {
        d.exps.emplace_back(flipped, 1);
        std::sort(d.exps.begin(), d.exps.end());
      }
      out.add_term(d, c * e);
    }
  }
  return out;
}

long hd_dimension(int n) {
  if (n < 3) return 0;
  long binom = static_cast<long>(n) * (n - 1) * (n - 2) / 6;
  long pow5 = 1;
  for (int i = 0; i < n - 3; ++i) pow5 *= 5;
  return binom * pow5;
}

long cubic_dimension(int n) {
  if (n < 4) return 0;
  long binom = static_cast<long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
  long pow4 = 1;
  for (int i = 0; i < n - 4; ++i) pow4 *= 4;
  return 3 * binom * 16 * pow4;
}

SparsePoly hd_hwv3() {
  static const SparsePoly cached = [] {
    Filling fa{{1, 2}, {3, 4}};
    Filling fb{{1, 3}, {2, 4}};
    for (uint32_t mask = 0; mask < 8; ++mask) {
      std::vector<Filling> combo;
      for (int k = 2; k >= 0; --k)
        combo.push_back((mask >> k) & 1 ? fb : fa);
      SparsePoly f = hwv_from_fillings(3, 4, combo);
      if (!f.is_zero()) return f.normalized();
    }
    throw std::logic_error("no nonzero two-row projection found");
  }();
  return cached;
}

SparsePoly wedge_quadric(int n) {
  if (n != 4)
    throw std::invalid_argument("the alternating quadric only exists at n = 4");
  static const SparsePoly cached = [] {
    std::vector<Filling> combo(4, Filling{{1}, {2}});
    return hwv_from_fillings(4, 2, combo).normalized();
  }();
  return cached;
}

std::array<SparsePoly, 3> cubic_hwvs() {
  Filling f12_3{{1, 2}, {3}};
  Filling f13_2{{1, 3}, {2}};
  return {hwv_from_fillings(4, 3, {f12_3, f12_3, f12_3, f12_3}),
          hwv_from_fillings(4, 3, {f12_3, f12_3, f13_2, f13_2}),
          hwv_from_fillings(4, 3, {f12_3, f13_2, f12_3, f13_2})};
}

namespace {

// re-index a polynomial over X(n_small) into X(n): factor i of the small
// tensor becomes factor positions[i-1], all other bits stay 0
SparsePoly embed_at(const SparsePoly& f, int n, const std::vector<int>& positions) {
  int n_small = f.vars().n;
  VarSet vars = VarSet::X(n);
  SparsePoly out(vars);
  for (const auto& [m, c] : f.terms()) {
    Monomial big;
    for (const auto& [var, e] : m.exps) {
      uint32_t small_idx = static_cast<uint32_t>(var);
      uint32_t big_idx = 0;
      for (int i = 1; i <= n_small; ++i)
        if (mi_bit(small_idx, n_small, i))
          big_idx |= 1u << (n - positions[i - 1]);
      big.exps.emplace_back(static_cast<int>(big_idx), e);
    }
    std::sort(big.exps.begin(), big.exps.end());
    out.add_term(big, c);
  }
  return out;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// all elements below one highest weight vector: every lowering tuple within
// the per-position caps, tuples in ascending lexicographic order
void generate_descendants(const SparsePoly& hwv,
                          const std::vector<int>& lower_order,
                          const std::vector<int>& caps,
                          std::vector<std::pair<std::vector<int>, SparsePoly>>& out) {
  size_t len = lower_order.size();
  std::vector<int> tuple(len, 0);
  for (;;) {
    SparsePoly f = hwv;
    for (size_t i = 0; i < len; ++i)
      for (int rep = 0; rep < tuple[i]; ++rep) f = lower(f, lower_order[i]);
    if (f.is_zero())
      throw std::logic_error("lowering chain vanished inside its cap");
    out.emplace_back(tuple, f.normalized());

    int i = static_cast<int>(len) - 1;
    while (i >= 0 && tuple[i] == caps[i]) tuple[i--] = 0;
    if (i < 0) break;
    ++tuple[i];
  }
}

void certify_dimension(const ModuleBasis& basis, long expected) {
  if (basis.dimension != expected)
    throw std::logic_error("generated count differs from the closed-form dimension");
  // weight decomposition makes the rank computation block-diagonal:
  // monomials of different multiweights never meet
  std::map<std::vector<int>, std::vector<SparsePoly>> blocks;
  for (const auto& el : basis.elements) {
    auto w = el.poly.multiweight();
    if (!w) throw std::logic_error("basis element is not weight-homogeneous");
    blocks[*w].push_back(el.poly);
  }
  long rank = 0;
  for (const auto& [w, polys] : blocks) rank += exact_rank(polys);
  if (rank != expected)
    throw std::logic_error("generated elements do not span the expected dimension");
}

ModuleBasis build_module(int n, Family family, int jobs) {
  (void)jobs;  // generation is cheap at every n the cap allows; kept serial
  ModuleBasis basis;
  basis.spec = {n, family};

  int carrier_count = family == Family::hd ? 3 : 4;
  int free_cap = family == Family::hd ? 4 : 3;
  int carrier_cap = family == Family::hd ? 0 : 1;
  std::vector<SparsePoly> hwvs_small;
  if (family == Family::hd) {
    hwvs_small.push_back(hd_hwv3());
  } else {
    auto cs = cubic_hwvs();
    hwvs_small.assign(cs.begin(), cs.end());
  }

  for (const auto& carriers : combinations(n, carrier_count)) {
    std::vector<int> free_slots;
    {
      std::vector<char> in(n + 1, 0);
      for (int p : carriers) in[p] = 1;
      for (int q = 1; q <= n; ++q)
        if (!in[q]) free_slots.push_back(q);
    }
    std::vector<int> lower_order = carriers;
    lower_order.insert(lower_order.end(), free_slots.begin(), free_slots.end());
    std::vector<int> caps(carriers.size(), carrier_cap);
    caps.insert(caps.end(), free_slots.size(), free_cap);

    for (size_t copy = 0; copy < hwvs_small.size(); ++copy) {
      SparsePoly hwv = embed_at(hwvs_small[copy], n, carriers);
      std::vector<std::pair<std::vector<int>, SparsePoly>> descendants;
      generate_descendants(hwv, lower_order, caps, descendants);
      for (auto& [tuple, poly] : descendants) {
        ModuleElement el;
        el.id = static_cast<int>(basis.elements.size());
        el.positions = carriers;
        el.copy = static_cast<int>(copy);
        el.lowering = tuple;
        el.poly = std::move(poly);
        basis.elements.push_back(std::move(el));
      }
    }
  }
  basis.dimension = static_cast<int>(basis.elements.size());
  return basis;
}

}  // namespace

ModuleBasis hd_module(int n, int jobs) {
  if (n < 3) throw std::invalid_argument("the quartic module needs n >= 3");
  ModuleBasis basis = build_module(n, Family::hd, jobs);
  certify_dimension(basis, hd_dimension(n));
  return basis;
}

ModuleBasis cubic_module(int n, int jobs) {
  if (n < 3) throw std::invalid_argument("the cubic module needs n >= 3");
  if (n == 3) {
    ModuleBasis basis;
    basis.spec = {3, Family::cubic};
    basis.dimension = 0;
    return basis;
  }
  ModuleBasis basis = build_module(n, Family::cubic, jobs);
  certify_dimension(basis, cubic_dimension(n));
  return basis;
}

ModuleBasis wedge_module(int n) {
  ModuleBasis basis;
  basis.spec = {n, Family::wedge};
  ModuleElement el;
  el.id = 0;
  el.positions = {1, 2, 3, 4};
  el.poly = wedge_quadric(n);
  basis.elements.push_back(std::move(el));
  basis.dimension = 1;
  return basis;
}

static std::string family_name(Family f) {
  switch (f) {
    case Family::hd:
      return "hd";
    case Family::cubic:
      return "cubic";
    case Family::wedge:
      return "wedge";
  }
  return "?";
}

std::string ModuleBasis::to_json() const {
  nlohmann::ordered_json j;
  j["spec"] = {{"n", spec.n}, {"family", family_name(spec.family)}};
  j["dimension"] = dimension;
  auto polys = nlohmann::ordered_json::array();
  for (const auto& el : elements)
    polys.push_back(nlohmann::ordered_json::parse(el.poly.to_json()));
  j["polys"] = polys;
  return j.dump();
}

ModuleBasis ModuleBasis::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ModuleBasis basis;
  basis.spec.n = j.at("spec").at("n").get<int>();
  std::string fam = j.at("spec").at("family").get<std::string>();
  if (fam == "hd")
    basis.spec.family = Family::hd;
  else if (fam == "cubic")
    basis.spec.family = Family::cubic;
  else if (fam == "wedge")
    basis.spec.family = Family::wedge;
  else
    throw std::invalid_argument("unknown module family: " + fam);
  basis.dimension = j.at("dimension").get<int>();
  for (const auto& p : j.at("polys")) {
    ModuleElement el;
    el.id = static_cast<int>(basis.elements.size());
    el.poly = SparsePoly::from_json(p.dump());
    basis.elements.push_back(std::move(el));
  }
  if (static_cast<int>(basis.elements.size()) != basis.dimension)
    throw std::invalid_argument("module dimension does not match its element count");
  return basis;
}

}  // namespace pmv
