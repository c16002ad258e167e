#include "pmv/oracle_ff.hpp"

#include <atomic>
#include <chrono>
#include <json.hpp>
#include <map>
#include <stdexcept>

#include "pmv/pullback.hpp"
#include "pmv/schur_gen.hpp"

namespace pmv {

namespace {

// polynomial with coefficients reduced mod p, sparse integer exponents;
// built once so the point loops run on plain machine words
struct ModPoly {
  struct Term {
    long c;
    std::vector<std::pair<int, int>> exps;  // (var, exp), var into the point
  };
  std::vector<Term> terms;

  static ModPoly from(const SparsePoly& f, long p) {
    mpz_class l(1);
    for (const auto& [m, c] : f.terms()) {
      (void)m;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    if (mpz_divisible_ui_p(l.get_mpz_t(), p))
      throw std::runtime_error("characteristic " + std::to_string(p) +
                               " divides a coefficient denominator");
    ModPoly out;
    for (const auto& [m, c] : f.terms()) {
      mpz_class ci = c.get_num() * (l / c.get_den());
      long cr = mpz_fdiv_ui(ci.get_mpz_t(), p);
      if (cr == 0) continue;
      out.terms.push_back({cr, m.exps});
    }
    return out;
  }
};

// value^e for every variable of the point, so term evaluation is pure
// multiplication; products stay below 2^64 because each factor < p and the
// running value is reduced every step
struct PowTables {
  long p;
  int max_exp;
  std::vector<std::vector<long>> table;  // [var][exp]

  PowTables(long p_in, size_t vars, int max_exp_in)
      : p(p_in), max_exp(max_exp_in), table(vars, std::vector<long>(max_exp_in + 1, 1)) {}

  void set(size_t var, long value) {
    long v = ((value % p) + p) % p;
    table[var][0] = 1;
    for (int e = 1; e <= max_exp; ++e)
      table[var][e] = static_cast<long>(
          (static_cast<unsigned __int128>(table[var][e - 1]) * v) % p);
  }
};

long eval_mod_terms(const ModPoly& f, const PowTables& pows, long p) {
  unsigned __int128 sum = 0;
  for (const auto& t : f.terms) {
    unsigned __int128 v = static_cast<unsigned long long>(t.c);
    for (const auto& [var, e] : t.exps) {
      v = (v * pows.table[var][e]) % p;
    }
    sum += v;
  }
  return static_cast<long>(sum % p);
}

std::string verdict_from_counts(unsigned long long only_left,
                                unsigned long long only_right) {
  if (only_left == 0 && only_right == 0) return "equal";
  if (only_left == 0) return "left_in_right";
  if (only_right == 0) return "right_in_left";
  return "incomparable";
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string pow_str(long p, int e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), p, e);
  return v.get_str();
}

SparsePoly drop_t(const SparsePoly& f) {
  const VarSet& av = f.vars();
  int t_var = av.count() - 1;
  SparsePoly out(av);
  for (const auto& [m, c] : f.terms()) {
    Monomial q;
    for (const auto& [var, e] : m.exps)
      if (var != t_var) q.exps.emplace_back(var, e);
    out.add_term(q, c);
  }
  return out;
}

}  // namespace

std::string ZeroSetReport::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = verdict;
  j["p"] = p;
  j["var_count"] = var_count;
  j["points_total"] = points_total;
  j["zeros_left"] = zeros_left;
  j["zeros_right"] = zeros_right;
  j["only_left"] = only_left;
  j["only_right"] = only_right;
  if (counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    nlohmann::ordered_json pt;
    for (const auto& [name, value] : counterexample) pt[name] = value;
    j["counterexample"] = pt;
  }
  j["seconds"] = seconds;
  return j.dump();
}

ZeroSetReport compare_zero_sets_uvw(long p, bool f1_only) {
  if (p < 5)
    throw std::invalid_argument(
        "comparison needs p >= 5 (smaller characteristic collides with the coefficient content)");
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  auto t0 = std::chrono::steady_clock::now();

  auto hwvs = cubic_hwvs();
  std::vector<ModPoly> left;
  int count = f1_only ? 1 : 3;
  for (int i = 0; i < count; ++i) {
    SparsePoly pb = drop_t(pullback(hwvs[i], 4)).normalized();
    left.push_back(ModPoly::from(rewrite_uvw(pb).in_uvw, p));
  }
  VarSet uvw = VarSet::UVW();
  SparsePoly u = SparsePoly::variable(uvw, 0);
  SparsePoly v = SparsePoly::variable(uvw, 1);
  SparsePoly w = SparsePoly::variable(uvw, 2);
  std::vector<ModPoly> right{ModPoly::from(u - w, p), ModPoly::from(v - w, p)};

  unsigned long long zl = 0, zr = 0, ol = 0, orr = 0;
  std::vector<std::pair<std::string, long>> witness;
  PowTables pows(p, 3, 2);
  for (long uu = 0; uu < p; ++uu) {
    pows.set(0, uu);
    for (long vv = 0; vv < p; ++vv) {
      pows.set(1, vv);
      for (long ww = 0; ww < p; ++ww) {
        pows.set(2, ww);
        bool lz = true, rz = true;
        for (const auto& f : left)
          if (eval_mod_terms(f, pows, p) != 0) {
            lz = false;
            break;
          }
        for (const auto& f : right)
          if (eval_mod_terms(f, pows, p) != 0) {
            rz = false;
            break;
          }
        if (lz) ++zl;
        if (rz) ++zr;
        if (lz && !rz) ++ol;
        if (rz && !lz) ++orr;
        if (lz != rz && witness.empty())
          witness = {{"u", uu}, {"v", vv}, {"w", ww}};
      }
    }
  }

  ZeroSetReport rep;
  rep.p = p;
  rep.var_count = 3;
  rep.points_total = pow_str(p, 3);
  rep.zeros_left = std::to_string(zl);
  rep.zeros_right = std::to_string(zr);
  rep.only_left = std::to_string(ol);
  rep.only_right = std::to_string(orr);
  rep.counterexample = std::move(witness);
  rep.verdict = verdict_from_counts(ol, orr);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ZeroSetReport compare_zero_sets_matrix(long p, int jobs,
                                       std::optional<double> budget_seconds,
                                       const std::vector<int>& drop_ids) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  ModuleBasis cubics = cubic_module(4);
  VarSet av = VarSet::A(4);
  std::vector<int> diag_vars{av.var_from_name("a_1_1"), av.var_from_name("a_2_2"),
                             av.var_from_name("a_3_3"), av.var_from_name("a_4_4")};
  std::vector<int> off_vars{av.var_from_name("a_1_2"), av.var_from_name("a_1_3"),
                            av.var_from_name("a_1_4"), av.var_from_name("a_2_3"),
                            av.var_from_name("a_2_4"), av.var_from_name("a_3_4")};

  // left system: every degree-3 module element pulled back at t = 1, minus
  // any ids the caller drops; split into the entries that never touch the
  // diagonal (constant on a block of fixed off-diagonal values) and the rest
  std::vector<SparsePoly> left_free, left_diag;
  for (const auto& el : cubics.elements) {
    bool dropped = false;
    for (int id : drop_ids)
      if (id == el.id) dropped = true;
    if (dropped) continue;
    SparsePoly pb = drop_t(pullback(el.poly, 4)).normalized();
    bool touches_diag = false;
    for (const auto& [m, c] : pb.terms()) {
      (void)c;
      for (const auto& [var, e] : m.exps) {
        (void)e;
        for (int dv : diag_vars)
          if (var == dv) touches_diag = true;
      }
    }
    (touches_diag ? left_diag : left_free).push_back(std::move(pb));
  }

  auto mk = [&](int a, int b, int c, int d) {
    return SparsePoly::variable(av, av.var_from_name("a_" + std::to_string(a) + "_" + std::to_string(b))) *
           SparsePoly::variable(av, av.var_from_name("a_" + std::to_string(c) + "_" + std::to_string(d)));
  };
  std::vector<SparsePoly> right_polys{mk(1, 3, 2, 4) - mk(1, 4, 2, 3),
                                      mk(1, 2, 3, 4) - mk(1, 4, 2, 3)};

  int max_exp = 0;
  for (const auto& f : left_diag)
    for (const auto& [m, c] : f.terms()) {
      (void)c;
      for (const auto& [var, e] : m.exps)
        if (e > max_exp) max_exp = e;
    }
  for (const auto& f : left_free)
    for (const auto& [m, c] : f.terms()) {
      (void)c;
      for (const auto& [var, e] : m.exps)
        if (e > max_exp) max_exp = e;
    }
  if (max_exp < 2) max_exp = 2;

  std::vector<ModPoly> free_mod, diag_mod, right_mod;
  for (const auto& f : left_free) free_mod.push_back(ModPoly::from(f, p));
  for (const auto& f : left_diag) diag_mod.push_back(ModPoly::from(f, p));
  for (const auto& f : right_polys) right_mod.push_back(ModPoly::from(f, p));

  long p4 = p * p * p * p;
  unsigned long long zl = 0, zr = 0, ol = 0, orr = 0;
  long blocks_total = 1;
  for (int i = 0; i < 6; ++i) blocks_total *= p;

  std::atomic<bool> over_budget{false};

#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 1 ? jobs : 1) \
    reduction(+ : zl, zr, ol, orr)
#endif
  {
    PowTables pows(p, av.count(), max_exp);
    pows.set(av.count() - 1, 1);  // t, unused after the t = 1 pullbacks
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
    for (long block = 0; block < blocks_total; ++block) {
      if (over_budget.load(std::memory_order_relaxed)) continue;
      if (budget_seconds && (block & 1023) == 0 && elapsed() > *budget_seconds)
        over_budget.store(true, std::memory_order_relaxed);

      long rest = block;
      for (int i = 0; i < 6; ++i) {
        pows.set(off_vars[i], rest % p);
        rest /= p;
      }

      bool right_zero = true;
      for (const auto& f : right_mod)
        if (eval_mod_terms(f, pows, p) != 0) {
          right_zero = false;
          break;
        }
      bool free_zero = true;
      for (const auto& f : free_mod)
        if (eval_mod_terms(f, pows, p) != 0) {
          free_zero = false;
          break;
        }

      if (!free_zero) {
        // no point of this block lies in the left zero set
        if (right_zero) {
          zr += p4;
          orr += p4;
        }
        continue;
      }

      // left can only vanish where the diagonal-involving equations allow:
      // specialize the off-diagonal entries and scan the diagonal
      std::vector<ModPoly> reduced;
      reduced.reserve(diag_mod.size());
      for (const auto& f : diag_mod) {
        std::map<std::vector<std::pair<int, int>>, long> acc;
        for (const auto& t : f.terms) {
          unsigned __int128 c = static_cast<unsigned long long>(t.c);
          std::vector<std::pair<int, int>> dexp;
          for (const auto& [var, e] : t.exps) {
            bool is_diag = false;
            for (int dv : diag_vars)
              if (var == dv) is_diag = true;
            if (is_diag)
              dexp.emplace_back(var, e);
            else
              c = (c * pows.table[var][e]) % p;
          }
          long cv = static_cast<long>(c);
          if (cv == 0) continue;
          auto [it, fresh] = acc.emplace(std::move(dexp), cv);
          if (!fresh) it->second = (it->second + cv) % p;
        }
        ModPoly r;
        for (auto& [dexp, c] : acc)
          if (c % p != 0) r.terms.push_back({c % p, dexp});
        reduced.push_back(std::move(r));
      }

      unsigned long long block_left_zeros = 0;
      PowTables dpows = pows;
      for (long dmask = 0; dmask < p4; ++dmask) {
        long drest = dmask;
        for (int i = 0; i < 4; ++i) {
          dpows.set(diag_vars[i], drest % p);
          drest /= p;
        }
        bool all_zero = true;
        for (const auto& f : reduced)
          if (eval_mod_terms(f, dpows, p) != 0) {
            all_zero = false;
            break;
          }
        if (all_zero) ++block_left_zeros;
      }

      zl += block_left_zeros;
      if (right_zero) {
        zr += p4;
        orr += p4 - block_left_zeros;
      } else {
        ol += block_left_zeros;
      }
    }
  }

  if (over_budget.load())
    throw std::runtime_error("time budget exceeded after " +
                             std::to_string(elapsed()) + " s");

  // when the sets differ, rescan in enumeration order for the first point in
  // the symmetric difference (the counting pass above is unordered)
  std::vector<std::pair<std::string, long>> witness;
  if (ol != 0 || orr != 0) {
    PowTables pows(p, av.count(), max_exp);
    pows.set(av.count() - 1, 1);
    auto record = [&](long block, long dmask) {
      std::vector<long> value(av.count(), 0);
      for (int i = 0; i < 6; ++i) {
        value[off_vars[i]] = block % p;
        block /= p;
      }
      for (int i = 0; i < 4; ++i) {
        value[diag_vars[i]] = dmask % p;
        dmask /= p;
      }
      for (int var = 0; var + 1 < av.count(); ++var)
        witness.emplace_back(av.name(var), value[var]);
    };
    for (long block = 0; block < blocks_total && witness.empty(); ++block) {
      long rest = block;
      for (int i = 0; i < 6; ++i) {
        pows.set(off_vars[i], rest % p);
        rest /= p;
      }
      bool right_zero = true;
      for (const auto& f : right_mod)
        if (eval_mod_terms(f, pows, p) != 0) {
          right_zero = false;
          break;
        }
      bool free_zero = true;
      for (const auto& f : free_mod)
        if (eval_mod_terms(f, pows, p) != 0) {
          free_zero = false;
          break;
        }
      if (!free_zero) {
        if (right_zero) record(block, 0);
        continue;
      }
      PowTables dpows = pows;
      for (long dmask = 0; dmask < p4; ++dmask) {
        long drest = dmask;
        for (int i = 0; i < 4; ++i) {
          dpows.set(diag_vars[i], drest % p);
          drest /= p;
        }
        bool left_zero = true;
        for (const auto& f : diag_mod)
          if (eval_mod_terms(f, dpows, p) != 0) {
            left_zero = false;
            break;
          }
        if (left_zero != right_zero) {
          record(block, dmask);
          break;
        }
      }
    }
  }

  ZeroSetReport rep;
  rep.p = p;
  rep.var_count = 10;
  rep.points_total = pow_str(p, 10);
  rep.zeros_left = std::to_string(zl);
  rep.zeros_right = std::to_string(zr);
  rep.only_left = std::to_string(ol);
  rep.only_right = std::to_string(orr);
  rep.counterexample = std::move(witness);
  rep.verdict = verdict_from_counts(ol, orr);
  rep.seconds = elapsed();
  return rep;
}

}  // namespace pmv
