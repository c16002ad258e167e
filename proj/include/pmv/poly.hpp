#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmv/rational.hpp"

namespace pmv {

// Variable universe for a polynomial. Three stock kinds plus free-form named
// variables (used e.g. for parameter Jacobians).
//
//   X:      2^n tensor coordinates X^I, variable id = packed index I.
//   A:      symmetric matrix entries a_{i,j} (i <= j) then t; ids enumerate
//           (1,1),(1,2),...,(n,n),t in that order.
//   UVW:    u, v, w (ids 0, 1, 2).
//   custom: caller-supplied name list.
struct VarSet {
  enum class Kind { X, A, UVW, custom };
  Kind kind = Kind::X;
  int n = 0;
  std::vector<std::string> names;  // custom only

  static VarSet X(int n) { return {Kind::X, n, {}}; }
  static VarSet A(int n) { return {Kind::A, n, {}}; }
  static VarSet UVW() { return {Kind::UVW, 0, {}}; }
  static VarSet custom(std::vector<std::string> names) {
    return {Kind::custom, 0, std::move(names)};
  }

  int count() const;
  std::string name(int var) const;         // for printing / JSON keys
  int var_from_name(const std::string&) const;  // inverse, throws if unknown

  bool operator==(const VarSet& o) const {
    return kind == o.kind && n == o.n && names == o.names;
  }
};

// Exponent vector, sparse: sorted (var, exp>0) pairs.
struct Monomial {
  std::vector<std::pair<int, int>> exps;

  int degree() const {
    int d = 0;
    for (auto& [v, e] : exps) d += e;
    return d;
  }
  int exp_of(int var) const {
    for (auto& [v, e] : exps)
      if (v == var) return e;
    return 0;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Degree-lexicographic order, higher degree first; ties broken by comparing
// exponents at variable 0, 1, ... (bigger exponent at the first difference
// wins). Used descending so the leading term is the map's first entry.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// descending monomial order; zero coefficients are never stored.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(VarSet vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(VarSet vars, const Rat& c);
  static SparsePoly variable(VarSet vars, int var);

  const VarSet& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat, MonomialOrder>& terms() const { return terms_; }

  // Leading = first in descending order.
  const Monomial& leading_monomial() const;
  const Rat& leading_coeff() const;

  void add_term(const Monomial& m, const Rat& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rat& s) const;
  SparsePoly operator-() const;
  bool operator==(const SparsePoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  Rat eval(const std::vector<Rat>& point) const;

  // Evaluation over F_p: coefficients are cleared of denominators first
  // (multiply through by the lcm), so the zero set is preserved for any p
  // not dividing the content data. Throws if p divides a denominator.
  long eval_mod(const std::vector<long>& point, long p) const;

  SparsePoly derivative(int var) const;

  // Substitute each variable by a polynomial over a target VarSet.
  SparsePoly substitute(const VarSet& target,
                        const std::vector<SparsePoly>& images) const;

  // gcd of |numerators| / lcm of denominators; sign chosen so the leading
  // coefficient is positive. Zero polynomial -> 0.
  Rat content() const;
  // this / content: integer primitive with positive leading coefficient.
  SparsePoly normalized() const;

  // Per-factor weights for X-polynomials: in factor k each variable X^I
  // carries weight +1 if bit k of I is 0, else -1; monomials must agree for
  // the poly to be homogeneous of a weight (nullopt otherwise).
  std::optional<std::vector<int>> multiweight() const;

  std::string to_json() const;
  static SparsePoly from_json(const std::string& text);
  std::string to_text() const;  // human-readable, for logs and README demos

 private:
  VarSet vars_;
  std::map<Monomial, Rat, MonomialOrder> terms_;
};

class HyperTensor;

// Exact substitution X^I <- C_I. Rejects a varset mismatch (f must be over
// X-vars with f's n equal to z's).
Rat eval_on_tensor(const SparsePoly& f, const HyperTensor& z);

}  // namespace pmv
