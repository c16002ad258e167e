#include "pmv/poly.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "pmv/multi_index.hpp"
#include "pmv/tensor.hpp"

namespace pmv {

int VarSet::count() const {
  switch (kind) {
    case Kind::X:
      return 1 << n;
    case Kind::A:
      return n * (n + 1) / 2 + 1;
    case Kind::UVW:
      return 3;
    case Kind::custom:
      return static_cast<int>(names.size());
  }
  return 0;
}

std::string VarSet::name(int var) const {
  if (var < 0 || var >= count()) throw std::invalid_argument("variable id out of range");
  switch (kind) {
    case Kind::X:
      return mi_to_string(static_cast<uint32_t>(var), n);
    case Kind::A: {
      if (var == count() - 1) return "t";
      int id = var;
      for (int i = 1; i <= n; ++i) {
        int row_len = n - i + 1;
        if (id < row_len)
          return "a_" + std::to_string(i) + "_" + std::to_string(i + id);
        id -= row_len;
      }
      throw std::logic_error("unreachable");
    }
    case Kind::UVW:
      return var == 0 ? "u" : var == 1 ? "v" : "w";
    case Kind::custom:
      return names[var];
  }
  throw std::logic_error("unreachable");
}

int VarSet::var_from_name(const std::string& s) const {
  switch (kind) {
    case Kind::X:
      return static_cast<int>(mi_from_string(s, n));
    case Kind::A: {
      if (s == "t") return count() - 1;
      if (s.size() >= 5 && s[0] == 'a' && s[1] == '_') {
        size_t sep = s.find('_', 2);
        if (sep != std::string::npos) {
          int i = std::stoi(s.substr(2, sep - 2));
          int j = std::stoi(s.substr(sep + 1));
          if (i >= 1 && j >= i && j <= n)
            return (i - 1) * n - (i - 1) * i / 2 + (j - i) + (i - 1);
        }
      }
      break;
    }
    case Kind::UVW:
      if (s == "u") return 0;
      if (s == "v") return 1;
      if (s == "w") return 2;
      break;
    case Kind::custom:
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
      break;
  }
  throw std::invalid_argument("unknown variable name: " + s);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // merged walk over the sorted exponent lists; a missing variable is
  // exponent 0
  size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    int va = i < a.exps.size() ? a.exps[i].first : INT32_MAX;
    int vb = j < b.exps.size() ? b.exps[j].first : INT32_MAX;
    if (va < vb) return true;   // a positive where b is zero
    if (vb < va) return false;
    if (a.exps[i].second != b.exps[j].second)
      return a.exps[i].second > b.exps[j].second;
    ++i, ++j;
  }
  return false;
}

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps.reserve(a.exps.size() + b.exps.size());
  size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    int va = i < a.exps.size() ? a.exps[i].first : INT32_MAX;
    int vb = j < b.exps.size() ? b.exps[j].first : INT32_MAX;
    if (va < vb)
      r.exps.push_back(a.exps[i++]);
    else if (vb < va)
      r.exps.push_back(b.exps[j++]);
    else {
      r.exps.emplace_back(va, a.exps[i].second + b.exps[j].second);
      ++i, ++j;
    }
  }
  return r;
}

SparsePoly SparsePoly::constant(VarSet vars, const Rat& c) {
  SparsePoly f(std::move(vars));
  if (!rat_is_zero(c)) f.terms_[Monomial{}] = c;
  return f;
}

SparsePoly SparsePoly::variable(VarSet vars, int var) {
  SparsePoly f(std::move(vars));
  if (var < 0 || var >= f.vars_.count())
    throw std::invalid_argument("variable id out of range");
  f.terms_[Monomial{{{var, 1}}}] = Rat(1);
  return f;
}

const Monomial& SparsePoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rat& SparsePoly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void SparsePoly::add_term(const Monomial& m, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (!(vars_ == o.vars_)) throw std::invalid_argument("variable set mismatch");
  SparsePoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  if (!(vars_ == o.vars_)) throw std::invalid_argument("variable set mismatch");
  SparsePoly r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (!(vars_ == o.vars_)) throw std::invalid_argument("variable set mismatch");
  SparsePoly r(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

SparsePoly SparsePoly::operator*(const Rat& s) const {
  SparsePoly r(vars_);
  if (rat_is_zero(s)) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * s;
  return r;
}

SparsePoly SparsePoly::operator-() const { return *this * Rat(-1); }

static Rat rat_pow(const Rat& base, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Rat SparsePoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != vars_.count())
    throw std::invalid_argument("point dimension mismatch");
  Rat sum(0);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (const auto& [var, e] : m.exps) {
      if (rat_is_zero(point[var])) {
        v = 0;
        break;
      }
      v *= rat_pow(point[var], e);
    }
    sum += v;
  }
  return sum;
}

long SparsePoly::eval_mod(const std::vector<long>& point, long p) const {
  if (static_cast<int>(point.size()) != vars_.count())
    throw std::invalid_argument("point dimension mismatch");
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  mpz_class lcm_den(1);
  for (const auto& [m, c] : terms_) {
    (void)m;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (mpz_divisible_ui_p(lcm_den.get_mpz_t(), p))
    throw std::runtime_error("characteristic " + std::to_string(p) +
                             " divides a coefficient denominator");
  long sum = 0;
  for (const auto& [m, c] : terms_) {
    mpz_class ci = c.get_num() * (lcm_den / c.get_den());
    long cr = mpz_fdiv_ui(ci.get_mpz_t(), p);
    unsigned __int128 v = static_cast<unsigned long>(cr);
    for (const auto& [var, e] : m.exps) {
      long x = ((point[var] % p) + p) % p;
      for (int i = 0; i < e; ++i) v = (v * x) % p;
    }
    sum = static_cast<long>((v + sum) % p);
  }
  return sum;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(vars_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp_of(var);
    if (e == 0) continue;
    Monomial d;
    for (const auto& [v, ee] : m.exps) {
      if (v == var) {
        if (ee > 1) d.exps.emplace_back(v, ee - 1);
      } else {
        d.exps.emplace_back(v, ee);
      }
    }
    r.add_term(d, c * e);
  }
  return r;
}

SparsePoly SparsePoly::substitute(const VarSet& target,
                                  const std::vector<SparsePoly>& images) const {
  if (static_cast<int>(images.size()) != vars_.count())
    throw std::invalid_argument("need one image per variable");
  for (const auto& g : images)
    if (!(g.vars() == target))
      throw std::invalid_argument("image over wrong variable set");
  // powers of each image computed once, on demand
  std::map<int, std::vector<SparsePoly>> powers;
  auto image_pow = [&](int var, int e) -> const SparsePoly& {
    auto& tower = powers[var];
    if (tower.empty()) tower.push_back(SparsePoly::constant(target, Rat(1)));
    while (static_cast<int>(tower.size()) <= e)
      tower.push_back(tower.back() * images[var]);
    return tower[e];
  };
  SparsePoly r(target);
  for (const auto& [m, c] : terms_) {
    SparsePoly term = SparsePoly::constant(target, c);
    for (const auto& [var, e] : m.exps) term = term * image_pow(var, e);
    r = r + term;
  }
  return r;
}

Rat SparsePoly::content() const {
  if (terms_.empty()) return Rat(0);
  mpz_class g(0), l(1);
  for (const auto& [m, c] : terms_) {
    (void)m;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(g, l);
  content.canonicalize();
  if (sgn(leading_coeff()) < 0) content = -content;
  return content;
}

SparsePoly SparsePoly::normalized() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  SparsePoly r(vars_);
  for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff / c;
  return r;
}

std::optional<std::vector<int>> SparsePoly::multiweight() const {
  if (vars_.kind != VarSet::Kind::X || terms_.empty()) return std::nullopt;
  int n = vars_.n;
  std::optional<std::vector<int>> result;
  for (const auto& [m, c] : terms_) {
    (void)c;
    std::vector<int> w(n, 0);
    for (const auto& [var, e] : m.exps)
      for (int k = 1; k <= n; ++k)
        w[k - 1] += e * (mi_bit(static_cast<uint32_t>(var), n, k) ? -1 : 1);
    if (!result)
      result = std::move(w);
    else if (*result != w)
      return std::nullopt;
  }
  return result;
}

std::string SparsePoly::to_json() const {
  nlohmann::ordered_json j;
  switch (vars_.kind) {
    case VarSet::Kind::X:
      j["vars"] = "X";
      j["n"] = vars_.n;
      break;
    case VarSet::Kind::A:
      j["vars"] = "A";
      j["n"] = vars_.n;
      break;
    case VarSet::Kind::UVW:
      j["vars"] = "uvw";
      break;
    case VarSet::Kind::custom:
      j["vars"] = "custom";
      j["names"] = vars_.names;
      break;
  }
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json t;
    t["c"] = rat_str(c);
    auto e = nlohmann::ordered_json::object();
    for (const auto& [var, ex] : m.exps) e[vars_.name(var)] = ex;
    t["e"] = e;
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

SparsePoly SparsePoly::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("vars") || !j["vars"].is_string())
    throw std::invalid_argument("polynomial JSON needs string \"vars\"");
  std::string kind = j["vars"].get<std::string>();
  VarSet vs;
  if (kind == "X")
    vs = VarSet::X(j.at("n").get<int>());
  else if (kind == "A")
    vs = VarSet::A(j.at("n").get<int>());
  else if (kind == "uvw")
    vs = VarSet::UVW();
  else if (kind == "custom")
    vs = VarSet::custom(j.at("names").get<std::vector<std::string>>());
  else
    throw std::invalid_argument("unknown variable set kind: " + kind);
  SparsePoly f(vs);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial JSON needs array \"terms\"");
  for (const auto& t : j["terms"]) {
    Rat c = rat_parse(t.at("c").get<std::string>());
    Monomial m;
    for (auto& [name, ex] : t.at("e").items())
      m.exps.emplace_back(vs.var_from_name(name), ex.get<int>());
    std::sort(m.exps.begin(), m.exps.end());
    for (const auto& [var, e] : m.exps)
      if (e <= 0) throw std::invalid_argument("exponents must be positive");
    for (size_t i = 1; i < m.exps.size(); ++i)
      if (m.exps[i].first == m.exps[i - 1].first)
        throw std::invalid_argument("repeated variable in a monomial");
    f.add_term(m, c);
  }
  return f;
}

std::string SparsePoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat ac = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool need_coeff = (ac != Rat(1)) || m.exps.empty();
    if (need_coeff) out += rat_str(ac);
    bool started = need_coeff;
    for (const auto& [var, e] : m.exps) {
      if (started) out += "*";
      out += vars_.name(var);
      if (e > 1) out += "^" + std::to_string(e);
      started = true;
    }
  }
  return out;
}

Rat eval_on_tensor(const SparsePoly& f, const HyperTensor& z) {
  if (f.vars().kind != VarSet::Kind::X || f.vars().n != z.n())
    throw std::invalid_argument("polynomial is not over this tensor's coordinates");
  Rat sum(0);
  for (const auto& [m, c] : f.terms()) {
    Rat v = c;
    for (const auto& [var, e] : m.exps) {
      const Rat& x = z.coeff(static_cast<uint32_t>(var));
      if (rat_is_zero(x)) {
        v = 0;
        break;
      }
      v *= rat_pow(x, e);
    }
    sum += v;
  }
  return sum;
}

}  // namespace pmv
