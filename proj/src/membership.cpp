#include "pmv/membership.hpp"

#include <fstream>
#include <json.hpp>
#include <mutex>
#include <sstream>

#include "pmv/rng.hpp"
#include "pmv/tensor_ops.hpp"

namespace pmv {

std::string MembershipReport::to_json() const {
  nlohmann::ordered_json j;
  j["variety"] = variety;
  j["n"] = n;
  j["member"] = member;
  j["witness_id"] = witness_id ? nlohmann::ordered_json(*witness_id)
                               : nlohmann::ordered_json(nullptr);
  j["witness_value"] = witness_value ? nlohmann::ordered_json(rat_str(*witness_value))
                                     : nlohmann::ordered_json(nullptr);
  j["polys_evaluated"] = polys_evaluated;
  j["probabilistic"] = probabilistic;
  return j.dump();
}

namespace {

// integer-rescaled copy of the coordinates: zero tests of homogeneous
// equations are unaffected and mpz arithmetic is much cheaper than mpq
struct ScaledTensor {
  const HyperTensor* original;
  std::vector<mpz_class> coords;

  explicit ScaledTensor(const HyperTensor& z) : original(&z) {
    mpz_class l(1);
    for (const auto& [idx, v] : z.coords())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    coords.assign(1u << z.n(), mpz_class(0));
    for (const auto& [idx, v] : z.coords())
      coords[idx] = v.get_num() * (l / v.get_den());
  }

  bool vanishes(const SparsePoly& f) const {
    mpz_class sum(0), term;
    for (const auto& [m, c] : f.terms()) {
      if (c.get_den() != 1)
        // non-integer coefficient (never produced by the generators):
        // give up on the scaling trick for this polynomial
        return rat_is_zero(eval_on_tensor(f, *original));
      term = c.get_num();
      bool dead = false;
      for (const auto& [var, e] : m.exps) {
        const mpz_class& x = coords[static_cast<uint32_t>(var)];
        if (x == 0) {
          dead = true;
          break;
        }
        for (int i = 0; i < e; ++i) term *= x;
      }
      if (!dead) sum += term;
    }
    return sum == 0;
  }
};

MembershipReport scan_equations(const HyperTensor& z,
                                const std::vector<const SparsePoly*>& eqs,
                                const std::string& variety, int jobs) {
  MembershipReport rep;
  rep.variety = variety;
  rep.n = z.n();
  ScaledTensor scaled(z);
  int total = static_cast<int>(eqs.size());
  int witness = -1;

  if (jobs <= 1) {
    for (int i = 0; i < total; ++i) {
      if (!scaled.vanishes(*eqs[i])) {
        witness = i;
        break;
      }
    }
  } else {
    witness = total;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs)
#endif
    for (int i = 0; i < total; ++i) {
      int seen;
#ifdef _OPENMP
#pragma omp atomic read
#endif
      seen = witness;
      if (i >= seen) continue;
      if (!scaled.vanishes(*eqs[i])) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (i < witness) witness = i;
      }
    }
    if (witness == total) witness = -1;
  }

  if (witness < 0) {
    rep.member = true;
    rep.polys_evaluated = total;
  } else {
    rep.member = false;
    rep.witness_id = witness;
    rep.witness_value = eval_on_tensor(*eqs[witness], z);
    rep.polys_evaluated = witness + 1;
  }
  return rep;
}

}  // namespace

const ModuleBasis& cached_module_basis(int n, Family family, int jobs) {
  static std::map<std::pair<int, int>, ModuleBasis> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, static_cast<int>(family));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::string fam = family == Family::hd     ? "hd"
                    : family == Family::cubic ? "cubic"
                                              : "wedge";
  const char* dir = std::getenv("PMV_CACHE_DIR");
  std::string path;
  if (dir && *dir)
    path = std::string(dir) + "/modules-v1-" + fam + "-n" + std::to_string(n) + ".json";

  if (!path.empty()) {
    std::ifstream in(path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        ModuleBasis loaded = ModuleBasis::from_json(ss.str());
        if (loaded.spec.n == n && loaded.spec.family == family)
          return cache.emplace(key, std::move(loaded)).first->second;
      } catch (const std::exception&) {
        // unreadable cache entry: fall through and regenerate
      }
    }
  }

  ModuleBasis fresh = family == Family::hd     ? hd_module(n, jobs)
                      : family == Family::cubic ? cubic_module(n, jobs)
                                                : wedge_module(n);
  if (!path.empty()) {
    std::ofstream out(path);
    if (out) out << fresh.to_json();
  }
  return cache.emplace(key, std::move(fresh)).first->second;
}

MembershipReport is_on_principal_minor_variety(const HyperTensor& z, int jobs) {
  if (z.n() < 3)
    throw std::invalid_argument("membership tests need n >= 3");
  if (z.is_zero()) throw std::invalid_argument("zero tensor is not a projective point");
  const ModuleBasis& hd = cached_module_basis(z.n(), Family::hd, jobs);
  std::vector<const SparsePoly*> eqs;
  eqs.reserve(hd.elements.size());
  for (const auto& el : hd.elements) eqs.push_back(&el.poly);
  return scan_equations(z, eqs, "principal_minors", jobs);
}

MembershipReport is_on_tangential(const HyperTensor& z, int jobs,
                                  bool with_quadric) {
  if (z.n() < 3)
    throw std::invalid_argument("membership tests need n >= 3");
  if (z.is_zero()) throw std::invalid_argument("zero tensor is not a projective point");
  if (with_quadric && z.n() != 4)
    throw std::invalid_argument("the alternating quadric only exists at n = 4");
  const ModuleBasis& hd = cached_module_basis(z.n(), Family::hd, jobs);
  const ModuleBasis& cubic = cached_module_basis(z.n(), Family::cubic, jobs);
  std::vector<const SparsePoly*> eqs;
  eqs.reserve(hd.elements.size() + cubic.elements.size() + 1);
  for (const auto& el : hd.elements) eqs.push_back(&el.poly);
  for (const auto& el : cubic.elements) eqs.push_back(&el.poly);
  const ModuleBasis* wedge = nullptr;
  if (with_quadric) {
    wedge = &cached_module_basis(z.n(), Family::wedge, jobs);
    for (const auto& el : wedge->elements) eqs.push_back(&el.poly);
  }
  return scan_equations(z, eqs, "tangential", jobs);
}

MembershipReport randomized_orbit_vanishing(const SparsePoly& h,
                                            const HyperTensor& z, int trials,
                                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  MembershipReport rep;
  rep.variety = "module_span";
  rep.n = z.n();
  Sampler s(seed);
  for (int i = 0; i < trials; ++i) {
    GroupElement g = i == 0 ? GroupElement::identity(z.n())
                            : sample_group_element(s, z.n());
    Rat value = eval_on_tensor(h, apply_group(g, z));
    if (!rat_is_zero(value)) {
      rep.member = false;
      rep.witness_id = i;
      rep.witness_value = value;
      rep.polys_evaluated = i + 1;
      rep.probabilistic = false;
      return rep;
    }
  }
  rep.member = true;
  rep.polys_evaluated = trials;
  rep.probabilistic = true;
  return rep;
}

}  // namespace pmv
