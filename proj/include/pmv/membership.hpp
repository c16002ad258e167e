#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pmv/schur_gen.hpp"
#include "pmv/tensor.hpp"

namespace pmv {

struct MembershipReport {
  std::string variety;  // "principal_minors", "tangential" or "module_span"
  int n = 0;
  bool member = false;
  // Lowest id of a non-vanishing equation when member == false.
  std::optional<int> witness_id;
  std::optional<Rat> witness_value;
  // Deterministic: witness_id + 1 when a witness exists, the full count
  // otherwise (equations are evaluated in id order).
  int polys_evaluated = 0;
  // True only for the randomized orbit test; the exhaustive checks are
  // exact.
  bool probabilistic = false;

  std::string to_json() const;
};

// Evaluates every element of hd_module(n) on z (ids as in the basis).
// Rejects the zero tensor and n < 3.
MembershipReport is_on_principal_minor_variety(const HyperTensor& z,
                                               int jobs = 1);

// Evaluates hd_module(n) followed by cubic_module(n) (cubic ids continue
// after the hd ids). with_quadric additionally appends wedge_quadric(4)
// as one more equation and is only accepted at n = 4.
MembershipReport is_on_tangential(const HyperTensor& z, int jobs = 1,
                                  bool with_quadric = false);

// Monte-Carlo test that h vanishes on the full orbit closure through z:
// evaluates h(apply_group(g_i, z)) for trials group elements, g_0 = identity
// and the rest drawn from the seeded sampler. member == false on the first nonzero
// value (witness_id = trial index); member == true is labelled
// probabilistic.
MembershipReport randomized_orbit_vanishing(const SparsePoly& h,
                                            const HyperTensor& z, int trials,
                                            std::uint64_t seed);

// Process-wide basis cache; also persists to $PMV_CACHE_DIR when set.
const ModuleBasis& cached_module_basis(int n, Family family, int jobs = 1);

}  // namespace pmv
