#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmv {

struct ZeroSetReport {
  // "equal", "left_in_right" (zero set of the left system strictly inside
  // the right one), "right_in_left", or "incomparable".
  std::string verdict;
  long p = 0;
  int var_count = 0;
  // points scanned = p^var_count
  std::string points_total;
  std::string zeros_left;
  std::string zeros_right;
  std::string only_left;   // points where left vanishes but right does not
  std::string only_right;
  // first scanned point (enumeration order) lying in exactly one of the two
  // zero sets, as (variable name, residue) pairs; empty when verdict is "equal"
  std::vector<std::pair<std::string, long>> counterexample;
  double seconds = 0.0;

  std::string to_json() const;
};

// Exhaustive comparison over F_p^3 of the three u,v,w quartic-pullback
// cubics (or just the first when f1_only) against the binomial pair
// {u - w, v - w}. Rejects p < 5 (small characteristic collides with the
// coefficient content).
ZeroSetReport compare_zero_sets_uvw(long p, bool f1_only = false);

// Exhaustive comparison over symmetric 4x4 matrices with unit t — ten
// entry variables — of all 48 degree-3 module elements pulled back at
// t = 1 against the two off-diagonal binomials
// {a13*a24 - a14*a23, a12*a34 - a14*a23}. drop_ids removes the listed
// basis ids from the left system (shrink sanity: the verdict can only
// move toward right_in_left). Throws when the budget is exceeded.
ZeroSetReport compare_zero_sets_matrix(
    long p, int jobs = 1, std::optional<double> budget_seconds = {},
    const std::vector<int>& drop_ids = {});

}  // namespace pmv
