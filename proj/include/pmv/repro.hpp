#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pmv {

// One reproducible check: name plus a runner returning pass/fail and a
// short detail line. Shared between the `reproduce` CLI subcommand and the
// acceptance binary so both execute the identical code path.
struct ReproCheck {
  std::string name;
  std::function<bool(std::string& detail)> run;
};

// The fixed suite of checks against the published displays and identities:
// quartic/cubic expansions, pullback identities, the u,v,w reductions, and
// the simple binomial comparison.
std::vector<ReproCheck> paper_suite();

}  // namespace pmv
