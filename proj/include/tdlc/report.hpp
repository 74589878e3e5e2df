#pragma once

#include <tdlc/numbers.hpp>
#include <tdlc/verdict.hpp>

#include <string>

namespace tdlc {

// Resource bounds are plain parameters, never ambient globals.
struct Budgets {
  long max_depth = 8;      // tidying-above descent depth
  long window = 3;         // consecutive equal indices before certifying
  long max_level = 4;      // p-adic congruence level cap
  long search_radius = 32; // tree displacement-descent radius
  long power_bound = 64;   // periodicity power search bound

  Budgets scaled(double m) const {
    Budgets b = *this;
    auto s = [m](long v) { return v < 1 ? v : static_cast<long>(v * m); };
    b.max_depth = s(max_depth);
    b.max_level = s(max_level);
    b.search_radius = s(search_radius);
    b.power_bound = s(power_bound);
    return b;
  }
};

// Result of a backend plus/minus part computation. `exact` means `part`
// (plus `closed_form` when the true subgroup is not finitely representable
// in the payload type) pins the group down completely; otherwise `part`
// is the finite-depth intersection only.
template <class Sub>
struct PlusPart {
  Sub part;
  bool exact = false;
  long truncation_depth = 0;
  std::string closed_form;
};

struct LCriterionResult {
  Verdict verdict;          // is L_U <= U ?
  std::string description;  // finite description of the L-group or its closure
};

}  // namespace tdlc
