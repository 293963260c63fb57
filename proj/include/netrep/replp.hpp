#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrep/costfn.hpp"
#include "netrep/encoding.hpp"
#include "netrep/ratlp.hpp"

namespace netrep {

// Decides membership of f in the class of functions of the form
// g(sigma(x_1), ..., sigma(x_n)) for a kn-ary submodular g with
// g(retract(v)) <= g(v). kn is capped at 10 (the constraint count grows as
// 2^{2kn}).

// Smallest set of kn-bit assignments containing the sigma-image of dom f
// and closed under componentwise and/or and blockwise retraction, sorted.
std::vector<std::uint64_t> dom_closure(const CostFunction& f, const Encoding& enc);

struct RepStats {
  int num_vars = 0;
  int eq_rows = 0;
  int pair_rows = 0;
  int rho_rows = 0;
};

struct RepSystem {
  LinSystem sys;                 // rows: eq then ge = [pairs..., rho...]
  std::vector<std::uint64_t> dom;
  RepStats stats;
  std::vector<std::string> eq_labels;  // one per eq row
  std::vector<std::string> ge_labels;  // one per ge row
  int kn = 0;
};

// Variables g(v) for v in the chosen dom; equality rows pin g on the
// sigma-image of dom f, >= rows are all unordered submodular pairs plus one
// retraction row per dom element. full_dom replaces the minimal closure by
// all of {0,1}^{kn} (used to cross-check that the minimal dom loses
// nothing).
RepSystem build_system(const CostFunction& f, const Encoding& enc, bool full_dom = false);

struct DomConflict {
  Point x;  // f(x) = +inf but the closure forces g finite at sigma(x)
};

struct RepDecision {
  bool feasible = false;
  std::optional<CostFunction> witness;  // g on {0,1}^{kn}, +inf outside dom
  std::optional<FarkasCertificate> farkas;
  std::optional<DomConflict> conflict;
  RepStats stats;
  std::vector<std::uint64_t> dom;
  int kn = 0;
};

RepDecision decide_representable(const CostFunction& f, const Encoding& enc,
                                 bool full_dom = false);

// Checks g submodular, g(sigma(x)) = f(x) for every x (including +inf
// agreement), and g(v) >= g(retract(v)) for all v.
bool verify_witness(const CostFunction& g, const CostFunction& f, const Encoding& enc);

}  // namespace netrep
