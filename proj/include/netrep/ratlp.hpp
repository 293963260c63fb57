#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "netrep/rational.hpp"

namespace netrep {

// One linear row: a . x  (= | >=)  b, with sparse coefficients as
// (variable index, coefficient) pairs sorted by index.
struct SparseRow {
  std::vector<std::pair<int, Rat>> a;
  Rat b;
};

// Exact rational feasibility system: equality rows, >= rows, and an
// optional list of variables constrained nonnegative.
struct LinSystem {
  int num_vars = 0;
  std::vector<SparseRow> eq;
  std::vector<SparseRow> ge;
  std::vector<int> nonneg;

  void validate() const;  // throws on malformed rows
};

// Nonnegative multipliers (free sign on equality rows) combining the rows
// into 0 . x >= positive. y_nonneg holds multipliers on the implicit
// x_j >= 0 rows, in the order of LinSystem::nonneg.
struct FarkasCertificate {
  std::vector<Rat> y_eq;
  std::vector<Rat> y_ge;
  std::vector<Rat> y_nonneg;
};

struct FeasResult {
  std::optional<std::vector<Rat>> witness;
  std::optional<FarkasCertificate> farkas;
  bool feasible() const { return witness.has_value(); }
};

// Exact decision with a re-verified witness or Farkas certificate.
// Deterministic: simplex with Bland's rule on the dual-side program, so
// identical inputs give identical outputs.
FeasResult feasible(const LinSystem& sys);

bool verify_feasible(const LinSystem& sys, const std::vector<Rat>& x);
bool verify_farkas(const LinSystem& sys, const FarkasCertificate& cert);

// Solves target = sum lambda_i * gens[i] with lambda >= 0. The witness is
// the lambda vector; infeasibility comes with a Farkas certificate for the
// underlying system.
FeasResult nonneg_combination(const std::vector<Rat>& target,
                              const std::vector<std::vector<Rat>>& gens);

}  // namespace netrep
