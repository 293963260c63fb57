#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrep/costfn.hpp"
#include "netrep/rational.hpp"

namespace netrep {

// Total operation D^m -> D, materialized as a dense table so projections
// can be recognized structurally and tables serialized.
struct OperationTable {
  std::vector<std::string> domain;
  int arity = 0;
  std::vector<std::uint8_t> table;  // label indices, size |D|^arity

  int apply(const std::vector<int>& args) const;
  // Index of the coordinate it projects onto, or -1.
  int projection_index() const;

  static OperationTable projection(std::vector<std::string> domain, int arity, int which);
  static std::size_t table_entries(std::size_t domain_size, int arity);  // throws when too large

  friend bool operator==(const OperationTable& a, const OperationTable& b) {
    return a.domain == b.domain && a.arity == b.arity && a.table == b.table;
  }
};

// Coordinatewise application to m equal-arity points.
Point apply_operation(const OperationTable& phi, const std::vector<Point>& tuples);

struct WeightedPolymorphism {
  int arity = 0;
  std::vector<std::pair<OperationTable, Rat>> support;
};

struct WpolViolation {
  std::string reason;
  std::optional<std::vector<Point>> tuples;  // for superposition failures
  std::optional<int> function_index;
};

struct WpolValidation {
  bool ok = false;
  std::optional<WpolViolation> violation;
};

// Necessary-condition check, not a proof: (a) weights sum to zero, (b)
// negative weights only on projections, (c) the weighted superposition is
// <= 0 for the sampled functions. Tuple enumeration is exhaustive up to
// tuple_budget m-tuples from dom f per function and a seeded pseudorandom
// sample beyond that.
WpolValidation validate_wpol(const WeightedPolymorphism& omega,
                             const std::vector<CostFunction>& sample,
                             std::uint64_t tuple_budget = 1u << 20, std::uint32_t seed = 1);

// sum over the support of weight * f(phi(tuples)), exact. Positive values
// certify nonmembership for any language admitting omega. A +inf value of
// f at a positively weighted operation output counts as +inf (also a
// certificate); a +inf at a negative weight is rejected.
ExtRat refutation_value(const WeightedPolymorphism& omega, const CostFunction& f,
                        const std::vector<Point>& tuples);

struct RefutationTerm {
  std::string op_name;
  Point output;
  Rat weight;
  ExtRat f_value;
  ExtRat contribution;
};

struct RefutationReport {
  std::vector<RefutationTerm> terms;
  ExtRat total;
};

RefutationReport refutation_report(const WeightedPolymorphism& omega,
                                   const std::vector<std::string>& op_names,
                                   const CostFunction& f, const std::vector<Point>& tuples);

struct StandardWpol {
  WeightedPolymorphism omega;
  std::vector<Point> canonical_tuples;   // label indices over the target domain
  std::vector<std::string> op_names;     // aligned with omega.support
  std::string note;                      // construction caveats, if any
};

// Names: omega2 (4-ary, over {0,1,-1}); omega_k with k >= 3 (8-ary, over
// [0,k]). For k > 3 the operation terms only distinguish labels {0,1,2,3};
// larger labels pass through the same unit-block encoding.
StandardWpol standard_wpol(const std::string& name, int k = 0);

}  // namespace netrep
