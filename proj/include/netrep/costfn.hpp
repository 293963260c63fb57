#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrep/lattice.hpp"
#include "netrep/rational.hpp"

namespace netrep {

// Dense table of extended rationals over D^n. The label order given at
// construction is part of the function's identity: encodings and lattice
// properties read labels positionally (first label is the bottom/zero
// element where one is needed).
class CostFunction {
 public:
  CostFunction(std::vector<std::string> domain, int arity, std::vector<ExtRat> table);

  static CostFunction constant(std::vector<std::string> domain, int arity, ExtRat v);

  int arity() const { return arity_; }
  int domain_size() const { return static_cast<int>(domain_.size()); }
  const std::vector<std::string>& domain() const { return domain_; }
  std::size_t table_size() const { return table_.size(); }

  const ExtRat& at(const Point& x) const { return table_[index_of_point(x)]; }
  ExtRat& at(const Point& x) { return table_[index_of_point(x)]; }
  const ExtRat& at_index(std::size_t idx) const { return table_.at(idx); }
  ExtRat& at_index(std::size_t idx) { return table_.at(idx); }

  // Row-major: the first coordinate is most significant, so index order is
  // lexicographic point order.
  std::size_t index_of_point(const Point& x) const;
  Point point_of_index(std::size_t idx) const;

  int label_index(const std::string& name) const;
  std::vector<Point> finite_points() const;  // dom f in lexicographic order

  bool same_domain(const CostFunction& other) const { return domain_ == other.domain_; }
  friend bool operator==(const CostFunction& a, const CostFunction& b) {
    return a.domain_ == b.domain_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> domain_;
  int arity_;
  std::vector<ExtRat> table_;
};

enum class Property {
  Submodular,
  Ksubmodular,
  DiamondSubmodular,
  MonotoneNondecreasing,
  MonotoneNonincreasing,
};

Property property_from_string(const std::string& s, int* k_out);
std::string property_to_string(Property p, int k);

struct PropertyCheck {
  bool holds = false;
  // For the pairwise inequalities: the lexicographically first violating
  // (x, y). For monotonicity: (lower point, higher point) of the first
  // violating coordinate step.
  std::optional<std::pair<Point, Point>> violation;
};

// Inequalities with +inf on the left-hand side hold vacuously; a finite
// left-hand side with +inf on the right is a violation.
PropertyCheck check_property(const CostFunction& f, Property p, int k = 0);

// alpha*f + beta pointwise, alpha >= 0; +inf entries stay +inf.
CostFunction scale_shift(const CostFunction& f, const Rat& alpha, const Rat& beta);

// h(x_1..x_n) = f(x_{s1(0)},...) + g(x_{s2(0)},...); s1, s2 are 0-based
// total maps into [0, n).
CostFunction add(const CostFunction& f, const CostFunction& g, const std::vector<int>& s1,
                 const std::vector<int>& s2, int n);

// Minimizes out the last `drop` coordinates; min over an all-inf slice is +inf.
CostFunction partial_min(const CostFunction& f, int drop);

// f_bar(x) = f(x_bar) on two-label domains; an involution.
CostFunction complement_function(const CostFunction& f);

// Weighted equality relation on an arbitrary label list.
CostFunction weighted_equality(std::vector<std::string> domain);

// Named fixture tables. Names: and2, and3, bisub3, ksub2 (takes k),
// diamond_distance (takes k), h0, h1, h2, weighted_equality (two labels 0/1).
CostFunction builtin_function(const std::string& name, int k = 0);

// Global minimum and lexicographically least argmin; (+inf, lex-least point)
// when dom f is empty.
std::pair<ExtRat, Point> brute_force_min(const CostFunction& f);

}  // namespace netrep
