#include "netrep/costfn.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace netrep {

namespace {

std::size_t pow_size(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (static_cast<std::size_t>(1) << 40) / base) {
      throw std::invalid_argument("cost function table too large");
    }
    r *= base;
  }
  return r;
}

}  // namespace

CostFunction::CostFunction(std::vector<std::string> domain, int arity, std::vector<ExtRat> table)
    : domain_(std::move(domain)), arity_(arity), table_(std::move(table)) {
  if (arity_ < 1) throw std::invalid_argument("arity must be >= 1");
  if (domain_.empty()) throw std::invalid_argument("empty domain");
  std::set<std::string> seen(domain_.begin(), domain_.end());
  if (seen.size() != domain_.size()) throw std::invalid_argument("duplicate domain labels");
  if (table_.size() != pow_size(domain_.size(), arity_)) {
    throw std::invalid_argument("table size does not match |D|^n");
  }
}

CostFunction CostFunction::constant(std::vector<std::string> domain, int arity, ExtRat v) {
  const std::size_t size = pow_size(domain.size(), arity);
  return CostFunction(std::move(domain), arity, std::vector<ExtRat>(size, v));
}

std::size_t CostFunction::index_of_point(const Point& x) const {
  if (static_cast<int>(x.size()) != arity_) throw std::invalid_argument("point arity mismatch");
  std::size_t idx = 0;
  for (int v : x) {
    if (v < 0 || v >= domain_size()) throw std::out_of_range("label index out of range");
    idx = idx * domain_.size() + static_cast<std::size_t>(v);
  }
  return idx;
}

Point CostFunction::point_of_index(std::size_t idx) const {
  Point x(arity_);
  for (int i = arity_ - 1; i >= 0; --i) {
    x[i] = static_cast<int>(idx % domain_.size());
    idx /= domain_.size();
  }
  return x;
}

int CostFunction::label_index(const std::string& name) const {
  for (int i = 0; i < domain_size(); ++i) {
    if (domain_[i] == name) return i;
  }
  throw std::invalid_argument("unknown label '" + name + "'");
}

std::vector<Point> CostFunction::finite_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].is_finite()) out.push_back(point_of_index(i));
  }
  return out;
}

Property property_from_string(const std::string& s, int* k_out) {
  int k = 0;
  std::string base = s;
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    base = s.substr(0, colon);
    k = std::stoi(s.substr(colon + 1));
  }
  if (k_out) *k_out = k;
  if (base == "submodular") return Property::Submodular;
  if (base == "ksubmodular") return Property::Ksubmodular;
  if (base == "diamond_submodular") return Property::DiamondSubmodular;
  if (base == "monotone_nondecreasing") return Property::MonotoneNondecreasing;
  if (base == "monotone_nonincreasing") return Property::MonotoneNonincreasing;
  throw std::invalid_argument("unknown property '" + s + "'");
}

std::string property_to_string(Property p, int k) {
  switch (p) {
    case Property::Submodular: return "submodular";
    case Property::Ksubmodular: return "ksubmodular:" + std::to_string(k);
    case Property::DiamondSubmodular: return "diamond_submodular:" + std::to_string(k);
    case Property::MonotoneNondecreasing: return "monotone_nondecreasing";
    case Property::MonotoneNonincreasing: return "monotone_nonincreasing";
  }
  return "";
}

namespace {

// f(x) + f(y) >= f(m) + f(j) under the inf conventions.
bool pair_inequality_holds(const ExtRat& fx, const ExtRat& fy, const ExtRat& fm,
                           const ExtRat& fj) {
  const ExtRat lhs = fx + fy;
  if (lhs.is_inf()) return true;
  const ExtRat rhs = fm + fj;
  if (rhs.is_inf()) return false;
  return lhs.value() >= rhs.value();
}

PropertyCheck check_pairwise(const CostFunction& f, const LatticeFamily& fam) {
  const std::size_t size = f.table_size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      const Point x = f.point_of_index(i);
      const Point y = f.point_of_index(j);
      const auto [m, jo] = meet_join(fam, x, y);
      if (!pair_inequality_holds(f.at_index(i), f.at_index(j), f.at(m), f.at(jo))) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {true, std::nullopt};
}

PropertyCheck check_monotone(const CostFunction& f, bool nondecreasing) {
  // Coordinate steps in the label order given at construction.
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    const Point x = f.point_of_index(i);
    for (int c = 0; c < f.arity(); ++c) {
      if (x[c] + 1 >= f.domain_size()) continue;
      Point y = x;
      y[c] = x[c] + 1;
      const ExtRat& lo = f.at(x);
      const ExtRat& hi = f.at(y);
      // Nondecreasing wants hi >= lo; inf on the left holds vacuously.
      const ExtRat& lhs = nondecreasing ? hi : lo;
      const ExtRat& rhs = nondecreasing ? lo : hi;
      if (lhs.is_inf()) continue;
      if (rhs.is_inf() || lhs.value() < rhs.value()) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

PropertyCheck check_property(const CostFunction& f, Property p, int k) {
  switch (p) {
    case Property::Submodular:
      if (f.domain_size() != 2) throw std::invalid_argument("submodular needs a 2-label domain");
      return check_pairwise(f, LatticeFamily::boolean());
    case Property::Ksubmodular:
      if (f.domain_size() != k + 1) {
        throw std::invalid_argument("ksubmodular(k) needs k+1 labels");
      }
      return check_pairwise(f, LatticeFamily::ksub(k));
    case Property::DiamondSubmodular:
      if (f.domain_size() != k + 2) {
        throw std::invalid_argument("diamond_submodular(k) needs k+2 labels");
      }
      return check_pairwise(f, LatticeFamily::diamond(k));
    case Property::MonotoneNondecreasing:
      return check_monotone(f, true);
    case Property::MonotoneNonincreasing:
      return check_monotone(f, false);
  }
  throw std::logic_error("unreachable");
}

CostFunction scale_shift(const CostFunction& f, const Rat& alpha, const Rat& beta) {
  if (alpha < 0) throw std::invalid_argument("scale_shift: alpha must be >= 0");
  std::vector<ExtRat> table(f.table_size());
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    const ExtRat& v = f.at_index(i);
    table[i] = v.is_inf() ? ExtRat::infinity() : ExtRat(alpha * v.value() + beta);
  }
  return CostFunction(f.domain(), f.arity(), std::move(table));
}

CostFunction add(const CostFunction& f, const CostFunction& g, const std::vector<int>& s1,
                 const std::vector<int>& s2, int n) {
  if (!f.same_domain(g)) throw std::invalid_argument("add: domain mismatch");
  if (static_cast<int>(s1.size()) != f.arity() || static_cast<int>(s2.size()) != g.arity()) {
    throw std::invalid_argument("add: map arity mismatch");
  }
  for (int v : s1) {
    if (v < 0 || v >= n) throw std::out_of_range("add: s1 index out of range");
  }
  for (int v : s2) {
    if (v < 0 || v >= n) throw std::out_of_range("add: s2 index out of range");
  }
  CostFunction h = CostFunction::constant(f.domain(), n, ExtRat(0));
  for (std::size_t idx = 0; idx < h.table_size(); ++idx) {
    const Point x = h.point_of_index(idx);
    Point xf(f.arity()), xg(g.arity());
    for (int i = 0; i < f.arity(); ++i) xf[i] = x[s1[i]];
    for (int i = 0; i < g.arity(); ++i) xg[i] = x[s2[i]];
    h.at_index(idx) = f.at(xf) + g.at(xg);
  }
  return h;
}

CostFunction partial_min(const CostFunction& f, int drop) {
  if (drop < 0 || drop >= f.arity()) throw std::invalid_argument("partial_min: bad drop count");
  if (drop == 0) return f;
  const int n = f.arity() - drop;
  CostFunction h = CostFunction::constant(f.domain(), n, ExtRat::infinity());
  std::size_t tail = 1;
  for (int i = 0; i < drop; ++i) tail *= f.domain_size();
  for (std::size_t idx = 0; idx < h.table_size(); ++idx) {
    ExtRat best = ExtRat::infinity();
    for (std::size_t t = 0; t < tail; ++t) {
      const ExtRat& v = f.at_index(idx * tail + t);
      if (v < best) best = v;
    }
    h.at_index(idx) = best;
  }
  return h;
}

CostFunction complement_function(const CostFunction& f) {
  if (f.domain_size() != 2) throw std::invalid_argument("complement: 2-label domains only");
  std::vector<ExtRat> table(f.table_size());
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    Point x = f.point_of_index(i);
    for (int& v : x) v = 1 - v;
    table[f.index_of_point(x)] = f.at_index(i);
  }
  return CostFunction(f.domain(), f.arity(), std::move(table));
}

CostFunction weighted_equality(std::vector<std::string> domain) {
  const int d = static_cast<int>(domain.size());
  CostFunction f = CostFunction::constant(std::move(domain), 2, ExtRat::infinity());
  for (int a = 0; a < d; ++a) f.at_index(static_cast<std::size_t>(a) * d + a) = ExtRat(0);
  return f;
}

CostFunction builtin_function(const std::string& name, int k) {
  if (name == "and2" || name == "and3") {
    const int n = (name == "and2") ? 2 : 3;
    CostFunction f = CostFunction::constant({"0", "1"}, n, ExtRat(0));
    f.at_index(f.table_size() - 1) = ExtRat(1);  // all-ones point
    return f;
  }
  if (name == "bisub3") {
    CostFunction f = CostFunction::constant({"0", "1", "-1"}, 3, ExtRat(0));
    f.at({0, 0, 0}) = ExtRat(Rat(-1));
    f.at({0, 1, 1}) = ExtRat(1);
    f.at({1, 0, 1}) = ExtRat(1);
    f.at({1, 1, 0}) = ExtRat(1);
    f.at({1, 1, 1}) = ExtRat(2);
    return f;
  }
  if (name == "ksub2") {
    if (k < 1) throw std::invalid_argument("ksub2 needs k >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
    CostFunction f = CostFunction::constant(std::move(labels), 2, ExtRat(0));
    f.at({0, 0}) = ExtRat(Rat(-1));
    f.at({1, 1}) = ExtRat(1);
    return f;
  }
  if (name == "diamond_distance") {
    if (k < 1) throw std::invalid_argument("diamond_distance needs k >= 1");
    const LatticeFamily fam = LatticeFamily::diamond(k);
    CostFunction f = CostFunction::constant(fam.labels(), 2, ExtRat(0));
    const int bot = 0;
    const int top = k + 1;
    for (int a = 0; a < fam.label_count(); ++a) {
      for (int b = 0; b < fam.label_count(); ++b) {
        int d;
        if (a == b) {
          d = 0;
        } else if ((a == bot || a == top) && (b != bot && b != top)) {
          d = 1;
        } else if ((b == bot || b == top) && (a != bot && a != top)) {
          d = 1;
        } else {
          d = 2;  // bot--top, or two distinct atoms
        }
        f.at({a, b}) = ExtRat(d);
      }
    }
    return f;
  }
  if (name == "h0" || name == "h1") {
    CostFunction f = CostFunction::constant({"0", "1"}, 1, ExtRat(0));
    f.at({name == "h0" ? 1 : 0}) = ExtRat::infinity();
    return f;
  }
  if (name == "h2") return weighted_equality({"0", "1"});
  if (name == "weighted_equality") return weighted_equality({"0", "1"});
  throw std::invalid_argument("unknown builtin function '" + name + "'");
}

std::pair<ExtRat, Point> brute_force_min(const CostFunction& f) {
  ExtRat best = ExtRat::infinity();
  std::size_t arg = 0;
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    if (f.at_index(i) < best) {
      best = f.at_index(i);
      arg = i;
    }
  }
  return {best, f.point_of_index(arg)};
}

}  // namespace netrep
