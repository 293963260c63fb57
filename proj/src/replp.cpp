#include "netrep/replp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "netrep/lattice.hpp"

namespace netrep {

namespace {

constexpr int kMaxKn = 10;

int encoded_bits(const CostFunction& f, const Encoding& enc) {
  if (f.domain() != enc.domain()) {
    throw std::invalid_argument("function and encoding domains do not match");
  }
  const int kn = f.arity() * enc.k();
  if (kn > kMaxKn) {
    throw std::invalid_argument("kn = " + std::to_string(kn) + " exceeds the supported bound " +
                                std::to_string(kMaxKn));
  }
  return kn;
}

}  // namespace

std::vector<std::uint64_t> dom_closure(const CostFunction& f, const Encoding& enc) {
  const int kn = encoded_bits(f, enc);
  (void)kn;
  std::set<std::uint64_t> closed;
  std::vector<std::uint64_t> work;
  for (const Point& x : f.finite_points()) {
    const std::uint64_t v = enc.encode_tuple(x);
    if (closed.insert(v).second) work.push_back(v);
  }
  while (!work.empty()) {
    const std::uint64_t v = work.back();
    work.pop_back();
    auto push = [&](std::uint64_t u) {
      if (closed.insert(u).second) work.push_back(u);
    };
    push(enc.retract_blocks(v, f.arity()));
    for (const std::uint64_t u : std::vector<std::uint64_t>(closed.begin(), closed.end())) {
      push(u & v);
      push(u | v);
    }
  }
  return {closed.begin(), closed.end()};
}

RepSystem build_system(const CostFunction& f, const Encoding& enc, bool full_dom) {
  const int kn = encoded_bits(f, enc);
  RepSystem out;
  out.kn = kn;
  if (full_dom) {
    for (std::uint64_t v = 0; v < (1ULL << kn); ++v) out.dom.push_back(v);
  } else {
    out.dom = dom_closure(f, enc);
  }
  std::map<std::uint64_t, int> var;
  for (std::size_t i = 0; i < out.dom.size(); ++i) var[out.dom[i]] = static_cast<int>(i);

  LinSystem& sys = out.sys;
  sys.num_vars = static_cast<int>(out.dom.size());

  // g(sigma(x)) = f(x) on dom f.
  for (const Point& x : f.finite_points()) {
    const std::uint64_t v = enc.encode_tuple(x);
    SparseRow row;
    row.a.emplace_back(var.at(v), Rat(1));
    row.b = f.at(x).value();
    sys.eq.push_back(std::move(row));
    out.eq_labels.push_back("g(" + bits_to_string(v, kn) + ")");
  }
  out.stats.eq_rows = static_cast<int>(sys.eq.size());

  // g(u) + g(v) >= g(u & v) + g(u | v) for every unordered pair.
  auto add_sparse = [](std::map<int, Rat>& coeff, int idx, int delta) {
    coeff[idx] += delta;
  };
  for (std::size_t i = 0; i < out.dom.size(); ++i) {
    for (std::size_t j = i + 1; j < out.dom.size(); ++j) {
      const std::uint64_t u = out.dom[i];
      const std::uint64_t v = out.dom[j];
      std::map<int, Rat> coeff;
      add_sparse(coeff, var.at(u), +1);
      add_sparse(coeff, var.at(v), +1);
      add_sparse(coeff, var.at(u & v), -1);
      add_sparse(coeff, var.at(u | v), -1);
      SparseRow row;
      for (const auto& [idx, c] : coeff) {
        if (c != 0) row.a.emplace_back(idx, c);
      }
      row.b = 0;
      sys.ge.push_back(std::move(row));
      out.ge_labels.push_back("pair(" + bits_to_string(u, kn) + "," + bits_to_string(v, kn) + ")");
    }
  }
  out.stats.pair_rows = static_cast<int>(sys.ge.size());

  // g(v) >= g(retract(v)).
  for (const std::uint64_t v : out.dom) {
    const std::uint64_t rv = enc.retract_blocks(v, f.arity());
    std::map<int, Rat> coeff;
    add_sparse(coeff, var.at(v), +1);
    add_sparse(coeff, var.at(rv), -1);
    SparseRow row;
    for (const auto& [idx, c] : coeff) {
      if (c != 0) row.a.emplace_back(idx, c);
    }
    row.b = 0;
    sys.ge.push_back(std::move(row));
    out.ge_labels.push_back("rho(" + bits_to_string(v, kn) + ")");
  }
  out.stats.rho_rows = static_cast<int>(sys.ge.size()) - out.stats.pair_rows;
  out.stats.num_vars = sys.num_vars;
  return out;
}

RepDecision decide_representable(const CostFunction& f, const Encoding& enc, bool full_dom) {
  const int kn = encoded_bits(f, enc);
  RepDecision decision;
  decision.kn = kn;

  // Any admissible g is finite on the whole closure (finite sums force
  // finite meet/join values, and the retraction row forces g(retract(v))
  // finite). A point outside dom f whose image lands in the closure
  // therefore rules out every candidate before the LP.
  if (!full_dom) {
    const auto dom = dom_closure(f, enc);
    const std::set<std::uint64_t> dom_set(dom.begin(), dom.end());
    for (std::size_t idx = 0; idx < f.table_size(); ++idx) {
      if (f.at_index(idx).is_inf()) {
        const Point x = f.point_of_index(idx);
        if (dom_set.count(enc.encode_tuple(x))) {
          RepSystem built = build_system(f, enc, full_dom);
          decision.feasible = false;
          decision.conflict = DomConflict{x};
          decision.stats = built.stats;
          decision.dom = std::move(built.dom);
          return decision;
        }
      }
    }
  }

  RepSystem built = build_system(f, enc, full_dom);
  decision.stats = built.stats;
  decision.dom = built.dom;

  FeasResult lp = feasible(built.sys);
  if (lp.feasible()) {
    CostFunction g = CostFunction::constant({"0", "1"}, kn, ExtRat::infinity());
    for (std::size_t i = 0; i < built.dom.size(); ++i) {
      g.at_index(built.dom[i]) = ExtRat((*lp.witness)[i]);
    }
    if (!full_dom && !verify_witness(g, f, enc)) {
      throw std::logic_error("decide_representable: witness failed verification");
    }
    decision.feasible = true;
    decision.witness = std::move(g);
  } else {
    decision.feasible = false;
    decision.farkas = std::move(lp.farkas);
  }
  return decision;
}

bool verify_witness(const CostFunction& g, const CostFunction& f, const Encoding& enc) {
  const int kn = f.arity() * enc.k();
  if (g.arity() != kn || g.domain_size() != 2) return false;
  if (!check_property(g, Property::Submodular).holds) return false;
  for (std::size_t idx = 0; idx < f.table_size(); ++idx) {
    const Point x = f.point_of_index(idx);
    if (g.at_index(enc.encode_tuple(x)) != f.at_index(idx)) return false;
  }
  for (std::uint64_t v = 0; v < (1ULL << kn); ++v) {
    const ExtRat& gv = g.at_index(v);
    if (gv.is_inf()) continue;
    const ExtRat& grv = g.at_index(enc.retract_blocks(v, f.arity()));
    if (grv.is_inf() || gv.value() < grv.value()) return false;
  }
  return true;
}

}  // namespace netrep
