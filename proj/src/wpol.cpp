#include "netrep/wpol.hpp"

#include <array>
#include <functional>
#include <random>
#include <stdexcept>

#include "netrep/encoding.hpp"

namespace netrep {

int OperationTable::apply(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != arity) throw std::invalid_argument("arity mismatch");
  std::size_t idx = 0;
  for (int a : args) {
    if (a < 0 || a >= static_cast<int>(domain.size())) {
      throw std::out_of_range("label out of range");
    }
    idx = idx * domain.size() + static_cast<std::size_t>(a);
  }
  return table[idx];
}

int OperationTable::projection_index() const {
  for (int which = 0; which < arity; ++which) {
    if (*this == projection(domain, arity, which)) return which;
  }
  return -1;
}

OperationTable OperationTable::projection(std::vector<std::string> domain, int arity, int which) {
  const std::size_t entries = table_entries(domain.size(), arity);
  OperationTable op;
  op.arity = arity;
  op.table.resize(entries);
  std::size_t block = 1;  // index stride of argument `which`
  for (int i = arity - 1; i > which; --i) block *= domain.size();
  for (std::size_t idx = 0; idx < entries; ++idx) {
    op.table[idx] = static_cast<std::uint8_t>((idx / block) % domain.size());
  }
  op.domain = std::move(domain);
  return op;
}

std::size_t OperationTable::table_entries(std::size_t domain_size, int arity) {
  if (domain_size < 1 || domain_size > 250) throw std::invalid_argument("bad domain size");
  std::size_t entries = 1;
  for (int i = 0; i < arity; ++i) {
    entries *= domain_size;
    if (entries > (1u << 23)) {
      throw std::invalid_argument("operation table too large to materialize");
    }
  }
  return entries;
}

Point apply_operation(const OperationTable& phi, const std::vector<Point>& tuples) {
  if (static_cast<int>(tuples.size()) != phi.arity) {
    throw std::invalid_argument("expected one tuple per operation argument");
  }
  const std::size_t n = tuples.front().size();
  for (const Point& t : tuples) {
    if (t.size() != n) throw std::invalid_argument("tuples of unequal arity");
  }
  Point out(n);
  std::vector<int> args(phi.arity);
  for (std::size_t c = 0; c < n; ++c) {
    for (int i = 0; i < phi.arity; ++i) args[i] = tuples[i][c];
    out[c] = phi.apply(args);
  }
  return out;
}

namespace {

// Iterates all |D|^m argument tuples in lexicographic order.
template <typename Fn>
void for_all_tuples(int domain_size, int arity, Fn&& fn) {
  std::vector<int> args(arity, 0);
  while (true) {
    fn(args);
    int pos = arity - 1;
    while (pos >= 0 && args[pos] == domain_size - 1) {
      args[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++args[pos];
  }
}

ExtRat weighted_sum(const WeightedPolymorphism& omega, const CostFunction& f,
                    const std::vector<Point>& tuples) {
  Rat finite_total(0);
  bool has_inf = false;
  for (const auto& [phi, weight] : omega.support) {
    const Point out = apply_operation(phi, tuples);
    const ExtRat& value = f.at(out);
    if (value.is_inf()) {
      if (weight < 0) throw std::invalid_argument("negative weight on a +inf value");
      if (weight > 0) has_inf = true;
      continue;
    }
    finite_total += weight * value.value();
  }
  return has_inf ? ExtRat::infinity() : ExtRat(finite_total);
}

}  // namespace

WpolValidation validate_wpol(const WeightedPolymorphism& omega,
                             const std::vector<CostFunction>& sample,
                             std::uint64_t tuple_budget, std::uint32_t seed) {
  Rat total(0);
  for (const auto& [phi, weight] : omega.support) {
    if (phi.arity != omega.arity) {
      return {false, WpolViolation{"support operation arity mismatch", std::nullopt, std::nullopt}};
    }
    total += weight;
    if (weight < 0 && phi.projection_index() < 0) {
      return {false, WpolViolation{"negative weight on a non-projection", std::nullopt, std::nullopt}};
    }
  }
  if (total != 0) {
    return {false, WpolViolation{"weights do not sum to zero", std::nullopt, std::nullopt}};
  }

  for (std::size_t fi = 0; fi < sample.size(); ++fi) {
    const CostFunction& f = sample[fi];
    if (!omega.support.empty() && f.domain() != omega.support.front().first.domain) {
      return {false, WpolViolation{"sample domain mismatch", std::nullopt, static_cast<int>(fi)}};
    }
    const std::vector<Point> dom = f.finite_points();
    if (dom.empty()) continue;
    const int m = omega.arity;

    auto check = [&](const std::vector<Point>& tuples) -> bool {
      return weighted_sum(omega, f, tuples) <= ExtRat(0);
    };

    // Exhaustive when the tuple space fits the budget, sampled otherwise.
    double space = 1;
    for (int i = 0; i < m; ++i) space *= static_cast<double>(dom.size());
    if (space <= static_cast<double>(tuple_budget)) {
      bool ok = true;
      std::vector<Point> bad;
      for_all_tuples(static_cast<int>(dom.size()), m, [&](const std::vector<int>& pick) {
        if (!ok) return;
        std::vector<Point> tuples;
        for (int p : pick) tuples.push_back(dom[p]);
        if (!check(tuples)) {
          ok = false;
          bad = tuples;
        }
      });
      if (!ok) {
        return {false, WpolViolation{"superposition inequality violated", bad,
                                     static_cast<int>(fi)}};
      }
    } else {
      std::mt19937 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
      for (std::uint64_t it = 0; it < tuple_budget; ++it) {
        std::vector<Point> tuples;
        for (int i = 0; i < m; ++i) tuples.push_back(dom[pick(rng)]);
        if (!check(tuples)) {
          return {false, WpolViolation{"superposition inequality violated", tuples,
                                       static_cast<int>(fi)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ExtRat refutation_value(const WeightedPolymorphism& omega, const CostFunction& f,
                        const std::vector<Point>& tuples) {
  for (const Point& t : tuples) {
    if (f.at(t).is_inf()) throw std::invalid_argument("tuple outside dom f");
  }
  return weighted_sum(omega, f, tuples);
}

RefutationReport refutation_report(const WeightedPolymorphism& omega,
                                   const std::vector<std::string>& op_names,
                                   const CostFunction& f, const std::vector<Point>& tuples) {
  RefutationReport report;
  report.total = ExtRat(0);
  for (std::size_t i = 0; i < omega.support.size(); ++i) {
    const auto& [phi, weight] = omega.support[i];
    RefutationTerm term;
    term.op_name = i < op_names.size() ? op_names[i] : ("op" + std::to_string(i));
    term.output = apply_operation(phi, tuples);
    term.weight = weight;
    term.f_value = f.at(term.output);
    if (term.f_value.is_inf()) {
      if (weight < 0) throw std::invalid_argument("negative weight on a +inf value");
      term.contribution = weight > 0 ? ExtRat::infinity() : ExtRat(0);
    } else {
      term.contribution = ExtRat(weight * term.f_value.value());
    }
    report.total += term.contribution;
    report.terms.push_back(std::move(term));
  }
  return report;
}

namespace {

using Block = std::uint32_t;

// Materializes an operation over D^m given the per-coordinate evaluator on
// encoded blocks: encode the m argument labels, evaluate the lattice term,
// retract, decode.
OperationTable materialize(const Encoding& enc, int arity,
                           const std::function<Block(const std::vector<Block>&)>& term) {
  OperationTable op;
  op.domain = enc.domain();
  op.arity = arity;
  op.table.resize(OperationTable::table_entries(enc.domain().size(), arity));
  std::vector<Block> blocks(arity);
  std::size_t idx = 0;
  for_all_tuples(static_cast<int>(enc.domain().size()), arity, [&](const std::vector<int>& args) {
    for (int i = 0; i < arity; ++i) blocks[i] = enc.sigma(args[i]);
    const Block out = enc.rho(term(blocks));
    const int label = enc.sigma_inverse(out);
    if (label < 0) throw std::logic_error("retracted block not in E");
    op.table[idx++] = static_cast<std::uint8_t>(label);
  });
  return op;
}

}  // namespace

StandardWpol standard_wpol(const std::string& name, int k) {
  StandardWpol out;
  if (name == "omega2") {
    const Encoding enc = Encoding::standard("pair");
    out.omega.arity = 4;
    for (int i = 0; i < 4; ++i) {
      out.omega.support.emplace_back(OperationTable::projection(enc.domain(), 4, i), Rat(-1));
      out.op_names.push_back("e" + std::to_string(i + 1));
    }
    const std::vector<std::function<Block(const std::vector<Block>&)>> terms = {
        [](const std::vector<Block>& b) { return b[0] & b[1]; },
        [](const std::vector<Block>& b) { return (b[0] | b[1]) & b[2]; },
        [](const std::vector<Block>& b) { return (b[0] | b[1] | b[2]) & b[3]; },
        [](const std::vector<Block>& b) { return b[0] | b[1] | b[2] | b[3]; },
    };
    for (std::size_t i = 0; i < terms.size(); ++i) {
      out.omega.support.emplace_back(materialize(enc, 4, terms[i]), Rat(1));
      out.op_names.push_back("phi" + std::to_string(i + 1));
    }
    // sigma^{-1} values (0,1,-1), (0,-1,-1), (0,-1,1), (-1,1,1) as label
    // indices over {0, 1, -1}.
    out.canonical_tuples = {{0, 1, 2}, {0, 2, 2}, {0, 2, 1}, {2, 1, 1}};
    return out;
  }
  if (name == "omega_k") {
    if (k < 3) throw std::invalid_argument("omega_k needs k >= 3");
    const Encoding enc = Encoding::standard("unary", k);
    out.omega.arity = 8;
    const std::vector<Rat> proj_weights = {-5, -5, -3, -3, -2, -3, -2, -3};
    for (int i = 0; i < 8; ++i) {
      out.omega.support.emplace_back(OperationTable::projection(enc.domain(), 8, i),
                                     proj_weights[i]);
      out.op_names.push_back("e" + std::to_string(i + 1));
    }
    // Lattice terms over the encoded blocks b1..b8 (0-indexed below).
    const std::vector<std::pair<std::function<Block(const std::vector<Block>&)>, Rat>> phis = {
        {[](const std::vector<Block>& b) { return b[0] & b[3]; }, Rat(3)},
        {[](const std::vector<Block>& b) { return b[0] & b[6]; }, Rat(2)},
        {[](const std::vector<Block>& b) { return b[1] & b[4]; }, Rat(2)},
        {[](const std::vector<Block>& b) { return b[1] & b[7]; }, Rat(3)},
        {[](const std::vector<Block>& b) { return (b[0] | b[3]) & b[2]; }, Rat(1)},
        {[](const std::vector<Block>& b) { return (b[1] | b[7]) & b[5]; }, Rat(1)},
        {[](const std::vector<Block>& b) { return (b[0] | b[3]) & (b[1] | b[4]) & b[2]; }, Rat(2)},
        {[](const std::vector<Block>& b) { return (b[0] | b[6]) & (b[1] | b[7]) & b[5]; }, Rat(2)},
        {[](const std::vector<Block>& b) {
           return (b[0] | b[1] | b[3] | b[4]) & (b[0] | b[1] | b[6] | b[7]);
         },
         Rat(2)},
        {[](const std::vector<Block>& b) {
           return ((((b[0] | b[3]) & (b[1] | b[4])) | b[2]) & (b[1] | b[5] | b[7]));
         },
         Rat(1)},
        {[](const std::vector<Block>& b) {
           return ((((b[0] | b[6]) & (b[1] | b[7])) | b[5]) & (b[0] | b[2] | b[3]));
         },
         Rat(1)},
        {[](const std::vector<Block>& b) {
           return (((b[0] | b[3]) & (b[1] | b[4])) | b[2]) &
                  (((b[0] | b[6]) & (b[1] | b[7])) | b[5]);
         },
         Rat(1)},
        {[](const std::vector<Block>& b) {
           return ((b[0] | b[3]) & (b[1] | b[4])) | ((b[0] | b[6]) & (b[1] | b[7])) | b[2] | b[5];
         },
         Rat(1)},
        {[](const std::vector<Block>& b) {
           return (b[0] | b[1] | b[3] | b[4] | b[6] | b[7]) &
                  (((b[0] | b[3]) & (b[1] | b[4])) | b[1] | b[2] | b[5] | b[7]);
         },
         Rat(1)},
        {[](const std::vector<Block>& b) {
           return (b[0] | b[1] | b[3] | b[4] | b[6] | b[7]) &
                  (((b[0] | b[6]) & (b[1] | b[7])) | b[0] | b[2] | b[3] | b[5]);
         },
         Rat(1)},
        {[](const std::vector<Block>& b) {
           return b[0] | b[1] | b[2] | b[3] | b[4] | b[5] | b[6] | b[7];
         },
         Rat(2)},
    };
    for (std::size_t i = 0; i < phis.size(); ++i) {
      out.omega.support.emplace_back(materialize(enc, 8, phis[i].first), phis[i].second);
      out.op_names.push_back("phi" + std::to_string(i + 1));
    }
    out.canonical_tuples = {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
    if (k > 3) {
      out.note = "operation terms distinguish labels {0,1,2,3} only; labels above 3 pass "
                 "through the same unit-block encoding";
    }
    return out;
  }
  throw std::invalid_argument("unknown weighted polymorphism '" + name + "'");
}

}  // namespace netrep
