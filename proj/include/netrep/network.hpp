#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrep/costfn.hpp"
#include "netrep/encoding.hpp"
#include "netrep/rational.hpp"

namespace netrep {

// Directed s-t network with exact nonnegative capacities (+inf allowed).
// Designated nodes are named "i^l" with i, l 1-based. Parallel edges are
// merged by capacity addition on construction; edges into s, edges out of
// t, and self-loops are rejected.
class Network {
 public:
  struct Edge {
    int from;
    int to;
    ExtRat cap;
  };

  Network(std::vector<std::string> nodes, std::vector<std::tuple<std::string, std::string, ExtRat>> edges);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int s() const { return s_; }
  int t() const { return t_; }

  int node_index(const std::string& name) const;         // throws on unknown
  std::optional<int> find_node(const std::string& name) const;
  static std::string designated_name(int i, int l);      // "i^l"

  // Indices of i^l for i in [n], l in [k], in block order; throws if missing.
  std::vector<int> designated_nodes(int n, int k) const;

  // Same node-name set and same merged edge multiset.
  bool structurally_equal(const Network& other) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  int s_;
  int t_;
};

struct MinCutResult {
  ExtRat value;
  std::vector<std::string> cut;  // source side: contains "s", never "t"
};

// Exact max-flow / min-cut. The returned cut is the minimal minimum cut
// (residual reachability from s); the value is checked against the cut
// capacity before returning.
MinCutResult min_cut(const Network& net);

// Minimum cut value over cuts agreeing with a total 0/1 pinning of the kn
// designated nodes (bit for i^l at position (i-1)k + (l-1), MSB first).
// Realized by infinite attachment edges s->v / v->t.
ExtRat c_min(const Network& net, int n, int k, std::uint64_t pin);

struct RetractCheck {
  bool retractable = false;
  std::optional<std::uint64_t> violating;  // lexicographically first x with
                                           // c_min(x) < c_min(rho(x))
};

// Checks c_min(x) >= c_min(retract(x)) for all 2^{kn} assignments
// (2^{kn} max-flow computations).
RetractCheck is_retractable(const Network& net, int n, const Encoding& enc);

// The represented function f(x) = c_min(sigma(x_1)...sigma(x_n)) + kappa.
// Callers are expected to have established retractability when they need
// the representation semantics.
CostFunction eval_representation(const Network& net, int n, const Encoding& enc, const Rat& kappa);

// Reverses internal edges and swaps the s- and t-attachments; represents
// the complement function when the input represents f over the identity
// encoding.
Network complement_network(const Network& net);

struct Gadget {
  Network net;
  Encoding enc;
  Rat kappa;
  int n;
};

// Names: h0, h1, h2, halfpair.
Gadget gadget(const std::string& name);

}  // namespace netrep
