#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netrep/encoding.hpp"
#include "netrep/network.hpp"
#include "netrep/ratlp.hpp"

namespace netrep {

// The cone of retractable networks on {s, t} plus the kn designated nodes
// and no extra nodes: with nothing to minimize over, the pinned cut value
// is linear in the capacities, so retractability is a finite set of linear
// inequalities.
struct ConeSpec {
  int n = 0;
  Encoding enc;
  bool include_st = false;  // an (s,t) edge only shifts every cut equally

  // Allowed edges in variable order: (u, v) with u in {s} + designated,
  // v in designated + {t}, u != v, lexicographic over node order
  // s < 1^1 < ... < n^k < t.
  std::vector<std::pair<std::string, std::string>> edge_vars() const;
  std::vector<std::string> node_names() const;
};

// Primitive integer capacity vector over the spec's edge variables.
struct Ray {
  std::vector<Rat> cap;
  friend bool operator==(const Ray& a, const Ray& b) { return a.cap == b.cap; }
  friend bool operator<(const Ray& a, const Ray& b) { return a.cap < b.cap; }
};

// Coefficients of the cut expression C(X_x) over the edge variables.
std::vector<Rat> cut_vector(const ConeSpec& spec, std::uint64_t x);

// Homogeneous system: c_e >= 0 for every edge, plus
// C(X_x) - C(X_{retract(x)}) >= 0 for every x moved by the retraction.
LinSystem build_cone(const ConeSpec& spec);

// Double description over a homogeneous pointed system (every variable
// must carry an explicit c >= 0 row). Rays come back primitive, sorted,
// each re-verified against all rows and certified extreme (tight rows of
// rank dim - 1).
std::vector<Ray> extreme_rays(const LinSystem& sys);

// Node permutation fixing s and t; maps every ray through the induced edge
// permutation. Throws when the permutation does not close over edge_vars.
std::vector<Rat> permute_ray(const ConeSpec& spec, const std::map<std::string, std::string>& perm,
                             const std::vector<Rat>& cap);

struct RayOrbit {
  Ray representative;  // lexicographically least member
  int size = 0;
};

// Orbits under the group generated by the given permutations.
std::vector<RayOrbit> symmetry_reduce(const ConeSpec& spec, const std::vector<Ray>& rays,
                                      const std::vector<std::map<std::string, std::string>>& gens);

// The two generators used for the 4-designated-node figure: swap of the
// two block positions (i^1 <-> i^2) and swap of the two variables
// (1^l <-> 2^l). Requires n = 2, k = 2.
std::vector<std::map<std::string, std::string>> pair_cone_symmetries(const ConeSpec& spec);

// Generators that provably preserve the spec's cone: adjacent variable
// swaps (blocks are interchangeable wholesale) plus block-position swaps
// that commute with the retraction.
std::vector<std::map<std::string, std::string>> standard_cone_symmetries(const ConeSpec& spec);

// Capacity vector of a network over the spec's edges; rejects extra nodes,
// out-of-policy edges and infinite capacities.
std::vector<Rat> capacity_vector(const ConeSpec& spec, const Network& net);

// Nonnegative combination of the rays giving the network's capacities.
FeasResult decompose(const ConeSpec& spec, const Network& net, const std::vector<Ray>& rays);

Network ray_to_network(const ConeSpec& spec, const std::vector<Rat>& cap);

}  // namespace netrep
