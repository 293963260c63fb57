#include "netrep/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/gmp.hpp>

namespace netrep {

namespace {

using Int = boost::multiprecision::mpz_int;
using Vec = std::vector<Rat>;

// Gaussian-elimination rank over the rationals.
int rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i][col] != 0) {
        const Rat factor = rows[i][col] / rows[r][col];
        for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

Rat dot(const Vec& a, const Vec& b) {
  Rat v(0);
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
  return v;
}

// Scales to the smallest nonnegative integer vector.
Vec normalize_primitive(Vec v) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  Int gcd = 0;
  for (const Rat& x : v) gcd = boost::multiprecision::gcd(gcd, numerator(x) * (lcm / denominator(x)));
  if (gcd == 0) return v;
  const Rat alpha = Rat(lcm) / Rat(gcd);
  for (Rat& x : v) x *= alpha;
  return v;
}

Vec dense_row(const SparseRow& row, int dim) {
  Vec v(dim, Rat(0));
  for (const auto& [idx, coef] : row.a) v[idx] = coef;
  return v;
}

}  // namespace

std::vector<std::string> ConeSpec::node_names() const {
  std::vector<std::string> names = {"s"};
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= enc.k(); ++l) names.push_back(Network::designated_name(i, l));
  }
  names.push_back("t");
  return names;
}

std::vector<std::pair<std::string, std::string>> ConeSpec::edge_vars() const {
  const std::vector<std::string> names = node_names();
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t ui = 0; ui + 1 < names.size(); ++ui) {    // s and designated
    for (std::size_t vi = 1; vi < names.size(); ++vi) {      // designated and t
      if (ui == vi) continue;
      if (ui == 0 && vi + 1 == names.size() && !include_st) continue;
      edges.emplace_back(names[ui], names[vi]);
    }
  }
  return edges;
}

std::vector<Rat> cut_vector(const ConeSpec& spec, std::uint64_t x) {
  const int k = spec.enc.k();
  const int kn = spec.n * k;
  const auto edges = spec.edge_vars();
  // Source side of a node name under assignment x.
  auto on_source_side = [&](const std::string& name) {
    if (name == "s") return true;
    if (name == "t") return false;
    const auto caret = name.find('^');
    const int i = std::stoi(name.substr(0, caret));
    const int l = std::stoi(name.substr(caret + 1));
    const int pos = (i - 1) * k + (l - 1);
    return ((x >> (kn - 1 - pos)) & 1U) != 0;
  };
  Vec v(edges.size(), Rat(0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (on_source_side(edges[e].first) && !on_source_side(edges[e].second)) v[e] = 1;
  }
  return v;
}

LinSystem build_cone(const ConeSpec& spec) {
  const int kn = spec.n * spec.enc.k();
  if (kn > 16) throw std::invalid_argument("cone: kn too large");
  const auto edges = spec.edge_vars();
  LinSystem sys;
  sys.num_vars = static_cast<int>(edges.size());
  for (int e = 0; e < sys.num_vars; ++e) {
    sys.ge.push_back(SparseRow{{{e, Rat(1)}}, Rat(0)});
  }
  for (std::uint64_t x = 0; x < (1ULL << kn); ++x) {
    const std::uint64_t rx = spec.enc.retract_blocks(x, spec.n);
    if (rx == x) continue;
    const Vec cx = cut_vector(spec, x);
    const Vec crx = cut_vector(spec, rx);
    SparseRow row;
    for (int e = 0; e < sys.num_vars; ++e) {
      const Rat c = cx[e] - crx[e];
      if (c != 0) row.a.emplace_back(e, c);
    }
    row.b = 0;
    sys.ge.push_back(std::move(row));
  }
  return sys;
}

std::vector<Ray> extreme_rays(const LinSystem& sys) {
  sys.validate();
  if (!sys.eq.empty() || !sys.nonneg.empty()) {
    throw std::invalid_argument("extreme_rays: >= rows only");
  }
  const int dim = sys.num_vars;
  for (const auto& row : sys.ge) {
    if (row.b != 0) throw std::invalid_argument("extreme_rays: system must be homogeneous");
  }

  // Split the orthant rows from the rest; every variable needs one for the
  // cone to be visibly pointed.
  std::vector<bool> has_unit(dim, false);
  std::vector<Vec> others;
  for (const auto& row : sys.ge) {
    if (row.a.empty()) continue;  // 0 >= 0
    if (row.a.size() == 1 && row.a[0].second > 0) {
      has_unit[row.a[0].first] = true;
      continue;
    }
    others.push_back(normalize_primitive(dense_row(row, dim)));
  }
  for (int j = 0; j < dim; ++j) {
    if (!has_unit[j]) throw std::invalid_argument("extreme_rays: cone is not explicitly pointed");
  }
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());

  // Rows that define the current intermediate cone; the orthant rows are
  // implicit and handled through coordinates.
  std::vector<Vec> processed;
  auto tight_rows = [&](const Vec& r) {
    std::vector<Vec> tight;
    for (int j = 0; j < dim; ++j) {
      if (r[j] == 0) {
        Vec unit(dim, Rat(0));
        unit[j] = 1;
        tight.push_back(std::move(unit));
      }
    }
    for (const Vec& a : processed) {
      if (dot(a, r) == 0) tight.push_back(a);
    }
    return tight;
  };

  std::set<Vec> rays;
  for (int j = 0; j < dim; ++j) {
    Vec unit(dim, Rat(0));
    unit[j] = 1;
    rays.insert(std::move(unit));
  }

  for (const Vec& a : others) {
    std::vector<Vec> pos, zero, neg;
    for (const Vec& r : rays) {
      const Rat v = dot(a, r);
      if (v > 0) {
        pos.push_back(r);
      } else if (v < 0) {
        neg.push_back(r);
      } else {
        zero.push_back(r);
      }
    }
    std::set<Vec> next;
    for (const Vec& r : pos) next.insert(r);
    for (const Vec& r : zero) next.insert(r);
    for (const Vec& p : pos) {
      for (const Vec& q : neg) {
        // Adjacency in the current cone: common tight rows of rank dim - 2.
        std::vector<Vec> common;
        for (int j = 0; j < dim; ++j) {
          if (p[j] == 0 && q[j] == 0) {
            Vec unit(dim, Rat(0));
            unit[j] = 1;
            common.push_back(std::move(unit));
          }
        }
        for (const Vec& row : processed) {
          if (dot(row, p) == 0 && dot(row, q) == 0) common.push_back(row);
        }
        if (rank_of(common) != dim - 2) continue;
        const Rat vp = dot(a, p);
        const Rat vq = dot(a, q);
        Vec w(dim);
        for (int j = 0; j < dim; ++j) w[j] = vp * q[j] - vq * p[j];
        next.insert(normalize_primitive(std::move(w)));
      }
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  // Certification: every ray satisfies all rows and is extreme.
  std::vector<Ray> out;
  for (const Vec& r : rays) {
    for (const auto& row : sys.ge) {
      if (dot(dense_row(row, dim), r) < 0) throw std::logic_error("extreme_rays: ray violates a row");
    }
    if (rank_of(tight_rows(r)) != dim - 1) {
      throw std::logic_error("extreme_rays: enumerated ray is not extreme");
    }
    out.push_back(Ray{r});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> permute_ray(const ConeSpec& spec, const std::map<std::string, std::string>& perm,
                             const std::vector<Rat>& cap) {
  const auto edges = spec.edge_vars();
  if (cap.size() != edges.size()) throw std::invalid_argument("permute_ray: dimension mismatch");
  auto image = [&](const std::string& name) -> std::string {
    auto it = perm.find(name);
    return it == perm.end() ? name : it->second;
  };
  if (image("s") != "s" || image("t") != "t") {
    throw std::invalid_argument("permutation must fix s and t");
  }
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (std::size_t e = 0; e < edges.size(); ++e) index[edges[e]] = e;
  std::vector<Rat> out(cap.size(), Rat(0));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::pair<std::string, std::string> mapped = {image(edges[e].first),
                                                        image(edges[e].second)};
    auto it = index.find(mapped);
    if (it == index.end()) {
      throw std::invalid_argument("permutation does not close over the edge set");
    }
    out[it->second] = cap[e];
  }
  return out;
}

std::vector<RayOrbit> symmetry_reduce(const ConeSpec& spec, const std::vector<Ray>& rays,
                                      const std::vector<std::map<std::string, std::string>>& gens) {
  // Group closure over the induced edge permutations.
  const auto edges = spec.edge_vars();
  const std::size_t dim = edges.size();
  using EdgePerm = std::vector<std::size_t>;
  std::vector<EdgePerm> gen_perms;
  for (const auto& g : gens) {
    // perm[e] = index of the image edge.
    std::vector<Rat> probe(dim, Rat(0));
    EdgePerm p(dim);
    for (std::size_t e = 0; e < dim; ++e) {
      probe.assign(dim, Rat(0));
      probe[e] = 1;
      const auto moved = permute_ray(spec, g, probe);
      for (std::size_t i = 0; i < dim; ++i) {
        if (moved[i] == 1) p[e] = i;
      }
    }
    gen_perms.push_back(std::move(p));
  }
  std::set<EdgePerm> group;
  EdgePerm identity(dim);
  for (std::size_t e = 0; e < dim; ++e) identity[e] = e;
  std::vector<EdgePerm> work = {identity};
  group.insert(identity);
  while (!work.empty()) {
    const EdgePerm g = work.back();
    work.pop_back();
    for (const EdgePerm& h : gen_perms) {
      EdgePerm gh(dim);
      for (std::size_t e = 0; e < dim; ++e) gh[e] = h[g[e]];
      if (group.insert(gh).second) work.push_back(gh);
    }
  }

  const std::set<Vec> ray_set = [&] {
    std::set<Vec> s;
    for (const Ray& r : rays) s.insert(r.cap);
    return s;
  }();
  std::set<Vec> visited;
  std::vector<RayOrbit> orbits;
  for (const Ray& r : rays) {
    if (visited.count(r.cap)) continue;
    std::set<Vec> orbit;
    for (const EdgePerm& g : group) {
      Vec image(dim);
      for (std::size_t e = 0; e < dim; ++e) image[g[e]] = r.cap[e];
      if (!ray_set.count(image)) {
        throw std::invalid_argument("ray set is not invariant under the given symmetries");
      }
      orbit.insert(std::move(image));
    }
    for (const Vec& v : orbit) visited.insert(v);
    orbits.push_back(RayOrbit{Ray{*orbit.begin()}, static_cast<int>(orbit.size())});
  }
  return orbits;
}

std::vector<std::map<std::string, std::string>> pair_cone_symmetries(const ConeSpec& spec) {
  if (spec.n != 2 || spec.enc.k() != 2) {
    throw std::invalid_argument("pair_cone_symmetries: needs n = 2, k = 2");
  }
  std::map<std::string, std::string> flip_block, swap_vars;
  for (int i = 1; i <= 2; ++i) {
    flip_block[Network::designated_name(i, 1)] = Network::designated_name(i, 2);
    flip_block[Network::designated_name(i, 2)] = Network::designated_name(i, 1);
  }
  for (int l = 1; l <= 2; ++l) {
    swap_vars[Network::designated_name(1, l)] = Network::designated_name(2, l);
    swap_vars[Network::designated_name(2, l)] = Network::designated_name(1, l);
  }
  return {flip_block, swap_vars};
}

std::vector<std::map<std::string, std::string>> standard_cone_symmetries(const ConeSpec& spec) {
  std::vector<std::map<std::string, std::string>> gens;
  const int k = spec.enc.k();
  for (int i = 1; i < spec.n; ++i) {
    std::map<std::string, std::string> swap_vars;
    for (int l = 1; l <= k; ++l) {
      swap_vars[Network::designated_name(i, l)] = Network::designated_name(i + 1, l);
      swap_vars[Network::designated_name(i + 1, l)] = Network::designated_name(i, l);
    }
    gens.push_back(std::move(swap_vars));
  }
  // A swap of block positions p <-> p+1 preserves retractability iff it
  // commutes with rho on every k-bit block.
  for (int p = 1; p < k; ++p) {
    auto swap_bits = [&](std::uint32_t v) {
      const int hi = k - p;      // bit position of block coordinate p (MSB-first)
      const int lo = k - p - 1;  // block coordinate p+1
      const std::uint32_t a = (v >> hi) & 1U;
      const std::uint32_t b = (v >> lo) & 1U;
      std::uint32_t out = v & ~((1U << hi) | (1U << lo));
      out |= (b << hi) | (a << lo);
      return out;
    };
    bool commutes = true;
    for (std::uint32_t v = 0; v < (1U << k) && commutes; ++v) {
      commutes = spec.enc.rho(swap_bits(v)) == swap_bits(spec.enc.rho(v));
    }
    if (!commutes) continue;
    std::map<std::string, std::string> flip;
    for (int i = 1; i <= spec.n; ++i) {
      flip[Network::designated_name(i, p)] = Network::designated_name(i, p + 1);
      flip[Network::designated_name(i, p + 1)] = Network::designated_name(i, p);
    }
    gens.push_back(std::move(flip));
  }
  return gens;
}

std::vector<Rat> capacity_vector(const ConeSpec& spec, const Network& net) {
  const auto names = spec.node_names();
  const std::set<std::string> allowed(names.begin(), names.end());
  for (const auto& node : net.nodes()) {
    if (!allowed.count(node)) {
      throw std::invalid_argument("network has a node outside the cone: '" + node + "'");
    }
  }
  const auto edges = spec.edge_vars();
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (std::size_t e = 0; e < edges.size(); ++e) index[edges[e]] = e;
  std::vector<Rat> cap(edges.size(), Rat(0));
  for (const auto& e : net.edges()) {
    if (e.cap.is_inf()) throw std::invalid_argument("cone networks need finite capacities");
    auto it = index.find({net.nodes()[e.from], net.nodes()[e.to]});
    if (it == index.end()) throw std::invalid_argument("network edge outside the cone policy");
    cap[it->second] = e.cap.value();
  }
  return cap;
}

FeasResult decompose(const ConeSpec& spec, const Network& net, const std::vector<Ray>& rays) {
  std::vector<std::vector<Rat>> gens;
  for (const Ray& r : rays) gens.push_back(r.cap);
  return nonneg_combination(capacity_vector(spec, net), gens);
}

Network ray_to_network(const ConeSpec& spec, const std::vector<Rat>& cap) {
  const auto edges = spec.edge_vars();
  if (cap.size() != edges.size()) throw std::invalid_argument("capacity dimension mismatch");
  std::vector<std::tuple<std::string, std::string, ExtRat>> net_edges;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (cap[e] != 0) net_edges.emplace_back(edges[e].first, edges[e].second, ExtRat(cap[e]));
  }
  return Network(spec.node_names(), std::move(net_edges));
}

}  // namespace netrep
