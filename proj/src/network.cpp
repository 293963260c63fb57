#include "netrep/network.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace netrep {

Network::Network(std::vector<std::string> nodes,
                 std::vector<std::tuple<std::string, std::string, ExtRat>> edges)
    : nodes_(std::move(nodes)) {
  std::set<std::string> seen(nodes_.begin(), nodes_.end());
  if (seen.size() != nodes_.size()) throw std::invalid_argument("duplicate node names");
  auto s = find_node("s");
  auto t = find_node("t");
  if (!s || !t) throw std::invalid_argument("network needs nodes 's' and 't'");
  s_ = *s;
  t_ = *t;

  std::map<std::pair<int, int>, ExtRat> merged;
  for (const auto& [from, to, cap] : edges) {
    const int u = node_index(from);
    const int v = node_index(to);
    if (u == v) throw std::invalid_argument("self-loop on '" + from + "'");
    if (v == s_) throw std::invalid_argument("edge into s");
    if (u == t_) throw std::invalid_argument("edge out of t");
    if (cap.is_finite() && cap.value() < 0) throw std::invalid_argument("negative capacity");
    auto [it, inserted] = merged.emplace(std::make_pair(u, v), cap);
    if (!inserted) it->second += cap;
  }
  for (const auto& [key, cap] : merged) edges_.push_back({key.first, key.second, cap});
}

int Network::node_index(const std::string& name) const {
  auto idx = find_node(name);
  if (!idx) throw std::invalid_argument("unknown node '" + name + "'");
  return *idx;
}

std::optional<int> Network::find_node(const std::string& name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string Network::designated_name(int i, int l) {
  return std::to_string(i) + "^" + std::to_string(l);
}

std::vector<int> Network::designated_nodes(int n, int k) const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= k; ++l) out.push_back(node_index(designated_name(i, l)));
  }
  return out;
}

bool Network::structurally_equal(const Network& other) const {
  std::set<std::string> a(nodes_.begin(), nodes_.end());
  std::set<std::string> b(other.nodes_.begin(), other.nodes_.end());
  if (a != b) return false;
  auto key = [](const Network& net) {
    std::vector<std::tuple<std::string, std::string, std::string>> k;
    for (const auto& e : net.edges_) {
      k.emplace_back(net.nodes_[e.from], net.nodes_[e.to], e.cap.to_string());
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(*this) == key(other);
}

namespace {

// Exact Edmonds-Karp. Infinite capacities are replaced by B = (sum of all
// finite capacities) + 1: a cut crossing an infinite edge then costs at
// least B while every all-finite cut costs at most B - 1, so values below
// B are exact and values >= B mean the true minimum is +inf. Residual
// reachability is unaffected because no edge ever carries flow >= B.
struct FlowSolver {
  int nn;
  std::vector<std::vector<Rat>> residual;
  std::vector<std::vector<bool>> was_inf;
  Rat big;

  explicit FlowSolver(const Network& net)
      : nn(static_cast<int>(net.nodes().size())),
        residual(nn, std::vector<Rat>(nn, Rat(0))),
        was_inf(nn, std::vector<bool>(nn, false)) {
    Rat total(0);
    for (const auto& e : net.edges()) {
      if (e.cap.is_finite()) total += e.cap.value();
    }
    big = total + 1;
    for (const auto& e : net.edges()) {
      residual[e.from][e.to] += e.cap.is_finite() ? e.cap.value() : big;
      was_inf[e.from][e.to] = was_inf[e.from][e.to] || e.cap.is_inf();
    }
  }

  Rat max_flow(int s, int t) {
    Rat value(0);
    while (true) {
      std::vector<int> parent(nn, -1);
      parent[s] = s;
      std::queue<int> q;
      q.push(s);
      while (!q.empty() && parent[t] < 0) {
        const int u = q.front();
        q.pop();
        for (int v = 0; v < nn; ++v) {
          if (parent[v] < 0 && residual[u][v] > 0) {
            parent[v] = u;
            q.push(v);
          }
        }
      }
      if (parent[t] < 0) break;
      Rat delta = residual[parent[t]][t];
      for (int v = t; v != s; v = parent[v]) {
        delta = std::min(delta, residual[parent[v]][v]);
      }
      for (int v = t; v != s; v = parent[v]) {
        residual[parent[v]][v] -= delta;
        residual[v][parent[v]] += delta;
      }
      value += delta;
    }
    return value;
  }

  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(nn, false);
    seen[s] = true;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < nn; ++v) {
        if (!seen[v] && residual[u][v] > 0) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    return seen;
  }
};

MinCutResult min_cut_impl(const Network& net) {
  FlowSolver solver(net);
  const Rat flow = solver.max_flow(net.s(), net.t());
  const std::vector<bool> side = solver.reachable(net.s());
  if (side[net.t()]) throw std::logic_error("min_cut: t reachable after max flow");

  // Dual check: the cut across the reachable side must equal the flow value.
  ExtRat cut_value(Rat(0));
  for (const auto& e : net.edges()) {
    if (side[e.from] && !side[e.to]) cut_value += e.cap;
  }
  const bool infinite = flow >= solver.big;
  if (infinite != cut_value.is_inf() || (!infinite && cut_value.value() != flow)) {
    throw std::logic_error("min_cut: flow/cut mismatch");
  }

  MinCutResult result;
  result.value = infinite ? ExtRat::infinity() : ExtRat(flow);
  for (std::size_t i = 0; i < net.nodes().size(); ++i) {
    if (side[i]) result.cut.push_back(net.nodes()[i]);
  }
  std::sort(result.cut.begin(), result.cut.end());
  return result;
}

}  // namespace

MinCutResult min_cut(const Network& net) { return min_cut_impl(net); }

ExtRat c_min(const Network& net, int n, int k, std::uint64_t pin) {
  const int kn = n * k;
  if (kn > 32) throw std::invalid_argument("c_min: kn too large");
  net.designated_nodes(n, k);  // validates presence
  std::vector<std::tuple<std::string, std::string, ExtRat>> edges;
  for (const auto& e : net.edges()) {
    edges.emplace_back(net.nodes()[e.from], net.nodes()[e.to], e.cap);
  }
  for (int i = 1; i <= n; ++i) {
    for (int l = 1; l <= k; ++l) {
      const int pos = (i - 1) * k + (l - 1);
      const bool one = (pin >> (kn - 1 - pos)) & 1U;
      const std::string v = Network::designated_name(i, l);
      if (one) {
        edges.emplace_back("s", v, ExtRat::infinity());
      } else {
        edges.emplace_back(v, "t", ExtRat::infinity());
      }
    }
  }
  return min_cut(Network(net.nodes(), std::move(edges))).value;
}

RetractCheck is_retractable(const Network& net, int n, const Encoding& enc) {
  const int kn = n * enc.k();
  if (kn > 24) throw std::invalid_argument("is_retractable: kn too large");
  const std::uint64_t count = 1ULL << kn;
  std::vector<ExtRat> values(count);
  for (std::uint64_t x = 0; x < count; ++x) values[x] = c_min(net, n, enc.k(), x);
  for (std::uint64_t x = 0; x < count; ++x) {
    const std::uint64_t rx = enc.retract_blocks(x, n);
    if (values[x] < values[rx]) return {false, x};
  }
  return {true, std::nullopt};
}

CostFunction eval_representation(const Network& net, int n, const Encoding& enc,
                                 const Rat& kappa) {
  net.designated_nodes(n, enc.k());  // validates designated node presence
  CostFunction f = CostFunction::constant(enc.domain(), n, ExtRat(0));
  for (std::size_t idx = 0; idx < f.table_size(); ++idx) {
    const Point x = f.point_of_index(idx);
    const ExtRat v = c_min(net, n, enc.k(), enc.encode_tuple(x));
    f.at_index(idx) = v.is_inf() ? v : ExtRat(v.value() + kappa);
  }
  return f;
}

Network complement_network(const Network& net) {
  std::vector<std::tuple<std::string, std::string, ExtRat>> edges;
  for (const auto& e : net.edges()) {
    const std::string& u = net.nodes()[e.from];
    const std::string& v = net.nodes()[e.to];
    if (e.from == net.s() && e.to == net.t()) {
      edges.emplace_back(u, v, e.cap);  // constant offset on every cut
    } else if (e.from == net.s()) {
      edges.emplace_back(v, "t", e.cap);
    } else if (e.to == net.t()) {
      edges.emplace_back("s", u, e.cap);
    } else {
      edges.emplace_back(v, u, e.cap);
    }
  }
  return Network(net.nodes(), std::move(edges));
}

Gadget gadget(const std::string& name) {
  using E = std::tuple<std::string, std::string, ExtRat>;
  if (name == "h0") {
    Network net({"s", "t", "1^1"}, {E{"1^1", "t", ExtRat::infinity()}});
    return {std::move(net), Encoding::standard("identity"), Rat(0), 1};
  }
  if (name == "h1") {
    Network net({"s", "t", "1^1"}, {E{"s", "1^1", ExtRat::infinity()}});
    return {std::move(net), Encoding::standard("identity"), Rat(0), 1};
  }
  if (name == "h2") {
    Network net({"s", "t", "1^1", "2^1"}, {E{"1^1", "2^1", ExtRat::infinity()},
                                           E{"2^1", "1^1", ExtRat::infinity()}});
    return {std::move(net), Encoding::standard("identity"), Rat(0), 2};
  }
  if (name == "halfpair") {
    const ExtRat half{Rat(1) / 2};
    Network net({"s", "t", "1^1", "1^2", "2^1", "2^2"},
                {E{"1^1", "2^2", half}, E{"2^1", "1^2", half}});
    return {std::move(net), Encoding::standard("star1"), Rat(0), 2};
  }
  throw std::invalid_argument("unknown gadget '" + name + "'");
}

}  // namespace netrep
