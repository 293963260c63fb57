#include "netrep/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "netrep/lattice.hpp"

namespace netrep {

namespace {

std::string point_key(const std::vector<std::string>& domain, const Point& x) {
  std::string key;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) key += ',';
    key += domain[x[i]];
  }
  return key;
}

Point point_from_key(const CostFunction& f, const std::string& key) {
  Point x;
  std::stringstream ss(key);
  std::string label;
  while (std::getline(ss, label, ',')) x.push_back(f.label_index(label));
  return x;
}

std::vector<std::string> string_list(const Json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

Json costfn_to_json(const CostFunction& f) {
  Json j;
  j["domain"] = f.domain();
  j["arity"] = f.arity();
  Json table = Json::object();
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    table[point_key(f.domain(), f.point_of_index(i))] = f.at_index(i).to_string();
  }
  j["table"] = std::move(table);
  return j;
}

CostFunction costfn_from_json(const Json& j) {
  const std::vector<std::string> domain = string_list(j.at("domain"));
  const int arity = j.at("arity").get<int>();
  CostFunction f = CostFunction::constant(domain, arity, ExtRat(0));
  std::vector<bool> seen(f.table_size(), false);
  const auto& table = j.at("table");
  if (table.size() != f.table_size()) {
    throw std::invalid_argument("table must have exactly |D|^n entries");
  }
  for (auto it = table.begin(); it != table.end(); ++it) {
    const Point x = point_from_key(f, it.key());
    const std::size_t idx = f.index_of_point(x);
    if (seen[idx]) throw std::invalid_argument("duplicate table key '" + it.key() + "'");
    seen[idx] = true;
    f.at_index(idx) = ExtRat::from_string(it.value().get<std::string>());
  }
  return f;
}

Json network_to_json(const Network& net, int n, int k) {
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["nodes"] = net.nodes();
  std::vector<std::tuple<std::string, std::string, std::string>> rows;
  for (const auto& e : net.edges()) {
    rows.emplace_back(net.nodes()[e.from], net.nodes()[e.to], e.cap.to_string());
  }
  std::sort(rows.begin(), rows.end());
  Json edges = Json::array();
  for (const auto& [from, to, cap] : rows) {
    Json e;
    e["from"] = from;
    e["to"] = to;
    e["cap"] = cap;
    edges.push_back(std::move(e));
  }
  j["edges"] = std::move(edges);
  return j;
}

NetworkDoc network_from_json(const Json& j) {
  NetworkDoc doc{Network({"s", "t"}, {}), 0, 0};
  std::vector<std::tuple<std::string, std::string, ExtRat>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                       ExtRat::from_string(e.at("cap").get<std::string>()));
  }
  doc.net = Network(string_list(j.at("nodes")), std::move(edges));
  doc.n = j.value("n", 0);
  doc.k = j.value("k", 0);
  return doc;
}

Json encoding_to_json(const Encoding& enc) {
  Json j;
  j["k"] = enc.k();
  j["domain"] = enc.domain();
  Json sigma = Json::object();
  for (int i = 0; i < enc.domain_size(); ++i) {
    sigma[enc.domain()[i]] = bits_to_string(enc.sigma(i), enc.k());
  }
  j["sigma"] = std::move(sigma);
  Json rho = Json::object();
  for (std::uint32_t v = 0; v < (1U << enc.k()); ++v) {
    rho[bits_to_string(v, enc.k())] = bits_to_string(enc.rho(v), enc.k());
  }
  j["rho"] = std::move(rho);
  return j;
}

Encoding encoding_from_json(const Json& j) {
  const int k = j.at("k").get<int>();
  const std::vector<std::string> domain = string_list(j.at("domain"));
  std::vector<std::uint32_t> sigma;
  for (const auto& label : domain) {
    sigma.push_back(static_cast<std::uint32_t>(bits_from_string(j.at("sigma").at(label).get<std::string>())));
  }
  std::vector<std::uint32_t> rho(1U << k, 0);
  const auto& rj = j.at("rho");
  if (rj.size() != rho.size()) throw std::invalid_argument("rho must be total on {0,1}^k");
  for (auto it = rj.begin(); it != rj.end(); ++it) {
    rho.at(bits_from_string(it.key())) =
        static_cast<std::uint32_t>(bits_from_string(it.value().get<std::string>()));
  }
  return Encoding(k, domain, std::move(sigma), std::move(rho));
}

namespace {

Json sparse_rows_to_json(const std::vector<SparseRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r;
    Json a = Json::object();
    for (const auto& [idx, coef] : row.a) a[std::to_string(idx)] = rat_to_string(coef);
    r["a"] = std::move(a);
    r["b"] = rat_to_string(row.b);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SparseRow> sparse_rows_from_json(const Json& j) {
  std::vector<SparseRow> rows;
  for (const auto& rj : j) {
    SparseRow row;
    for (auto it = rj.at("a").begin(); it != rj.at("a").end(); ++it) {
      row.a.emplace_back(std::stoi(it.key()), rat_from_string(it.value().get<std::string>()));
    }
    std::sort(row.a.begin(), row.a.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    row.b = rat_from_string(rj.at("b").get<std::string>());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json linsystem_to_json(const LinSystem& sys) {
  Json j;
  j["num_vars"] = sys.num_vars;
  j["eq"] = sparse_rows_to_json(sys.eq);
  j["ge"] = sparse_rows_to_json(sys.ge);
  j["nonneg"] = sys.nonneg;
  return j;
}

LinSystem linsystem_from_json(const Json& j) {
  LinSystem sys;
  sys.num_vars = j.at("num_vars").get<int>();
  sys.eq = sparse_rows_from_json(j.at("eq"));
  sys.ge = sparse_rows_from_json(j.at("ge"));
  for (const auto& v : j.at("nonneg")) sys.nonneg.push_back(v.get<int>());
  sys.validate();
  return sys;
}

namespace {

Json rat_list_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rat_to_string(r));
  return out;
}

std::vector<Rat> rat_list_from_json(const Json& j) {
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(rat_from_string(v.get<std::string>()));
  return out;
}

}  // namespace

Json farkas_to_json(const FarkasCertificate& cert) {
  Json j;
  j["y_eq"] = rat_list_to_json(cert.y_eq);
  j["y_ge"] = rat_list_to_json(cert.y_ge);
  j["y_nonneg"] = rat_list_to_json(cert.y_nonneg);
  return j;
}

FarkasCertificate farkas_from_json(const Json& j) {
  FarkasCertificate cert;
  cert.y_eq = rat_list_from_json(j.at("y_eq"));
  cert.y_ge = rat_list_from_json(j.at("y_ge"));
  cert.y_nonneg = rat_list_from_json(j.at("y_nonneg"));
  return cert;
}

Json point_to_json(const std::vector<std::string>& domain, const Point& x) {
  Json out = Json::array();
  for (int v : x) out.push_back(domain.at(v));
  return out;
}

Point point_from_json(const std::vector<std::string>& domain, const Json& j) {
  Point x;
  for (const auto& label : j) {
    const std::string name = label.get<std::string>();
    bool found = false;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] == name) {
        x.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown label '" + name + "'");
  }
  return x;
}

Json operation_to_json(const OperationTable& op) {
  Json j;
  j["domain"] = op.domain;
  j["arity"] = op.arity;
  // Keys are distinct by construction; append to the ordered container
  // directly, since keyed insertion scans linearly per entry.
  Json::object_t table;
  std::vector<int> args(op.arity, 0);
  const std::size_t entries = op.table.size();
  for (std::size_t idx = 0; idx < entries; ++idx) {
    std::size_t rest = idx;
    for (int i = op.arity - 1; i >= 0; --i) {
      args[i] = static_cast<int>(rest % op.domain.size());
      rest /= op.domain.size();
    }
    table.emplace_back(point_key(op.domain, args), Json(op.domain[op.table[idx]]));
  }
  j["table"] = std::move(table);
  return j;
}

Json wpol_to_json(const WeightedPolymorphism& omega, const std::vector<std::string>& names) {
  Json j;
  j["arity"] = omega.arity;
  Json support = Json::array();
  for (std::size_t i = 0; i < omega.support.size(); ++i) {
    Json entry;
    entry["name"] = i < names.size() ? names[i] : ("op" + std::to_string(i));
    entry["weight"] = rat_to_string(omega.support[i].second);
    entry["op"] = operation_to_json(omega.support[i].first);
    support.push_back(std::move(entry));
  }
  j["support"] = std::move(support);
  return j;
}

std::string stable_hash(const std::string& payload) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace netrep
