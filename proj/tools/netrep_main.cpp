#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "netrep/json_io.hpp"
#include "netrep/lattice.hpp"

namespace fs = std::filesystem;
using namespace netrep;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

void emit(const Json& j, const std::string& output_path) {
  if (!output_path.empty()) write_json_file(output_path, j);
  std::cout << j.dump(2) << "\n";
}

// Splits "name" or "name:3" into a name and an integer parameter.
std::pair<std::string, int> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, 0};
  return {spec.substr(0, colon), std::stoi(spec.substr(colon + 1))};
}

// A function argument is either a JSON file path or a builtin name like
// "bisub3" or "ksub2:3".
CostFunction load_function(const std::string& arg) {
  if (fs::exists(arg)) return costfn_from_json(read_json_file(arg));
  const auto [name, k] = split_spec(arg);
  return builtin_function(name, k);
}

// An encoding argument is either a JSON file path or a standard name like
// "pair" or "unary:3".
Encoding load_encoding(const std::string& arg) {
  if (fs::exists(arg)) return encoding_from_json(read_json_file(arg));
  const auto [name, k] = split_spec(arg);
  return Encoding::standard(name, k);
}

NetworkDoc load_network(const std::string& arg) {
  if (fs::exists(arg)) {
    const Json j = read_json_file(arg);
    // Gadget documents carry the network under a "network" key.
    return network_from_json(j.contains("network") ? j.at("network") : j);
  }
  const Gadget g = gadget(arg);
  return NetworkDoc{g.net, g.n, g.enc.k()};
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    std::cerr << "# wall time: " << elapsed.count() << " s\n";
  }
};

Json decision_certificate(const CostFunction& f, const Encoding& enc, const RepDecision& decision,
                          bool full_dom) {
  Json j;
  j["type"] = "decide-certificate";
  j["function"] = costfn_to_json(f);
  j["encoding"] = encoding_to_json(enc);
  j["full_dom"] = full_dom;
  j["verdict"] = decision.feasible ? "feasible" : "infeasible";
  Json stats;
  stats["num_vars"] = decision.stats.num_vars;
  stats["eq_rows"] = decision.stats.eq_rows;
  stats["pair_rows"] = decision.stats.pair_rows;
  stats["rho_rows"] = decision.stats.rho_rows;
  j["kn"] = decision.kn;
  j["stats"] = std::move(stats);
  Json dom = Json::array();
  for (const std::uint64_t v : decision.dom) dom.push_back(bits_to_string(v, decision.kn));
  j["dom"] = std::move(dom);
  j["witness"] = decision.witness ? costfn_to_json(*decision.witness) : Json(nullptr);
  j["farkas"] = decision.farkas ? farkas_to_json(*decision.farkas) : Json(nullptr);
  j["conflict"] =
      decision.conflict ? Json{{"x", point_to_json(f.domain(), decision.conflict->x)}} : Json(nullptr);
  if (!decision.feasible) {
    j["implies"] = "not (k,rho,sigma)-network representable for this encoding "
                   "(network representability is contained in submodular representability)";
  }
  return j;
}

bool verify_decide_certificate(const Json& cert, std::string& reason) {
  const CostFunction f = costfn_from_json(cert.at("function"));
  const Encoding enc = encoding_from_json(cert.at("encoding"));
  const bool full_dom = cert.value("full_dom", false);
  const std::string verdict = cert.at("verdict").get<std::string>();
  if (verdict == "feasible") {
    if (cert.at("witness").is_null()) {
      reason = "feasible verdict without witness";
      return false;
    }
    const CostFunction g = costfn_from_json(cert.at("witness"));
    if (!verify_witness(g, f, enc)) {
      reason = "witness fails verification";
      return false;
    }
    return true;
  }
  if (!cert.at("farkas").is_null()) {
    const auto built = build_system(f, enc, full_dom);
    if (!verify_farkas(built.sys, farkas_from_json(cert.at("farkas")))) {
      reason = "Farkas certificate fails verification";
      return false;
    }
    return true;
  }
  if (!cert.at("conflict").is_null()) {
    const Point x = point_from_json(f.domain(), cert.at("conflict").at("x"));
    if (!f.at(x).is_inf()) {
      reason = "conflict point is finite";
      return false;
    }
    const auto dom = dom_closure(f, enc);
    const std::uint64_t v = enc.encode_tuple(x);
    if (!std::binary_search(dom.begin(), dom.end(), v)) {
      reason = "conflict point is not forced by the closure";
      return false;
    }
    return true;
  }
  reason = "infeasible verdict without certificate";
  return false;
}

Json refutation_certificate(const std::string& omega_name, int k, const CostFunction& f,
                            const StandardWpol& sw, const std::vector<Point>& tuples,
                            const RefutationReport& report) {
  Json j;
  j["type"] = "wpol-refutation";
  j["omega"] = omega_name;
  j["k"] = k;
  j["arity"] = sw.omega.arity;
  if (!sw.note.empty()) j["note"] = sw.note;
  j["function"] = costfn_to_json(f);
  Json tj = Json::array();
  for (const Point& t : tuples) tj.push_back(point_to_json(f.domain(), t));
  j["tuples"] = std::move(tj);
  Json terms = Json::array();
  for (const auto& term : report.terms) {
    Json tjson;
    tjson["op"] = term.op_name;
    tjson["output"] = point_to_json(f.domain(), term.output);
    tjson["weight"] = rat_to_string(term.weight);
    tjson["value"] = term.f_value.to_string();
    tjson["contribution"] = term.contribution.to_string();
    terms.push_back(std::move(tjson));
  }
  j["terms"] = std::move(terms);
  j["total"] = report.total.to_string();
  j["refutes"] = report.total > ExtRat(0);
  return j;
}

bool verify_refutation_certificate(const Json& cert, std::string& reason) {
  const std::string omega_name = cert.at("omega").get<std::string>();
  const int k = cert.at("k").get<int>();
  const StandardWpol sw = standard_wpol(omega_name, k);
  const CostFunction f = costfn_from_json(cert.at("function"));
  std::vector<Point> tuples;
  for (const auto& tj : cert.at("tuples")) tuples.push_back(point_from_json(f.domain(), tj));
  const auto report = refutation_report(sw.omega, sw.op_names, f, tuples);
  if (report.total.to_string() != cert.at("total").get<std::string>()) {
    reason = "recomputed total differs";
    return false;
  }
  if (cert.at("refutes").get<bool>() != (report.total > ExtRat(0))) {
    reason = "refutes flag does not match the total";
    return false;
  }
  const auto& terms = cert.at("terms");
  if (terms.size() != report.terms.size()) {
    reason = "term count differs";
    return false;
  }
  for (std::size_t i = 0; i < report.terms.size(); ++i) {
    if (terms[i].at("contribution").get<std::string>() !=
        report.terms[i].contribution.to_string()) {
      reason = "term contribution differs at " + report.terms[i].op_name;
      return false;
    }
  }
  return true;
}

int run_verify_certificate(const std::string& path) {
  const Json cert = read_json_file(path);
  const std::string type = cert.at("type").get<std::string>();
  std::string reason;
  bool ok = false;
  if (type == "decide-certificate") {
    ok = verify_decide_certificate(cert, reason);
  } else if (type == "wpol-refutation") {
    ok = verify_refutation_certificate(cert, reason);
  } else {
    throw std::invalid_argument("unknown certificate type '" + type + "'");
  }
  Json out;
  out["command"] = "verify-certificate";
  out["file"] = path;
  out["certificate_type"] = type;
  out["valid"] = ok;
  if (!ok) out["reason"] = reason;
  emit(out, "");
  return ok ? kExitYes : kExitNo;
}

std::vector<Point> load_closure_points(const Json& j) {
  const Json& arr = j.is_array() ? j : j.at("points");
  std::vector<Point> points;
  for (const auto& entry : arr) {
    Point p;
    if (entry.is_string()) {
      const std::string s = entry.get<std::string>();
      p = unpack_bits(bits_from_string(s), static_cast<int>(s.size()));
    } else {
      for (const auto& label : entry) {
        const std::string s = label.get<std::string>();
        if (s != "0" && s != "1") throw std::invalid_argument("closure points must be binary");
        p.push_back(s == "1" ? 1 : 0);
      }
    }
    points.push_back(std::move(p));
  }
  return points;
}

Json ray_manifest(const ConeSpec& spec, const std::vector<Ray>& rays,
                  const std::vector<RayOrbit>& orbits) {
  Json j;
  j["type"] = "ray-manifest";
  j["n"] = spec.n;
  j["encoding"] = encoding_to_json(spec.enc);
  j["include_st"] = spec.include_st;
  Json evars = Json::array();
  for (const auto& [u, v] : spec.edge_vars()) evars.push_back(Json::array({u, v}));
  j["edge_vars"] = std::move(evars);
  j["ray_count"] = rays.size();
  Json rj = Json::array();
  for (const auto& ray : rays) {
    Json caps = Json::array();
    for (const Rat& c : ray.cap) caps.push_back(rat_to_string(c));
    rj.push_back(std::move(caps));
  }
  j["rays"] = std::move(rj);
  if (!orbits.empty()) {
    Json oj = Json::array();
    for (const auto& orbit : orbits) {
      Json entry;
      Json caps = Json::array();
      for (const Rat& c : orbit.representative.cap) caps.push_back(rat_to_string(c));
      entry["representative"] = std::move(caps);
      entry["size"] = orbit.size;
      oj.push_back(std::move(entry));
    }
    j["orbits"] = std::move(oj);
    j["orbit_count"] = orbits.size();
  }
  j["spec_hash"] = stable_hash(j.dump());
  return j;
}

std::vector<Ray> rays_from_manifest(const Json& manifest) {
  std::vector<Ray> rays;
  for (const auto& rj : manifest.at("rays")) {
    Ray ray;
    for (const auto& c : rj) ray.cap.push_back(rat_from_string(c.get<std::string>()));
    rays.push_back(std::move(ray));
  }
  return rays;
}

int run_fixtures(const std::string& out_dir) {
  fs::create_directories(out_dir);
  Json manifest;
  manifest["type"] = "fixtures";
  Json files = Json::array();
  auto save = [&](const std::string& name, const Json& j) {
    write_json_file((fs::path(out_dir) / name).string(), j);
    files.push_back(name);
  };

  save("and2.json", costfn_to_json(builtin_function("and2")));
  save("and3.json", costfn_to_json(builtin_function("and3")));
  save("bisub3.json", costfn_to_json(builtin_function("bisub3")));
  save("ksub2_3.json", costfn_to_json(builtin_function("ksub2", 3)));
  save("ksub2_4.json", costfn_to_json(builtin_function("ksub2", 4)));
  save("diamond_distance_2.json", costfn_to_json(builtin_function("diamond_distance", 2)));
  save("diamond_distance_3.json", costfn_to_json(builtin_function("diamond_distance", 3)));
  save("h0.json", costfn_to_json(builtin_function("h0")));
  save("h1.json", costfn_to_json(builtin_function("h1")));
  save("h2.json", costfn_to_json(builtin_function("h2")));
  save("weighted_equality_01.json", costfn_to_json(weighted_equality({"0", "1"})));
  save("weighted_equality_pair.json", costfn_to_json(weighted_equality({"0", "1", "-1"})));

  save("enc_identity.json", encoding_to_json(Encoding::standard("identity")));
  save("enc_pair.json", encoding_to_json(Encoding::standard("pair")));
  save("enc_star1.json", encoding_to_json(Encoding::standard("star1")));
  save("enc_star2.json", encoding_to_json(Encoding::standard("star2")));
  save("enc_unary_3.json", encoding_to_json(Encoding::standard("unary", 3)));
  save("enc_tilde_2.json", encoding_to_json(Encoding::standard("tilde", 2)));
  save("enc_diamond_2.json", encoding_to_json(Encoding::standard("diamond", 2)));
  save("enc_diamond_3.json", encoding_to_json(Encoding::standard("diamond", 3)));

  for (const char* name : {"h0", "h1", "h2", "halfpair"}) {
    const Gadget g = gadget(name);
    Json j;
    j["type"] = "gadget";
    j["name"] = name;
    j["network"] = network_to_json(g.net, g.n, g.enc.k());
    j["encoding"] = encoding_to_json(g.enc);
    j["kappa"] = rat_to_string(g.kappa);
    save(std::string("gadget_") + name + ".json", j);
  }

  {
    const auto sw = standard_wpol("omega2");
    Json j = wpol_to_json(sw.omega, sw.op_names);
    Json tuples = Json::array();
    for (const Point& t : sw.canonical_tuples) {
      tuples.push_back(point_to_json(sw.omega.support.front().first.domain, t));
    }
    j["canonical_tuples"] = std::move(tuples);
    save("omega2.json", j);
  }
  {
    const auto sw = standard_wpol("omega_k", 3);
    Json j = wpol_to_json(sw.omega, sw.op_names);
    Json tuples = Json::array();
    for (const Point& t : sw.canonical_tuples) {
      tuples.push_back(point_to_json(sw.omega.support.front().first.domain, t));
    }
    j["canonical_tuples"] = std::move(tuples);
    save("omega_k_3.json", j);
  }

  manifest["files"] = std::move(files);
  emit(manifest, "");
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decisions about network and submodular representability "
               "of cost functions over finite domains"};
  app.require_subcommand(0, 1);

  std::string verify_path;
  app.add_option("--verify-certificate", verify_path,
                 "re-check an emitted certificate file and exit");

  std::string output_path;
  app.add_option("--output", output_path, "also write the JSON result to this file");

  // check
  auto* check_cmd = app.add_subcommand("check", "test a cost-function property");
  std::string check_fn, check_prop;
  check_cmd->add_option("--function", check_fn, "cost function (JSON file or builtin name)")
      ->required();
  check_cmd
      ->add_option("--property", check_prop,
                   "submodular | ksubmodular:K | diamond_submodular:K | "
                   "monotone_nondecreasing | monotone_nonincreasing")
      ->required();

  // mincut
  auto* mincut_cmd = app.add_subcommand("mincut", "minimum s-t cut, optionally pinned");
  std::string mincut_net, mincut_pin;
  mincut_cmd->add_option("--network", mincut_net, "network JSON file or gadget name")->required();
  mincut_cmd->add_option("--pin", mincut_pin,
                         "JSON object mapping designated nodes to 0/1, or a bitstring");

  // eval-rep
  auto* eval_cmd = app.add_subcommand("eval-rep", "evaluate the represented function");
  std::string eval_net, eval_enc, eval_kappa = "0";
  bool eval_check = false;
  eval_cmd->add_option("--network", eval_net)->required();
  eval_cmd->add_option("--encoding", eval_enc)->required();
  eval_cmd->add_option("--kappa", eval_kappa, "constant offset (rational)");
  eval_cmd->add_flag("--check-retractable", eval_check, "verify retractability first");

  // retractable
  auto* retract_cmd = app.add_subcommand("retractable", "check the retraction inequality");
  std::string retract_net, retract_enc;
  retract_cmd->add_option("--network", retract_net)->required();
  retract_cmd->add_option("--encoding", retract_enc)->required();

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "decide submodular representability");
  std::string decide_fn, decide_enc, decide_cert_out;
  bool decide_full = false;
  decide_cmd->add_option("--function", decide_fn)->required();
  decide_cmd->add_option("--encoding", decide_enc)->required();
  decide_cmd->add_flag("--full-dom", decide_full, "use all of {0,1}^kn instead of the closure");
  decide_cmd->add_option("--certificate-out", decide_cert_out, "write the certificate here");

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "meet/join closure of binary points");
  std::string closure_points, closure_query;
  closure_cmd->add_option("--points", closure_points, "JSON file with points")->required();
  closure_cmd->add_option("--query", closure_query, "bitstring membership query");

  // wpol-refute
  auto* wpol_cmd = app.add_subcommand("wpol-refute", "weighted-polymorphism refutation");
  std::string wpol_omega, wpol_fn, wpol_tuples, wpol_cert_out;
  wpol_cmd->add_option("--omega", wpol_omega, "omega2 | omega_k:K")->required();
  wpol_cmd->add_option("--function", wpol_fn)->required();
  wpol_cmd->add_option("--tuples", wpol_tuples, "JSON file with argument tuples");
  wpol_cmd->add_option("--certificate-out", wpol_cert_out);

  // rays
  auto* rays_cmd = app.add_subcommand("rays", "enumerate retractable-cone extreme rays");
  std::string rays_enc, rays_out;
  int rays_n = 0;
  bool rays_st = false;
  rays_cmd->add_option("--encoding", rays_enc)->required();
  rays_cmd->add_option("--n", rays_n, "number of variables")->required();
  rays_cmd->add_flag("--include-st", rays_st, "allow the (s,t) edge");
  rays_cmd->add_option("--out", rays_out, "directory for manifest and ray networks");

  // decompose
  auto* decomp_cmd = app.add_subcommand("decompose", "write a network over the cone's rays");
  std::string decomp_net, decomp_rays;
  decomp_cmd->add_option("--network", decomp_net)->required();
  decomp_cmd->add_option("--rays", decomp_rays, "ray manifest JSON file")->required();

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "materialize builtin objects to a directory");
  std::string fixtures_out;
  fixtures_cmd->add_option("--out", fixtures_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Timer timer;
    if (!verify_path.empty()) return run_verify_certificate(verify_path);
    if (app.get_subcommands().empty()) {
      std::cerr << "error: a subcommand is required\n" << app.help() << "\n";
      return kExitError;
    }

    if (check_cmd->parsed()) {
      const CostFunction f = load_function(check_fn);
      int k = 0;
      const Property prop = property_from_string(check_prop, &k);
      const auto result = check_property(f, prop, k);
      Json j;
      j["command"] = "check";
      j["property"] = check_prop;
      j["holds"] = result.holds;
      if (result.violation) {
        Json w;
        w["x"] = point_to_json(f.domain(), result.violation->first);
        w["y"] = point_to_json(f.domain(), result.violation->second);
        j["witness"] = std::move(w);
      } else {
        j["witness"] = nullptr;
      }
      emit(j, output_path);
      return result.holds ? kExitYes : kExitNo;
    }

    if (mincut_cmd->parsed()) {
      const NetworkDoc doc = load_network(mincut_net);
      Json j;
      j["command"] = "mincut";
      if (mincut_pin.empty()) {
        const auto result = min_cut(doc.net);
        j["value"] = result.value.to_string();
        j["cut"] = result.cut;
      } else {
        if (doc.n <= 0 || doc.k <= 0) {
          throw std::invalid_argument("pinned cuts need positive n and k in the network JSON");
        }
        const int kn = doc.n * doc.k;
        std::uint64_t pin = 0;
        if (mincut_pin.front() == '{') {
          const Json pj = Json::parse(mincut_pin);
          std::size_t assigned = 0;
          for (int i = 1; i <= doc.n; ++i) {
            for (int l = 1; l <= doc.k; ++l) {
              const std::string name = Network::designated_name(i, l);
              if (!pj.contains(name)) {
                throw std::invalid_argument("pin must cover every designated node; missing " +
                                            name);
              }
              const int bit = pj.at(name).get<int>();
              if (bit != 0 && bit != 1) throw std::invalid_argument("pin values must be 0/1");
              pin = (pin << 1) | static_cast<unsigned>(bit);
              ++assigned;
            }
          }
          if (assigned != pj.size()) {
            throw std::invalid_argument("pin mentions nodes outside the designated set");
          }
        } else {
          if (static_cast<int>(mincut_pin.size()) != kn) {
            throw std::invalid_argument("pin bitstring must have length kn");
          }
          pin = bits_from_string(mincut_pin);
        }
        j["pin"] = bits_to_string(pin, kn);
        j["value"] = c_min(doc.net, doc.n, doc.k, pin).to_string();
      }
      emit(j, output_path);
      return kExitYes;
    }

    if (eval_cmd->parsed()) {
      const NetworkDoc doc = load_network(eval_net);
      const Encoding enc = load_encoding(eval_enc);
      if (doc.k != 0 && doc.k != enc.k()) {
        throw std::invalid_argument("network k does not match the encoding");
      }
      Json j;
      j["command"] = "eval-rep";
      j["n"] = doc.n;
      j["kappa"] = rat_to_string(rat_from_string(eval_kappa));
      bool retract_ok = true;
      if (eval_check) {
        const auto rc = is_retractable(doc.net, doc.n, enc);
        retract_ok = rc.retractable;
        j["retractable"] = rc.retractable;
        if (rc.violating) {
          j["violating"] = bits_to_string(*rc.violating, doc.n * enc.k());
        }
      } else {
        j["retractable"] = nullptr;  // not checked
      }
      j["function"] =
          costfn_to_json(eval_representation(doc.net, doc.n, enc, rat_from_string(eval_kappa)));
      emit(j, output_path);
      return retract_ok ? kExitYes : kExitNo;
    }

    if (retract_cmd->parsed()) {
      const NetworkDoc doc = load_network(retract_net);
      const Encoding enc = load_encoding(retract_enc);
      const auto rc = is_retractable(doc.net, doc.n, enc);
      Json j;
      j["command"] = "retractable";
      j["n"] = doc.n;
      j["retractable"] = rc.retractable;
      j["violating"] =
          rc.violating ? Json(bits_to_string(*rc.violating, doc.n * enc.k())) : Json(nullptr);
      emit(j, output_path);
      return rc.retractable ? kExitYes : kExitNo;
    }

    if (decide_cmd->parsed()) {
      const CostFunction f = load_function(decide_fn);
      const Encoding enc = load_encoding(decide_enc);
      const auto decision = decide_representable(f, enc, decide_full);
      const Json cert = decision_certificate(f, enc, decision, decide_full);
      if (!decide_cert_out.empty()) write_json_file(decide_cert_out, cert);
      Json out;
      out["command"] = "decide";
      for (auto it = cert.begin(); it != cert.end(); ++it) {
        if (it.key() != "function" && it.key() != "encoding" && it.key() != "type") {
          out[it.key()] = it.value();
        }
      }
      emit(out, output_path);
      return decision.feasible ? kExitYes : kExitNo;
    }

    if (closure_cmd->parsed()) {
      const auto points = load_closure_points(read_json_file(closure_points));
      const auto closed = closure_meet_join(LatticeFamily::boolean(), points);
      Json j;
      j["command"] = "closure";
      j["input_size"] = points.size();
      j["size"] = closed.size();
      Json pj = Json::array();
      for (const auto& p : closed) {
        pj.push_back(bits_to_string(pack_bits(p), static_cast<int>(p.size())));
      }
      j["points"] = std::move(pj);
      int code = kExitYes;
      if (!closure_query.empty()) {
        const Point q = unpack_bits(bits_from_string(closure_query),
                                    static_cast<int>(closure_query.size()));
        const bool member = std::binary_search(closed.begin(), closed.end(), q);
        j["query"] = closure_query;
        j["member"] = member;
        code = member ? kExitYes : kExitNo;
      }
      emit(j, output_path);
      return code;
    }

    if (wpol_cmd->parsed()) {
      const auto [omega_name, k] = split_spec(wpol_omega);
      const StandardWpol sw = standard_wpol(omega_name, k);
      const CostFunction f = load_function(wpol_fn);
      std::vector<Point> tuples = sw.canonical_tuples;
      if (!wpol_tuples.empty()) {
        tuples.clear();
        for (const auto& tj : read_json_file(wpol_tuples)) {
          tuples.push_back(point_from_json(f.domain(), tj));
        }
      }
      const auto report = refutation_report(sw.omega, sw.op_names, f, tuples);
      const Json cert = refutation_certificate(omega_name, k, f, sw, tuples, report);
      if (!wpol_cert_out.empty()) write_json_file(wpol_cert_out, cert);
      Json out;
      out["command"] = "wpol-refute";
      for (auto it = cert.begin(); it != cert.end(); ++it) {
        if (it.key() != "function" && it.key() != "type") out[it.key()] = it.value();
      }
      emit(out, output_path);
      return report.total > ExtRat(0) ? kExitYes : kExitNo;
    }

    if (rays_cmd->parsed()) {
      const ConeSpec spec{rays_n, load_encoding(rays_enc), rays_st};
      const auto rays = extreme_rays(build_cone(spec));
      std::vector<RayOrbit> orbits;
      const auto gens = standard_cone_symmetries(spec);
      if (!gens.empty()) orbits = symmetry_reduce(spec, rays, gens);
      const Json manifest = ray_manifest(spec, rays, orbits);
      if (!rays_out.empty()) {
        fs::create_directories(rays_out);
        write_json_file((fs::path(rays_out) / "manifest.json").string(), manifest);
        for (std::size_t i = 0; i < rays.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof(name), "ray_%03zu.json", i);
          write_json_file((fs::path(rays_out) / name).string(),
                          network_to_json(ray_to_network(spec, rays[i].cap), spec.n, spec.enc.k()));
        }
      }
      emit(manifest, output_path);
      return kExitYes;
    }

    if (decomp_cmd->parsed()) {
      const Json manifest = read_json_file(decomp_rays);
      const ConeSpec spec{manifest.at("n").get<int>(),
                          encoding_from_json(manifest.at("encoding")),
                          manifest.value("include_st", false)};
      const auto rays = rays_from_manifest(manifest);
      const NetworkDoc doc = load_network(decomp_net);
      const auto result = decompose(spec, doc.net, rays);
      Json j;
      j["command"] = "decompose";
      j["feasible"] = result.feasible();
      if (result.feasible()) {
        Json cj = Json::array();
        for (const Rat& c : *result.witness) cj.push_back(rat_to_string(c));
        j["coefficients"] = std::move(cj);
      } else {
        j["farkas"] = farkas_to_json(*result.farkas);
      }
      emit(j, output_path);
      return result.feasible() ? kExitYes : kExitNo;
    }

    if (fixtures_cmd->parsed()) return run_fixtures(fixtures_out);

    std::cerr << "error: no subcommand\n";
    return kExitError;
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return kExitError;
  }
}
