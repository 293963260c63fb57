#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netrep/json_io.hpp"
#include "netrep/lattice.hpp"

namespace py = pybind11;
using namespace netrep;

// The binding surface passes JSON documents as strings; the python package
// wraps the calls with json.loads/dumps so users see plain dicts.

namespace {

Json parse(const std::string& text) { return Json::parse(text); }

std::string builtin_function_py(const std::string& name, int k) {
  return costfn_to_json(builtin_function(name, k)).dump();
}

std::string check_property_py(const std::string& f_json, const std::string& property) {
  const CostFunction f = costfn_from_json(parse(f_json));
  int k = 0;
  const Property prop = property_from_string(property, &k);
  const auto result = check_property(f, prop, k);
  Json j;
  j["holds"] = result.holds;
  if (result.violation) {
    j["witness"] = Json{{"x", point_to_json(f.domain(), result.violation->first)},
                        {"y", point_to_json(f.domain(), result.violation->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

std::string scale_shift_py(const std::string& f_json, const std::string& alpha,
                           const std::string& beta) {
  return costfn_to_json(
             scale_shift(costfn_from_json(parse(f_json)), rat_from_string(alpha), rat_from_string(beta)))
      .dump();
}

std::string partial_min_py(const std::string& f_json, int drop) {
  return costfn_to_json(partial_min(costfn_from_json(parse(f_json)), drop)).dump();
}

std::string complement_function_py(const std::string& f_json) {
  return costfn_to_json(complement_function(costfn_from_json(parse(f_json)))).dump();
}

std::string brute_force_min_py(const std::string& f_json) {
  const CostFunction f = costfn_from_json(parse(f_json));
  const auto [value, argmin] = brute_force_min(f);
  Json j;
  j["value"] = value.to_string();
  j["argmin"] = point_to_json(f.domain(), argmin);
  return j.dump();
}

std::string standard_encoding_py(const std::string& name, int k) {
  return encoding_to_json(Encoding::standard(name, k)).dump();
}

std::string bar_encoding_py(const std::string& enc_json) {
  return encoding_to_json(encoding_from_json(parse(enc_json)).bar()).dump();
}

std::string encode_tuple_py(const std::string& enc_json, const std::vector<std::string>& labels) {
  const Encoding enc = encoding_from_json(parse(enc_json));
  Point x;
  for (const auto& label : labels) {
    x.push_back(static_cast<int>(
        std::distance(enc.domain().begin(),
                      std::find(enc.domain().begin(), enc.domain().end(), label))));
    if (x.back() >= enc.domain_size()) throw std::invalid_argument("unknown label " + label);
  }
  return bits_to_string(enc.encode_tuple(x), enc.k() * static_cast<int>(x.size()));
}

std::string retract_blocks_py(const std::string& enc_json, const std::string& bits) {
  const Encoding enc = encoding_from_json(parse(enc_json));
  if (bits.size() % enc.k() != 0) throw std::invalid_argument("length must be a multiple of k");
  const int n = static_cast<int>(bits.size()) / enc.k();
  return bits_to_string(enc.retract_blocks(bits_from_string(bits), n),
                        static_cast<int>(bits.size()));
}

std::string gadget_py(const std::string& name) {
  const Gadget g = gadget(name);
  Json j;
  j["name"] = name;
  j["network"] = network_to_json(g.net, g.n, g.enc.k());
  j["encoding"] = encoding_to_json(g.enc);
  j["kappa"] = rat_to_string(g.kappa);
  j["n"] = g.n;
  return j.dump();
}

std::string min_cut_py(const std::string& net_json) {
  const auto doc = network_from_json(parse(net_json));
  const auto result = min_cut(doc.net);
  Json j;
  j["value"] = result.value.to_string();
  j["cut"] = result.cut;
  return j.dump();
}

std::string c_min_py(const std::string& net_json, const std::string& pin) {
  const auto doc = network_from_json(parse(net_json));
  if (static_cast<int>(pin.size()) != doc.n * doc.k) {
    throw std::invalid_argument("pin bitstring must have length n*k");
  }
  return c_min(doc.net, doc.n, doc.k, bits_from_string(pin)).to_string();
}

std::string is_retractable_py(const std::string& net_json, const std::string& enc_json) {
  const auto doc = network_from_json(parse(net_json));
  const Encoding enc = encoding_from_json(parse(enc_json));
  const auto rc = is_retractable(doc.net, doc.n, enc);
  Json j;
  j["retractable"] = rc.retractable;
  j["violating"] =
      rc.violating ? Json(bits_to_string(*rc.violating, doc.n * enc.k())) : Json(nullptr);
  return j.dump();
}

std::string eval_representation_py(const std::string& net_json, const std::string& enc_json,
                                   const std::string& kappa) {
  const auto doc = network_from_json(parse(net_json));
  const Encoding enc = encoding_from_json(parse(enc_json));
  return costfn_to_json(eval_representation(doc.net, doc.n, enc, rat_from_string(kappa))).dump();
}

std::string complement_network_py(const std::string& net_json) {
  const auto doc = network_from_json(parse(net_json));
  return network_to_json(complement_network(doc.net), doc.n, doc.k).dump();
}

std::string decide_representable_py(const std::string& f_json, const std::string& enc_json) {
  const CostFunction f = costfn_from_json(parse(f_json));
  const Encoding enc = encoding_from_json(parse(enc_json));
  const auto decision = decide_representable(f, enc);
  Json j;
  j["verdict"] = decision.feasible ? "feasible" : "infeasible";
  j["kn"] = decision.kn;
  j["stats"] = Json{{"num_vars", decision.stats.num_vars},
                    {"eq_rows", decision.stats.eq_rows},
                    {"pair_rows", decision.stats.pair_rows},
                    {"rho_rows", decision.stats.rho_rows}};
  j["witness"] = decision.witness ? costfn_to_json(*decision.witness) : Json(nullptr);
  j["farkas"] = decision.farkas ? farkas_to_json(*decision.farkas) : Json(nullptr);
  j["conflict"] =
      decision.conflict ? Json{{"x", point_to_json(f.domain(), decision.conflict->x)}} : Json(nullptr);
  return j.dump();
}

bool verify_witness_py(const std::string& g_json, const std::string& f_json,
                       const std::string& enc_json) {
  return verify_witness(costfn_from_json(parse(g_json)), costfn_from_json(parse(f_json)),
                        encoding_from_json(parse(enc_json)));
}

std::vector<std::string> closure_py(const std::vector<std::string>& bitstrings) {
  std::vector<Point> points;
  for (const auto& s : bitstrings) {
    points.push_back(unpack_bits(bits_from_string(s), static_cast<int>(s.size())));
  }
  std::vector<std::string> out;
  for (const auto& p : closure_meet_join(LatticeFamily::boolean(), points)) {
    out.push_back(bits_to_string(pack_bits(p), static_cast<int>(p.size())));
  }
  return out;
}

std::string refutation_py(const std::string& omega, int k, const std::string& f_json) {
  const StandardWpol sw = standard_wpol(omega, k);
  const CostFunction f = costfn_from_json(parse(f_json));
  const auto report = refutation_report(sw.omega, sw.op_names, f, sw.canonical_tuples);
  Json j;
  j["omega"] = omega;
  j["total"] = report.total.to_string();
  j["refutes"] = report.total > ExtRat(0);
  Json terms = Json::array();
  for (const auto& term : report.terms) {
    terms.push_back(Json{{"op", term.op_name},
                         {"output", point_to_json(f.domain(), term.output)},
                         {"weight", rat_to_string(term.weight)},
                         {"contribution", term.contribution.to_string()}});
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

std::string cone_rays_py(int n, const std::string& enc_json, bool include_st) {
  const ConeSpec spec{n, encoding_from_json(parse(enc_json)), include_st};
  const auto rays = extreme_rays(build_cone(spec));
  Json j;
  j["n"] = n;
  j["ray_count"] = rays.size();
  Json rj = Json::array();
  for (const auto& ray : rays) {
    Json caps = Json::array();
    for (const Rat& c : ray.cap) caps.push_back(rat_to_string(c));
    rj.push_back(std::move(caps));
  }
  j["rays"] = std::move(rj);
  Json evars = Json::array();
  for (const auto& [u, v] : spec.edge_vars()) evars.push_back(Json::array({u, v}));
  j["edge_vars"] = std::move(evars);
  const auto gens = standard_cone_symmetries(spec);
  if (!gens.empty()) {
    const auto orbits = symmetry_reduce(spec, rays, gens);
    j["orbit_count"] = orbits.size();
  }
  return j.dump();
}

std::string feasible_py(const std::string& sys_json) {
  const LinSystem sys = linsystem_from_json(parse(sys_json));
  const auto result = feasible(sys);
  Json j;
  j["feasible"] = result.feasible();
  if (result.feasible()) {
    Json xs = Json::array();
    for (const Rat& v : *result.witness) xs.push_back(rat_to_string(v));
    j["witness"] = std::move(xs);
  } else {
    j["farkas"] = farkas_to_json(*result.farkas);
  }
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_netrep, m) {
  m.doc() = "Exact decisions about network and submodular representability of cost "
            "functions over finite domains (JSON-string interface; see the netrep "
            "package for the dict-level wrappers)";

  m.def("builtin_function", &builtin_function_py, py::arg("name"), py::arg("k") = 0);
  m.def("check_property", &check_property_py, py::arg("function"), py::arg("property"));
  m.def("scale_shift", &scale_shift_py, py::arg("function"), py::arg("alpha"), py::arg("beta"));
  m.def("partial_min", &partial_min_py, py::arg("function"), py::arg("drop"));
  m.def("complement_function", &complement_function_py, py::arg("function"));
  m.def("brute_force_min", &brute_force_min_py, py::arg("function"));

  m.def("standard_encoding", &standard_encoding_py, py::arg("name"), py::arg("k") = 0);
  m.def("bar_encoding", &bar_encoding_py, py::arg("encoding"));
  m.def("encode_tuple", &encode_tuple_py, py::arg("encoding"), py::arg("labels"));
  m.def("retract_blocks", &retract_blocks_py, py::arg("encoding"), py::arg("bits"));

  m.def("gadget", &gadget_py, py::arg("name"));
  m.def("min_cut", &min_cut_py, py::arg("network"));
  m.def("c_min", &c_min_py, py::arg("network"), py::arg("pin"));
  m.def("is_retractable", &is_retractable_py, py::arg("network"), py::arg("encoding"));
  m.def("eval_representation", &eval_representation_py, py::arg("network"), py::arg("encoding"),
        py::arg("kappa") = "0");
  m.def("complement_network", &complement_network_py, py::arg("network"));

  m.def("decide_representable", &decide_representable_py, py::arg("function"),
        py::arg("encoding"));
  m.def("verify_witness", &verify_witness_py, py::arg("witness"), py::arg("function"),
        py::arg("encoding"));

  m.def("closure_meet_join", &closure_py, py::arg("points"));
  m.def("refutation", &refutation_py, py::arg("omega"), py::arg("k"), py::arg("function"));
  m.def("cone_rays", &cone_rays_py, py::arg("n"), py::arg("encoding"),
        py::arg("include_st") = false);
  m.def("feasible", &feasible_py, py::arg("system"));
}
