#pragma once

#include <json.hpp>

#include "netrep/cone.hpp"
#include "netrep/costfn.hpp"
#include "netrep/encoding.hpp"
#include "netrep/network.hpp"
#include "netrep/ratlp.hpp"
#include "netrep/replp.hpp"
#include "netrep/wpol.hpp"

namespace netrep {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

Json costfn_to_json(const CostFunction& f);
CostFunction costfn_from_json(const Json& j);

Json network_to_json(const Network& net, int n, int k);
// Returns the network plus the declared (n, k).
struct NetworkDoc {
  Network net;
  int n = 0;
  int k = 0;
};
NetworkDoc network_from_json(const Json& j);

Json encoding_to_json(const Encoding& enc);
Encoding encoding_from_json(const Json& j);

Json linsystem_to_json(const LinSystem& sys);
LinSystem linsystem_from_json(const Json& j);

Json farkas_to_json(const FarkasCertificate& cert);
FarkasCertificate farkas_from_json(const Json& j);

Json point_to_json(const std::vector<std::string>& domain, const Point& x);
Point point_from_json(const std::vector<std::string>& domain, const Json& j);

Json operation_to_json(const OperationTable& op);
Json wpol_to_json(const WeightedPolymorphism& omega, const std::vector<std::string>& names);

// 64-bit FNV-1a, hex string; used to fingerprint archived manifests.
std::string stable_hash(const std::string& payload);

}  // namespace netrep
