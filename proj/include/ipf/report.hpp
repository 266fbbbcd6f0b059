#pragma once

#include <json.hpp>

#include "ipf/constants.hpp"
#include "ipf/products.hpp"
#include "ipf/semigroup.hpp"
#include "ipf/structure.hpp"

namespace ipf {

using Json = nlohmann::ordered_json;

Json to_json(const ElementSet& set);
Json to_json(const Seq& t);
// {kind, value, witness, nodesExplored}
Json to_json(const ConstantReport& report);
Json to_json(const ExtremalCertificate& cert);
// order, idempotents, commutative, zero, identity
Json describe(const FiniteSemigroup& s);
// "n:c0,c1,..." identifier used in run logs
std::string table_id(const FiniteSemigroup& s);

}  // namespace ipf
