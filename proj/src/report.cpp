#include "ipf/report.hpp"

namespace ipf {

Json to_json(const ElementSet& set) {
  Json out = Json::array();
  set.for_each([&](Element e) { out.push_back(e); });
  return out;
}

Json to_json(const Seq& t) {
  Json out = Json::array();
  for (Element e : t.terms()) out.push_back(e);
  return out;
}

Json to_json(const ConstantReport& report) {
  Json out;
  out["kind"] = to_string(report.kind);
  out["value"] = report.value;
  out["witness"] = to_json(report.witness);
  out["nodesExplored"] = report.nodes_explored;
  return out;
}

Json to_json(const ExtremalCertificate& cert) {
  Json out;
  out["verdict"] = cert.pass ? "pass" : "fail";
  if (cert.fail_reason) {
    const char id[2] = {condition_id(*cert.fail_reason), '\0'};
    out["failReason"] = {{"id", id}, {"name", condition_name(*cert.fail_reason)}};
  } else {
    out["failReason"] = nullptr;
  }
  Json evaluated = Json::array();
  for (auto [c, ok] : cert.evaluated) {
    const char id[2] = {condition_id(c), '\0'};
    evaluated.push_back({{"id", id}, {"name", condition_name(c)}, {"ok", ok}});
  }
  out["conditions"] = std::move(evaluated);
  out["generatorOrder"] = cert.generator_order;
  Json gens = Json::array();
  for (const auto& g : cert.per_generator)
    gens.push_back({{"element", g.element},
                    {"index", g.index},
                    {"period", g.period},
                    {"multiplicity", g.multiplicity}});
  out["perGenerator"] = std::move(gens);
  Json comps = Json::array();
  for (const auto& c : cert.components) {
    Json entry;
    entry["elements"] = c.elements;
    entry["generators"] = c.generators;
    entry["kind"] = c.kind ? Json(to_string(*c.kind)) : Json(nullptr);
    comps.push_back(std::move(entry));
  }
  out["components"] = std::move(comps);
  out["mainForm"] = {{"verdict", cert.main_form_pass ? "pass" : "fail"},
                     {"reason", cert.main_form_reason}};
  return out;
}

Json describe(const FiniteSemigroup& s) {
  Json out;
  out["order"] = s.order();
  out["idempotents"] = to_json(s.idempotent_set());
  out["idempotentCount"] = s.idempotent_set().size();
  out["commutative"] = s.commutative();
  out["zero"] = s.zero() ? Json(*s.zero()) : Json(nullptr);
  out["identity"] = s.identity() ? Json(*s.identity()) : Json(nullptr);
  return out;
}

std::string table_id(const FiniteSemigroup& s) {
  std::string out = std::to_string(s.order()) + ":";
  const auto cells = s.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cells[i]);
  }
  return out;
}

}  // namespace ipf
