#include "qtrit/serialize.hpp"

#include <stdexcept>

namespace qtrit {

std::string kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::TernaryCX: return "tcx";
    case GateKind::Measure: return "measure";
    case GateKind::Barrier: return "barrier";
  }
  throw std::invalid_argument("unknown gate kind");
}

GateKind kind_from_name(const std::string& name) {
  if (name == "x") return GateKind::X;
  if (name == "h") return GateKind::H;
  if (name == "t") return GateKind::T;
  if (name == "tdg") return GateKind::Tdg;
  if (name == "s") return GateKind::S;
  if (name == "sdg") return GateKind::Sdg;
  if (name == "cx") return GateKind::CX;
  if (name == "ccx") return GateKind::CCX;
  if (name == "tcx") return GateKind::TernaryCX;
  if (name == "measure") return GateKind::Measure;
  if (name == "barrier") return GateKind::Barrier;
  throw std::invalid_argument("unknown gate kind: " + name);
}

std::string action_name(TernaryAction a) {
  switch (a) {
    case TernaryAction::Increment: return "inc";
    case TernaryAction::Decrement: return "dec";
    case TernaryAction::Flip01: return "x01";
  }
  throw std::invalid_argument("unknown ternary action");
}

TernaryAction action_from_name(const std::string& name) {
  if (name == "inc") return TernaryAction::Increment;
  if (name == "dec") return TernaryAction::Decrement;
  if (name == "x01") return TernaryAction::Flip01;
  throw std::invalid_argument("unknown ternary action: " + name);
}

nlohmann::ordered_json circuit_to_json(const Circuit& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  nlohmann::ordered_json wires = nlohmann::ordered_json::array();
  for (const WireSpec& w : c.wires) {
    nlohmann::ordered_json jw;
    jw["id"] = w.id;
    jw["radix"] = w.radix;
    if (!w.label.empty()) jw["label"] = w.label;
    wires.push_back(std::move(jw));
  }
  j["wires"] = std::move(wires);
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (const Gate& g : c.gates) {
    nlohmann::ordered_json jg;
    jg["kind"] = kind_name(g.kind);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (g.kind == GateKind::TernaryCX) {
      params["control_value"] = g.control_value;
      params["action"] = action_name(g.action);
    }
    jg["params"] = std::move(params);
    jg["wires"] = g.wires;
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c;
  c.name = j.value("name", std::string{});
  if (!j.contains("wires") || !j.at("wires").is_array()) {
    throw std::invalid_argument("circuit json: missing wires array");
  }
  for (const auto& jw : j.at("wires")) {
    WireSpec w;
    w.id = jw.at("id").get<int>();
    w.radix = jw.at("radix").get<int>();
    w.label = jw.value("label", std::string{});
    c.wires.push_back(std::move(w));
  }
  if (!j.contains("gates") || !j.at("gates").is_array()) {
    throw std::invalid_argument("circuit json: missing gates array");
  }
  for (const auto& jg : j.at("gates")) {
    Gate g;
    g.kind = kind_from_name(jg.at("kind").get<std::string>());
    g.wires = jg.at("wires").get<std::vector<int>>();
    if (g.kind == GateKind::TernaryCX) {
      const auto& params = jg.at("params");
      g.control_value = params.at("control_value").get<int>();
      g.action = action_from_name(params.at("action").get<std::string>());
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

std::string circuit_to_json_string(const Circuit& c) { return circuit_to_json(c).dump(2) + "\n"; }

Circuit circuit_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  return circuit_from_json(j);
}

}  // namespace qtrit
