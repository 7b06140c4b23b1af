#pragma once

#include <string>

#include "json.hpp"
#include "qtrit/circuit.hpp"

namespace qtrit {

// Circuit JSON schema (field order is fixed and emission is deterministic):
//   {
//     "name":  "...",
//     "wires": [{"id": 0, "radix": 2, "label": "a0"}, ...],   label omitted when empty
//     "gates": [{"kind": "ccx", "params": {}, "wires": [0,1,2]}, ...]
//   }
// TernaryCX carries params {"control_value": 1|2, "action": "inc"|"dec"|"x01"}.

std::string kind_name(GateKind kind);
GateKind kind_from_name(const std::string& name);

std::string action_name(TernaryAction a);
TernaryAction action_from_name(const std::string& name);

nlohmann::ordered_json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

std::string circuit_to_json_string(const Circuit& c);
Circuit circuit_from_json_string(const std::string& text);

}  // namespace qtrit
