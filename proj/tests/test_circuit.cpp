#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "qtrit/circuit.hpp"
#include "qtrit/serialize.hpp"

using namespace qtrit;
using qtrit::testing::single_ccx;

namespace {

Circuit two_qubits() {
  Circuit c;
  c.wires = {{0, 2, ""}, {1, 2, ""}};
  return c;
}

Circuit qubit_and_qutrit() {
  Circuit c;
  c.wires = {{0, 2, ""}, {1, 3, ""}};
  return c;
}

std::string first_rule(const Circuit& c) {
  const auto v = validate(c);
  REQUIRE(!v.empty());
  return v.front().rule;
}

}  // namespace

TEST_CASE("gate arity") {
  CHECK(arity(GateKind::X) == 1);
  CHECK(arity(GateKind::H) == 1);
  CHECK(arity(GateKind::Measure) == 1);
  CHECK(arity(GateKind::Barrier) == 1);
  CHECK(arity(GateKind::CX) == 2);
  CHECK(arity(GateKind::TernaryCX) == 2);
  CHECK(arity(GateKind::CCX) == 3);
}

TEST_CASE("empty circuit is valid, has depth zero and no counts") {
  Circuit c;
  CHECK(is_valid(c));
  CHECK(depth(c) == 0);
  CHECK(gate_counts(c) == CountReport{});
}

TEST_CASE("wire table validation") {
  SUBCASE("ids must be contiguous from zero") {
    Circuit c;
    c.wires = {{0, 2, ""}, {2, 2, ""}};
    CHECK(first_rule(c) == "wire ids must be contiguous from zero");
    CHECK(validate(c).front().gate_index == -1);
  }
  SUBCASE("ids must not start above zero") {
    Circuit c;
    c.wires = {{1, 2, ""}};
    CHECK(first_rule(c) == "wire ids must be contiguous from zero");
  }
  SUBCASE("radix is 2 or 3") {
    Circuit c;
    c.wires = {{0, 4, ""}};
    CHECK(first_rule(c) == "wire radix must be 2 or 3");
  }
}

TEST_CASE("gate validation") {
  SUBCASE("arity mismatch") {
    Circuit c = two_qubits();
    Gate g;
    g.kind = GateKind::CX;
    g.wires = {0};
    c.gates = {g};
    CHECK(first_rule(c) == "arity mismatch");
    CHECK(validate(c).front().gate_index == 0);
  }
  SUBCASE("unknown wire id") {
    Circuit c = two_qubits();
    c.gates = {make_gate(GateKind::CX, {0, 7})};
    CHECK(first_rule(c) == "unknown wire id");
  }
  SUBCASE("negative wire id") {
    Circuit c = two_qubits();
    c.gates = {make_gate(GateKind::CX, {-1, 0})};
    CHECK(first_rule(c) == "unknown wire id");
  }
  SUBCASE("non-distinct wires") {
    Circuit c = two_qubits();
    c.gates = {make_gate(GateKind::CX, {1, 1})};
    CHECK(first_rule(c) == "non-distinct wires");
  }
  SUBCASE("qubit-only gates reject ternary wires") {
    for (GateKind kind : {GateKind::H, GateKind::T, GateKind::Tdg, GateKind::S, GateKind::Sdg}) {
      Circuit c = qubit_and_qutrit();
      c.gates = {make_gate(kind, {1})};
      CHECK(first_rule(c) == "qubit-only gate on ternary wire");
    }
    Circuit c;
    c.wires = {{0, 2, ""}, {1, 3, ""}, {2, 2, ""}};
    c.gates = {make_gate(GateKind::CCX, {0, 1, 2})};
    CHECK(first_rule(c) == "qubit-only gate on ternary wire");
  }
  SUBCASE("x and cx work on either radix") {
    Circuit c = qubit_and_qutrit();
    c.gates = {make_gate(GateKind::X, {1}), make_gate(GateKind::CX, {1, 0}),
               make_gate(GateKind::CX, {0, 1})};
    CHECK(is_valid(c));
  }
  SUBCASE("ternary control value range") {
    Circuit c = qubit_and_qutrit();
    c.gates = {make_ternary_cx(0, 1, 3, TernaryAction::Increment)};
    CHECK(first_rule(c) == "control value must be 1 or 2");
  }
  SUBCASE("control value 2 needs a ternary control") {
    Circuit c = qubit_and_qutrit();
    c.gates = {make_ternary_cx(0, 1, 2, TernaryAction::Increment)};
    CHECK(first_rule(c) == "control value 2 requires a ternary control");
  }
  SUBCASE("increment and decrement need a ternary target") {
    Circuit c = qubit_and_qutrit();
    c.gates = {make_ternary_cx(1, 0, 1, TernaryAction::Increment)};
    CHECK(first_rule(c) == "increment/decrement target must have radix 3");
    c.gates = {make_ternary_cx(1, 0, 1, TernaryAction::Decrement)};
    CHECK(first_rule(c) == "increment/decrement target must have radix 3");
  }
  SUBCASE("flip01 accepts a qubit target") {
    Circuit c = qubit_and_qutrit();
    c.gates = {make_ternary_cx(1, 0, 2, TernaryAction::Flip01)};
    CHECK(is_valid(c));
  }
  SUBCASE("nothing may follow a measurement on the same wire") {
    Circuit c = two_qubits();
    c.gates = {make_gate(GateKind::Measure, {0}), make_gate(GateKind::X, {0})};
    CHECK(first_rule(c) == "gate follows measurement on the same wire");
    c.gates = {make_gate(GateKind::Measure, {0}), make_gate(GateKind::X, {1})};
    CHECK(is_valid(c));
  }
}

TEST_CASE("require_valid names the rule and the gate") {
  Circuit c = two_qubits();
  c.gates = {make_gate(GateKind::CX, {1, 1})};
  CHECK_THROWS_WITH_AS(require_valid(c), "validation failed: non-distinct wires (gate 0)",
                       std::invalid_argument);
  CHECK_NOTHROW(require_valid(single_ccx()));
}

TEST_CASE("depth is greedy layering") {
  Circuit c;
  c.wires = {{0, 2, ""}, {1, 2, ""}, {2, 2, ""}};

  SUBCASE("parallel gates share a layer") {
    c.gates = {make_gate(GateKind::X, {0}), make_gate(GateKind::X, {1}),
               make_gate(GateKind::X, {2})};
    CHECK(depth(c) == 1);
  }
  SUBCASE("chained gates stack") {
    c.gates = {make_gate(GateKind::CX, {0, 1}), make_gate(GateKind::CX, {1, 2}),
               make_gate(GateKind::X, {0})};
    CHECK(depth(c) == 2);
  }
  SUBCASE("measure and barrier occupy layers") {
    c.gates = {make_gate(GateKind::Barrier, {0}), make_gate(GateKind::Measure, {0})};
    CHECK(depth(c) == 2);
    CHECK(gate_counts(c).depth == 2);
  }
}

TEST_CASE("gate counts by family") {
  Circuit c;
  c.wires = {{0, 2, ""}, {1, 2, ""}, {2, 2, ""}, {3, 3, ""}};
  c.gates = {
      make_gate(GateKind::CCX, {0, 1, 2}), make_gate(GateKind::T, {0}),
      make_gate(GateKind::Tdg, {1}),       make_gate(GateKind::H, {2}),
      make_gate(GateKind::S, {0}),         make_gate(GateKind::Sdg, {1}),
      make_gate(GateKind::X, {2}),         make_gate(GateKind::CX, {0, 1}),
      make_ternary_cx(0, 3, 1, TernaryAction::Increment),
      make_gate(GateKind::Barrier, {2}),   make_gate(GateKind::Measure, {2}),
  };
  const CountReport r = gate_counts(c);
  CHECK(r.toffoli == 1);
  CHECK(r.t == 2);
  CHECK(r.cnot == 1);
  CHECK(r.h == 1);
  CHECK(r.ternary_cnot == 1);
  CHECK(r.one_wire == 6);
  CHECK(r.two_wire == 2);
  CHECK(r.depth == depth(c));
}

TEST_CASE("total dimension guard") {
  CHECK(total_dimension({2, 2, 3}, 100) == 12);
  CHECK_THROWS_WITH_AS(total_dimension(std::vector<int>(9, 2), 256),
                       "state dimension exceeds 256", std::invalid_argument);
  CHECK_THROWS_AS(total_dimension(std::vector<int>(200, 3), 1000000), std::invalid_argument);
}

TEST_CASE("same_structure ignores names and labels") {
  Circuit a = single_ccx();
  Circuit b = a;
  b.name = "other";
  b.wires[0].label = "ctrl";
  CHECK(same_structure(a, b));
  CHECK(a != b);

  b.wires[1].radix = 3;
  CHECK(!same_structure(a, b));

  Circuit c = single_ccx();
  c.gates.push_back(make_gate(GateKind::X, {0}));
  CHECK(!same_structure(a, c));
}

TEST_CASE("json round trip preserves everything") {
  Circuit c;
  c.name = "mixed";
  c.wires = {{0, 2, "a"}, {1, 3, ""}, {2, 2, "out"}};
  c.gates = {
      make_gate(GateKind::H, {0}),
      make_ternary_cx(0, 1, 1, TernaryAction::Increment),
      make_ternary_cx(1, 2, 2, TernaryAction::Flip01),
      make_gate(GateKind::Barrier, {2}),
      make_gate(GateKind::Measure, {2}),
  };
  const std::string text = circuit_to_json_string(c);
  const Circuit back = circuit_from_json_string(text);
  CHECK(back == c);
  CHECK(circuit_to_json_string(back) == text);
}

TEST_CASE("json schema details") {
  Circuit c;
  c.name = "one";
  c.wires = {{0, 2, ""}, {1, 3, "aux"}};
  c.gates = {make_ternary_cx(0, 1, 1, TernaryAction::Decrement)};
  const nlohmann::ordered_json j = circuit_to_json(c);

  CHECK(j["wires"][0].contains("label") == false);
  CHECK(j["wires"][1]["label"] == "aux");
  CHECK(j["gates"][0]["kind"] == "tcx");
  CHECK(j["gates"][0]["params"]["control_value"] == 1);
  CHECK(j["gates"][0]["params"]["action"] == "dec");

  SUBCASE("field order is fixed") {
    const std::string text = j.dump();
    CHECK(text.find("\"name\"") < text.find("\"wires\""));
    CHECK(text.find("\"wires\"") < text.find("\"gates\""));
  }
  SUBCASE("bad documents are rejected") {
    CHECK_THROWS(circuit_from_json_string("{\"name\": 3}"));
    CHECK_THROWS(circuit_from_json_string("not json"));
    CHECK_THROWS(circuit_from_json_string(
        R"({"name":"x","wires":[{"id":0,"radix":2}],"gates":[{"kind":"nope","params":{},"wires":[0]}]})"));
  }
}

TEST_CASE("kind and action names round trip") {
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::T, GateKind::Tdg, GateKind::S,
                     GateKind::Sdg, GateKind::CX, GateKind::CCX, GateKind::TernaryCX,
                     GateKind::Measure, GateKind::Barrier}) {
    CHECK(kind_from_name(kind_name(k)) == k);
  }
  for (TernaryAction a :
       {TernaryAction::Increment, TernaryAction::Decrement, TernaryAction::Flip01}) {
    CHECK(action_from_name(action_name(a)) == a);
  }
  CHECK_THROWS(kind_from_name("bogus"));
  CHECK_THROWS(action_from_name("bogus"));
}
