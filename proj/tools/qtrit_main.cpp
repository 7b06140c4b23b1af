// qtrit: generate, rewrite, count, estimate, sweep and simulate small
// mixed-radix circuits from the command line.
//
// Exit codes: 0 success, 1 domain error (bad sizes, unparseable circuit,
// simulation limits), 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtrit/arith.hpp"
#include "qtrit/circuit.hpp"
#include "qtrit/decompose.hpp"
#include "qtrit/estimator.hpp"
#include "qtrit/noise.hpp"
#include "qtrit/qasm.hpp"
#include "qtrit/serialize.hpp"
#include "qtrit/sim.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  std::string format;  // empty means the command default
  std::string output;  // empty means stdout
  long seed = 0;       // reserved; every code path is deterministic
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const GlobalOpts& opts, const std::string& text) {
  if (opts.output.empty() || opts.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
  out << text;
}

qtrit::Circuit load_circuit(const std::string& path) {
  const std::string text = read_input(path);
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    return qtrit::circuit_from_json_string(text);
  }
  qtrit::ParseResult res = qtrit::parse_qasm(text);
  if (!res.ok()) {
    std::ostringstream msg;
    for (const auto& e : res.errors) {
      msg << "line " << e.span.line << ", column " << e.span.column << ": "
          << qtrit::to_string(e.kind) << ": " << e.message << "\n";
    }
    throw std::runtime_error("cannot parse circuit:\n" + msg.str());
  }
  return *res.circuit;
}

std::string format_or(const GlobalOpts& opts, const char* fallback) {
  return opts.format.empty() ? fallback : opts.format;
}

void emit_circuit(const GlobalOpts& opts, const qtrit::Circuit& c) {
  const std::string fmt = format_or(opts, "json");
  if (fmt == "qasm") {
    write_output(opts, qtrit::emit_qasm(c));
  } else if (fmt == "json") {
    write_output(opts, qtrit::circuit_to_json_string(c));
  } else {
    throw CLI::ValidationError("--format", "circuits support json or qasm");
  }
}

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void cmd_count(const GlobalOpts& opts, const std::string& input) {
  const qtrit::Circuit c = load_circuit(input);
  qtrit::require_valid(c);
  const qtrit::CountReport r = qtrit::gate_counts(c);
  const std::string fmt = format_or(opts, "json");
  if (fmt == "csv") {
    std::ostringstream out;
    out << "toffoli,t,cnot,h,ternary_cnot,one_wire,two_wire,depth\n"
        << r.toffoli << ',' << r.t << ',' << r.cnot << ',' << r.h << ',' << r.ternary_cnot
        << ',' << r.one_wire << ',' << r.two_wire << ',' << r.depth << '\n';
    write_output(opts, out.str());
  } else if (fmt == "json") {
    ordered_json j;
    j["toffoli"] = r.toffoli;
    j["t"] = r.t;
    j["cnot"] = r.cnot;
    j["h"] = r.h;
    j["ternary_cnot"] = r.ternary_cnot;
    j["one_wire"] = r.one_wire;
    j["two_wire"] = r.two_wire;
    j["depth"] = r.depth;
    write_output(opts, j.dump(2) + "\n");
  } else {
    throw CLI::ValidationError("--format", "count supports json or csv");
  }
}

void cmd_estimate(const GlobalOpts& opts, qtrit::OperationKind kind, int n, qtrit::Route route,
                  bool floor_counts, const qtrit::NoiseParams& noise) {
  if (format_or(opts, "json") != "json") {
    throw CLI::ValidationError("--format", "estimate supports json only");
  }
  const qtrit::ResourceEstimate est = qtrit::estimate(kind, n, route, floor_counts);
  const qtrit::SuccessReport rep = qtrit::success_probability(est, noise);
  ordered_json j;
  j["op"] = qtrit::to_string(kind);
  j["n"] = est.n;
  j["route"] = qtrit::to_string(route);
  j["toffoli"] = est.toffoli;
  j["total_depth"] = est.total_depth;
  j["cnot"] = est.cnot;
  j["t"] = est.t;
  j["h"] = est.h;
  j["ternary_cnot"] = est.ternary_cnot;
  j["p_success"] = rep.p_success;
  j["p_error"] = rep.p_error;
  j["one_wire_factor"] = rep.one_wire_factor;
  j["two_wire_factor"] = rep.two_wire_factor;
  j["relaxation_factor"] = rep.relaxation_factor;
  write_output(opts, j.dump(2) + "\n");
}

void cmd_sweep(const GlobalOpts& opts, qtrit::OperationKind kind, int from, int to,
               const qtrit::NoiseParams& noise) {
  const std::vector<qtrit::SweepRow> rows = qtrit::sweep(kind, from, to, noise);
  const std::string fmt = format_or(opts, "csv");
  if (fmt == "csv") {
    std::ostringstream out;
    out << "n,p_success_conventional,p_success_qutrit,error_decrease_percent\n";
    for (const auto& row : rows) {
      out << row.n << ',' << csv_num(row.p_success_conventional) << ','
          << csv_num(row.p_success_qutrit) << ',' << csv_num(row.error_decrease_percent)
          << '\n';
    }
    write_output(opts, out.str());
  } else if (fmt == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      j["n"] = row.n;
      j["p_success_conventional"] = row.p_success_conventional;
      j["p_success_qutrit"] = row.p_success_qutrit;
      j["error_decrease_percent"] = row.error_decrease_percent;
      arr.push_back(j);
    }
    write_output(opts, arr.dump(2) + "\n");
  } else {
    throw CLI::ValidationError("--format", "sweep supports csv or json");
  }
}

std::vector<int> parse_digits(const std::string& text) {
  std::vector<int> digits;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '0' || ch > '9') throw std::runtime_error("basis digits must be 0-9 characters");
    digits.push_back(ch - '0');
  }
  return digits;
}

std::string digit_string(const std::vector<int>& digits) {
  std::string s;
  for (int d : digits) s.push_back(static_cast<char>('0' + d));
  return s;
}

void cmd_simulate(const GlobalOpts& opts, const std::string& input, const std::string& basis,
                  bool noisy, bool compare_ideal, const qtrit::NoiseParams& noise) {
  if (format_or(opts, "json") != "json") {
    throw CLI::ValidationError("--format", "simulate supports json only");
  }
  if (compare_ideal && !noisy) {
    throw CLI::ValidationError("--compare-ideal", "only meaningful together with --noise");
  }
  const qtrit::Circuit c = load_circuit(input);
  std::vector<int> digits = parse_digits(basis);
  if (digits.empty()) digits.assign(c.wires.size(), 0);

  ordered_json j;
  ordered_json dims = ordered_json::array();
  for (const auto& w : c.wires) dims.push_back(w.radix);
  j["input"] = digit_string(digits);
  j["dims"] = dims;

  if (!noisy) {
    const qtrit::StateVector psi = qtrit::run(c, digits);
    ordered_json amps = ordered_json::array();
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (std::abs(psi[i]) <= 1e-12) continue;
      ordered_json a;
      a["digits"] = digit_string(psi.digits_of(i));
      a["re"] = psi[i].real();
      a["im"] = psi[i].imag();
      amps.push_back(a);
    }
    j["amplitudes"] = amps;
    ordered_json pops = ordered_json::array();
    for (std::size_t w = 0; w < c.wires.size(); ++w) {
      ordered_json p = ordered_json::array();
      for (int level = 0; level < c.wires[w].radix; ++level) {
        p.push_back(psi.level_population(static_cast<int>(w), level));
      }
      pops.push_back(p);
    }
    j["populations"] = pops;
  } else {
    const qtrit::DensityMatrix rho = qtrit::run_density(c, digits, noise);
    j["trace"] = rho.trace().real();
    ordered_json pops = ordered_json::array();
    const auto& m = rho.matrix();
    std::vector<std::vector<double>> acc;
    for (const auto& w : c.wires) acc.emplace_back(static_cast<std::size_t>(w.radix), 0.0);
    const qtrit::StateVector probe(qtrit::wire_dims(c));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const std::vector<int> ds = probe.digits_of(static_cast<std::size_t>(i));
      for (std::size_t w = 0; w < ds.size(); ++w) {
        acc[w][static_cast<std::size_t>(ds[w])] += m(i, i).real();
      }
    }
    for (const auto& wire_pops : acc) {
      ordered_json p = ordered_json::array();
      for (double v : wire_pops) p.push_back(v);
      pops.push_back(p);
    }
    j["populations"] = pops;
    if (compare_ideal) {
      j["fidelity"] = qtrit::fidelity(rho, qtrit::run(c, digits));
    }
  }
  write_output(opts, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixed-radix circuit toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--format", opts.format, "output format (json, csv, qasm)")
      ->check(CLI::IsMember({"json", "csv", "qasm"}));
  app.add_option("--output", opts.output, "output path (default stdout)");
  app.add_option("--seed", opts.seed, "reserved; output never depends on it");

  qtrit::NoiseParams noise;
  auto add_noise_flags = [&noise](CLI::App* cmd) {
    cmd->add_option("--eps1", noise.eps1, "one-wire gate error probability");
    cmd->add_option("--eps2", noise.eps2, "two-wire gate error probability");
    cmd->add_option("--t1q", noise.t1_qubit, "qubit T1 (us)");
    cmd->add_option("--t1t", noise.t1_qutrit, "qutrit T1 (us)");
    cmd->add_option("--gate-time", noise.gate_time, "time per depth layer (us)");
  };

  const std::map<std::string, qtrit::OperationKind> op_map{
      {"add", qtrit::OperationKind::add_sub},
      {"mul", qtrit::OperationKind::mul_div},
      {"sqrt", qtrit::OperationKind::sqrt},
  };
  const std::map<std::string, qtrit::Route> route_map{
      {"ct", qtrit::Route::clifford_t},
      {"clifford_t", qtrit::Route::clifford_t},
      {"qutrit", qtrit::Route::qutrit},
  };
  const std::map<std::string, qtrit::DecompositionVariant> variant_map{
      {"A", qtrit::DecompositionVariant::clifford_t_A},
      {"B", qtrit::DecompositionVariant::clifford_t_B},
      {"C", qtrit::DecompositionVariant::clifford_t_C},
      {"qutrit", qtrit::DecompositionVariant::qutrit},
  };

  // generate
  CLI::App* generate = app.add_subcommand("generate", "build an arithmetic circuit");
  generate->require_subcommand(1);
  generate->fallthrough();

  int adder_n = 0;
  std::optional<std::uint64_t> operand_a, operand_b;
  CLI::App* adder = generate->add_subcommand("adder", "ripple-carry adder on 2n+1 wires");
  adder->fallthrough();
  adder->add_option("--n", adder_n, "operand width in bits")->required();
  adder->add_option("--a", operand_a, "prepare the first operand with this value");
  adder->add_option("--b", operand_b, "prepare the second operand with this value");
  adder->callback([&] {
    qtrit::Circuit c = qtrit::build_adder(adder_n);
    if (operand_b) qtrit::prepare_operand(c, {*operand_b, adder_n, adder_n});
    if (operand_a) qtrit::prepare_operand(c, {*operand_a, adder_n, 0});
    emit_circuit(opts, c);
  });

  int mul_na = 0, mul_nb = 0;
  CLI::App* multiplier = generate->add_subcommand("multiplier", "shift-and-add multiplier");
  multiplier->fallthrough();
  multiplier->add_option("--na", mul_na, "first operand width in bits")->required();
  multiplier->add_option("--nb", mul_nb, "second operand width in bits")->required();
  multiplier->add_option("--a", operand_a, "prepare the first operand with this value");
  multiplier->add_option("--b", operand_b, "prepare the second operand with this value");
  multiplier->callback([&] {
    qtrit::Circuit c = qtrit::build_multiplier(mul_na, mul_nb);
    if (operand_b) qtrit::prepare_operand(c, {*operand_b, mul_nb, mul_na});
    if (operand_a) qtrit::prepare_operand(c, {*operand_a, mul_na, 0});
    emit_circuit(opts, c);
  });

  // decompose
  std::string dec_input;
  qtrit::DecompositionVariant variant = qtrit::DecompositionVariant::clifford_t_C;
  CLI::App* decompose = app.add_subcommand("decompose", "replace every Toffoli gate");
  decompose->fallthrough();
  decompose->add_option("input", dec_input, "circuit file, json or qasm ('-' for stdin)");
  decompose->add_option("--variant", variant, "A, B, C or qutrit")
      ->required()
      ->transform(CLI::CheckedTransformer(variant_map));
  decompose->callback(
      [&] { emit_circuit(opts, qtrit::decompose_toffoli(load_circuit(dec_input), variant)); });

  // count
  std::string count_input;
  CLI::App* count = app.add_subcommand("count", "gate tallies and depth");
  count->fallthrough();
  count->add_option("input", count_input, "circuit file, json or qasm ('-' for stdin)");
  count->callback([&] { cmd_count(opts, count_input); });

  // estimate
  qtrit::OperationKind est_op = qtrit::OperationKind::add_sub;
  qtrit::Route est_route = qtrit::Route::clifford_t;
  int est_n = 0;
  bool est_floor = false;
  CLI::App* estimate = app.add_subcommand("estimate", "closed-form resource counts");
  estimate->fallthrough();
  estimate->add_option("--op", est_op, "add, mul or sqrt")
      ->required()
      ->transform(CLI::CheckedTransformer(op_map));
  estimate->add_option("--n", est_n, "operand width in bits")->required();
  estimate->add_option("--route", est_route, "ct or qutrit")
      ->required()
      ->transform(CLI::CheckedTransformer(route_map));
  estimate->add_flag("--floor", est_floor, "floor counts to whole gates");
  add_noise_flags(estimate);
  estimate->callback([&] { cmd_estimate(opts, est_op, est_n, est_route, est_floor, noise); });

  // sweep
  qtrit::OperationKind sweep_op = qtrit::OperationKind::add_sub;
  int sweep_from = 0, sweep_to = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "success probability over a size range");
  sweep->fallthrough();
  sweep->add_option("--op", sweep_op, "add, mul or sqrt")
      ->required()
      ->transform(CLI::CheckedTransformer(op_map));
  sweep->add_option("--from", sweep_from, "first width")->required();
  sweep->add_option("--to", sweep_to, "last width")->required();
  add_noise_flags(sweep);
  sweep->callback([&] { cmd_sweep(opts, sweep_op, sweep_from, sweep_to, noise); });

  // simulate
  std::string sim_input_file, sim_basis;
  bool sim_noise = false, sim_compare = false;
  CLI::App* simulate = app.add_subcommand("simulate", "exact statevector or noisy density run");
  simulate->fallthrough();
  simulate->add_option("circuit", sim_input_file, "circuit file, json or qasm ('-' for stdin)");
  simulate->add_option("--input", sim_basis, "basis digits, one per wire (default all zero)");
  simulate->add_flag("--noise", sim_noise, "density-matrix run with the layered error model");
  simulate->add_flag("--compare-ideal", sim_compare, "also print fidelity with the ideal state");
  add_noise_flags(simulate);
  simulate->callback(
      [&] { cmd_simulate(opts, sim_input_file, sim_basis, sim_noise, sim_compare, noise); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
