// Gate-level netlist with first-class select inputs, shared by circuit
// merging, synthesis output, and the camouflage mapper input.
//
// Net id space: data inputs first, then select inputs, then one net per
// gate in topological order. Interface names are stored; internal nets are
// anonymous (emitted as n<id>).
//
// Text format (.cnl):
//   # comment
//   .inputs a b c
//   .selects s0 s1
//   .outputs y0 y1
//   .gate NAND y0 = a b
//   .gate MUX2 y1 = d0 d1 sel
//   .end
// Gate arity is implied by the operand count; MUX2 pin order is d0 d1 sel
// (sel=0 selects d0).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "camo/truth_table.hpp"

namespace camo {

enum class gate_kind : uint8_t { inv, buf, and_, or_, nand, nor, mux2 };

const char* gate_kind_name(gate_kind k);

struct gate {
  gate_kind kind;
  std::vector<uint32_t> fanins; // net ids

  bool operator==(const gate&) const = default;
};

struct netlist {
  std::vector<std::string> data_inputs;
  std::vector<std::string> select_inputs;
  std::vector<std::string> outputs;
  std::vector<gate> gates;          // topological: fanins precede the gate
  std::vector<uint32_t> output_nets;

  uint32_t num_inputs() const {
    return static_cast<uint32_t>(data_inputs.size() + select_inputs.size());
  }
  uint32_t num_nets() const { return num_inputs() + static_cast<uint32_t>(gates.size()); }
  uint32_t gate_net(size_t gi) const { return num_inputs() + static_cast<uint32_t>(gi); }
  bool is_select_net(uint32_t net) const {
    return net >= data_inputs.size() && net < num_inputs();
  }
  bool is_input_net(uint32_t net) const { return net < num_inputs(); }

  bool operator==(const netlist&) const = default;
};

/// Structural invariants: arities, acyclicity by construction (fanin < net),
/// bound outputs. Throws std::invalid_argument on violation.
void validate(const netlist& n);

/// Single-pattern evaluation; data/select rows are bit-packed by input index.
/// Returns the packed output word.
uint32_t simulate(const netlist& n, uint32_t data_row, uint32_t sel_row);

/// Exhaustive word-parallel simulation into one table over all inputs,
/// data inputs in the low positions, selects above them.
truth_table simulate_exhaustive(const netlist& n);

struct parse_error : std::runtime_error {
  size_t line;
  parse_error(size_t line_, const std::string& what_)
      : std::runtime_error(".cnl:" + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Parse the .cnl text format. Gates may appear in any order; they are
/// topologically sorted (stable in file order). Detects undefined wires,
/// duplicate drivers, name collisions, and combinational cycles.
netlist parse_netlist(std::string_view text);

/// Inverse of parse_netlist up to internal wire names; requires every output
/// net to be gate-driven exactly once, or to be an input whose name equals
/// the output name.
std::string emit_netlist(const netlist& n);

} // namespace camo
