// Merged-circuit construction: all viable functions over shared inputs,
// output mux trees steered by binary-encoded select inputs. Select value i
// makes the circuit compute function i under its pin assignment; codes
// beyond the function count alias the last function so the contract is
// total. Each function body is seeded as a canonical sum of products;
// synthesis owns all optimization.

#pragma once

#include "camo/netlist.hpp"
#include "camo/pin_assignment.hpp"

namespace camo {

struct merged_spec {
  std::vector<truth_table> functions;
  pin_assignment assignment;

  uint32_t select_count() const;
  void check() const; // throws std::invalid_argument on contract violations
};

netlist build_merged(const merged_spec& spec);

} // namespace camo
