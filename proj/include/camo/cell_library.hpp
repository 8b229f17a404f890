// Camouflaged standard-cell library. Each cell looks like a nominal gate;
// doping can pin any input to a constant, so the functions an instance can
// hide behind are exactly the cofactor closure of the nominal function.
// Areas are in gate equivalents (NAND2 = 1.0).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "camo/truth_table.hpp"

namespace camo {

struct camo_cell {
  std::string name;
  uint32_t arity = 0;
  truth_table nominal;               // single output, `arity` inputs
  double area_ge = 0.0;
  std::vector<truth_table> plausible; // cofactor_closure(nominal), sorted

  bool is_plausible(const truth_table& f) const;
};

struct cell_library {
  std::vector<camo_cell> cells;

  const camo_cell* find(const std::string& name) const;
};

/// Inverter, buffer, and 2-4 input NAND/NOR/AND/OR (14 cells), with
/// transistor-count-ratio areas.
cell_library default_library();

/// Build a cell from its nominal function; plausible set is always derived.
camo_cell make_cell(std::string name, uint32_t arity, truth_table nominal, double area_ge);

/// Load a library override: one cell per line, `NAME ARITY HEX_NOMINAL AREA_GE`.
cell_library load_library(const std::string& path);

struct cell_match {
  size_t cell_index = 0;
  // pin_of_var[v] = cell pin carrying required variable v (injective)
  std::vector<uint32_t> pin_of_var;
};

/// Extend a k-ary function to `arity` pins, variable v read from pin_of_var[v];
/// remaining pins are don't-cares.
truth_table spread_to_pins(const truth_table& f, const std::vector<uint32_t>& pin_of_var,
                           uint32_t arity);

/// Cheapest cell whose plausible set contains every required function under a
/// single injective pin assignment. All required functions must share one
/// arity k <= 4. Ties broken by (area, arity, name); pin maps searched in
/// lexicographic order. Absence of a match is a value, not an error.
std::optional<cell_match> match_cell(const std::vector<truth_table>& required,
                                     const cell_library& lib);

} // namespace camo
