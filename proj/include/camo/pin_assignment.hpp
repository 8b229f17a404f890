// Pin correspondence across the viable functions: which input pin of each
// function rides on which shared input, and which output pin feeds which
// output mux chain. Function 0 is the fixed reference (identity), which
// quotients out the global relabeling symmetry.

#pragma once

#include <string>
#include <vector>

#include "camo/truth_table.hpp"

namespace camo {

struct pin_assignment {
  struct entry {
    input_permutation in_perm;
    output_permutation out_perm;

    bool operator==(const entry&) const = default;
  };
  // entries[j-1] belongs to function j; function 0 is implicit identity
  std::vector<entry> entries;

  static pin_assignment identity(size_t num_functions, uint32_t num_inputs,
                                 uint32_t num_outputs);
  entry entry_for(size_t function_index) const;
  size_t num_functions() const { return entries.size() + 1; }
  bool is_valid(uint32_t num_inputs, uint32_t num_outputs) const;

  bool operator==(const pin_assignment&) const = default;
};

/// Text round-trip: one line per non-reference function,
/// `function J in P0 P1 ... out Q0 Q1 ...`.
std::string assignment_to_text(const pin_assignment& a);
pin_assignment assignment_from_text(const std::string& text);

} // namespace camo
