// Loader for the bundled S-box text files: one record per line,
// `NAME HEXSTRING NUM_IN NUM_OUT`, '#' comments, case-insensitive hex.

#pragma once

#include <string>
#include <vector>

#include "camo/truth_table.hpp"

namespace camo {

struct named_function {
  std::string name;
  truth_table table;
};

std::vector<named_function> load_sboxes(const std::string& path);
std::vector<named_function> parse_sboxes(const std::string& text, const std::string& origin);

/// Select records by name, preserving the requested order.
std::vector<truth_table> pick_functions(const std::vector<named_function>& all,
                                        const std::vector<std::string>& names);

/// FNV-1a over the whitespace-normalized upper-cased records, for the data
/// provenance checks.
uint64_t sbox_file_checksum(const std::string& path);

} // namespace camo
