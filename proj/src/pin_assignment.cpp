#include "camo/pin_assignment.hpp"

#include <sstream>
#include <stdexcept>

namespace camo {

pin_assignment pin_assignment::identity(size_t num_functions, uint32_t num_inputs,
                                        uint32_t num_outputs) {
  if (num_functions < 1) throw std::invalid_argument("pin_assignment: no functions");
  pin_assignment a;
  a.entries.assign(num_functions - 1,
                   entry{permutation::identity(num_inputs), permutation::identity(num_outputs)});
  return a;
}

pin_assignment::entry pin_assignment::entry_for(size_t function_index) const {
  if (function_index == 0) {
    uint32_t ni = entries.empty() ? 0 : entries.front().in_perm.size();
    uint32_t no = entries.empty() ? 0 : entries.front().out_perm.size();
    return entry{permutation::identity(ni), permutation::identity(no)};
  }
  return entries.at(function_index - 1);
}

bool pin_assignment::is_valid(uint32_t num_inputs, uint32_t num_outputs) const {
  for (const auto& e : entries)
    if (e.in_perm.size() != num_inputs || e.out_perm.size() != num_outputs ||
        !e.in_perm.is_valid() || !e.out_perm.is_valid())
      return false;
  return true;
}

std::string assignment_to_text(const pin_assignment& a) {
  std::ostringstream out;
  out << "# pin assignment (function 0 is the identity reference)\n";
  for (size_t j = 0; j < a.entries.size(); ++j) {
    out << "function " << j + 1 << " in";
    for (uint32_t v : a.entries[j].in_perm.map) out << ' ' << v;
    out << " out";
    for (uint32_t v : a.entries[j].out_perm.map) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

pin_assignment assignment_from_text(const std::string& text) {
  pin_assignment a;
  std::istringstream stream(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    size_t j;
    if (tok != "function" || !(ss >> j) || j != a.entries.size() + 1 || !(ss >> tok) || tok != "in")
      throw std::runtime_error("assignment:" + std::to_string(lineno) +
                               ": expected 'function " + std::to_string(a.entries.size() + 1) +
                               " in ... out ...'");
    pin_assignment::entry e;
    std::string word;
    while (ss >> word && word != "out") e.in_perm.map.push_back(std::stoul(word));
    if (word != "out")
      throw std::runtime_error("assignment:" + std::to_string(lineno) + ": missing 'out'");
    uint32_t v;
    while (ss >> v) e.out_perm.map.push_back(v);
    if (!e.in_perm.is_valid() || !e.out_perm.is_valid())
      throw std::runtime_error("assignment:" + std::to_string(lineno) + ": non-bijective map");
    a.entries.push_back(std::move(e));
  }
  return a;
}

} // namespace camo
