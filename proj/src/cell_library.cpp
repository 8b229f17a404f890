#include "camo/cell_library.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace camo {

bool camo_cell::is_plausible(const truth_table& f) const {
  return std::binary_search(plausible.begin(), plausible.end(), f,
                            [](const truth_table& a, const truth_table& b) { return a.bits < b.bits; });
}

const camo_cell* cell_library::find(const std::string& name) const {
  for (const auto& c : cells)
    if (c.name == name) return &c;
  return nullptr;
}

camo_cell make_cell(std::string name, uint32_t arity, truth_table nominal, double area_ge) {
  if (nominal.num_outputs != 1 || nominal.num_inputs != arity)
    throw std::invalid_argument("make_cell: nominal function arity mismatch");
  if (!(area_ge > 0.0))
    throw std::invalid_argument("make_cell: area must be positive");
  camo_cell c;
  c.name = std::move(name);
  c.arity = arity;
  c.nominal = std::move(nominal);
  c.area_ge = area_ge;
  c.plausible = cofactor_closure(c.nominal); // sorted by construction
  return c;
}

static truth_table nary(uint32_t arity, bool is_and, bool invert_out) {
  truth_table t(arity, 1);
  for (uint32_t r = 0; r < t.num_rows(); ++r) {
    bool v = is_and ? (r == t.num_rows() - 1) : (r != 0);
    t.set_bit(0, r, v ^ invert_out);
  }
  return t;
}

cell_library default_library() {
  cell_library lib;
  lib.cells.push_back(make_cell("INV", 1, nary(1, true, true), 0.67));
  lib.cells.push_back(make_cell("BUF", 1, nary(1, true, false), 0.67));
  struct row { const char* base; bool is_and; bool inv; double a2, a3, a4; };
  const row rows[] = {
      {"NAND", true, true, 1.0, 1.33, 1.67},
      {"NOR", false, true, 1.0, 1.33, 1.67},
      {"AND", true, false, 1.33, 1.67, 2.0},
      {"OR", false, false, 1.33, 1.67, 2.0},
  };
  for (const auto& r : rows)
    for (uint32_t n = 2; n <= 4; ++n) {
      double area = n == 2 ? r.a2 : n == 3 ? r.a3 : r.a4;
      lib.cells.push_back(make_cell(r.base + std::to_string(n), n, nary(n, r.is_and, r.inv), area));
    }
  return lib;
}

cell_library load_library(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open library file: " + path);
  cell_library lib;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string name, hex;
    uint32_t arity;
    double area;
    if (!(ss >> name)) continue;
    if (!(ss >> arity >> hex >> area))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed cell line");
    lib.cells.push_back(make_cell(name, arity, tt_from_hex(hex, arity, 1), area));
  }
  return lib;
}

truth_table spread_to_pins(const truth_table& f, const std::vector<uint32_t>& pin_of_var,
                           uint32_t arity) {
  assert(f.num_outputs == 1 && f.num_inputs == pin_of_var.size());
  truth_table g(arity, 1);
  for (uint32_t r = 0; r < g.num_rows(); ++r) {
    uint32_t v = 0;
    for (uint32_t i = 0; i < f.num_inputs; ++i)
      v |= ((r >> pin_of_var[i]) & 1u) << i;
    g.set_bit(0, r, f.bit(0, v));
  }
  return g;
}

// next injective map k -> arity in lexicographic order; false when exhausted
static bool next_injection(std::vector<uint32_t>& inj, uint32_t arity) {
  uint32_t k = static_cast<uint32_t>(inj.size());
  for (uint32_t pos = k; pos-- > 0;) {
    std::vector<bool> used(arity, false);
    for (uint32_t i = 0; i < pos; ++i) used[inj[i]] = true;
    for (uint32_t cand = inj[pos] + 1; cand < arity; ++cand) {
      if (used[cand]) continue;
      inj[pos] = cand;
      used[cand] = true;
      // smallest free values for the tail
      uint32_t fill = 0;
      bool ok = true;
      for (uint32_t i = pos + 1; i < k; ++i) {
        while (fill < arity && used[fill]) ++fill;
        if (fill == arity) { ok = false; break; }
        inj[i] = fill;
        used[fill] = true;
      }
      if (ok) return true;
      break;
    }
  }
  return false;
}

std::optional<cell_match> match_cell(const std::vector<truth_table>& required,
                                     const cell_library& lib) {
  if (required.empty()) return std::nullopt;
  uint32_t k = required.front().num_inputs;
  for (const auto& f : required)
    if (f.num_outputs != 1 || f.num_inputs != k)
      throw std::invalid_argument("match_cell: required functions must share one arity");
  if (k > 4) return std::nullopt;

  // deterministic candidate order: (area, arity, name)
  std::vector<size_t> order(lib.cells.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const auto& ca = lib.cells[a];
    const auto& cb = lib.cells[b];
    return std::tie(ca.area_ge, ca.arity, ca.name) < std::tie(cb.area_ge, cb.arity, cb.name);
  });

  for (size_t idx : order) {
    const auto& cell = lib.cells[idx];
    if (cell.arity < k) continue;
    std::vector<uint32_t> inj(k);
    for (uint32_t i = 0; i < k; ++i) inj[i] = i;
    bool more = true;
    while (more) {
      bool all = true;
      for (const auto& f : required)
        if (!cell.is_plausible(spread_to_pins(f, inj, cell.arity))) { all = false; break; }
      if (all) return cell_match{idx, inj};
      more = next_injection(inj, cell.arity);
    }
  }
  return std::nullopt;
}

} // namespace camo
