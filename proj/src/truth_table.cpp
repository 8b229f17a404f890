#include "camo/truth_table.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace camo {

truth_table::truth_table(uint32_t inputs, uint32_t outputs)
    : num_inputs(inputs), num_outputs(outputs) {
  if (inputs > max_inputs)
    throw std::invalid_argument("truth_table: more than 16 inputs");
  if (outputs == 0)
    throw std::invalid_argument("truth_table: zero outputs");
  bits.assign(words_per_output() * outputs, 0);
}

uint32_t truth_table::eval(uint32_t row) const {
  assert(row < num_rows());
  uint32_t word = 0;
  for (uint32_t j = 0; j < num_outputs; ++j)
    word |= static_cast<uint32_t>(bit(j, row)) << j;
  return word;
}

uint16_t truth_table::bits16() const {
  assert(num_outputs == 1 && num_inputs <= 4);
  return static_cast<uint16_t>(bits[0] & ((num_rows() == 16) ? 0xffffu : ((1u << num_rows()) - 1)));
}

size_t truth_table_hash::operator()(const truth_table& t) const {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(t.num_inputs);
  mix(t.num_outputs);
  for (uint64_t w : t.bits) mix(w);
  return static_cast<size_t>(h);
}

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

truth_table tt_from_hex(std::string_view hex, uint32_t num_inputs, uint32_t num_outputs) {
  if (num_outputs > 4)
    throw std::invalid_argument("tt_from_hex: hex format holds at most 4 outputs per digit");
  truth_table t(num_inputs, num_outputs);
  if (hex.size() != t.num_rows())
    throw std::invalid_argument("tt_from_hex: expected " + std::to_string(t.num_rows()) +
                                " hex digits, got " + std::to_string(hex.size()));
  for (uint32_t r = 0; r < t.num_rows(); ++r) {
    int d = hex_digit(hex[r]);
    if (d < 0)
      throw std::invalid_argument(std::string("tt_from_hex: invalid hex digit '") + hex[r] + "'");
    if (d >= (1 << num_outputs))
      throw std::invalid_argument("tt_from_hex: digit out of range for " +
                                  std::to_string(num_outputs) + " outputs");
    for (uint32_t j = 0; j < num_outputs; ++j)
      t.set_bit(j, r, (d >> j) & 1);
  }
  return t;
}

std::string tt_to_hex(const truth_table& t) {
  assert(t.num_outputs <= 4);
  std::string s(t.num_rows(), '0');
  for (uint32_t r = 0; r < t.num_rows(); ++r)
    s[r] = "0123456789ABCDEF"[t.eval(r)];
  return s;
}

truth_table tt_constant(uint32_t num_inputs, bool value) {
  truth_table t(num_inputs, 1);
  if (value) {
    for (auto& w : t.bits) w = ~0ull;
    uint32_t rem = t.num_rows() % 64;
    if (rem) t.bits.back() = (1ull << rem) - 1;
  }
  return t;
}

truth_table tt_var(uint32_t num_inputs, uint32_t input) {
  if (input >= num_inputs)
    throw std::invalid_argument("tt_var: input index out of range");
  truth_table t(num_inputs, 1);
  for (uint32_t r = 0; r < t.num_rows(); ++r)
    if ((r >> input) & 1) t.set_bit(0, r, true);
  return t;
}

truth_table tt_from_bits16(uint32_t num_inputs, uint16_t packed) {
  assert(num_inputs <= 4);
  truth_table t(num_inputs, 1);
  t.bits[0] = packed & ((t.num_rows() == 16) ? 0xffffu : ((1u << t.num_rows()) - 1));
  return t;
}

truth_table cofactor(const truth_table& f, uint32_t input, bool value) {
  if (f.num_outputs != 1)
    throw std::invalid_argument("cofactor: single-output tables only");
  if (input >= f.num_inputs)
    throw std::invalid_argument("cofactor: input index out of range");
  truth_table t(f.num_inputs, 1);
  uint32_t mask = 1u << input;
  for (uint32_t r = 0; r < t.num_rows(); ++r) {
    uint32_t src = value ? (r | mask) : (r & ~mask);
    t.set_bit(0, r, f.bit(0, src));
  }
  return t;
}

std::vector<truth_table> cofactor_closure(const truth_table& f) {
  if (f.num_outputs != 1)
    throw std::invalid_argument("cofactor_closure: single-output tables only");
  std::vector<truth_table> closed;
  std::vector<truth_table> work{f};
  auto known = [&](const truth_table& t) {
    return std::find(closed.begin(), closed.end(), t) != closed.end() ||
           std::find(work.begin(), work.end(), t) != work.end();
  };
  while (!work.empty()) {
    truth_table cur = work.back();
    work.pop_back();
    if (std::find(closed.begin(), closed.end(), cur) != closed.end()) continue;
    closed.push_back(cur);
    for (uint32_t i = 0; i < f.num_inputs; ++i)
      for (bool v : {false, true}) {
        truth_table c = cofactor(cur, i, v);
        if (!known(c)) work.push_back(c);
      }
  }
  std::sort(closed.begin(), closed.end(),
            [](const truth_table& a, const truth_table& b) { return a.bits < b.bits; });
  return closed;
}

bool tt_input_is_dc(const truth_table& f, uint32_t output, uint32_t input) {
  uint32_t mask = 1u << input;
  for (uint32_t r = 0; r < f.num_rows(); ++r)
    if (!(r & mask) && f.bit(output, r) != f.bit(output, r | mask)) return false;
  return true;
}

permutation permutation::identity(uint32_t n) {
  permutation p;
  p.map.resize(n);
  for (uint32_t i = 0; i < n; ++i) p.map[i] = i;
  return p;
}

bool permutation::is_valid() const {
  std::vector<bool> seen(map.size(), false);
  for (uint32_t v : map) {
    if (v >= map.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

permutation compose(const permutation& a, const permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose: size mismatch");
  permutation r;
  r.map.resize(a.size());
  for (uint32_t i = 0; i < a.size(); ++i) r.map[i] = b(a(i));
  return r;
}

permutation invert(const permutation& p) {
  permutation r;
  r.map.resize(p.size());
  for (uint32_t i = 0; i < p.size(); ++i) r.map[p(i)] = i;
  return r;
}

truth_table permute(const truth_table& f, const input_permutation& in_perm,
                    const output_permutation& out_perm) {
  if (in_perm.size() != f.num_inputs || out_perm.size() != f.num_outputs)
    throw std::invalid_argument("permute: permutation size mismatch");
  if (!in_perm.is_valid() || !out_perm.is_valid())
    throw std::invalid_argument("permute: non-bijective map");
  truth_table g(f.num_inputs, f.num_outputs);
  for (uint32_t x = 0; x < f.num_rows(); ++x) {
    uint32_t y = 0;
    for (uint32_t i = 0; i < f.num_inputs; ++i)
      y |= ((x >> in_perm(i)) & 1u) << i;
    for (uint32_t j = 0; j < f.num_outputs; ++j)
      g.set_bit(out_perm(j), x, f.bit(j, y));
  }
  return g;
}

} // namespace camo
