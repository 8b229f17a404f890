// Multi-output truth tables over up to 16 inputs, the semantic currency of
// the whole flow. Row r encodes the input assignment where input i carries
// bit i of r; hex serializations put row 0 at string position 0. Every
// operation keeps functions at fixed arity: a cofactored input stays in
// place as a don't-care variable so that cell matching can compare
// functions pin-for-pin.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace camo {

struct truth_table {
  uint32_t num_inputs = 0;
  uint32_t num_outputs = 0;
  // one bitvector of 2^num_inputs bits per output, 64-bit words,
  // unused high bits always zero
  std::vector<uint64_t> bits;

  truth_table() = default;
  truth_table(uint32_t inputs, uint32_t outputs);

  static constexpr uint32_t max_inputs = 16;

  uint32_t num_rows() const { return 1u << num_inputs; }
  size_t words_per_output() const { return (static_cast<size_t>(num_rows()) + 63) / 64; }

  bool bit(uint32_t output, uint32_t row) const {
    return (bits[output * words_per_output() + row / 64] >> (row % 64)) & 1;
  }
  void set_bit(uint32_t output, uint32_t row, bool value) {
    uint64_t& w = bits[output * words_per_output() + row / 64];
    uint64_t mask = 1ull << (row % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  /// All outputs for one row, output j in bit j.
  uint32_t eval(uint32_t row) const;

  /// Single-output table packed into the low 2^num_inputs bits (arity <= 4).
  uint16_t bits16() const;

  bool operator==(const truth_table& other) const = default;
};

/// FNV-1a over arity and bit content; usable as an unordered_map hasher.
struct truth_table_hash {
  size_t operator()(const truth_table& t) const;
};

/// Parse `hex` (2^num_inputs digits, digit r = output word of row r).
truth_table tt_from_hex(std::string_view hex, uint32_t num_inputs, uint32_t num_outputs);
std::string tt_to_hex(const truth_table& t);

/// Single-output constant.
truth_table tt_constant(uint32_t num_inputs, bool value);
/// Single-output projection of one input variable.
truth_table tt_var(uint32_t num_inputs, uint32_t input);
/// Build a single-output table of given arity from packed bits (arity <= 4).
truth_table tt_from_bits16(uint32_t num_inputs, uint16_t packed);

/// Fix `input` to `value`; the input keeps its slot and becomes a don't-care.
truth_table cofactor(const truth_table& f, uint32_t input, bool value);

/// Smallest set containing f that is closed under cofactoring every input
/// both ways. Deterministic order (lexicographic by bit content).
std::vector<truth_table> cofactor_closure(const truth_table& f);

/// True if output `output` of f does not depend on `input`.
bool tt_input_is_dc(const truth_table& f, uint32_t output, uint32_t input);

struct permutation {
  std::vector<uint32_t> map; // position i -> map[i]

  static permutation identity(uint32_t n);
  bool is_valid() const;
  uint32_t size() const { return static_cast<uint32_t>(map.size()); }
  uint32_t operator()(uint32_t i) const { return map[i]; }
  bool operator==(const permutation&) const = default;
};

/// a-then-b: result(i) = b(a(i)).
permutation compose(const permutation& a, const permutation& b);
permutation invert(const permutation& p);

using input_permutation = permutation;
using output_permutation = permutation;

/// g with g(x)[out_perm(j)] = f(y)[j] where y_i = x_{in_perm(i)}; in the
/// merged circuit, in_perm(i) is the shared pin feeding f's input i and
/// out_perm(j) the shared output driven by f's output j.
truth_table permute(const truth_table& f, const input_permutation& in_perm,
                    const output_permutation& out_perm);

inline bool tt_equal(const truth_table& a, const truth_table& b) { return a == b; }
inline uint32_t tt_eval(const truth_table& t, uint32_t row) { return t.eval(row); }

} // namespace camo
