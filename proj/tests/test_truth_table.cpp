#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "camo/rng.hpp"
#include "camo/truth_table.hpp"

using namespace camo;

namespace {

truth_table nand2() { return tt_from_hex("1110", 2, 1); }  // rows 0..3 -> 1,1,1,0

// independent of cofactor(): evaluate f with inputs forced per fix pattern
truth_table fix_inputs(const truth_table& f, const std::vector<int>& fix) {
  truth_table t(f.num_inputs, 1);
  for (uint32_t r = 0; r < t.num_rows(); ++r) {
    uint32_t src = r;
    for (uint32_t i = 0; i < f.num_inputs; ++i) {
      if (fix[i] == 0) src &= ~(1u << i);
      if (fix[i] == 1) src |= 1u << i;
    }
    t.set_bit(0, r, f.bit(0, src));
  }
  return t;
}

truth_table random_table(rng& r, uint32_t ni, uint32_t no) {
  truth_table t(ni, no);
  for (uint32_t o = 0; o < no; ++o)
    for (uint32_t row = 0; row < t.num_rows(); ++row)
      t.set_bit(o, row, r.below(2));
  return t;
}

permutation random_perm(rng& r, uint32_t n) {
  permutation p = permutation::identity(n);
  r.shuffle(p.map);
  return p;
}

} // namespace

TEST_CASE("hex construction") {
  auto id4 = tt_from_hex("0123456789ABCDEF", 4, 4);
  for (uint32_t r = 0; r < 16; ++r) CHECK(id4.eval(r) == r);

  // first entry checked against the published PRESENT cipher table
  auto present = tt_from_hex("C56B90AD3EF84712", 4, 4);
  CHECK(present.eval(0) == 0xC);
  CHECK(present.eval(15) == 0x2);
  CHECK(tt_to_hex(present) == "C56B90AD3EF84712");

  CHECK(tt_from_hex("c56b90ad3ef84712", 4, 4) == present); // case-insensitive

  CHECK_THROWS_AS(tt_from_hex("6", 2, 1), std::invalid_argument);       // wrong length
  CHECK_THROWS_AS(tt_from_hex("01", 1, 1) == tt_from_hex("0G", 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(tt_from_hex("02", 1, 1), std::invalid_argument);      // digit out of range
}

TEST_CASE("eval and equality") {
  CHECK(nand2() == nand2());
  CHECK(nand2() != tt_from_hex("0001", 2, 1)); // AND2
  auto present = tt_from_hex("C56B90AD3EF84712", 4, 4);
  CHECK(tt_eval(present, 0) == 0xC);
}

TEST_CASE("cofactor of NAND2") {
  // fixing B=1 leaves NOT A; fixing B=0 pins the output to 1
  auto not_a = cofactor(nand2(), 1, true);
  for (uint32_t r = 0; r < 4; ++r) CHECK(not_a.bit(0, r) == !(r & 1));
  CHECK(cofactor(nand2(), 1, false) == tt_constant(2, true));
  CHECK(cofactor(tt_constant(1, false), 0, true) == tt_constant(1, false));
  CHECK_THROWS_AS(cofactor(nand2(), 2, true), std::invalid_argument);
}

TEST_CASE("cofactor idempotence and commutativity") {
  rng r(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_table(r, 4, 1);
    uint32_t i = r.below(4);
    uint32_t j = (i + 1 + r.below(3)) % 4;
    bool v = r.below(2);
    bool w = r.below(2);
    auto ci = cofactor(f, i, v);
    CHECK(cofactor(ci, i, v) == ci);
    CHECK(cofactor(ci, j, w) == cofactor(cofactor(f, j, w), i, v));
  }
}

TEST_CASE("cofactor closure of NAND2 matches the camouflage cell table") {
  auto closure = cofactor_closure(nand2());
  // NAND(A,B), NOT A, NOT B, constant 0, constant 1
  std::set<std::string> got;
  for (const auto& t : closure) got.insert(tt_to_hex(t));
  CHECK(got == std::set<std::string>{"1110", "1010", "1100", "0000", "1111"});
  CHECK(closure.size() == 5);
}

TEST_CASE("closure of INV and constants") {
  auto inv = tt_from_hex("10", 1, 1);
  auto closure = cofactor_closure(inv);
  CHECK(closure.size() == 3); // NOT A, 0, 1
  CHECK(cofactor_closure(tt_constant(3, true)).size() == 1);
}

TEST_CASE("closure size bound for every 2-input function") {
  for (uint32_t bits = 0; bits < 16; ++bits) {
    auto f = tt_from_bits16(2, static_cast<uint16_t>(bits));
    auto closure = cofactor_closure(f);
    CHECK(closure.size() <= 9); // 3^2

    // cross-check the closure against direct fix-pattern enumeration
    std::set<std::vector<uint64_t>> oracle;
    for (int fa : {-1, 0, 1})
      for (int fb : {-1, 0, 1})
        oracle.insert(fix_inputs(f, {fa, fb}).bits);
    std::set<std::vector<uint64_t>> got;
    for (const auto& t : closure) got.insert(t.bits);
    CHECK(got == oracle);
  }
}

TEST_CASE("permute basics") {
  auto present = tt_from_hex("C56B90AD3EF84712", 4, 4);
  auto id_in = permutation::identity(4);
  CHECK(permute(present, id_in, id_in) == present);

  auto and2 = tt_from_hex("0001", 2, 1);
  permutation swap2{{1, 0}};
  CHECK(permute(and2, swap2, permutation::identity(1)) == and2);

  // NOT A under an input swap reads the other pin: enumerate all four rows
  auto not_a = tt_from_hex("1010", 2, 1);
  auto swapped = permute(not_a, swap2, permutation::identity(1));
  for (uint32_t r = 0; r < 4; ++r) CHECK(swapped.bit(0, r) == !((r >> 1) & 1));

  CHECK_THROWS_AS(permute(and2, permutation::identity(3), permutation::identity(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(permute(and2, permutation{{0, 0}}, permutation::identity(1)),
                  std::invalid_argument);
}

TEST_CASE("permute is a group action on random 4-input tables") {
  rng r(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_table(r, 4, 3);
    auto p1 = random_perm(r, 4), p2 = random_perm(r, 4);
    auto q1 = random_perm(r, 3), q2 = random_perm(r, 3);
    auto lhs = permute(permute(f, p1, q1), p2, q2);
    auto rhs = permute(f, compose(p1, p2), compose(q1, q2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("permutation helpers") {
  auto p = permutation{{2, 0, 1}};
  CHECK(p.is_valid());
  CHECK(compose(p, invert(p)) == permutation::identity(3));
  CHECK_FALSE(permutation{{0, 2, 2}}.is_valid());
}
