#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "camo/merge.hpp"
#include "camo/rng.hpp"
#include "camo/sbox_io.hpp"

using namespace camo;

namespace {

std::vector<truth_table> first_n_4bit(size_t n) {
  auto all = load_sboxes(std::string(CAMO_DATA_DIR) + "/sboxes_4bit.txt");
  std::vector<truth_table> out;
  for (size_t i = 0; i < n; ++i) out.push_back(all[i].table);
  return out;
}

pin_assignment random_assignment(rng& r, size_t n, uint32_t ni, uint32_t no) {
  pin_assignment a;
  for (size_t j = 1; j < n; ++j) {
    pin_assignment::entry e{permutation::identity(ni), permutation::identity(no)};
    r.shuffle(e.in_perm.map);
    r.shuffle(e.out_perm.map);
    a.entries.push_back(std::move(e));
  }
  return a;
}

// the defining contract: at select code i the circuit is function i permuted
void check_contract(const merged_spec& spec, const netlist& n) {
  uint32_t rows = spec.functions.front().num_rows();
  for (size_t i = 0; i < spec.functions.size(); ++i) {
    auto e = spec.assignment.entry_for(i);
    truth_table expect = permute(spec.functions[i], e.in_perm, e.out_perm);
    for (uint32_t x = 0; x < rows; ++x)
      REQUIRE(simulate(n, x, static_cast<uint32_t>(i)) == expect.eval(x));
  }
}

} // namespace

TEST_CASE("select counts") {
  auto fns2 = first_n_4bit(2);
  merged_spec s2{fns2, pin_assignment::identity(2, 4, 4)};
  CHECK(s2.select_count() == 1);
  merged_spec s16{first_n_4bit(16), pin_assignment::identity(16, 4, 4)};
  CHECK(s16.select_count() == 4);
}

TEST_CASE("two functions, one select") {
  auto fns = first_n_4bit(2);
  merged_spec spec{fns, pin_assignment::identity(2, 4, 4)};
  netlist n = build_merged(spec);
  CHECK(n.select_inputs.size() == 1);
  for (uint32_t x = 0; x < 16; ++x) {
    CHECK(simulate(n, x, 0) == fns[0].eval(x));
    CHECK(simulate(n, x, 1) == fns[1].eval(x));
  }
}

TEST_CASE("PRESENT pair under a nontrivial assignment") {
  auto all = load_sboxes(std::string(CAMO_DATA_DIR) + "/sboxes_4bit.txt");
  auto fns = pick_functions(all, {"PRESENT", "G0"});
  pin_assignment a;
  a.entries.push_back({permutation{{2, 0, 3, 1}}, permutation{{1, 3, 0, 2}}});
  merged_spec spec{fns, a};
  netlist n = build_merged(spec);
  check_contract(spec, n);

  // spot row: sel=1, data=0 must read the permuted second table
  auto e = spec.assignment.entry_for(1);
  CHECK(simulate(n, 0, 1) == permute(fns[1], e.in_perm, e.out_perm).eval(0));
}

TEST_CASE("contract heads for every bundled arity") {
  rng r(21);
  for (size_t n : {2, 3, 4, 8}) {
    auto fns = first_n_4bit(n);
    merged_spec spec{fns, random_assignment(r, n, 4, 4)};
    check_contract(spec, build_merged(spec));
  }
  auto des = load_sboxes(std::string(CAMO_DATA_DIR) + "/sboxes_des.txt");
  merged_spec spec{{des[0].table, des[1].table}, random_assignment(r, 2, 6, 4)};
  check_contract(spec, build_merged(spec));
}

TEST_CASE("unused select codes alias the last function") {
  rng r(5);
  for (size_t n : {3, 5, 6}) {
    auto fns = first_n_4bit(n);
    merged_spec spec{fns, pin_assignment::identity(n, 4, 4)};
    netlist nl = build_merged(spec);
    uint32_t codes = 1u << spec.select_count();
    for (uint32_t code = static_cast<uint32_t>(n); code < codes; ++code)
      for (uint32_t x = 0; x < 16; ++x)
        CHECK(simulate(nl, x, code) == fns[n - 1].eval(x));
  }
}

TEST_CASE("selects feed only mux select pins before synthesis") {
  auto fns = first_n_4bit(4);
  merged_spec spec{fns, pin_assignment::identity(4, 4, 4)};
  netlist n = build_merged(spec);
  for (const auto& g : n.gates)
    for (size_t i = 0; i < g.fanins.size(); ++i)
      if (n.is_select_net(g.fanins[i])) {
        CHECK(g.kind == gate_kind::mux2);
        CHECK(i == 2);
      }
}

TEST_CASE("merged netlist round-trips through the text format") {
  auto fns = first_n_4bit(2);
  merged_spec spec{fns, pin_assignment::identity(2, 4, 4)};
  netlist n = build_merged(spec);
  CHECK(parse_netlist(emit_netlist(n)) == n);
}

TEST_CASE("bad specs are rejected") {
  auto fns = first_n_4bit(2);
  CHECK_THROWS_AS(build_merged(merged_spec{{fns[0]}, pin_assignment::identity(1, 4, 4)}),
                  std::invalid_argument);
  auto des = load_sboxes(std::string(CAMO_DATA_DIR) + "/sboxes_des.txt");
  CHECK_THROWS_AS(
      build_merged(merged_spec{{fns[0], des[0].table}, pin_assignment::identity(2, 4, 4)}),
      std::invalid_argument);
}
