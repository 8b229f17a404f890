#include "camo/merge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace camo {

uint32_t merged_spec::select_count() const {
  size_t n = functions.size();
  uint32_t sc = 0;
  while ((1ull << sc) < n) ++sc;
  return sc;
}

void merged_spec::check() const {
  if (functions.size() < 2)
    throw std::invalid_argument("merged_spec: need at least 2 functions");
  uint32_t ni = functions.front().num_inputs;
  uint32_t no = functions.front().num_outputs;
  for (const auto& f : functions)
    if (f.num_inputs != ni || f.num_outputs != no)
      throw std::invalid_argument("merged_spec: function arity mismatch");
  if (assignment.entries.size() != functions.size() - 1 || !assignment.is_valid(ni, no))
    throw std::invalid_argument("merged_spec: assignment does not cover the functions");
}

namespace {

class builder {
public:
  explicit builder(netlist& nl) : nl_(nl) {}

  uint32_t add(gate_kind kind, std::vector<uint32_t> fanins) {
    nl_.gates.push_back(gate{kind, std::move(fanins)});
    return nl_.gate_net(nl_.gates.size() - 1);
  }

  uint32_t inv(uint32_t net) {
    auto [it, fresh] = inv_cache_.try_emplace(net, 0);
    if (fresh) it->second = add(gate_kind::inv, {net});
    return it->second;
  }

  // balanced reduction tree with gates of arity <= 4
  uint32_t tree(gate_kind kind, std::vector<uint32_t> nets) {
    while (nets.size() > 1) {
      std::vector<uint32_t> next;
      for (size_t i = 0; i < nets.size(); i += 4) {
        size_t hi = std::min(nets.size(), i + 4);
        if (hi - i == 1) {
          next.push_back(nets[i]);
        } else {
          next.push_back(add(kind, {nets.begin() + i, nets.begin() + hi}));
        }
      }
      nets = std::move(next);
    }
    return nets.front();
  }

  uint32_t constant(bool value) {
    uint32_t& cache = value ? const1_ : const0_;
    if (cache == UINT32_MAX) {
      uint32_t x = 0; // any input works; merged circuits always have data inputs
      cache = value ? add(gate_kind::or_, {x, inv(x)}) : add(gate_kind::and_, {x, inv(x)});
    }
    return cache;
  }

  // canonical sum of minterms of output `o` of `f`, inputs on nets 0..k-1
  uint32_t sop(const truth_table& f, uint32_t o) {
    std::vector<uint32_t> terms;
    for (uint32_t row = 0; row < f.num_rows(); ++row) {
      if (!f.bit(o, row)) continue;
      std::vector<uint32_t> lits;
      for (uint32_t i = 0; i < f.num_inputs; ++i)
        lits.push_back((row >> i) & 1u ? i : inv(i));
      terms.push_back(tree(gate_kind::and_, std::move(lits)));
    }
    if (terms.empty()) return constant(false);
    if (terms.size() == f.num_rows()) return constant(true);
    return tree(gate_kind::or_, std::move(terms));
  }

private:
  netlist& nl_;
  std::map<uint32_t, uint32_t> inv_cache_;
  uint32_t const0_ = UINT32_MAX;
  uint32_t const1_ = UINT32_MAX;
};

} // namespace

netlist build_merged(const merged_spec& spec) {
  spec.check();
  size_t n = spec.functions.size();
  uint32_t ni = spec.functions.front().num_inputs;
  uint32_t no = spec.functions.front().num_outputs;
  uint32_t sc = spec.select_count();

  netlist nl;
  for (uint32_t i = 0; i < ni; ++i) nl.data_inputs.push_back("x" + std::to_string(i));
  for (uint32_t i = 0; i < sc; ++i) nl.select_inputs.push_back("s" + std::to_string(i));
  for (uint32_t o = 0; o < no; ++o) nl.outputs.push_back("y" + std::to_string(o));

  builder b(nl);

  // per function: its permuted table's SOP over the shared inputs
  std::vector<std::vector<uint32_t>> fn_out(n);
  for (size_t i = 0; i < n; ++i) {
    auto e = spec.assignment.entry_for(i);
    truth_table g = permute(spec.functions[i], e.in_perm, e.out_perm);
    for (uint32_t o = 0; o < no; ++o) fn_out[i].push_back(b.sop(g, o));
  }

  // per output: a perfect mux tree over 2^sc leaves; codes >= n alias the
  // last function, and equal-fanin muxes collapse on the spot
  std::vector<bool> used_out_net(0);
  for (uint32_t o = 0; o < no; ++o) {
    std::vector<uint32_t> level;
    for (size_t code = 0; code < (1ull << sc); ++code)
      level.push_back(fn_out[std::min(code, n - 1)][o]);
    for (uint32_t bit = 0; bit < sc; ++bit) {
      uint32_t sel_net = ni + bit;
      std::vector<uint32_t> next;
      for (size_t i = 0; i < level.size(); i += 2) {
        if (level[i] == level[i + 1])
          next.push_back(level[i]);
        else
          next.push_back(b.add(gate_kind::mux2, {level[i], level[i + 1], sel_net}));
      }
      level = std::move(next);
    }
    uint32_t net = level.front();
    // keep outputs distinct and gate-driven so the netlist stays emittable
    bool taken = nl.is_input_net(net);
    for (uint32_t prev : nl.output_nets) taken |= prev == net;
    if (taken) net = b.add(gate_kind::buf, {net});
    nl.output_nets.push_back(net);
  }
  validate(nl);
  return nl;
}

} // namespace camo
