#include "camo/netlist.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace camo {

const char* gate_kind_name(gate_kind k) {
  switch (k) {
    case gate_kind::inv: return "INV";
    case gate_kind::buf: return "BUF";
    case gate_kind::and_: return "AND";
    case gate_kind::or_: return "OR";
    case gate_kind::nand: return "NAND";
    case gate_kind::nor: return "NOR";
    case gate_kind::mux2: return "MUX2";
  }
  return "?";
}

static void check_arity(gate_kind k, size_t n, const std::string& where) {
  bool ok;
  switch (k) {
    case gate_kind::inv:
    case gate_kind::buf: ok = n == 1; break;
    case gate_kind::mux2: ok = n == 3; break;
    default: ok = n >= 2 && n <= 4; break;
  }
  if (!ok)
    throw std::invalid_argument(where + ": bad arity " + std::to_string(n) + " for " +
                                gate_kind_name(k));
}

void validate(const netlist& n)
{
  std::unordered_set<std::string> names;
  for (const auto& v : {n.data_inputs, n.select_inputs, n.outputs})
    for (const auto& s : v)
      if (!names.insert(s).second)
        throw std::invalid_argument("netlist: duplicate interface name " + s);
  for (size_t gi = 0; gi < n.gates.size(); ++gi) {
    const gate& g = n.gates[gi];
    check_arity(g.kind, g.fanins.size(), "gate " + std::to_string(gi));
    for (uint32_t f : g.fanins)
      if (f >= n.gate_net(gi))
        throw std::invalid_argument("netlist: gate " + std::to_string(gi) +
                                    " reads a non-preceding net");
  }
  if (n.outputs.size() != n.output_nets.size())
    throw std::invalid_argument("netlist: output name/net count mismatch");
  for (uint32_t net : n.output_nets)
    if (net >= n.num_nets())
      throw std::invalid_argument("netlist: unbound output net");
}

static bool eval_gate(gate_kind k, const std::vector<uint32_t>& fanins,
                      const std::vector<uint64_t>& value, uint64_t& out) {
  switch (k) {
    case gate_kind::inv: out = ~value[fanins[0]]; return true;
    case gate_kind::buf: out = value[fanins[0]]; return true;
    case gate_kind::mux2: {
      uint64_t s = value[fanins[2]];
      out = (value[fanins[0]] & ~s) | (value[fanins[1]] & s);
      return true;
    }
    case gate_kind::and_:
    case gate_kind::nand: {
      uint64_t v = value[fanins[0]];
      for (size_t i = 1; i < fanins.size(); ++i) v &= value[fanins[i]];
      out = (k == gate_kind::nand) ? ~v : v;
      return true;
    }
    case gate_kind::or_:
    case gate_kind::nor: {
      uint64_t v = value[fanins[0]];
      for (size_t i = 1; i < fanins.size(); ++i) v |= value[fanins[i]];
      out = (k == gate_kind::nor) ? ~v : v;
      return true;
    }
  }
  return false;
}

uint32_t simulate(const netlist& n, uint32_t data_row, uint32_t sel_row) {
  std::vector<uint64_t> value(n.num_nets());
  for (size_t i = 0; i < n.data_inputs.size(); ++i)
    value[i] = (data_row >> i) & 1u ? ~0ull : 0;
  for (size_t i = 0; i < n.select_inputs.size(); ++i)
    value[n.data_inputs.size() + i] = (sel_row >> i) & 1u ? ~0ull : 0;
  for (size_t gi = 0; gi < n.gates.size(); ++gi) {
    uint64_t out = 0;
    eval_gate(n.gates[gi].kind, n.gates[gi].fanins, value, out);
    value[n.gate_net(gi)] = out;
  }
  uint32_t word = 0;
  for (size_t j = 0; j < n.output_nets.size(); ++j)
    word |= static_cast<uint32_t>(value[n.output_nets[j]] & 1u) << j;
  return word;
}

truth_table simulate_exhaustive(const netlist& n) {
  uint32_t total_in = n.num_inputs();
  if (total_in > truth_table::max_inputs)
    throw std::invalid_argument("simulate_exhaustive: too many inputs");
  if (n.outputs.empty())
    throw std::invalid_argument("simulate_exhaustive: netlist has no outputs");
  truth_table t(total_in, static_cast<uint32_t>(n.outputs.size()));
  size_t words = t.words_per_output();
  std::vector<uint64_t> value(n.num_nets());
  static const uint64_t var_word[6] = {0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull,
                                       0xf0f0f0f0f0f0f0f0ull, 0xff00ff00ff00ff00ull,
                                       0xffff0000ffff0000ull, 0xffffffff00000000ull};
  for (size_t w = 0; w < words; ++w) {
    for (uint32_t i = 0; i < total_in; ++i)
      value[i] = i < 6 ? var_word[i] : ((w >> (i - 6)) & 1u ? ~0ull : 0);
    for (size_t gi = 0; gi < n.gates.size(); ++gi) {
      uint64_t out = 0;
      eval_gate(n.gates[gi].kind, n.gates[gi].fanins, value, out);
      value[n.gate_net(gi)] = out;
    }
    uint64_t mask = t.num_rows() >= 64 ? ~0ull : ((1ull << t.num_rows()) - 1);
    for (size_t j = 0; j < n.output_nets.size(); ++j)
      t.bits[j * words + w] = value[n.output_nets[j]] & mask;
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

struct raw_gate {
  size_t line;
  gate_kind kind;
  std::string out;
  std::vector<std::string> ins;
};

gate_kind kind_from_token(const std::string& tok, size_t line) {
  if (tok == "INV") return gate_kind::inv;
  if (tok == "BUF") return gate_kind::buf;
  if (tok == "AND") return gate_kind::and_;
  if (tok == "OR") return gate_kind::or_;
  if (tok == "NAND") return gate_kind::nand;
  if (tok == "NOR") return gate_kind::nor;
  if (tok == "MUX2") return gate_kind::mux2;
  throw parse_error(line, "unknown gate kind '" + tok + "'");
}

} // namespace

netlist parse_netlist(std::string_view text) {
  netlist n;
  std::vector<raw_gate> raw;
  std::unordered_map<std::string, size_t> decl_line;
  bool ended = false;
  size_t lineno = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (ended) throw parse_error(lineno, "content after .end");
    if (tok == ".inputs" || tok == ".selects" || tok == ".outputs") {
      auto& dst = tok == ".inputs" ? n.data_inputs
                : tok == ".selects" ? n.select_inputs
                                    : n.outputs;
      std::string name;
      while (ss >> name) {
        dst.push_back(name);
        decl_line.emplace(name, lineno);
      }
    } else if (tok == ".gate") {
      raw_gate g;
      g.line = lineno;
      std::string kind, eq;
      if (!(ss >> kind >> g.out >> eq) || eq != "=")
        throw parse_error(lineno, "expected .gate KIND out = in...");
      g.kind = kind_from_token(kind, lineno);
      std::string in;
      while (ss >> in) g.ins.push_back(in);
      if (g.ins.empty()) throw parse_error(lineno, "gate without fanins");
      raw.push_back(std::move(g));
    } else if (tok == ".end") {
      ended = true;
    } else {
      throw parse_error(lineno, "unknown directive '" + tok + "'");
    }
  }
  if (!ended) throw parse_error(lineno, "missing .end");

  std::unordered_map<std::string, uint32_t> input_net;
  auto declare = [&](const std::string& name) {
    if (input_net.count(name))
      throw parse_error(decl_line.at(name), "name '" + name + "' declared more than once");
    input_net[name] = static_cast<uint32_t>(input_net.size());
  };
  for (const auto& s : n.data_inputs) declare(s);
  for (const auto& s : n.select_inputs) declare(s);

  std::unordered_map<std::string, size_t> driver; // wire -> raw gate index
  for (size_t i = 0; i < raw.size(); ++i) {
    if (input_net.count(raw[i].out))
      throw parse_error(raw[i].line, "wire '" + raw[i].out + "' already driven by an input");
    if (!driver.emplace(raw[i].out, i).second)
      throw parse_error(raw[i].line, "duplicate driver for wire '" + raw[i].out + "'");
  }
  for (const auto& g : raw)
    for (const auto& in : g.ins)
      if (!input_net.count(in) && !driver.count(in))
        throw parse_error(g.line, "undefined wire '" + in + "'");

  // stable Kahn topological sort: ready gates taken in file order
  std::vector<uint32_t> net_of_raw(raw.size(), UINT32_MAX);
  std::vector<bool> placed(raw.size(), false);
  uint32_t next_net = static_cast<uint32_t>(input_net.size());
  size_t placed_count = 0;
  bool progress = true;
  while (placed_count < raw.size() && progress) {
    progress = false;
    for (size_t i = 0; i < raw.size(); ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (const auto& in : raw[i].ins) {
        if (input_net.count(in)) continue;
        size_t d = driver.at(in);
        if (!placed[d]) { ready = false; break; }
      }
      if (!ready) continue;
      gate g;
      g.kind = raw[i].kind;
      for (const auto& in : raw[i].ins) {
        auto it = input_net.find(in);
        g.fanins.push_back(it != input_net.end() ? it->second : net_of_raw[driver.at(in)]);
      }
      check_arity(g.kind, g.fanins.size(), ".cnl:" + std::to_string(raw[i].line));
      net_of_raw[i] = next_net++;
      n.gates.push_back(std::move(g));
      placed[i] = true;
      ++placed_count;
      progress = true;
    }
  }
  if (placed_count < raw.size()) {
    for (size_t i = 0; i < raw.size(); ++i)
      if (!placed[i])
        throw parse_error(raw[i].line, "combinational cycle through wire '" + raw[i].out + "'");
  }

  for (const auto& out : n.outputs) {
    auto it = input_net.find(out);
    if (it != input_net.end()) {
      n.output_nets.push_back(it->second);
    } else {
      auto dit = driver.find(out);
      if (dit == driver.end()) throw parse_error(0, "output '" + out + "' is never driven");
      n.output_nets.push_back(net_of_raw[dit->second]);
    }
  }
  validate(n);
  return n;
}

std::string emit_netlist(const netlist& n) {
  validate(n);
  std::vector<std::string> net_name(n.num_nets());
  for (size_t i = 0; i < n.data_inputs.size(); ++i) net_name[i] = n.data_inputs[i];
  for (size_t i = 0; i < n.select_inputs.size(); ++i)
    net_name[n.data_inputs.size() + i] = n.select_inputs[i];

  // outputs take their interface name; everything else is anonymous
  std::vector<bool> is_output_net(n.num_nets(), false);
  for (size_t j = 0; j < n.outputs.size(); ++j) {
    uint32_t net = n.output_nets[j];
    if (n.is_input_net(net)) {
      if (net_name[net] != n.outputs[j])
        throw std::invalid_argument("emit_netlist: output '" + n.outputs[j] +
                                    "' aliases input '" + net_name[net] +
                                    "'; insert a BUF to make it emittable");
      continue;
    }
    if (is_output_net[net])
      throw std::invalid_argument("emit_netlist: net drives two outputs; insert a BUF");
    is_output_net[net] = true;
    net_name[net] = n.outputs[j];
  }
  for (uint32_t net = n.num_inputs(); net < n.num_nets(); ++net)
    if (net_name[net].empty()) net_name[net] = "n" + std::to_string(net);

  std::ostringstream out;
  auto emit_names = [&](const char* directive, const std::vector<std::string>& names) {
    if (names.empty()) return;
    out << directive;
    for (const auto& s : names) out << ' ' << s;
    out << '\n';
  };
  emit_names(".inputs", n.data_inputs);
  emit_names(".selects", n.select_inputs);
  emit_names(".outputs", n.outputs);
  for (size_t gi = 0; gi < n.gates.size(); ++gi) {
    const gate& g = n.gates[gi];
    out << ".gate " << gate_kind_name(g.kind) << ' ' << net_name[n.gate_net(gi)] << " =";
    for (uint32_t f : g.fanins) out << ' ' << net_name[f];
    out << '\n';
  }
  out << ".end\n";
  return out.str();
}

} // namespace camo
