#include "camo/sbox_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace camo {

static std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open S-box file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<named_function> parse_sboxes(const std::string& text, const std::string& origin) {
  std::vector<named_function> out;
  std::istringstream stream(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string name, hex;
    uint32_t ni, no;
    if (!(ss >> name)) continue;
    if (!(ss >> hex >> ni >> no))
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": malformed record");
    for (const auto& prev : out)
      if (prev.name == name)
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": duplicate name " + name);
    out.push_back({name, tt_from_hex(hex, ni, no)});
  }
  return out;
}

std::vector<named_function> load_sboxes(const std::string& path) {
  return parse_sboxes(read_file(path), path);
}

std::vector<truth_table> pick_functions(const std::vector<named_function>& all,
                                        const std::vector<std::string>& names) {
  std::vector<truth_table> out;
  for (const auto& want : names) {
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const named_function& f) { return f.name == want; });
    if (it == all.end()) throw std::runtime_error("unknown S-box name: " + want);
    out.push_back(it->table);
  }
  return out;
}

uint64_t sbox_file_checksum(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream stream(text);
  std::string line, canon;
  while (std::getline(stream, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok, rebuilt;
    while (ss >> tok) {
      std::transform(tok.begin(), tok.end(), tok.begin(),
                     [](unsigned char c) { return std::toupper(c); });
      rebuilt += rebuilt.empty() ? tok : " " + tok;
    }
    if (rebuilt.empty()) continue;
    canon += canon.empty() ? rebuilt : "\n" + rebuilt;
  }
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace camo
