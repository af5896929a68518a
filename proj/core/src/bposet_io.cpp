#include "immvar/bposet_io.hpp"

#include "json.hpp"

#include <map>
#include <sstream>

namespace immvar {

std::string to_dot(const BPoset& p) {
  std::ostringstream out;
  out << "digraph bposet {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << p.element(i).to_string() << "\"];\n";
  for (const auto& [lo, hi] : p.cover_pairs()) out << "  n" << lo << " -> n" << hi << ";\n";
  if (p.graded()) {
    std::map<int, std::vector<std::size_t>> levels;
    for (std::size_t i = 0; i < p.size(); ++i) levels[p.rank_of(i)].push_back(i);
    for (const auto& [rank, members] : levels) {
      out << "  { rank=same;";
      for (std::size_t i : members) out << " n" << i << ";";
      out << " }\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json_string(const BPoset& p) {
  nlohmann::ordered_json j;
  j["k"] = p.k();
  j["n"] = p.n();
  j["character"] = p.character().describe();
  auto& elements = j["elements"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const MultiIndex& x = p.element(i);
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    for (int pos = 0; pos < x.k(); ++pos) entry.push_back(x[pos]);
    elements.push_back(std::move(entry));
  }
  auto& covers = j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : p.cover_pairs()) covers.push_back({lo, hi});
  j["graded"] = p.graded();
  if (p.graded()) {
    auto& ranks = j["ranks"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.size(); ++i) ranks.push_back(p.rank_of(i));
    j["rank_polynomial"] = p.rank_generating().to_string();
    j["rank_symmetric"] = p.rank_symmetric();
  }
  const LatticeReport report = p.lattice_report();
  j["lattice"] = report.is_lattice;
  if (!report.is_lattice) {
    j["lattice_failure"] = {
        {"stage", report.failing},
        {"pair", {report.witness_a.to_string(), report.witness_b.to_string()}},
    };
  } else {
    const std::optional<bool> distributive = p.is_distributive();
    j["distributive"] = *distributive;
  }
  return j.dump(2) + "\n";
}

} // namespace immvar
