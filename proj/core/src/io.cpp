#include "hypercsf/io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hypercsf::io {

using nlohmann::ordered_json;

namespace {

std::string label_of(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("vertex labels must be strings or integers");
}

ordered_json coeff_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi)
    return ordered_json(v.convert_to<std::int64_t>());
  return ordered_json(v.str());
}

ordered_json terms_json(const std::vector<std::pair<std::vector<int>, Int>>& terms) {
  ordered_json arr = ordered_json::array();
  for (const auto& [index, coeff] : terms) {
    ordered_json t;
    t["index"] = index;
    t["coeff"] = coeff_json(coeff);
    arr.push_back(std::move(t));
  }
  return arr;
}

std::string expansion_json_impl(int degree, const std::string& basis,
                                std::vector<std::pair<std::vector<int>, Int>> terms) {
  ordered_json j;
  j["degree"] = degree;
  j["basis"] = basis;
  j["terms"] = terms_json(terms);
  return j.dump(2);
}

}  // namespace

HypergraphInput parse_hypergraph(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("hypergraph file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument(
        "hypergraph file must be an object with \"vertices\" and \"edges\"");

  std::vector<std::string> labels;
  std::map<std::string, int> index;
  for (const auto& v : j.at("vertices")) {
    std::string lab = label_of(v);
    if (!index.emplace(lab, static_cast<int>(labels.size())).second)
      throw std::invalid_argument("duplicate vertex label: " + lab);
    labels.push_back(std::move(lab));
  }
  const auto vertex = [&](const ordered_json& v) {
    const std::string lab = label_of(v);
    const auto it = index.find(lab);
    if (it == index.end())
      throw std::invalid_argument("unknown vertex label: " + lab);
    return it->second;
  };

  std::vector<std::vector<int>> edges;
  for (const auto& e : j.at("edges")) {
    std::vector<int> verts;
    for (const auto& v : e) verts.push_back(vertex(v));
    edges.push_back(std::move(verts));
  }

  HypergraphInput in{Hypergraph(std::move(labels), std::move(edges)), {}, {}};

  if (j.contains("edge_order")) {
    std::vector<int> order;
    for (const auto& x : j.at("edge_order")) {
      if (!x.is_number_integer())
        throw std::invalid_argument("edge_order entries must be integers");
      order.push_back(x.get<int>());
    }
    in.edge_order = std::move(order);
  }
  if (j.contains("cycles")) {
    std::vector<std::vector<int>> cycles;
    for (const auto& c : j.at("cycles")) {
      std::vector<int> seq;
      for (const auto& v : c) seq.push_back(vertex(v));
      cycles.push_back(std::move(seq));
    }
    in.cycles = std::move(cycles);
  }
  return in;
}

Hypertree to_hypertree(const HypergraphInput& in) {
  auto order = in.edge_order ? *in.edge_order : leaf_edge_ordering(in.h);
  auto cycles = in.cycles ? *in.cycles : default_cycles(in.h);
  return Hypertree(in.h, std::move(order), std::move(cycles));
}

std::string expansion_json(const QSymF& x) {
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (auto& [mask, coeff] : x.terms())
    terms.emplace_back(ranks_of(mask, x.degree()), coeff);
  return expansion_json_impl(x.degree(), "F", std::move(terms));
}

std::string expansion_json(const QSymM& x) {
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (auto& [comp, coeff] : x.terms()) terms.emplace_back(comp, coeff);
  return expansion_json_impl(x.degree(), "M", std::move(terms));
}

std::string expansion_json(const SymExpansion& x) {
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (const auto& [part, coeff] : x.coeff)
    if (coeff != 0) terms.emplace_back(part, coeff);
  return expansion_json_impl(x.degree,
                             std::string(1, static_cast<char>(x.basis)),
                             std::move(terms));
}

std::string assignment_json(const PartitionAssignment& a) {
  const int n = a.degree();
  ordered_json rows = ordered_json::array();
  std::uint64_t rank = 0;
  for_each_permutation(n, [&](const Permutation& pi) {
    ordered_json row;
    row["perm"] = pi.one_line();
    row["S"] = ranks_of(a.at_rank(rank++), n);
    rows.push_back(std::move(row));
  });
  ordered_json j;
  j["n"] = n;
  j["table"] = std::move(rows);
  return j.dump(2);
}

PartitionAssignment parse_assignment(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("assignment file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("table"))
    throw std::invalid_argument(
        "assignment file must be an object with \"n\" and \"table\"");
  const int n = j.at("n").get<int>();
  if (n < 2 || n > 8)
    throw std::invalid_argument("assignment degree out of range (2..8)");
  std::uint64_t nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= static_cast<std::uint64_t>(i);

  std::vector<RankMask> table(nfact, 0);
  std::vector<char> seen(nfact, 0);
  for (const auto& row : j.at("table")) {
    std::vector<int> line;
    for (const auto& x : row.at("perm")) line.push_back(x.get<int>());
    const Permutation pi(line);
    if (pi.size() != n)
      throw std::invalid_argument("assignment row has wrong permutation degree");
    std::vector<int> ranks;
    for (const auto& x : row.at("S")) ranks.push_back(x.get<int>());
    const std::uint64_t r = pi.lex_rank();
    if (seen[r])
      throw std::invalid_argument("assignment table repeats a permutation");
    seen[r] = 1;
    table[r] = mask_of_ranks(ranks, n);
  }
  for (std::uint64_t r = 0; r < nfact; ++r)
    if (!seen[r])
      throw std::invalid_argument("assignment table is missing permutations");

  PartitionAssignment a(n, std::move(table));
  if (!verify_assignment(a))
    throw std::invalid_argument(
        "assignment file failed verification: not a partition of the "
        "nonconstant colorings");
  return a;
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write file: " + path);
  f << content;
}

}  // namespace hypercsf::io
