#pragma once

#include <utility>
#include <vector>

#include "json.hpp"

#include "p3c/core.hpp"
#include "p3c/exact.hpp"
#include "p3c/graph.hpp"

namespace p3c {

using Json = nlohmann::json;

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw Error("graph json: expected an object with \"n\" and \"edges\"");
  if (!j["n"].is_number_integer() || !j["edges"].is_array())
    throw Error("graph json: \"n\" must be an integer, \"edges\" an array");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error("graph json: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

// {"independent": [[...], ...], "cliques": [[...], ...]}; both keys optional.
inline KLPartition kl_partition_from_json(const Json& j, int n) {
  if (!j.is_object())
    throw Error("partition json: expected an object");
  auto read_parts = [&](const char* key) {
    std::vector<Bitset> parts;
    if (!j.contains(key)) return parts;
    if (!j[key].is_array())
      throw Error(std::string("partition json: \"") + key +
                  "\" must be an array of vertex lists");
    for (const auto& lst : j[key]) {
      if (!lst.is_array())
        throw Error(std::string("partition json: \"") + key +
                    "\" must be an array of vertex lists");
      Bitset b(n);
      for (const auto& v : lst) {
        if (!v.is_number_integer())
          throw Error("partition json: vertices must be integers");
        int x = v.get<int>();
        if (x < 0 || x >= n)
          throw Error("partition json: vertex " + std::to_string(x) +
                      " out of range");
        b.set(x);
      }
      parts.push_back(std::move(b));
    }
    return parts;
  };
  KLPartition part;
  part.independent_parts = read_parts("independent");
  part.clique_parts = read_parts("cliques");
  return part;
}

}  // namespace p3c
