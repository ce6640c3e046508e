// Copyright 2026 The choicedag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choicedag/dag_io.hpp"

#include "choicedag/errors.hpp"
#include "choicedag/json_lines.hpp"
#include "choicedag/model_io.hpp"

namespace choicedag {

using nlohmann::json;

namespace {

json set_to_json(ItemSet s) {
  json out = json::array();
  for (int z : s.items()) out.push_back(z + 1);
  return out;
}

[[noreturn]] void fail(std::string_view source, int line,
                       const std::string& what) {
  std::string msg(source);
  if (line > 0) msg += ":" + std::to_string(line);
  throw ValidationError(msg + ": " + what);
}

ItemSet set_from_json(const json& v, int n, std::string_view source, int line,
                      const std::string& where) {
  if (!v.is_array()) fail(source, line, where + "expected an array of ids");
  ItemSet s;
  for (const json& id : v) {
    if (!id.is_number_integer()) fail(source, line, where + "ids must be integers");
    const int z = id.get<int>() - 1;
    if (z < 0 || z >= n) fail(source, line, where + "id out of range");
    if (s.contains(z)) fail(source, line, where + "repeated id");
    s = s.with(z);
  }
  return s;
}

}  // namespace

json dag_to_json(const Dag& d) {
  json nodes = json::array();
  for (const auto& [a, p] : d.nodes()) {
    nodes.push_back({{"set", set_to_json(a)}, {"prob", p}});
  }
  json edges = json::array();
  for (const auto& [key, p] : d.edges()) {
    edges.push_back(
        {{"from", set_to_json(key.from)}, {"item", key.item + 1}, {"prob", p}});
  }
  return {{"n", d.num_items()}, {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

Dag parse_dag(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, detail::line_of_offset(text, e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("nodes") ||
      !doc.contains("edges")) {
    fail(source, 0, "expected an object with \"n\", \"nodes\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) fail(source, 0, "\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxItems) fail(source, 0, "\"n\" must be in [1, 64]");
  if (!doc["nodes"].is_array() || !doc["edges"].is_array()) {
    fail(source, 0, "\"nodes\" and \"edges\" must be arrays");
  }

  Dag d(n);
  const auto node_lines = detail::array_element_lines(text, "nodes");
  const json& nodes = doc["nodes"];
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int line = i < node_lines.size() ? node_lines[i] : 0;
    const std::string where = "nodes[" + std::to_string(i) + "]: ";
    const json& v = nodes[i];
    if (!v.is_object() || !v.contains("set") || !v.contains("prob") ||
        !v["prob"].is_number()) {
      fail(source, line, where + "expected {\"set\", \"prob\"}");
    }
    const ItemSet a = set_from_json(v["set"], n, source, line, where);
    const double p = v["prob"].get<double>();
    if (!(p >= 0.0 && p <= 1.0)) fail(source, line, where + "prob outside [0, 1]");
    if (d.has_node(a)) fail(source, line, where + "duplicate node");
    d.set_node(a, p);
  }
  const auto edge_lines = detail::array_element_lines(text, "edges");
  const json& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int line = i < edge_lines.size() ? edge_lines[i] : 0;
    const std::string where = "edges[" + std::to_string(i) + "]: ";
    const json& v = edges[i];
    if (!v.is_object() || !v.contains("from") || !v.contains("item") ||
        !v.contains("prob") || !v["item"].is_number_integer() ||
        !v["prob"].is_number()) {
      fail(source, line, where + "expected {\"from\", \"item\", \"prob\"}");
    }
    const ItemSet from = set_from_json(v["from"], n, source, line, where);
    const int z = v["item"].get<int>() - 1;
    const double p = v["prob"].get<double>();
    if (z < 0 || z >= n || from.contains(z)) {
      fail(source, line, where + "invalid item label");
    }
    if (!(p >= 0.0 && p <= 1.0)) fail(source, line, where + "prob outside [0, 1]");
    if (!d.has_node(from) || !d.has_node(from.with(z))) {
      fail(source, line, where + "edge endpoints must be listed nodes");
    }
    if (d.has_edge(from, z)) fail(source, line, where + "duplicate edge");
    d.set_edge(from, z, p);
  }
  return d;
}

Dag load_dag(const std::string& path) {
  return parse_dag(read_text_file(path), path);
}

void save_dag(const Dag& d, const std::string& path) {
  write_text_file(path, dag_to_json(d).dump(2) + "\n");
}

}  // namespace choicedag
