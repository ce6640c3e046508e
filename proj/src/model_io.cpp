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

#include "choicedag/model_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "choicedag/errors.hpp"
#include "choicedag/json_lines.hpp"

namespace choicedag {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("error writing " + path);
}

json model_to_json(const ChoiceModel& m) {
  json types = json::array();
  for (const ChoiceType& t : m.types()) {
    json ranking = json::array();
    for (int z : t.ranking.order()) ranking.push_back(z + 1);
    types.push_back({{"ranking", std::move(ranking)}, {"prob", t.prob}});
  }
  return {{"n", m.num_items()},
          {"types", std::move(types)},
          {"kappa", m.kappa()},
          {"rho", m.rho()}};
}

namespace {

[[noreturn]] void fail(std::string_view source, int line,
                       const std::string& what) {
  std::string msg(source);
  if (line > 0) msg += ":" + std::to_string(line);
  throw ValidationError(msg + ": " + what);
}

}  // namespace

ChoiceModel parse_model(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, detail::line_of_offset(text, e.byte), e.what());
  }
  if (!doc.is_object()) fail(source, 1, "expected a JSON object");
  for (const char* key : {"n", "types", "kappa", "rho"}) {
    if (!doc.contains(key)) fail(source, 0, std::string("missing \"") + key + "\"");
  }
  if (!doc["n"].is_number_integer()) fail(source, 0, "\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxItems) fail(source, 0, "\"n\" must be in [1, 64]");
  if (!doc["types"].is_array()) fail(source, 0, "\"types\" must be an array");
  if (!doc["kappa"].is_number() || !doc["rho"].is_number()) {
    fail(source, 0, "\"kappa\" and \"rho\" must be numbers");
  }

  const std::vector<int> lines = detail::array_element_lines(text, "types");
  auto line_at = [&](std::size_t i) {
    return i < lines.size() ? lines[i] : 0;
  };

  std::vector<ChoiceType> types;
  const json& arr = doc["types"];
  types.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& t = arr[i];
    const std::string where = "types[" + std::to_string(i) + "]: ";
    if (!t.is_object() || !t.contains("ranking") || !t.contains("prob")) {
      fail(source, line_at(i), where + "expected {\"ranking\", \"prob\"}");
    }
    if (!t["ranking"].is_array() || !t["prob"].is_number()) {
      fail(source, line_at(i), where + "malformed ranking or prob");
    }
    std::vector<int> order;
    for (const json& v : t["ranking"]) {
      if (!v.is_number_integer()) {
        fail(source, line_at(i), where + "ranking ids must be integers");
      }
      order.push_back(v.get<int>() - 1);
    }
    if (static_cast<int>(order.size()) != n) {
      fail(source, line_at(i),
           where + "ranking has " + std::to_string(order.size()) +
               " items, expected " + std::to_string(n));
    }
    try {
      types.push_back({Ranking(std::move(order)), t["prob"].get<double>()});
    } catch (const ValidationError& e) {
      fail(source, line_at(i), where + e.what());
    }
  }

  // Per-type checks first so failures point at a line; the model-level
  // checks (sum, duplicates) then name the type index.
  std::map<std::vector<int>, std::size_t> first_seen;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (!(types[i].prob >= 0.0) || types[i].prob > 1.0) {
      fail(source, line_at(i),
           "types[" + std::to_string(i) + "]: probability outside [0, 1]");
    }
    const auto [it, fresh] = first_seen.emplace(types[i].ranking.order(), i);
    if (!fresh) {
      fail(source, line_at(i),
           "types[" + std::to_string(i) + "]: duplicates types[" +
               std::to_string(it->second) + "]");
    }
  }
  try {
    ChoiceModel m(n, std::move(types), doc["kappa"].get<double>(),
                  doc["rho"].get<double>());
    m.validate_kappa_rho();
    return m;
  } catch (const ValidationError& e) {
    fail(source, 0, e.what());
  }
}

ChoiceModel load_model(const std::string& path) {
  return parse_model(read_text_file(path), path);
}

void save_model(const ChoiceModel& m, const std::string& path) {
  write_text_file(path, model_to_json(m).dump(2) + "\n");
}

}  // namespace choicedag
